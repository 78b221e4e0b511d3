"""Semistandard tableaux, reading words, charge, and layered shapes.

Tableaux are stored in English convention as tuples of row tuples,
rows[0] being the longest row.  The reading word concatenates the rows
from the bottom row up, so the longest row comes last; charge is
computed on such words.
"""

from __future__ import annotations

from functools import cache

from .partitions import is_partition, normalize, subpartitions


class NonDominantWeightError(ValueError):
    """Charge asked for a word whose letter counts are not a partition."""


def word_weight(word, nletters=None):
    """Letter multiplicities of a word over {1, 2, ...}."""
    m = max(word, default=0) if nletters is None else nletters
    out = [0] * m
    for a in word:
        if a < 1 or a > m:
            raise ValueError(f"letter {a} out of range 1..{m}")
        out[a - 1] += 1
    return tuple(out)


def enumerate_ssyt(shape, weight=None, nletters=None):
    """All semistandard tableaux of the given shape.

    With `weight`, entries have exactly those multiplicities (letter i
    appears weight[i-1] times); otherwise any filling with entries in
    1..nletters.  Rows weakly increase, columns strictly increase.
    """
    shape = normalize(shape)
    if weight is not None:
        weight = tuple(int(w) for w in weight)
        if sum(shape) != sum(weight):
            return []
        nletters = len(weight)
    elif nletters is None:
        raise ValueError("need a weight or a letter bound")
    if shape and len(shape) > nletters:
        return []
    rows = [[0] * r for r in shape]
    counts = [0] * nletters
    cells = [(r, c) for r, ln in enumerate(shape) for c in range(ln)]
    results = []

    def rec(k):
        if k == len(cells):
            results.append(tuple(tuple(row) for row in rows))
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, rows[r][c - 1])
        if r > 0:
            lo = max(lo, rows[r - 1][c] + 1)
        for v in range(lo, nletters + 1):
            if weight is not None and counts[v - 1] >= weight[v - 1]:
                continue
            rows[r][c] = v
            counts[v - 1] += 1
            rec(k + 1)
            counts[v - 1] -= 1
            rows[r][c] = 0

    rec(0)
    return results


def tableau_weight(tab, nletters=None):
    return word_weight([a for row in tab for a in row], nletters)


def reading_word(tab):
    """Bottom row first, longest row last."""
    out = []
    for row in reversed(tab):
        out.extend(row)
    return tuple(out)


def charge(word):
    """Charge statistic of a word whose weight is a partition.

    Repeatedly extracts a standard subword: take the rightmost 1, then
    scan circularly leftward for a 2, then a 3, and so on while a next
    letter remains; the subword contributes the sum of its letter
    indices, where the index steps up exactly when the next letter sits
    to the right of the previous one.
    """
    word = tuple(word)
    if not word:
        return 0
    wt = word_weight(word)
    if not is_partition(wt):
        raise NonDominantWeightError(f"weight {wt} is not a partition")
    positions = list(range(len(word)))
    total = 0
    while positions:
        ones = [p for p in positions if word[p] == 1]
        cur = ones[-1]
        chosen = [cur]
        letter = 2
        while any(word[p] == letter for p in positions):
            k = positions.index(cur)
            left = positions[k - 1 :: -1] if k > 0 else []
            order = left + positions[: k : -1]
            cur = next(p for p in order if word[p] == letter)
            chosen.append(cur)
            letter += 1
        idx = 0
        for a, b in zip(chosen, chosen[1:]):
            if b > a:
                idx += 1
            total += idx
        chosen_set = set(chosen)
        positions = [p for p in positions if p not in chosen_set]
    return total


def charge_tableau(tab):
    return charge(reading_word(tab))


def knuth_neighbors(word):
    """Words one elementary Knuth move away.

    On a window (a, b, c): swap the last two when c < a <= b or
    b < a <= c; swap the first two when a <= c < b or b <= c < a.
    """
    word = tuple(word)
    out = []
    for i in range(len(word) - 2):
        a, b, c = word[i], word[i + 1], word[i + 2]
        if c < a <= b or b < a <= c:
            out.append(word[:i] + (a, c, b) + word[i + 3 :])
        if a <= c < b or b <= c < a:
            out.append(word[:i] + (b, a, c) + word[i + 3 :])
    return out


@cache
def layer_chains(shape, n):
    """All weakly decreasing chains shape = s_0 >= s_1 >= ... >= s_n = ().

    Each step is containment of partitions; chains are returned as
    (n+1)-tuples of partitions including both endpoints.
    """
    shape = normalize(shape)
    if n == 0:
        return ((shape,),) if not shape else ()
    out = []
    for mu in subpartitions(shape):
        for tail in layer_chains(mu, n - 1):
            out.append((shape,) + tail)
    return tuple(out)
