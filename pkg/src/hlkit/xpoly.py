"""Exact multivariate Laurent polynomials over the t-coefficient ring.

An XPoly is a finite sum of monomials in named variables (x1, x2, ...,
y1, ...) whose coefficients are LaurentPoly values in t.  Storage is a
dict mapping exponent tuples (one slot per variable, negative allowed)
to coefficients.  Values are canonical:

  * variable names are kept in natural sorted order (x1 < x2 < x10 < y1),
  * a variable appearing with exponent 0 in every term is dropped,
  * zero coefficients are never stored.

Binary operations align variable lists automatically, so polynomials
built over different alphabets compare and combine correctly.
"""

from __future__ import annotations

import re

from .laurent import LaurentPoly, NotDivisibleError, ZERO as L_ZERO, ONE as L_ONE

_VAR_RE = re.compile(r"^([A-Za-z]+)(\d*)$")


def var_key(name):
    """Sort key giving the natural order x1 < x2 < x10 < y1."""
    m = _VAR_RE.match(name)
    if not m:
        raise ValueError(f"bad variable name {name!r}")
    head, num = m.groups()
    return (head, int(num) if num else 0)


def xvars(n):
    return tuple(f"x{i}" for i in range(1, n + 1))


def yvars(n):
    return tuple(f"y{i}" for i in range(1, n + 1))


def merge_vars(a, b):
    return tuple(sorted(set(a) | set(b), key=var_key))


def _coerce_coeff(c):
    if isinstance(c, LaurentPoly):
        return c
    if isinstance(c, int):
        return LaurentPoly.from_int(c)
    raise TypeError(f"cannot use {type(c).__name__} as a coefficient")


class XPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars=(), terms=None):
        vars = tuple(vars)
        clean = {}
        if terms:
            for exps, c in terms.items():
                c = _coerce_coeff(c)
                if not c:
                    continue
                exps = tuple(int(e) for e in exps)
                if len(exps) != len(vars):
                    raise ValueError("exponent tuple does not match variables")
                prev = clean.get(exps)
                c = c if prev is None else prev + c
                if c:
                    clean[exps] = c
                else:
                    del clean[exps]
        # sort variables, drop the ones never used
        order = sorted(range(len(vars)), key=lambda i: var_key(vars[i]))
        used = [i for i in order if any(e[i] for e in clean)]
        self.vars = tuple(vars[i] for i in used)
        if len(used) == len(vars) and used == list(range(len(vars))):
            self.terms = clean
        else:
            self.terms = {}
            for exps, c in clean.items():
                key = tuple(exps[i] for i in used)
                prev = self.terms.get(key)
                self.terms[key] = c if prev is None else prev + c

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls):
        return cls((), {})

    @classmethod
    def const(cls, c):
        c = _coerce_coeff(c)
        return cls((), {(): c} if c else {})

    @classmethod
    def var(cls, name, exp=1):
        return cls((name,), {(exp,): L_ONE})

    @classmethod
    def monomial(cls, vars, exps, coeff=1):
        return cls(tuple(vars), {tuple(exps): _coerce_coeff(coeff)})

    # -- alignment ---------------------------------------------------

    def _expand_to(self, vars):
        """Terms re-keyed over the superset `vars` (must contain self.vars)."""
        if vars == self.vars:
            return self.terms
        pos = {v: i for i, v in enumerate(vars)}
        idx = [pos[v] for v in self.vars]
        n = len(vars)
        out = {}
        for exps, c in self.terms.items():
            key = [0] * n
            for i, e in zip(idx, exps):
                key[i] = e
            out[tuple(key)] = c
        return out

    def _aligned(self, other):
        vars = merge_vars(self.vars, other.vars)
        return vars, self._expand_to(vars), other._expand_to(vars)

    # -- ring structure ----------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, XPoly):
            return other
        if isinstance(other, (int, LaurentPoly)):
            return XPoly.const(other)
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        vars, a, b = self._aligned(other)
        out = dict(a)
        for k, c in b.items():
            prev = out.get(k)
            s = c if prev is None else prev + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return XPoly(vars, out)

    __radd__ = __add__

    def __neg__(self):
        return XPoly(self.vars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        vars, a, b = self._aligned(other)
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                k = tuple(p + q for p, q in zip(e1, e2))
                c = c1 * c2
                prev = out.get(k)
                s = c if prev is None else prev + c
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return XPoly(vars, out)

    __rmul__ = __mul__

    def mul_capped(self, other, cap, count_vars=None):
        """Product with terms of degree > cap discarded.

        Degree counts only the variables in `count_vars` (default: all).
        Valid as a series truncation when both factors are supported in
        counted degrees >= 0, which holds everywhere it is used.
        """
        other = self._coerce(other)
        vars, a, b = self._aligned(other)
        if count_vars is None:
            mask = [True] * len(vars)
        else:
            cs = set(count_vars)
            mask = [v in cs for v in vars]

        def deg(e):
            return sum(x for x, m in zip(e, mask) if m)

        out = {}
        for e1, c1 in a.items():
            d1 = deg(e1)
            for e2, c2 in b.items():
                if d1 + deg(e2) > cap:
                    continue
                k = tuple(p + q for p, q in zip(e1, e2))
                c = c1 * c2
                prev = out.get(k)
                s = c if prev is None else prev + c
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return XPoly(vars, out)

    def scale(self, c):
        c = _coerce_coeff(c)
        if not c:
            return XPoly.zero()
        return XPoly(self.vars, {k: v * c for k, v in self.terms.items()})

    def exact_div_scalar(self, c):
        c = _coerce_coeff(c)
        return XPoly(self.vars, {k: v.exact_div(c) for k, v in self.terms.items()})

    # -- structure queries --------------------------------------------

    def coeff_of(self, exps, vars=None):
        """Coefficient of the monomial with the given exponents.

        `exps` is matched against `vars` (default self.vars); variables of
        self outside `vars` must have exponent 0 for a hit.
        """
        if vars is None:
            return self.terms.get(tuple(exps), L_ZERO)
        given = dict(zip(vars, exps))
        key = tuple(given.get(v, 0) for v in self.vars)
        extra = [v for v in given if v not in self.vars and given[v]]
        if extra:
            return L_ZERO
        return self.terms.get(key, L_ZERO)

    def degree_in(self, names=None):
        """Max total degree over the named variables (0 for the zero poly)."""
        if not self.terms:
            return 0
        if names is None:
            mask = [True] * len(self.vars)
        else:
            ns = set(names)
            mask = [v in ns for v in self.vars]
        return max(sum(x for x, m in zip(e, mask) if m) for e in self.terms)

    def truncate_degree(self, cap, count_vars=None):
        """Drop terms whose counted total degree exceeds cap."""
        if count_vars is None:
            mask = [True] * len(self.vars)
        else:
            cs = set(count_vars)
            mask = [v in cs for v in self.vars]
        out = {
            e: c
            for e, c in self.terms.items()
            if sum(x for x, m in zip(e, mask) if m) <= cap
        }
        return XPoly(self.vars, out)

    def truncate_t_above(self, cap):
        out = {}
        for e, c in self.terms.items():
            c2 = c.truncate_above(cap)
            if c2:
                out[e] = c2
        return XPoly(self.vars, out)

    # -- substitutions -------------------------------------------------

    def permute_exponents(self, perm, vars=None):
        """Exponent slot i takes the value of slot perm[i].

        Slots refer to `vars` when given (self may omit some of them).
        Summed over all of S_n with signs this gives the antisymmetrizer
        regardless of direction convention.
        """
        vars = self.vars if vars is None else tuple(vars)
        terms = self._expand_to(vars) if vars != self.vars else self.terms
        n = len(vars)
        if sorted(perm) != list(range(n)):
            raise ValueError("not a permutation of the variable slots")
        out = {}
        for e, c in terms.items():
            key = tuple(e[perm[i]] for i in range(n))
            prev = out.get(key)
            s = c if prev is None else prev + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return XPoly(vars, out)

    def swap_positions(self, i, j, vars=None):
        """Exchange the exponents of the i-th and j-th variables (0-based).

        Positions refer to `vars` when given; variables absent from self
        are treated as exponent 0 everywhere.
        """
        if vars is None:
            vars = self.vars
        terms = self._expand_to(tuple(vars)) if tuple(vars) != self.vars else self.terms
        out = {}
        for e, c in terms.items():
            le = list(e)
            le[i], le[j] = le[j], le[i]
            key = tuple(le)
            prev = out.get(key)
            s = c if prev is None else prev + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return XPoly(tuple(vars), out)

    def reverse_invert(self, vars=None):
        """Substitute x_i -> 1/x_{n+1-i} over `vars` (default self.vars)."""
        if vars is None:
            vars = self.vars
        vars = tuple(vars)
        terms = self._expand_to(vars) if vars != self.vars else self.terms
        n = len(vars)
        out = {}
        for e, c in terms.items():
            key = tuple(-e[n - 1 - i] for i in range(n))
            prev = out.get(key)
            s = c if prev is None else prev + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return XPoly(vars, out)

    def subs_one(self, names):
        """Set every variable in `names` to 1."""
        ns = set(names)
        keep = [i for i, v in enumerate(self.vars) if v not in ns]
        vars = tuple(self.vars[i] for i in keep)
        out = {}
        for e, c in self.terms.items():
            key = tuple(e[i] for i in keep)
            prev = out.get(key)
            s = c if prev is None else prev + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return XPoly(vars, out)

    # -- exact division -------------------------------------------------

    def exact_div_diff(self, a, b):
        """Exact quotient by (a - b) for variable names a, b.

        Groups terms by the exponents away from {a, b} and by the total
        a+b degree; inside a group the poly is x_b^d * p(w) with
        w = a/b, and division by a - b = x_b (w - 1) is one-variable.
        """
        vars = merge_vars(self.vars, (a, b))
        terms = self._expand_to(vars)
        ia, ib = vars.index(a), vars.index(b)
        groups = {}
        for e, c in terms.items():
            rest = tuple(x for k, x in enumerate(e) if k not in (ia, ib))
            d = e[ia] + e[ib]
            groups.setdefault((rest, d), {})[e[ia]] = c
        out = {}
        n = len(vars)
        for (rest, d), coeffs in groups.items():
            lo, hi = min(coeffs), max(coeffs)
            running = L_ZERO
            quot = {}
            for k in range(lo, hi + 1):
                running = running + coeffs.get(k, L_ZERO)
                if k < hi:
                    if running:
                        quot[k] = -running
            if running:
                raise NotDivisibleError(f"not divisible by {a} - {b}")
            for k, c in quot.items():
                key = [0] * n
                ri = 0
                for pos in range(n):
                    if pos == ia:
                        key[pos] = k
                    elif pos == ib:
                        key[pos] = d - 1 - k
                    else:
                        key[pos] = rest[ri]
                        ri += 1
                tk = tuple(key)
                prev = out.get(tk)
                s = c if prev is None else prev + c
                if s:
                    out[tk] = s
                else:
                    out.pop(tk, None)
        return XPoly(vars, out)

    # -- rendering / io --------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                v if p == 1 else f"{v}^{p}"
                for v, p in zip(self.vars, e)
                if p
            )
            cs = str(c)
            if mono:
                if cs == "1":
                    parts.append(mono)
                elif cs == "-1":
                    parts.append(f"-{mono}")
                elif len(c.coeffs) == 1 and not cs.startswith("-"):
                    parts.append(f"{cs}*{mono}")
                else:
                    parts.append(f"({cs})*{mono}")
            else:
                parts.append(cs if len(c.coeffs) == 1 else f"({cs})")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"XPoly({self})"

    def to_json(self):
        return {
            "vars": list(self.vars),
            "terms": [
                {"exps": list(e), "poly": c.to_json()}
                for e, c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            tuple(data["vars"]),
            {
                tuple(t["exps"]): LaurentPoly.from_json(t["poly"])
                for t in data["terms"]
            },
        )


X_ZERO = XPoly.zero()
X_ONE = XPoly.const(1)


def exact_div_linear(f, divisor):
    """Divide f exactly by a polynomial of the form a - b (two monomials).

    Only the variable-difference case is needed; reject anything else.
    """
    if len(divisor.terms) != 2:
        raise ValueError("divisor must be a difference of two variables")
    items = sorted(divisor.terms.items(), reverse=True)
    (ea, ca), (eb, cb) = items
    if ca != L_ONE or cb != -L_ONE:
        raise ValueError("divisor must be a difference of two variables")
    names = []
    for e, want in ((ea, 1), (eb, 1)):
        hits = [(v, p) for v, p in zip(divisor.vars, e) if p]
        if len(hits) != 1 or hits[0][1] != 1:
            raise ValueError("divisor must be a difference of two variables")
        names.append(hits[0][0])
    return f.exact_div_diff(names[0], names[1])
