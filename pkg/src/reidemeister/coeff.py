"""Exact coefficients: Laurent polynomials over Z in n commuting variables,
their fraction field, the bar involution and the unit group of +-monomials.

Every value carries its variable count ``nvars``; mixing values with
different counts raises ``ValueError``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional


def _check_exp(e, n):
    if len(e) != n:
        raise ValueError(f"exponent vector {e} has length {len(e)}, expected {n}")


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _neg(a):
    return tuple(-x for x in a)


class LaurentPoly:
    """Sparse Laurent polynomial, a map exponent tuple -> nonzero int."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, terms=None, nvars=1):
        if nvars < 0:
            raise ValueError("variable count must be nonnegative")
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                _check_exp(e, nvars)
                if not isinstance(c, int):
                    raise TypeError(f"coefficient {c!r} is not an integer")
                if c:
                    clean[e] = clean.get(e, 0) + c
            clean = {e: c for e, c in clean.items() if c}
        self.nvars = nvars
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms, nvars):
        # trusted constructor: terms already clean
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c, nvars):
        return cls._raw({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def monomial(cls, exp, coeff=1):
        exp = tuple(exp)
        return cls._raw({exp: coeff} if coeff else {}, len(exp))

    @classmethod
    def zero(cls, nvars):
        return cls._raw({}, nvars)

    @classmethod
    def one(cls, nvars):
        return cls.const(1, nvars)

    # -- basic queries

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_one(self):
        return len(self.terms) == 1 and self.terms.get((0,) * self.nvars) == 1

    def is_unit(self):
        """True for +-monomials."""
        if len(self.terms) != 1:
            return False
        (c,) = self.terms.values()
        return c in (1, -1)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def min_exponents(self):
        es = list(self.terms)
        return tuple(min(e[i] for e in es) for i in range(self.nvars))

    def max_exponents(self):
        es = list(self.terms)
        return tuple(max(e[i] for e in es) for i in range(self.nvars))

    def sorted_terms(self):
        return sorted(self.terms.items())

    def content(self):
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    def degree_span(self):
        """Breadth max - min in a single-variable session."""
        if self.nvars != 1 or not self.terms:
            raise ValueError("degree span needs a nonzero univariate polynomial")
        return self.max_exponents()[0] - self.min_exponents()[0]

    # -- coercion

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other, self.nvars)
        return NotImplemented

    # -- arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                del out[e]
        return LaurentPoly._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero(self.nvars)
            return LaurentPoly._raw({e: c * other for e, c in self.terms.items()}, self.nvars)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return LaurentPoly.zero(self.nvars)
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        if self.nvars == 1:
            for (e2,), c2 in b.items():
                for (e1,), c1 in a.items():
                    k = (e1 + e2,)
                    out[k] = get(k, 0) + c1 * c2
        else:
            for e2, c2 in b.items():
                for e1, c1 in a.items():
                    k = tuple(x + y for x, y in zip(e1, e2))
                    out[k] = get(k, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c}, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_unit():
                raise ValueError("negative power of a non-unit")
            ((e, c),) = self.terms.items()
            return LaurentPoly._raw({tuple(x * k for x in e): c ** (-k)}, self.nvars)
        result = LaurentPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exp):
        """Multiply by the monomial t^exp."""
        exp = tuple(exp)
        return LaurentPoly._raw({_add(e, exp): c for e, c in self.terms.items()}, self.nvars)

    def scale_unit(self, u: "MonomialUnit"):
        return LaurentPoly._raw({_add(e, u.exps): c * u.sign for e, c in self.terms.items()}, self.nvars)

    def involute(self):
        return LaurentPoly._raw({_neg(e): c for e, c in self.terms.items()}, self.nvars)

    def substitute_exps(self, images):
        """Push forward along the group map sending variable i to images[i]."""
        m = len(images[0]) if images else 0
        out = {}
        for e, c in self.terms.items():
            k = tuple(sum(e[i] * images[i][j] for i in range(self.nvars)) for j in range(m))
            out[k] = out.get(k, 0) + c
        return LaurentPoly._raw({e: c for e, c in out.items() if c}, m)

    def augment(self):
        """Image under t_i -> 1."""
        return sum(self.terms.values())

    def exact_div(self, other: "LaurentPoly") -> Optional["LaurentPoly"]:
        """Quotient q with self = q*other in Z[G], or None if none exists."""
        other = self._coerce(other)
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return self
        n = self.nvars
        if len(other.terms) == 1:
            ((eb, cb),) = other.terms.items()
            out = {}
            for e, c in self.terms.items():
                if c % cb:
                    return None
                out[_sub(e, eb)] = c // cb
            return LaurentPoly._raw(out, n)
        lo = _sub(self.min_exponents(), other.min_exponents())
        hi = _sub(self.max_exponents(), other.max_exponents())
        if any(a > b for a, b in zip(lo, hi)):
            return None
        eb, cb = max(other.terms.items())
        rem = dict(self.terms)
        quot = {}
        bterms = list(other.terms.items())
        while rem:
            er = max(rem)
            cr = rem[er]
            if cr % cb:
                return None
            eq = _sub(er, eb)
            if any(x < a or x > b for x, a, b in zip(eq, lo, hi)):
                return None
            cq = cr // cb
            quot[eq] = cq
            for e, c in bterms:
                k = _add(e, eq)
                v = rem.get(k, 0) - c * cq
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly._raw(quot, n)

    # -- comparison

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.nvars)
        if isinstance(other, RatFunc):
            return other == self
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r}, nvars={self.nvars})"

    def __str__(self):
        return format_poly(self)


def variables(n):
    """The generators t_1, ..., t_n of Z[Z^n]."""
    return tuple(LaurentPoly.monomial(tuple(int(i == j) for j in range(n))) for i in range(n))


# ---------------------------------------------------------------- units


@dataclass(frozen=True)
class MonomialUnit:
    """The unit sign * t^exps of Z[G]."""

    sign: int
    exps: tuple

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("unit sign must be +1 or -1")

    @classmethod
    def one(cls, nvars):
        return cls(1, (0,) * nvars)

    def __mul__(self, other):
        return MonomialUnit(self.sign * other.sign, _add(self.exps, other.exps))

    def inverse(self):
        return MonomialUnit(self.sign, _neg(self.exps))

    def involute(self):
        return MonomialUnit(self.sign, _neg(self.exps))

    def as_poly(self):
        return LaurentPoly.monomial(self.exps, self.sign)

    def as_ratfunc(self):
        return RatFunc(self.as_poly())

    def is_one(self):
        return self.sign == 1 and not any(self.exps)

    def __str__(self):
        return format_poly(self.as_poly())


# ---------------------------------------------------------------- gcd


def _dense(p):
    """Univariate polynomial -> (shift, low-to-high coefficient list)."""
    lo = p.min_exponents()[0]
    hi = p.max_exponents()[0]
    coeffs = [0] * (hi - lo + 1)
    for (e,), c in p.terms.items():
        coeffs[e - lo] = c
    return lo, coeffs


def _from_dense(coeffs):
    return LaurentPoly._raw({(i,): c for i, c in enumerate(coeffs) if c}, 1)


def _primitive(coeffs):
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    return [c // g for c in coeffs] if g > 1 else list(coeffs)


def _strip(coeffs):
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _prem(a, b):
    # pseudo-remainder of a by b over Z, both low-to-high
    a = list(a)
    lb = b[-1]
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for i, c in enumerate(b):
            a[i + shift] -= la * c
        _strip(a)
    return a


def _poly_gcd(a, b):
    content = gcd(abs(gcd(0, *a)) if a else 0, abs(gcd(0, *b)) if b else 0)
    a = _primitive(_strip(list(a)))
    b = _primitive(_strip(list(b)))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _strip(_prem(a, b))
        a, b = b, (_primitive(r) if r else [])
    if not a:
        return []
    a = _primitive(a)
    if a[-1] < 0:
        a = [-c for c in a]
    return [c * content for c in a]


def gcd_univariate(ps: Iterable[LaurentPoly]) -> LaurentPoly:
    """Gcd in Z[t, t^-1], defined up to +-t^k; gcd of nothing or of zeros is 0."""
    ps = list(ps)
    for p in ps:
        if p.nvars != 1:
            raise ValueError("gcd_univariate needs a single-variable session")
    acc = []
    for p in ps:
        if not p.terms:
            continue
        _, d = _dense(p)
        acc = d if not acc else _poly_gcd(acc, d)
    if not acc:
        return LaurentPoly.zero(1)
    # shift so the lowest term is the constant term
    while acc and acc[0] == 0:
        acc.pop(0)
    return normalize_poly(_from_dense(acc))[0]


def normalize_poly(p: LaurentPoly):
    """(p0, u) with p = u*p0 and p0 canonical."""
    n = p.nvars
    if not p.terms:
        return p, MonomialUnit.one(n)
    e0, c0 = min(p.terms.items())
    s = 1 if c0 > 0 else -1
    u = MonomialUnit(s, e0)
    return p.scale_unit(u.inverse()), u


# ---------------------------------------------------------------- fractions


class RatFunc:
    """Element num/den of the fraction field Q(G)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, nvars=None):
        if isinstance(num, int):
            if nvars is None:
                nvars = den.nvars if isinstance(den, LaurentPoly) else None
            if nvars is None:
                raise ValueError("integer numerator needs nvars")
            num = LaurentPoly.const(num, nvars)
        if den is None:
            den = LaurentPoly.one(num.nvars)
        elif isinstance(den, int):
            den = LaurentPoly.const(den, num.nvars)
        if num.nvars != den.nvars:
            raise ValueError(f"variable count mismatch: {num.nvars} vs {den.nvars}")
        if not den.terms:
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _reduce(num, den)

    @classmethod
    def _raw(cls, num, den):
        f = object.__new__(cls)
        f.num = num
        f.den = den
        return f

    @classmethod
    def const(cls, c, nvars):
        return cls._raw(LaurentPoly.const(c, nvars), LaurentPoly.one(nvars))

    @classmethod
    def zero(cls, nvars):
        return cls._raw(LaurentPoly.zero(nvars), LaurentPoly.one(nvars))

    @classmethod
    def one(cls, nvars):
        return cls.const(1, nvars)

    @property
    def nvars(self):
        return self.num.nvars

    def is_zero(self):
        return not self.num.terms

    def __bool__(self):
        return bool(self.num.terms)

    def is_poly(self):
        return self.den.is_one()

    def as_laurent(self) -> Optional[LaurentPoly]:
        """The Laurent polynomial equal to self, if there is one."""
        if self.den.is_one():
            return self.num
        return self.num.exact_div(self.den)

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return RatFunc._raw(other, LaurentPoly.one(self.nvars))
        if isinstance(other, int):
            return RatFunc.const(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other
        if self.den.is_one() and other.den.is_one():
            return RatFunc._raw(self.num + other.num, self.den)
        if self.den == other.den:
            return _make(self.num + other.num, self.den)
        return _make(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return RatFunc._raw(self.num * other, self.den)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num.terms or not other.num.terms:
            return RatFunc.zero(self.nvars)
        if self.den.is_one() and other.den.is_one():
            return RatFunc._raw(self.num * other.num, self.den)
        return _make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num.terms:
            raise ZeroDivisionError("inverse of zero")
        return _make(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc._raw(self.num ** k, self.den ** k) if self.den.is_one() else _make(self.num ** k, self.den ** k)

    def scale_unit(self, u: MonomialUnit):
        return RatFunc._raw(self.num.scale_unit(u), self.den)

    def involute(self):
        return _make(self.num.involute(), self.den.involute())

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = self._coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.nvars != other.nvars:
            return False
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __repr__(self):
        return f"RatFunc({format_ratfunc(self)!r}, nvars={self.nvars})"

    def __str__(self):
        return format_ratfunc(self)


def _reduce(num, den):
    n = num.nvars
    if not num.terms:
        return num, LaurentPoly.one(n)
    if den.is_unit():
        ((e, c),) = den.terms.items()
        return num.scale_unit(MonomialUnit(c, e).inverse()), LaurentPoly.one(n)
    if n == 0:
        a, b = num.constant_term(), den.constant_term()
        g = gcd(a, b)
        if b < 0:
            g = -g
        return LaurentPoly.const(a // g, 0), LaurentPoly.const(b // g, 0)
    if n == 1:
        g = gcd_univariate([num, den])
        if not g.is_unit():
            num = num.exact_div(g)
            den = den.exact_div(g)
    else:
        q = num.exact_div(den)
        if q is not None:
            return q, LaurentPoly.one(n)
    den0, u = normalize_poly(den)
    if den0.is_one():
        return num.scale_unit(u.inverse()), den0
    return num.scale_unit(u.inverse()), den0


def _make(num, den):
    if not den.terms:
        raise ZeroDivisionError("zero denominator")
    r = RatFunc._raw(*_reduce(num, den))
    return r


def as_ratfunc(x, nvars=None) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, LaurentPoly):
        return RatFunc._raw(x, LaurentPoly.one(x.nvars))
    if isinstance(x, int):
        if nvars is None:
            raise ValueError("integer needs nvars")
        return RatFunc.const(x, nvars)
    raise TypeError(f"cannot coerce {x!r} to RatFunc")


def involute(f):
    """Bar involution t^a -> t^-a."""
    if isinstance(f, (RatFunc, LaurentPoly, MonomialUnit)):
        return f.involute()
    raise TypeError(f"cannot involute {f!r}")


def unit_quotient(a, b) -> Optional[MonomialUnit]:
    """A unit u with a = u*b, or None.  Two zeros give +1."""
    a = as_ratfunc(a, getattr(b, "nvars", None))
    b = as_ratfunc(b, a.nvars)
    n = a.nvars
    p = a.num * b.den
    q = b.num * a.den
    if not p.terms and not q.terms:
        return MonomialUnit.one(n)
    if not p.terms or not q.terms or len(p.terms) != len(q.terms):
        return None
    ep, cp = min(p.terms.items())
    eq, cq = min(q.terms.items())
    if cp == cq:
        s = 1
    elif cp == -cq:
        s = -1
    else:
        return None
    u = MonomialUnit(s, _sub(ep, eq))
    if q.scale_unit(u) != p:
        return None
    return u


def normalize_unit(f):
    """(f0, u) with f = u*f0 and f0 canonical: the lex-least numerator
    exponent is zero with positive coefficient.  For fractions the
    denominator is made canonical first."""
    if isinstance(f, LaurentPoly):
        return normalize_poly(f)
    f = as_ratfunc(f)
    num0, un = normalize_poly(f.num)
    if f.den.is_one():
        return RatFunc._raw(num0, f.den), un
    den0, ud = normalize_poly(f.den)
    return RatFunc._raw(num0, den0), un * ud.inverse()


# ---------------------------------------------------------------- text


def _var_names(n):
    return ["t"] if n == 1 else [f"t{i + 1}" for i in range(n)]


def _format_monomial(e, names):
    parts = []
    for name, k in zip(names, e):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_poly(p: LaurentPoly) -> str:
    """Terms in increasing lex order of exponents: ``-1 + 2*t1 + t1^2*t2^-1``."""
    if not p.terms:
        return "0"
    names = _var_names(p.nvars)
    out = []
    for i, (e, c) in enumerate(sorted(p.terms.items())):
        mono = _format_monomial(e, names)
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if i == 0:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append((" + " if c > 0 else " - ") + body)
    return "".join(out)


def format_ratfunc(f: RatFunc) -> str:
    if f.den.is_one():
        return format_poly(f.num)
    num = format_poly(f.num)
    if len(f.num.terms) > 1:
        num = f"({num})"
    return f"{num}/({format_poly(f.den)})"


_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*\*?\s*((?:t\d*(?:\^-?\d+)?\s*\*?\s*)*)")
_FACTOR = re.compile(r"t(\d*)(?:\^(-?\d+))?")


def parse_poly(text: str, nvars: int) -> LaurentPoly:
    """Inverse of ``format_poly``; accepts e.g. ``1 - t + t^2`` or ``t1*t2^-1 - 3``."""
    text = text.strip()
    if text == "0":
        return LaurentPoly.zero(nvars)
    terms = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at {pos}")
        sign, coeff, mono = m.groups()
        if coeff is None and not mono.strip():
            raise ValueError(f"empty term in {text!r}")
        c = int(coeff) if coeff else 1
        if sign == "-":
            c = -c
        e = [0] * nvars
        for name, k in _FACTOR.findall(mono):
            if name:
                i = int(name) - 1
            elif nvars == 1:
                i = 0
            else:
                raise ValueError("bare 't' needs a single-variable session")
            if not 0 <= i < nvars:
                raise ValueError(f"variable t{name} out of range")
            e[i] += int(k) if k else 1
        e = tuple(e)
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
    return LaurentPoly(terms, nvars)
