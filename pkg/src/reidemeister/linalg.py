"""Exact dense linear algebra over Z[G] and Q(G).

Matrices are plain lists of rows.  A PolyMatrix holds LaurentPoly entries,
a FieldMatrix holds RatFunc entries.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence

from .coeff import LaurentPoly, RatFunc, as_ratfunc, gcd_univariate

PolyMatrix = List[List[LaurentPoly]]
FieldMatrix = List[List[RatFunc]]


def shape(m):
    return len(m), (len(m[0]) if m else 0)


def _check_rect(m):
    if m and any(len(r) != len(m[0]) for r in m):
        raise ValueError("ragged matrix")


def _nvars_of(m, default=None):
    for row in m:
        for x in row:
            return x.nvars
    if default is None:
        raise ValueError("cannot infer variable count of an empty matrix")
    return default


def transpose(m):
    return [list(r) for r in zip(*m)] if m else []


def identity(n, nvars, field=False):
    one = RatFunc.one(nvars) if field else LaurentPoly.one(nvars)
    zero = RatFunc.zero(nvars) if field else LaurentPoly.zero(nvars)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matmul(a, b, nvars=None):
    if not a or not b:
        return [[] for _ in a]
    if len(a[0]) != len(b):
        raise ValueError("shape mismatch in product")
    n = nvars if nvars is not None else _nvars_of(a)
    zero = type(a[0][0]).zero(n) if a[0] else LaurentPoly.zero(n)
    cols = len(b[0])
    out = []
    for row in a:
        acc = [zero] * cols
        for k, x in enumerate(row):
            if not x:
                continue
            brow = b[k]
            for j in range(cols):
                y = brow[j]
                if y:
                    acc[j] = acc[j] + x * y
        out.append(acc)
    return out


def map_entries(m, f):
    return [[f(x) for x in row] for row in m]


def to_field(m):
    return [[as_ratfunc(x) for x in row] for row in m]


# ---------------------------------------------------------------- determinants


def det_fraction_free(m: PolyMatrix, nvars: Optional[int] = None) -> LaurentPoly:
    """Bareiss determinant of a square Laurent-polynomial matrix.

    Each row is first shifted by a monomial so that its exponents are
    nonnegative; the shift is divided back out at the end."""
    _check_rect(m)
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError(f"determinant needs a square matrix, got {shape(m)}")
    if n == 0:
        if nvars is None:
            raise ValueError("empty determinant needs nvars")
        return LaurentPoly.one(nvars)
    nv = _nvars_of(m)
    total = [0] * nv
    a = []
    for row in m:
        nz = [x for x in row if x]
        if not nz:
            return LaurentPoly.zero(nv)
        lo = [min(x.min_exponents()[i] for x in nz) for i in range(nv)]
        total = [s + v for s, v in zip(total, lo)]
        neg = tuple(-v for v in lo)
        a.append([x.shift(neg) if x else x for x in row])
    sign = 1
    prev = None
    for k in range(n - 1):
        p = next((i for i in range(k, n) if a[i][k]), None)
        if p is None:
            return LaurentPoly.zero(nv)
        if p != k:
            a[k], a[p] = a[p], a[k]
            sign = -sign
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                v = rowi[j] * akk
                if aik and rowk[j]:
                    v = v - aik * rowk[j]
                if prev is not None and v:
                    q = v.exact_div(prev)
                    if q is None:
                        raise ArithmeticError("inexact Bareiss division")
                    v = q
                rowi[j] = v
            rowi[k] = LaurentPoly.zero(nv)
        prev = akk
    d = a[n - 1][n - 1]
    if sign < 0:
        d = -d
    return d.shift(tuple(total))


def det_cofactor(m, nvars):
    """Laplace expansion along the first row; an oracle for small sizes."""
    n = len(m)
    if n == 0:
        return LaurentPoly.one(nvars)
    if n == 1:
        return m[0][0]
    total = LaurentPoly.zero(nvars)
    for j, x in enumerate(m[0]):
        if not x:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = x * det_cofactor(minor, nvars)
        total = total + term if j % 2 == 0 else total - term
    return total


def clear_denominators(row: Sequence[RatFunc]):
    """(poly_row, multiplier) with poly_row = multiplier * row."""
    nv = row[0].nvars
    mult = LaurentPoly.one(nv)
    for x in row:
        if x.den.is_one() or not x.num or mult.exact_div(x.den) is not None:
            continue
        if nv == 1:
            g = gcd_univariate([mult, x.den])
            mult = mult * x.den.exact_div(g)
        else:
            mult = mult * x.den
    out = []
    for x in row:
        if not x.num:
            out.append(LaurentPoly.zero(nv))
        elif x.den.is_one():
            out.append(x.num * mult)
        else:
            q = mult.exact_div(x.den)
            out.append(x.num * q)
    return out, mult


def det_field(m: FieldMatrix, nvars: Optional[int] = None) -> RatFunc:
    """Determinant over Q(G) by clearing a denominator per row."""
    if not m:
        if nvars is None:
            raise ValueError("empty determinant needs nvars")
        return RatFunc.one(nvars)
    nv = _nvars_of(m)
    rows = []
    den = LaurentPoly.one(nv)
    for row in m:
        pr, mult = clear_denominators([as_ratfunc(x) for x in row])
        rows.append(pr)
        den = den * mult
    return RatFunc(det_fraction_free(rows), den)


# ---------------------------------------------------------------- rank, kernel


def echelon_pivots(m: PolyMatrix, col_order=None):
    """Fraction-free row reduction.

    Returns (pivot_cols, pivot_rows) where pivot_rows are the indices of
    original rows that span the row space, paired in order with the pivot
    columns.  Columns are scanned in ``col_order`` (default left to right)."""
    if not m:
        return [], []
    rows, cols = shape(m)
    nv = _nvars_of(m)
    a = [list(r) for r in m]
    perm = list(range(rows))
    order = list(range(cols)) if col_order is None else list(col_order)
    piv_cols, r = [], 0
    prev = None
    for c in order:
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c]), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
            perm[r], perm[p] = perm[p], perm[r]
        arc = a[r][c]
        rowr = a[r]
        for i in range(r + 1, rows):
            rowi = a[i]
            aic = rowi[c]
            for j in range(cols):
                v = rowi[j] * arc
                if aic and rowr[j]:
                    v = v - aic * rowr[j]
                if prev is not None and v:
                    q = v.exact_div(prev)
                    if q is None:
                        raise ArithmeticError("inexact fraction-free division")
                    v = q
                rowi[j] = v
            rowi[c] = LaurentPoly.zero(nv)
        prev = arc
        piv_cols.append(c)
        r += 1
    return piv_cols, perm[:len(piv_cols)]


def poly_kernel(m: PolyMatrix, ncols: int, nvars: int):
    """(rank, kernel vectors with LaurentPoly entries) via Cramer's rule on
    an independent set of original rows."""
    if not m:
        basis = []
        for f in range(ncols):
            v = [LaurentPoly.zero(nvars)] * ncols
            v[f] = LaurentPoly.one(nvars)
            basis.append(v)
        return 0, basis
    pcols, prows = echelon_pivots(m)
    rank = len(pcols)
    sub = [m[i] for i in prows]
    square = [[row[c] for c in pcols] for row in sub]
    d = det_fraction_free(square, nvars)
    free = [c for c in range(ncols) if c not in pcols]
    basis = []
    for f in free:
        v = [LaurentPoly.zero(nvars)] * ncols
        v[f] = d
        for i, pc in enumerate(pcols):
            rep = [row[:i] + [sub[k][f]] + row[i + 1:] for k, row in enumerate(square)]
            v[pc] = -det_fraction_free(rep, nvars)
        basis.append(v)
    return rank, basis


def rank_kernel(m: FieldMatrix, ncols: Optional[int] = None, nvars: Optional[int] = None):
    """Rank over Q(G) and a kernel basis (vectors of RatFunc)."""
    if m:
        ncols = len(m[0])
        nvars = _nvars_of(m, nvars)
    if ncols is None or nvars is None:
        raise ValueError("empty matrix needs ncols and nvars")
    polys = [clear_denominators([as_ratfunc(x) for x in row])[0] for row in m] if ncols else []
    if not ncols:
        return 0, []
    rank, basis = poly_kernel(polys, ncols, nvars)
    return rank, [[RatFunc._raw(x, LaurentPoly.one(nvars)) for x in v] for v in basis]


def rank(m: FieldMatrix) -> int:
    if not m or not m[0]:
        return 0
    polys = [clear_denominators([as_ratfunc(x) for x in row])[0] for row in m]
    return len(echelon_pivots(polys)[0])


def solve(a: FieldMatrix, b: Sequence[RatFunc], nvars: int) -> Optional[List[RatFunc]]:
    """Some x with a.x = b, or None.  Gaussian elimination over Q(G)."""
    rows = len(a)
    cols = len(a[0]) if a else 0
    aug = [[as_ratfunc(x) for x in a[i]] + [as_ratfunc(b[i])] for i in range(rows)]
    piv = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if aug[i][c]), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = aug[r][c].inverse()
        aug[r] = [x * inv if x else x for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y if y else x for x, y in zip(aug[i], aug[r])]
        piv.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][cols]:
            return None
    x = [RatFunc.zero(nvars)] * cols
    for i, c in enumerate(piv):
        x[c] = aug[i][cols]
    return x


def inverse_field(m: FieldMatrix, nvars: int) -> FieldMatrix:
    n = len(m)
    cols = []
    for j in range(n):
        e = [RatFunc.one(nvars) if i == j else RatFunc.zero(nvars) for i in range(n)]
        x = solve(m, e, nvars)
        if x is None:
            raise ZeroDivisionError("singular matrix")
        cols.append(x)
    return transpose(cols)


def int_rank(rows) -> int:
    """Rank of an integer matrix, over Q."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    r = 0
    cols = len(a[0])
    for c in range(cols):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(r + 1, len(a)):
            if a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


# ---------------------------------------------------------------- minors


class Minors:
    """Memoized minors det(m[rows, cols]) by Laplace expansion along the
    first selected row."""

    def __init__(self, m, nvars):
        self.m = m
        self.nvars = nvars
        self.zero = LaurentPoly.zero(nvars) if not m or not m[0] or isinstance(m[0][0], LaurentPoly) else RatFunc.zero(nvars)
        self.one = self.zero + 1
        self.cache = {}

    def __call__(self, rows, cols):
        key = (rows, cols)
        v = self.cache.get(key)
        if v is not None:
            return v
        if not rows:
            v = self.one
        elif len(rows) == 1:
            v = self.m[rows[0]][cols[0]]
        else:
            r0 = self.m[rows[0]]
            rest = rows[1:]
            v = self.zero
            for i, c in enumerate(cols):
                x = r0[c]
                if not x:
                    continue
                sub = self(rest, cols[:i] + cols[i + 1:])
                if not sub:
                    continue
                v = v + x * sub if i % 2 == 0 else v - x * sub
        self.cache[key] = v
        return v


def exterior_power(m, j, nvars):
    """Matrix of j-minors: entry (P, Q) = det m[P, Q] with P, Q running over
    increasing j-subsets of rows and columns in lex order."""
    rows, cols = shape(m)
    mi = Minors(m, nvars)
    rsets = list(combinations(range(rows), j))
    csets = list(combinations(range(cols), j))
    return [[mi(p, q) for q in csets] for p in rsets]
