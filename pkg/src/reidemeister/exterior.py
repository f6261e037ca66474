"""Exterior algebras of based spaces and graded maps between them.

Basis convention for an object of genus g: indices 0..g-1 are a_1..a_g,
indices g..2g-1 are b_1..b_g.  A basis multivector is an increasing index
tuple.
"""

from __future__ import annotations

from itertools import combinations
from typing import Dict, Optional, Tuple

from .coeff import MonomialUnit, RatFunc, as_ratfunc, unit_quotient
from .linalg import Minors

Subset = Tuple[int, ...]


def merge_sign(p: Subset, q: Subset) -> int:
    """Sign of the shuffle sorting p + q, or 0 if they overlap."""
    inv = 0
    j = 0
    for x in p:
        while j < len(q) and q[j] < x:
            j += 1
        if j < len(q) and q[j] == x:
            return 0
        inv += j
    return -1 if inv % 2 else 1


def perm_sign(seq) -> int:
    """Sign of the permutation sorting seq (distinct entries)."""
    seq = list(seq)
    sign = 1
    seen = [False] * len(seq)
    order = sorted(range(len(seq)), key=lambda i: seq[i])
    for i in range(len(seq)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def complement(p: Subset, d: int) -> Subset:
    s = set(p)
    return tuple(i for i in range(d) if i not in s)


# ---------------------------------------------------------------- multivectors


class Multivector:
    __slots__ = ("dim", "terms", "nvars")

    def __init__(self, dim, terms=None, nvars=1):
        self.dim = dim
        self.nvars = nvars
        clean = {}
        for s, c in (terms or {}).items():
            s = tuple(s)
            if list(s) != sorted(set(s)) or (s and (s[0] < 0 or s[-1] >= dim)):
                raise ValueError(f"bad index subset {s} in dimension {dim}")
            c = as_ratfunc(c, nvars)
            if c:
                clean[s] = c
        self.terms = clean

    @classmethod
    def basis(cls, dim, subset, nvars):
        return cls(dim, {tuple(subset): RatFunc.one(nvars)}, nvars)

    @classmethod
    def scalar(cls, dim, c, nvars):
        return cls(dim, {(): c}, nvars)

    def __add__(self, other):
        self._same(other)
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out[s] + c if s in out else c
        return Multivector(self.dim, out, self.nvars)

    def __neg__(self):
        return Multivector(self.dim, {s: -c for s, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return Multivector(self.dim, {s: x * c for s, x in self.terms.items()}, self.nvars)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        if self.dim != other.dim:
            return False
        keys = set(self.terms) | set(other.terms)
        z = RatFunc.zero(self.nvars)
        return all(self.terms.get(k, z) == other.terms.get(k, z) for k in keys)

    __hash__ = None

    def degrees(self):
        return sorted({len(s) for s in self.terms})

    def homogeneous(self, j):
        return Multivector(self.dim, {s: c for s, c in self.terms.items() if len(s) == j}, self.nvars)

    def _same(self, other):
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __repr__(self):
        inner = ", ".join(f"{s}: {c}" for s, c in sorted(self.terms.items()))
        return f"Multivector(dim={self.dim}, {{{inner}}})"


def wedge(x: Multivector, y: Multivector) -> Multivector:
    x._same(y)
    out: Dict[Subset, RatFunc] = {}
    for p, a in x.terms.items():
        for q, b in y.terms.items():
            s = merge_sign(p, q)
            if not s:
                continue
            key = tuple(sorted(p + q))
            v = a * b if s > 0 else -(a * b)
            out[key] = out[key] + v if key in out else v
    return Multivector(x.dim, out, x.nvars)


def volume_pair(x: Multivector, y: Multivector) -> RatFunc:
    """omega(x ^ y) with omega(e_1 ^ ... ^ e_d) = 1."""
    full = tuple(range(x.dim))
    return wedge(x, y).terms.get(full, RatFunc.zero(x.nvars))


def expansion_sign(p: Subset, d: int) -> int:
    """(-1)^|P| eps_P where eps_P is the sign of the permutation P Pbar."""
    eps = merge_sign(p, complement(p, d))
    return -eps if len(p) % 2 else eps


def expand_via_volume(z: Multivector) -> Multivector:
    """sum_P (-1)^|P| eps_P omega(z ^ v_P) v_Pbar over all subsets P; for
    even d this reproduces z."""
    d = z.dim
    out = {}
    for k in range(d + 1):
        for p in combinations(range(d), k):
            c = volume_pair(z, Multivector.basis(d, p, z.nvars))
            if c:
                out[complement(p, d)] = c * expansion_sign(p, d)
    return Multivector(d, out, z.nvars)


# ---------------------------------------------------------------- graded maps

Block = Dict[Tuple[Subset, Subset], RatFunc]


class GradedMap:
    """Linear map Lambda H_- -> Lambda H_+ homogeneous of degree
    g_plus - g_minus, with dim H_pm = 2 g_pm.

    blocks[j] maps (T, S) -> coefficient of v_T in the image of v_S, for
    |S| = j, |T| = j + degree.  Missing entries are zero."""

    __slots__ = ("g_minus", "g_plus", "nvars", "blocks")

    def __init__(self, g_minus, g_plus, nvars, blocks=None):
        self.g_minus = g_minus
        self.g_plus = g_plus
        self.nvars = nvars
        clean: Dict[int, Block] = {}
        deg = g_plus - g_minus
        for j, blk in (blocks or {}).items():
            sub = {}
            for (t, s), c in blk.items():
                if len(s) != j or len(t) != j + deg:
                    raise ValueError(f"entry {(t, s)} does not fit block {j} of degree {deg}")
                if c:
                    sub[(t, s)] = c
            if sub:
                clean[j] = sub
        self.blocks = clean

    @property
    def degree(self):
        return self.g_plus - self.g_minus

    @property
    def src_dim(self):
        return 2 * self.g_minus

    @property
    def tgt_dim(self):
        return 2 * self.g_plus

    def admissible(self):
        """Range of j whose blocks may be nonzero."""
        lo = max(0, -self.degree)
        hi = min(self.g_plus + self.g_minus, 2 * self.g_minus)
        return range(lo, hi + 1)

    def entries(self):
        for j in sorted(self.blocks):
            for key in sorted(self.blocks[j]):
                yield j, key, self.blocks[j][key]

    def is_zero(self):
        return not self.blocks

    def block_matrix(self, j):
        """Dense block j: rows are target subsets, columns source subsets,
        both in lex order."""
        rows = list(combinations(range(self.tgt_dim), j + self.degree)) if j + self.degree >= 0 else []
        cols = list(combinations(range(self.src_dim), j))
        blk = self.blocks.get(j, {})
        z = RatFunc.zero(self.nvars)
        return [[blk.get((t, s), z) for s in cols] for t in rows]

    def apply(self, x: Multivector) -> Multivector:
        if x.dim != self.src_dim:
            raise ValueError("dimension mismatch")
        out = {}
        for s, c in x.terms.items():
            for (t, s2), v in self.blocks.get(len(s), {}).items():
                if s2 == s:
                    out[t] = out[t] + v * c if t in out else v * c
        return Multivector(self.tgt_dim, out, self.nvars)

    def scale(self, c):
        c = as_ratfunc(c, self.nvars)
        return GradedMap(self.g_minus, self.g_plus, self.nvars,
                         {j: {k: v * c for k, v in b.items()} for j, b in self.blocks.items()})

    def scale_unit(self, u: MonomialUnit):
        return GradedMap(self.g_minus, self.g_plus, self.nvars,
                         {j: {k: v.scale_unit(u) for k, v in b.items()} for j, b in self.blocks.items()})

    def map_entries(self, f):
        return GradedMap(self.g_minus, self.g_plus, self.nvars,
                         {j: {k: f(v) for k, v in b.items()} for j, b in self.blocks.items()})

    def __eq__(self, other):
        if not isinstance(other, GradedMap):
            return NotImplemented
        if (self.g_minus, self.g_plus) != (other.g_minus, other.g_plus):
            return False
        keys = {(j, k) for j, b in self.blocks.items() for k in b}
        keys |= {(j, k) for j, b in other.blocks.items() for k in b}
        z = RatFunc.zero(self.nvars)
        return all(self.blocks.get(j, {}).get(k, z) == other.blocks.get(j, {}).get(k, z) for j, k in keys)

    __hash__ = None

    def __repr__(self):
        n = sum(len(b) for b in self.blocks.values())
        return f"GradedMap({self.g_minus}->{self.g_plus}, degree {self.degree}, {n} nonzero entries)"


def identity_map(g, nvars) -> GradedMap:
    one = RatFunc.one(nvars)
    blocks = {}
    for j in range(2 * g + 1):
        blocks[j] = {(s, s): one for s in combinations(range(2 * g), j)}
    return GradedMap(g, g, nvars, blocks)


def compose(b: GradedMap, a: GradedMap) -> GradedMap:
    """b o a."""
    if a.g_plus != b.g_minus:
        raise ValueError(f"cannot compose: genus {a.g_plus} vs {b.g_minus}")
    if a.nvars != b.nvars:
        raise ValueError("variable count mismatch")
    out = {}
    for j, ablk in a.blocks.items():
        bblk = b.blocks.get(j + a.degree)
        if not bblk:
            continue
        bycol = {}
        for (u, t), v in bblk.items():
            bycol.setdefault(t, []).append((u, v))
        acc = {}
        for (t, s), x in ablk.items():
            for u, y in bycol.get(t, ()):
                key = (u, s)
                p = y * x
                acc[key] = acc[key] + p if key in acc else p
        out[j] = acc
    return GradedMap(a.g_minus, b.g_plus, a.nvars, out)


def lambda_extend(m, nvars) -> GradedMap:
    """Lambda of a square 2g x 2g matrix acting on column vectors."""
    d = len(m)
    if d % 2 or any(len(r) != d for r in m):
        raise ValueError("lambda_extend needs a square matrix of even size")
    f = [[as_ratfunc(x, nvars) for x in row] for row in m]
    mi = Minors(f, nvars)
    blocks = {}
    for j in range(d + 1):
        subsets = list(combinations(range(d), j))
        blk = {}
        for s in subsets:
            for t in subsets:
                v = mi(t, s)
                if v:
                    blk[(t, s)] = v
        blocks[j] = blk
    return GradedMap(d // 2, d // 2, nvars, blocks)


def _concat_index(g, h):
    """Index maps of the first and second factor into genus g+h."""
    first = [i if i < g else h + i for i in range(2 * g)]
    second = [g + i if i < h else 2 * g + i for i in range(2 * h)]
    return first, second


def _combine(p, q, fm, sm):
    """(sign, subset) with v_p (x) v_q = sign * v_subset in the
    concatenated basis."""
    seq = [fm[i] for i in p] + [sm[i] for i in q]
    return perm_sign(seq), tuple(sorted(seq))


def tensor_koszul(a: GradedMap, b: GradedMap) -> GradedMap:
    """(a (x) b)(u (x) v) = (-1)^(deg b |u|) a(u) (x) b(v), written in the
    concatenated basis: first factor's a_i -> a_i, second's a_i -> a_{g+i},
    likewise for the b's."""
    if a.nvars != b.nvars:
        raise ValueError("variable count mismatch")
    gm, gp = a.g_minus + b.g_minus, a.g_plus + b.g_plus
    fm_src, sm_src = _concat_index(a.g_minus, b.g_minus)
    fm_tgt, sm_tgt = _concat_index(a.g_plus, b.g_plus)
    db = b.degree
    out: Dict[int, Block] = {}
    for ja, ablk in a.blocks.items():
        koszul = -1 if (db * ja) % 2 else 1
        for jb, bblk in b.blocks.items():
            acc = out.setdefault(ja + jb, {})
            for (ta, sa), x in ablk.items():
                for (tb, sb), y in bblk.items():
                    e_src, s = _combine(sa, sb, fm_src, sm_src)
                    e_tgt, t = _combine(ta, tb, fm_tgt, sm_tgt)
                    v = x * y
                    if koszul * e_src * e_tgt < 0:
                        v = -v
                    key = (t, s)
                    acc[key] = acc[key] + v if key in acc else v
    return GradedMap(gm, gp, a.nvars, out)


def first_nonzero(m: GradedMap):
    for j in sorted(m.blocks):
        blk = m.blocks[j]
        if blk:
            k = min(blk)
            return j, k, blk[k]
    return None


def unit_between(p: GradedMap, q: GradedMap) -> Optional[MonomialUnit]:
    """The unit u with p = u*q on every entry, or None."""
    if (p.g_minus, p.g_plus) != (q.g_minus, q.g_plus):
        return None
    fp, fq = first_nonzero(p), first_nonzero(q)
    if fp is None or fq is None:
        return MonomialUnit.one(p.nvars) if fp is None and fq is None else None
    if fp[:2] != fq[:2]:
        return None
    u = unit_quotient(fp[2], fq[2])
    if u is None:
        return None
    if set((j, k) for j, b in p.blocks.items() for k in b) != set((j, k) for j, b in q.blocks.items() for k in b):
        return None
    for j, blk in p.blocks.items():
        qb = q.blocks[j]
        for k, v in blk.items():
            if v != qb[k].scale_unit(u):
                return None
    return u


class ProjectiveGradedMap:
    """A graded map up to one global unit +-t^a."""

    __slots__ = ("rep",)

    def __init__(self, rep: GradedMap):
        self.rep = rep

    @property
    def degree(self):
        return self.rep.degree

    def __eq__(self, other):
        if not isinstance(other, ProjectiveGradedMap):
            return NotImplemented
        return proj_eq(self, other)

    __hash__ = None

    def compose(self, other: "ProjectiveGradedMap") -> "ProjectiveGradedMap":
        """self o other."""
        return ProjectiveGradedMap(compose(self.rep, other.rep))

    def tensor(self, other: "ProjectiveGradedMap") -> "ProjectiveGradedMap":
        return ProjectiveGradedMap(tensor_koszul(self.rep, other.rep))

    def normalized(self) -> Tuple[GradedMap, MonomialUnit]:
        """(m0, u) with rep = u*m0 and the first nonzero entry of m0
        canonical."""
        from .coeff import normalize_unit
        f = first_nonzero(self.rep)
        if f is None:
            return self.rep, MonomialUnit.one(self.rep.nvars)
        _, u = normalize_unit(f[2])
        return self.rep.scale_unit(u.inverse()), u

    def __repr__(self):
        return f"Projective{self.rep!r}"


def proj_eq(p, q) -> bool:
    if isinstance(p, ProjectiveGradedMap):
        p = p.rep
    if isinstance(q, ProjectiveGradedMap):
        q = q.rep
    return unit_between(p, q) is not None
