"""Torsion of finite based chain complexes over Q(G)."""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence

from .coeff import RatFunc, as_ratfunc
from .linalg import clear_denominators, det_field, echelon_pivots, rank, solve


def _zero_vec(d, nvars):
    return [RatFunc.zero(nvars)] * d


def _apply(mat, v, rows, nvars):
    out = []
    for i in range(rows):
        acc = RatFunc.zero(nvars)
        for x, y in zip(mat[i], v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def _columns(mat, rows, cols):
    return [[mat[i][j] for i in range(rows)] for j in range(cols)]


class BasedChainComplex:
    """0 -> C_m -> ... -> C_0 -> 0 with standard bases.

    ``dims[i]`` is dim C_i; ``boundaries[i]`` (i = 1..m) is the matrix of
    d_i : C_i -> C_{i-1}, with dims[i-1] rows and dims[i] columns, column j
    being the image of the j-th basis vector."""

    def __init__(self, dims: Sequence[int], boundaries: Dict[int, list], nvars: int, check=True):
        self.dims = list(dims)
        self.nvars = nvars
        self.boundaries = {}
        for i in range(1, len(self.dims)):
            m = boundaries.get(i)
            r, c = self.dims[i - 1], self.dims[i]
            if m is None:
                m = [[RatFunc.zero(nvars)] * c for _ in range(r)]
            if len(m) != r or any(len(row) != c for row in m):
                raise ValueError(f"boundary {i} has the wrong shape")
            self.boundaries[i] = [[as_ratfunc(x, nvars) for x in row] for row in m]
        if check:
            self.check()

    @property
    def length(self):
        return len(self.dims) - 1

    def d(self, i):
        """Matrix of d_i, empty when out of range."""
        return self.boundaries.get(i)

    def check(self):
        for i in range(2, len(self.dims)):
            a, b = self.boundaries[i - 1], self.boundaries[i]
            for r in range(self.dims[i - 2]):
                for c in range(self.dims[i]):
                    acc = RatFunc.zero(self.nvars)
                    for k in range(self.dims[i - 1]):
                        if a[r][k] and b[k][c]:
                            acc = acc + a[r][k] * b[k][c]
                    if acc:
                        raise ValueError(f"d_{i - 1} d_{i} is not zero")

    def boundary_rank(self, i):
        m = self.boundaries.get(i)
        if not m or not self.dims[i] or not self.dims[i - 1]:
            return 0
        return rank(m)

    def betti(self, i):
        """dim H_i over the field."""
        return self.dims[i] - self.boundary_rank(i) - self.boundary_rank(i + 1)

    def is_cycle(self, i, v):
        m = self.boundaries.get(i)
        if m is None or not self.dims[i - 1]:
            return True
        return all(not x for x in _apply(m, v, self.dims[i - 1], self.nvars))

    def pivots(self, i, col_order=None):
        """Greedy independent columns of d_i."""
        m = self.boundaries.get(i)
        if not m or not self.dims[i] or not self.dims[i - 1]:
            return []
        polys = [clear_denominators(row)[0] for row in m]
        order = None
        if col_order is not None:
            order = col_order.get(i) if isinstance(col_order, dict) else col_order(i, self.dims[i])
        return echelon_pivots(polys, order)[0]

    def boundary_basis(self, i, col_order=None):
        """b_i: images under d_{i+1} of its pivot columns."""
        m = self.boundaries.get(i + 1)
        if m is None:
            return []
        cols = _columns(m, self.dims[i], self.dims[i + 1])
        return [cols[c] for c in self.pivots(i + 1, col_order)]

    def lifts(self, i, col_order=None):
        """Basis vectors of C_i at the pivot columns of d_i."""
        out = []
        for c in self.pivots(i, col_order):
            v = _zero_vec(self.dims[i], self.nvars)
            v = list(v)
            v[c] = RatFunc.one(self.nvars)
            out.append(v)
        return out


def homology_basis(c: BasedChainComplex) -> Dict[int, List[list]]:
    """Some homological basis: a complement of the boundaries inside the
    cycles, built from kernel vectors of each d_i."""
    from .linalg import rank_kernel
    h = {}
    for i in range(len(c.dims)):
        d = c.dims[i]
        if i >= 1 and c.dims[i - 1] and d:
            _, ker = rank_kernel(c.boundaries[i])
        else:
            ker = []
            for j in range(d):
                v = [RatFunc.zero(c.nvars)] * d
                v[j] = RatFunc.one(c.nvars)
                ker.append(v)
        chosen = list(c.boundary_basis(i))
        base = len(chosen)
        picked = []
        for v in ker:
            trial = chosen + [v]
            if _col_rank(trial, d, c.nvars) == len(trial):
                chosen = trial
                picked.append(v)
        assert len(chosen) - base == c.betti(i)
        h[i] = picked
    return h


def _col_rank(vectors, d, nvars):
    if not vectors or not d:
        return 0
    return rank([[v[r] for v in vectors] for r in range(d)])


def _bracket(c, i, h_i, col_order=None):
    vecs = c.boundary_basis(i, col_order) + list(h_i) + c.lifts(i, col_order)
    if len(vecs) != c.dims[i]:
        raise ValueError(f"degree {i}: {len(vecs)} vectors for a space of dimension {c.dims[i]}")
    if not vecs:
        return RatFunc.one(c.nvars)
    mat = [[v[r] for v in vecs] for r in range(c.dims[i])]
    return det_field(mat)


def validate_homology_basis(c: BasedChainComplex, h: Dict[int, list], degrees=None):
    for i in degrees if degrees is not None else range(len(c.dims)):
        hi = h.get(i, [])
        for v in hi:
            if len(v) != c.dims[i]:
                raise ValueError(f"homology vector of wrong length in degree {i}")
            if not c.is_cycle(i, v):
                raise ValueError(f"homology vector in degree {i} is not a cycle")
        if len(hi) != c.betti(i):
            raise ValueError(f"degree {i}: {len(hi)} homology vectors, homology has dimension {c.betti(i)}")


def torsion(c: BasedChainComplex, h: Optional[Dict[int, list]] = None, col_order=None) -> RatFunc:
    """prod_i [(b_i h_i) b_{i-1} / c_i]^((-1)^(i+1))."""
    h = h or {}
    validate_homology_basis(c, h)
    tau = RatFunc.one(c.nvars)
    for i in range(len(c.dims)):
        x = _bracket(c, i, [list(map(as_ratfunc, v)) for v in h.get(i, [])], col_order)
        if not x:
            raise ValueError(f"degree {i}: vectors are not a basis (invalid homological basis)")
        tau = tau * x if i % 2 else tau / x
    return tau


class TorsionFunction:
    """The multilinear map on Lambda^beta H_k(C) equal to tau (k odd) or
    tau^-1 (k even) on bases, given bases in all other degrees."""

    def __init__(self, c: BasedChainComplex, k: int, h: Dict[int, list]):
        others = [i for i in range(len(c.dims)) if i != k]
        validate_homology_basis(c, h, others)
        self.c = c
        self.k = k
        self.beta = c.betti(k)
        rest = RatFunc.one(c.nvars)
        for i in others:
            x = _bracket(c, i, h.get(i, []))
            if not x:
                raise ValueError(f"degree {i}: invalid homological basis")
            rest = rest * x if i % 2 else rest / x
        self.rest = rest if k % 2 else rest.inverse()

    def __call__(self, vectors) -> RatFunc:
        vectors = [list(map(as_ratfunc, v)) for v in vectors]
        if len(vectors) != self.beta:
            raise ValueError(f"expected {self.beta} homology vectors, got {len(vectors)}")
        for v in vectors:
            if not self.c.is_cycle(self.k, v):
                raise ValueError("argument is not a cycle")
        return _bracket(self.c, self.k, vectors) * self.rest


def torsion_function(c: BasedChainComplex, k: int, h: Dict[int, list]) -> TorsionFunction:
    return TorsionFunction(c, k, h)


# ---------------------------------------------------------------- exact sequences


def _mat_vec(m, v, rows, nvars):
    return _apply(m, v, rows, nvars)


def _homology_coords(c: BasedChainComplex, i, z, basis):
    """x with z = sum x_j basis_j + (a boundary)."""
    b = c.boundary_basis(i)
    vecs = list(basis) + b
    d = c.dims[i]
    if not vecs:
        if any(z):
            raise ValueError("vector is not a boundary")
        return []
    mat = [[v[r] for v in vecs] for r in range(d)]
    x = solve(mat, z, c.nvars)
    if x is None:
        raise ValueError("vector is not a cycle of the expected homology")
    return x[:len(basis)]


def _check_chain_map(f, src, tgt, name):
    n = src.nvars
    for i in range(1, len(src.dims)):
        for j in range(src.dims[i]):
            e = [RatFunc.zero(n)] * src.dims[i]
            e[j] = RatFunc.one(n)
            left = _mat_vec(tgt.boundaries[i], _mat_vec(f[i], e, tgt.dims[i], n), tgt.dims[i - 1], n)
            right = _mat_vec(f[i - 1], _mat_vec(src.boundaries[i], e, src.dims[i - 1], n), tgt.dims[i - 1], n)
            if any(a != b for a, b in zip(left, right)):
                raise ValueError(f"{name} is not a chain map in degree {i}")


def les_complex(cp, c, cpp, i_map, p_map, hp, h, hpp) -> BasedChainComplex:
    """The long exact homology sequence as an acyclic based complex:
    H_k(C'') in degree 3k, H_k(C) in 3k+1, H_k(C') in 3k+2."""
    n = c.nvars
    m = len(c.dims) - 1
    dims = []
    for k in range(m + 1):
        dims += [len(hpp.get(k, [])), len(h.get(k, [])), len(hp.get(k, []))]
    bnd = {}
    for k in range(m + 1):
        # i_*: H_k(C') -> H_k(C), degree 3k+2 -> 3k+1
        cols = [_homology_coords(c, k, _mat_vec(i_map[k], v, c.dims[k], n), h.get(k, [])) for v in hp.get(k, [])]
        bnd[3 * k + 2] = _cols_to_mat(cols, dims[3 * k + 1], n)
        # p_*: H_k(C) -> H_k(C''), degree 3k+1 -> 3k
        cols = [_homology_coords(cpp, k, _mat_vec(p_map[k], v, cpp.dims[k], n), hpp.get(k, [])) for v in h.get(k, [])]
        bnd[3 * k + 1] = _cols_to_mat(cols, dims[3 * k], n)
        if k >= 1:
            # connecting map H_k(C'') -> H_{k-1}(C'), degree 3k -> 3k-1
            cols = []
            for v in hpp.get(k, []):
                x = solve(p_map[k], v, n)
                if x is None:
                    raise ValueError("projection is not surjective")
                y = _mat_vec(c.boundaries[k], x, c.dims[k - 1], n)
                w = solve(i_map[k - 1], y, n)
                if w is None:
                    raise ValueError("sequence is not exact")
                cols.append(_homology_coords(cp, k - 1, w, hp.get(k - 1, [])))
            bnd[3 * k] = _cols_to_mat(cols, dims[3 * k - 1], n)
    return BasedChainComplex(dims, bnd, n)


def _cols_to_mat(cols, rows, nvars):
    return [[col[r] for col in cols] for r in range(rows)]


def ses_multiplicativity_check(cp, c, cpp, maps, hp, h, hpp) -> RatFunc:
    """tau(C) / (tau(C') tau(C'') tau(H)) for 0 -> C' -> C -> C'' -> 0,
    maps = (i_map, p_map) given per degree."""
    i_map, p_map = maps
    n = c.nvars
    if not (len(cp.dims) == len(c.dims) == len(cpp.dims)):
        raise ValueError("complexes of different lengths")
    _check_chain_map(i_map, cp, c, "inclusion")
    _check_chain_map(p_map, c, cpp, "projection")
    for k in range(len(c.dims)):
        if c.dims[k] != cp.dims[k] + cpp.dims[k]:
            raise ValueError(f"dimensions do not add up in degree {k}")
        if not c.dims[k]:
            continue
        vecs = []
        for j in range(cp.dims[k]):
            e = [RatFunc.zero(n)] * cp.dims[k]
            e[j] = RatFunc.one(n)
            vecs.append(_mat_vec(i_map[k], e, c.dims[k], n))
        for j in range(cpp.dims[k]):
            e = [RatFunc.zero(n)] * cpp.dims[k]
            e[j] = RatFunc.one(n)
            x = solve(p_map[k], e, n)
            if x is None:
                raise ValueError(f"projection not surjective in degree {k}")
            vecs.append(x)
        for v in vecs[:cp.dims[k]]:
            if any(_mat_vec(p_map[k], v, cpp.dims[k], n)):
                raise ValueError(f"composite of the maps is not zero in degree {k}")
        mat = [[v[r] for v in vecs] for r in range(c.dims[k])]
        if det_field(mat) != 1:
            raise ValueError(f"bases are not compatible in degree {k}")
    hcx = les_complex(cp, c, cpp, i_map, p_map, hp, h, hpp)
    t_h = torsion(hcx, {})
    return torsion(c, h) / (torsion(cp, hp) * torsion(cpp, hpp) * t_h)
