"""Evaluation of the Reidemeister functor R(M, phi) and the classical
invariants it specializes to."""

from __future__ import annotations

from itertools import combinations
from typing import List, Sequence, Tuple

from .cobordism import (
    LOWER_ALPHA,
    LOWER_BETA,
    UPPER_ALPHA,
    UPPER_BETA,
    CobObject,
    HeegaardWord,
    KnotInput,
    Piece,
    PreconditionError,
    PresentedCobordism,
    simplify_presentation,
)
from .coeff import LaurentPoly, RatFunc, normalize_unit
from .exterior import (
    GradedMap,
    ProjectiveGradedMap,
    compose,
    expansion_sign,
    complement,
    identity_map,
    lambda_extend,
    tensor_koszul,
)
from .freegroup import AbelMap, Word, fox_jacobian, fox_row
from .linalg import Minors, det_fraction_free, echelon_pivots, poly_kernel


class MagnusError(ValueError):
    """The value is not of the form tau * Lambda(r)."""


def _core_value(p: Piece, src: CobObject, tgt: CobObject) -> GradedMap:
    n = src.nvars
    k = p.k
    one = RatFunc.one(n)
    a_idx = tuple(range(k))
    b_idx = tuple(range(k, 2 * k))
    if p.kind == LOWER_ALPHA:
        return GradedMap(0, k, n, {0: {(a_idx, ()): one}})
    if p.kind == LOWER_BETA:
        return GradedMap(0, k, n, {0: {(b_idx, ()): one}})
    if p.kind == UPPER_BETA:
        return GradedMap(k, 0, n, {k: {((), a_idx): one}})
    if p.kind == UPPER_ALPHA:
        return GradedMap(k, 0, n, {k: {((), b_idx): one}})
    mid = tgt.handles(p.lpad, k)
    return lambda_extend(fox_jacobian(p.hom, mid.abel()), n)


_ID_CACHE = {}


def _identity(g, n):
    key = (g, n)
    if key not in _ID_CACHE:
        _ID_CACHE[key] = identity_map(g, n)
    return _ID_CACHE[key]


def piece_value(p: Piece, src: CobObject) -> GradedMap:
    tgt = p.target(src)
    p.check_target(tgt)
    n = src.nvars
    value = _core_value(p, src, tgt)
    if p.lpad:
        value = tensor_koszul(_identity(p.lpad, n), value)
    if p.pad:
        value = tensor_koszul(value, _identity(p.pad, n))
    return value


def eval_elementary(p: Piece, src: CobObject) -> ProjectiveGradedMap:
    return ProjectiveGradedMap(piece_value(p, src))


def eval_word(w: HeegaardWord) -> ProjectiveGradedMap:
    value = None
    for p, src in zip(w.pieces, w.objects):
        v = piece_value(p, src)
        value = v if value is None else compose(v, value)
    if value is None:
        value = identity_map(w.source.genus, w.nvars)
    return ProjectiveGradedMap(value)


# ---------------------------------------------------------------- presentations


def fox_matrix(words: Sequence[Word], phi: AbelMap) -> List[List[LaurentPoly]]:
    return [fox_row(w, phi) for w in words]


def reidemeister_function(p: PresentedCobordism, kappa: Sequence[Word]) -> RatFunc:
    """det of the Fox rows of the relators stacked over those of kappa."""
    if len(kappa) != p.g:
        raise ValueError(f"expected {p.g} loops, got {len(kappa)}")
    m = fox_matrix(list(p.relators) + list(kappa), p.phi)
    return RatFunc(det_fraction_free(m, p.nvars))


class AlexanderForm:
    """kappa -> det[A; Fox(kappa)] for a fixed relator matrix A, computed as
    c * det(Fox(kappa) . Pi) with Pi a kernel basis of A."""

    def __init__(self, p: PresentedCobordism):
        self.p = p
        n = p.nvars
        a = fox_matrix(p.relators, p.phi)
        self.n = n
        g, r = p.g, len(p.relators)
        if r == 0:
            self.vanishes = False
            self.pi = None
            self.c_num = LaurentPoly.one(n)
            self.c_den = LaurentPoly.one(n)
            return
        rank, ker = poly_kernel(a, p.ngens, n)
        self.vanishes = rank < r
        if self.vanishes:
            return
        self.pi = ker
        pcols, _ = echelon_pivots(a)
        free = [c for c in range(p.ngens) if c not in pcols]
        units = []
        for f in free:
            row = [LaurentPoly.zero(n)] * p.ngens
            row[f] = LaurentPoly.one(n)
            units.append(row)
        self.c_num = det_fraction_free(a + units, n)
        # E.Pi = D * I for the Cramer kernel, D the pivot minor
        d = ker[0][free[0]] if free else LaurentPoly.one(n)
        self.c_den = d ** g

    def coords(self, w: Word) -> List[LaurentPoly]:
        row = fox_row(w, self.p.phi)
        if self.pi is None:
            return row
        out = []
        for v in self.pi:
            acc = LaurentPoly.zero(self.n)
            for x, y in zip(row, v):
                if x and y:
                    acc = acc + x * y
            out.append(acc)
        return out

    def __call__(self, kappa: Sequence[Word]) -> RatFunc:
        if self.vanishes:
            return RatFunc.zero(self.n)
        rows = [self.coords(w) for w in kappa]
        return RatFunc(det_fraction_free(rows, self.n) * self.c_num, self.c_den)


def eval_presented(p: PresentedCobordism, simplify=True) -> ProjectiveGradedMap:
    """Solve omega(R(x) ^ y) = R_M(m_-(x) ^ m_+(y)) for R(x) on basis
    multivectors, expanding R(x) = sum_P (-1)^|P| eps_P omega(R(x) ^ v_P) v_Pbar."""
    gm, gp, n = p.g_minus, p.g_plus, p.nvars
    if simplify:
        p = simplify_presentation(p)
    form = AlexanderForm(p)
    result = GradedMap(gm, gp, n)
    if form.vanishes:
        return ProjectiveGradedMap(result)
    g = gm + gp
    rows = [form.coords(w) for w in p.bottom + p.top]
    minors = Minors(rows, n)
    all_cols = tuple(range(g))
    dp = 2 * gp
    blocks = {}
    for j in result.admissible():
        if g - j > dp:
            continue
        blk = {}
        tops = list(combinations(range(dp), g - j))
        for s in combinations(range(2 * gm), j):
            for pset in tops:
                d = minors(s + tuple(2 * gm + i for i in pset), all_cols)
                if not d:
                    continue
                coef = RatFunc(d * form.c_num, form.c_den)
                blk[(complement(pset, dp), s)] = coef if expansion_sign(pset, dp) > 0 else -coef
        blocks[j] = blk
    return ProjectiveGradedMap(GradedMap(gm, gp, n, blocks))


# ---------------------------------------------------------------- knots


def _knot_det(k: KnotInput, w: Word) -> LaurentPoly:
    m = fox_matrix(list(k.relators) + [w], k.phi)
    return det_fraction_free(m, k.nvars)


def knot_alexander(k: KnotInput) -> LaurentPoly:
    """Delta(K) = det of the Fox matrix of (relators, meridian), in
    canonical form up to +-t^k."""
    if k.nvars != 1:
        raise ValueError("the Alexander polynomial needs a single-variable session")
    if k.phi.exp(k.meridian) != (1,):
        raise PreconditionError(f"phi(meridian) must be t, got exponent {list(k.phi.exp(k.meridian))}")
    return normalize_unit(_knot_det(k, k.meridian))[0]


def knot_torsion(k: KnotInput, parallel: Word = None) -> RatFunc:
    """R(M_K)([lambda]) / (phi(lambda) - 1)."""
    lam = parallel if parallel is not None else (k.parallel if k.parallel is not None else k.meridian)
    e = k.phi(lam)
    if e.is_one():
        raise PreconditionError("phi(lambda) = 1: the formula does not apply")
    return RatFunc(_knot_det(k, lam), e - 1)


def closed_torsion(k: KnotInput, parallel: Word = None) -> RatFunc:
    """tau(N) = R(M_K)([rho]) / (phi([K]) - 1)^2 for a parallel rho of K."""
    rho = parallel if parallel is not None else k.parallel
    if rho is None:
        raise ValueError("closed_torsion needs a parallel word")
    e = k.phi(rho)
    if e.is_one():
        raise PreconditionError("phi([K]) = 1: the formula does not apply")
    return RatFunc(_knot_det(k, rho), (e - 1) ** 2)


# ---------------------------------------------------------------- read-outs


def magnus_extract(v) -> Tuple[RatFunc, list]:
    """(tau, r) with value = tau * Lambda(r) for a homology cobordism."""
    m = v.rep if isinstance(v, ProjectiveGradedMap) else v
    if m.degree != 0:
        raise MagnusError(f"degree {m.degree} map is not a homology cobordism value")
    n, d = m.nvars, 2 * m.g_minus
    tau = m.blocks.get(0, {}).get(((), ()))
    if tau is None or not tau:
        raise MagnusError("Lambda^0 block is zero: not a homology cobordism or vanishing torsion")
    inv = tau.inverse()
    z = RatFunc.zero(n)
    blk1 = m.blocks.get(1, {})
    r = [[blk1.get(((i,), (j,)), z) * inv for j in range(d)] for i in range(d)]
    expected = lambda_extend(r, n).scale(tau)
    if expected != m:
        raise MagnusError("higher blocks are not tau * Lambda(r)")
    return tau, r


def integrality_check(v) -> bool:
    """Some unit multiple has only Laurent polynomial entries."""
    m = v.rep if isinstance(v, ProjectiveGradedMap) else v
    return all(x.as_laurent() is not None for b in m.blocks.values() for x in b.values())


def integral_form(v) -> GradedMap:
    """Unit-normalized representative with LaurentPoly-valued entries (as
    RatFunc with unit denominator)."""
    pv = v if isinstance(v, ProjectiveGradedMap) else ProjectiveGradedMap(v)
    if not integrality_check(pv):
        raise ValueError("value is not integral")
    m0, _ = pv.normalized()
    return m0.map_entries(lambda x: RatFunc(x.as_laurent()))


def boundary_map_values(obj: CobObject):
    """d_*(a_i) = phi(alpha_i) - 1, d_*(b_i) = phi(beta_i) - 1."""
    return [LaurentPoly.monomial(e) - 1 for e in obj.phi]
