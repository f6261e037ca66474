"""Twisted intersection forms on surfaces and the two dualities of R.

The pairing on H = H_1^psi(F_k, *) is <x, y> = x^T J conj(y) for coordinate
columns x, y in the (a, b)-basis, so J[i][j] = <v_i, v_j>.  It is linear in
the first slot and conjugate-linear in the second.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple

from .cobordism import CobObject, HeegaardWord, dual_word
from .coeff import LaurentPoly, MonomialUnit, RatFunc, as_ratfunc, unit_quotient
from .exterior import GradedMap, Multivector, ProjectiveGradedMap, complement, merge_sign
from .functor import eval_word
from .linalg import Minors, det_fraction_free, matmul, transpose


@dataclass(frozen=True)
class IntersectionForm:
    obj: CobObject
    J: Tuple[Tuple[LaurentPoly, ...], ...]

    @property
    def k(self):
        return self.obj.genus

    @property
    def nvars(self):
        return self.obj.nvars

    def matrix(self) -> List[List[LaurentPoly]]:
        return [list(r) for r in self.J]

    def pair(self, x, y) -> RatFunc:
        """<x, y> for coordinate vectors."""
        n = self.nvars
        acc = RatFunc.zero(n)
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if yj and self.J[i][j]:
                    acc = acc + as_ratfunc(xi, n) * RatFunc(self.J[i][j]) * as_ratfunc(yj, n).involute()
        return acc


def intersection_matrix(psi: CobObject) -> IntersectionForm:
    """Lower triangular blocks J_aa, J_ab, J_ba, J_bb of the twisted
    intersection form, with P(x, y) = (1 - psi(x)) conj(1 - psi(y)) below
    the diagonal."""
    k, n = psi.genus, psi.nvars
    one = LaurentPoly.one(n)
    mono = [LaurentPoly.monomial(e) for e in psi.phi]
    al, be = mono[:k], mono[k:]

    def p(x, y):
        return (one - x) * (one - y).involute()

    m = [[LaurentPoly.zero(n)] * (2 * k) for _ in range(2 * k)]
    for i in range(k):
        m[i][i] = one - al[i]
        m[i][k + i] = al[i] * be[i].involute()
        m[k + i][i] = one - al[i].involute() - be[i]
        m[k + i][k + i] = one - be[i].involute()
        for j in range(i):
            m[i][j] = p(al[i], al[j])
            m[i][k + j] = p(al[i], be[j])
            m[k + i][j] = p(be[i], al[j])
            m[k + i][k + j] = p(be[i], be[j])
    return IntersectionForm(psi, tuple(tuple(r) for r in m))


def boundary_vector(psi: CobObject) -> List[LaurentPoly]:
    """d_*(v_i) = psi(v_i) - 1 on the (a, b)-basis."""
    return [LaurentPoly.monomial(e) - 1 for e in psi.phi]


def check_92(form: IntersectionForm) -> bool:
    """J = -conj(J^T) + d conj(d)^T, i.e. <x, y> = -conj<y, x> + d(x) conj(d(y))."""
    d = boundary_vector(form.obj)
    j = form.J
    size = len(j)
    for r in range(size):
        for c in range(size):
            rhs = -j[c][r].involute() + d[r] * d[c].involute()
            if j[r][c] != rhs:
                return False
    return True


def is_nonsingular(form: IntersectionForm) -> bool:
    return bool(det_fraction_free(form.matrix(), form.nvars)) if form.J else True


def pairing_preserved(f, psi_plus: CobObject) -> bool:
    """F^T J^{psi_+} conj(F) == J^{psi_-} for F = fox_jacobian(f) and
    psi_- = psi_+ o f."""
    from .freegroup import fox_jacobian
    n = psi_plus.nvars
    phi = psi_plus.abel()
    psi_minus = CobObject(psi_plus.genus, phi.compose(f).images, n)
    fm = fox_jacobian(f, phi)
    fb = [[x.involute() for x in row] for row in fm]
    lhs = matmul(matmul(transpose(fm), intersection_matrix(psi_plus).matrix(), n), fb, n)
    return lhs == intersection_matrix(psi_minus).matrix()


class WedgePairing:
    """<v_P, v_Q> = det J[P, Q] on Lambda^r H, memoized."""

    def __init__(self, form: IntersectionForm):
        self.form = form
        self.minors = Minors([[RatFunc(x) for x in row] for row in form.J], form.nvars)

    def basis(self, p, q) -> RatFunc:
        if len(p) != len(q):
            raise ValueError("degree mismatch")
        if not p:
            return RatFunc.one(self.form.nvars)
        return self.minors(tuple(p), tuple(q))


def pair_wedge(x: Multivector, y: Multivector, form: IntersectionForm) -> RatFunc:
    """Gram determinant pairing on Lambda^r H, extended linearly in x and
    conjugate-linearly in y; on Lambda^0 it is x conj(y)."""
    if x.dim != 2 * form.k or y.dim != 2 * form.k:
        raise ValueError("dimension mismatch")
    dx, dy = x.degrees(), y.degrees()
    if len(dx) > 1 or len(dy) > 1 or (dx and dy and dx != dy):
        raise ValueError("pair_wedge needs homogeneous arguments of equal degree")
    wp = WedgePairing(form)
    acc = RatFunc.zero(form.nvars)
    for p, a in x.terms.items():
        for q, b in y.terms.items():
            v = wp.basis(p, q)
            if v:
                acc = acc + a * v * b.involute()
    return acc


# ---------------------------------------------------------------- duality checks


def _global_unit(pairs) -> Tuple[bool, Optional[MonomialUnit]]:
    """One unit u with lhs = u * rhs for every (lhs, rhs) pair."""
    u = None
    for lhs, rhs in pairs:
        if not lhs and not rhs:
            continue
        if not lhs or not rhs:
            return False, None
        if u is None:
            u = unit_quotient(lhs, rhs)
            if u is None:
                return False, None
        elif lhs != rhs.scale_unit(u):
            return False, None
    return True, u


def _rep(v):
    return v.rep if isinstance(v, ProjectiveGradedMap) else v


def duality_pairs(r: GradedMap, rbar: GradedMap, src: CobObject, tgt: CobObject):
    """(<R x, y>_+, <x, Rbar y>_-) over basis pairs x = v_P, y = v_Q."""
    wp_plus = WedgePairing(intersection_matrix(tgt))
    wp_minus = WedgePairing(intersection_matrix(src))
    n = r.nvars
    z = RatFunc.zero(n)
    deg = r.degree
    for j in r.admissible() if r.blocks or rbar.blocks else ():
        blk = r.blocks.get(j, {})
        bblk = rbar.blocks.get(j + deg, {})
        srcs = list(combinations(range(2 * src.genus), j))
        tgts = list(combinations(range(2 * tgt.genus), j + deg))
        by_src = {}
        for (t, s), v in blk.items():
            by_src.setdefault(s, []).append((t, v))
        by_tgt = {}
        for (s, t), v in bblk.items():
            by_tgt.setdefault(t, []).append((s, v))
        for p in srcs:
            for q in tgts:
                lhs = z
                for t, v in by_src.get(p, ()):
                    m = wp_plus.basis(t, q)
                    if m:
                        lhs = lhs + v * m
                rhs = z
                for s, v in by_tgt.get(q, ()):
                    m = wp_minus.basis(p, s)
                    if m:
                        rhs = rhs + m * v.involute()
                yield (j, p, q), lhs, rhs


def verify_duality(w: HeegaardWord, value=None, dual_value=None) -> bool:
    """<R(M) x, y> = u <x, R(Mbar) y> for one unit u and all basis pairs."""
    r = _rep(value if value is not None else eval_word(w))
    rbar = _rep(dual_value if dual_value is not None else eval_word(dual_word(w)))
    pairs = ((l, rr) for _, l, rr in duality_pairs(r, rbar, w.source, w.target))
    return _global_unit(pairs)[0]


def volume_pairs(r: GradedMap, rbar: GradedMap):
    """(omega(R x ^ y), (-1)^{jg} omega(x ^ Rbar y)) over basis pairs."""
    gm, gp = r.g_minus, r.g_plus
    g = gm + gp
    z = RatFunc.zero(r.nvars)
    for j in range(0, min(g, 2 * gm) + 1):
        if g - j > 2 * gp:
            continue
        blk = r.blocks.get(j, {})
        bblk = rbar.blocks.get(g - j, {})
        for p in combinations(range(2 * gm), j):
            pbar = complement(p, 2 * gm)
            for q in combinations(range(2 * gp), g - j):
                qbar = complement(q, 2 * gp)
                lhs = blk.get((qbar, p), z)
                if lhs:
                    lhs = lhs if merge_sign(qbar, q) > 0 else -lhs
                rhs = bblk.get((pbar, q), z)
                if rhs:
                    rhs = rhs if merge_sign(p, pbar) * (-1) ** (j * g) > 0 else -rhs
                yield (j, p, q), lhs, rhs


def verify_95(w: HeegaardWord, value=None, dual_value=None) -> bool:
    """omega(R(M) x ^ y) = (-1)^{jg} u omega(x ^ R(Mbar) y) for one unit u."""
    r = _rep(value if value is not None else eval_word(w))
    rbar = _rep(dual_value if dual_value is not None else eval_word(dual_word(w)))
    return _global_unit((l, rr) for _, l, rr in volume_pairs(r, rbar))[0]


def duality_unit(w: HeegaardWord) -> Optional[MonomialUnit]:
    r = _rep(eval_word(w))
    rbar = _rep(eval_word(dual_word(w)))
    ok, u = _global_unit((l, rr) for _, l, rr in duality_pairs(r, rbar, w.source, w.target))
    return u if ok else None
