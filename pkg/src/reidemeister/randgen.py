"""Seeded random instances for the property suites."""

from __future__ import annotations

import random
from typing import Optional

from .cobordism import (
    CobObject,
    Cylinder,
    HeegaardWord,
    LowerAlpha,
    LowerBeta,
    Piece,
    PresentedCobordism,
    UpperAlpha,
    UpperBeta,
)
from .coeff import LaurentPoly, RatFunc
from .freegroup import AbelMap, FreeHom, Word, gen, inverse, mul, reduce_word, twist_library
from .linalg import identity, matmul
from .torsion import BasedChainComplex


def rand_exp(rng: random.Random, n: int, zero_bias=0.4, span=2):
    if n == 0 or rng.random() < zero_bias:
        return (0,) * n
    return tuple(rng.randint(-span, span) for _ in range(n))


def rand_object(rng: random.Random, g: int, n: int, zero_bias=0.4) -> CobObject:
    return CobObject(g, [rand_exp(rng, n, zero_bias) for _ in range(2 * g)], n)


def rand_twist(rng: random.Random, k: int, length=None) -> FreeHom:
    lib = twist_library(k)
    f = FreeHom.identity(2 * k)
    for _ in range(length if length is not None else rng.randint(1, 3)):
        f = rng.choice(lib).compose(f)
    return f


def _zero_runs(vals, k):
    return [s for s in range(len(vals) - k + 1) if all(not any(e) for e in vals[s:s + k])]


def rand_piece(rng: random.Random, src: CobObject, max_genus=3) -> Optional[Piece]:
    g, n = src.genus, src.nvars
    options = []
    if g >= 1:
        options.append("cyl")
    if g < max_genus:
        options += ["la", "lb"]
    for kind, vals in (("ub", src.betas), ("ua", src.alphas)):
        if any(_zero_runs(vals, k) for k in range(1, g + 1)):
            options.append(kind)
    if not options:
        return None
    kind = rng.choice(options)
    if kind == "cyl":
        k = rng.randint(1, g)
        lpad = rng.randint(0, g - k)
        return Cylinder(rand_twist(rng, k), g - k - lpad, lpad)
    if kind in ("la", "lb"):
        k = rng.randint(1, max_genus - g)
        lpad = rng.randint(0, g)
        new = tuple(rand_exp(rng, n) for _ in range(k))
        make = LowerAlpha if kind == "la" else LowerBeta
        return make(k, g - lpad, lpad, new)
    vals = src.betas if kind == "ub" else src.alphas
    choices = [(k, s) for k in range(1, g + 1) for s in _zero_runs(vals, k)]
    k, lpad = rng.choice(choices)
    make = UpperBeta if kind == "ub" else UpperAlpha
    return make(k, g - k - lpad, lpad)


def rand_word(rng: random.Random, src: CobObject, npieces: int, max_genus=3) -> HeegaardWord:
    pieces = []
    obj = src
    for _ in range(npieces):
        p = rand_piece(rng, obj, max_genus)
        if p is None:
            break
        pieces.append(p)
        obj = p.target(obj)
    return HeegaardWord(src, pieces)


def rand_source(rng, n, max_genus=3):
    return rand_object(rng, rng.randint(0, max_genus), n)


def rand_composable(rng: random.Random, n: int, max_genus=3, max_pieces=6):
    """(w1, w2) with w1.target == w2.source, total pieces <= max_pieces."""
    src = rand_source(rng, n, max_genus)
    k1 = rng.randint(1, max_pieces - 1)
    w1 = rand_word(rng, src, k1, max_genus)
    w2 = rand_word(rng, w1.target, rng.randint(1, max_pieces - len(w1.pieces)), max_genus)
    return w1, w2


def rand_tensorable(rng: random.Random, n: int, max_genus=3, max_pieces=6):
    """(w1, w2) whose tensor stays within max_genus."""
    g1 = rng.randint(0, max_genus)
    w1 = rand_word(rng, rand_object(rng, g1, n), rng.randint(1, max_pieces // 2), max_genus)
    cap = max_genus - max(o.genus for o in w1.objects)
    w2 = rand_word(rng, rand_object(rng, rng.randint(0, cap), n), rng.randint(1, max_pieces // 2), cap)
    return w1, w2


# ---------------------------------------------------------------- presentations


def rand_free_word(rng: random.Random, ngens: int, length: int) -> Word:
    if ngens == 0:
        return ()
    return reduce_word((rng.randrange(ngens), rng.choice((1, -1))) for _ in range(length))


def _killed(rng, ngens, phi: AbelMap, length):
    """A word with phi-exponent zero: a product of commutators and
    phi-trivial generators."""
    parts = []
    for _ in range(rng.randint(1, 2)):
        u = rand_free_word(rng, ngens, rng.randint(1, length))
        v = rand_free_word(rng, ngens, rng.randint(1, length))
        parts.append(mul(u, v, inverse(u), inverse(v)))
    zeros = [i for i in range(ngens) if not any(phi.images[i])]
    if zeros and rng.random() < 0.5:
        parts.append(gen(rng.choice(zeros)))
    return mul(*parts)


def rand_presented(rng: random.Random, n: int, max_genus=2, max_rel=2, degenerate=0.3) -> PresentedCobordism:
    """A presentation of deficiency g- + g+ whose relators phi kills.

    With probability ``degenerate`` one relator is a copy of another (or a
    product of two) to force a rank drop."""
    gm = rng.randint(0, max_genus)
    gp = rng.randint(0, max_genus)
    if gm + gp == 0:
        gp = 1
    r = rng.randint(0, max_rel)
    ngens = gm + gp + r
    phi = AbelMap([rand_exp(rng, n, 0.3) for _ in range(ngens)], n)
    rels = [_killed(rng, ngens, phi, 3) for _ in range(r)]
    if r >= 2 and rng.random() < degenerate:
        i, j = rng.sample(range(r), 2)
        rels[j] = rels[i] if rng.random() < 0.5 else mul(rels[i], rels[(i + 1) % r])
    bottom = [rand_free_word(rng, ngens, rng.randint(1, 3)) for _ in range(2 * gm)]
    top = [rand_free_word(rng, ngens, rng.randint(1, 3)) for _ in range(2 * gp)]
    return PresentedCobordism(ngens, rels, phi, bottom, top)


# ---------------------------------------------------------------- chain complexes


def rand_poly(rng: random.Random, n: int, terms=2, span=1) -> LaurentPoly:
    out = LaurentPoly.zero(n)
    for _ in range(rng.randint(0, terms)):
        out = out + LaurentPoly.monomial(tuple(rng.randint(-span, span) for _ in range(n)), rng.choice((-2, -1, 1, 2)))
    return out


def _elementary(rng, d, n, lower_block=None):
    """Random unipotent matrix (det 1, polynomial inverse).  If lower_block
    = (a, b) entries (i, j) with i < a <= j are avoided so the map preserves
    the first a coordinates."""
    m = identity(d, n)
    for _ in range(rng.randint(1, 3)):
        if d < 2:
            break
        i, j = rng.sample(range(d), 2)
        if lower_block is not None and i < lower_block <= j:
            i, j = j, i
        if lower_block is not None and j < lower_block <= i:
            continue
        e = identity(d, n)
        e[i][j] = rand_poly(rng, n)
        m = matmul(e, m, n)
    return m


def _upper_block(rng, d1, d2, n):
    """Block upper triangular [[A, X], [0, B]] with A, B unipotent."""
    a = _elementary(rng, d1, n)
    b = _elementary(rng, d2, n)
    out = identity(d1 + d2, n)
    for i in range(d1):
        for j in range(d1):
            out[i][j] = a[i][j]
        for j in range(d2):
            out[i][d1 + j] = rand_poly(rng, n, 1)
    for i in range(d2):
        for j in range(d2):
            out[d1 + i][d1 + j] = b[i][j]
    return out


def _inverse_upper(m, d1, d2, n):
    from .linalg import inverse_field
    inv = inverse_field([[RatFunc(x) for x in row] for row in m], n)
    return [[x.as_laurent() for x in row] for row in inv]


def rand_ses(rng: random.Random, n: int, length=3, max_dim=2):
    """A short exact sequence 0 -> C' -> C -> C'' -> 0 of based complexes
    with compatible bases, plus homology bases.

    C is built from elementary pieces e -> f (e, f in C' or C'' but never
    from C' to C''), then conjugated by block upper triangular unipotent
    changes of basis."""
    from .torsion import homology_basis
    dp = [rng.randint(0, max_dim) for _ in range(length + 1)]
    dpp = [rng.randint(0, max_dim) for _ in range(length + 1)]
    dims = [a + b for a, b in zip(dp, dpp)]
    # pieces: pick pairs (i, col) -> (i-1, row) forming disjoint one-step complexes
    bd = {i: [[LaurentPoly.zero(n)] * dims[i] for _ in range(dims[i - 1])] for i in range(1, length + 1)}
    used_src = {i: set() for i in range(length + 1)}
    used_tgt = {i: set() for i in range(length + 1)}
    for i in range(1, length + 1):
        for c in range(dims[i]):
            if c in used_tgt[i] or rng.random() < 0.4:
                continue
            part_c = c < dp[i]
            rows = [r for r in range(dims[i - 1]) if r not in used_src[i - 1] and r not in used_tgt[i - 1]]
            # never from C'' into C'-only positions is fine; from C' the image must stay in C'
            if part_c:
                rows = [r for r in rows if r < dp[i - 1]]
            if not rows:
                continue
            r = rng.choice(rows)
            coef = rand_poly(rng, n, 2)
            if not coef:
                coef = LaurentPoly.one(n)
            bd[i][r][c] = coef
            used_src[i].add(c)
            used_tgt[i - 1].add(r)
    # conjugate: d_i -> T_{i-1} d_i T_i^{-1}
    ts = [_upper_block(rng, dp[i], dpp[i], n) for i in range(length + 1)]
    tinv = [_inverse_upper(t, dp[i], dpp[i], n) for i, t in enumerate(ts)]
    full = {}
    for i in range(1, length + 1):
        if dims[i] and dims[i - 1]:
            full[i] = matmul(matmul(ts[i - 1], bd[i], n), tinv[i], n)
        else:
            full[i] = [[LaurentPoly.zero(n)] * dims[i] for _ in range(dims[i - 1])]
    c = BasedChainComplex(dims, full, n)
    cp = BasedChainComplex(dp, {i: [row[:dp[i]] for row in full[i][:dp[i - 1]]] for i in range(1, length + 1)}, n)
    cpp = BasedChainComplex(dpp, {i: [row[dp[i]:] for row in full[i][dp[i - 1]:]] for i in range(1, length + 1)}, n)
    one, zero = RatFunc.one(n), RatFunc.zero(n)
    i_map = {i: [[one if r == k else zero for k in range(dp[i])] for r in range(dims[i])] for i in range(length + 1)}
    p_map = {i: [[one if dp[i] + r == k else zero for k in range(dims[i])] for r in range(dpp[i])] for i in range(length + 1)}
    return cp, c, cpp, (i_map, p_map), homology_basis(cp), homology_basis(c), homology_basis(cpp)
