import random
from itertools import combinations

from hypothesis import given
from hypothesis import strategies as st

from conftest import R
from reidemeister.coeff import LaurentPoly, MonomialUnit, RatFunc
from reidemeister.exterior import (
    GradedMap,
    Multivector,
    ProjectiveGradedMap,
    compose,
    expand_via_volume,
    identity_map,
    lambda_extend,
    proj_eq,
    tensor_koszul,
    volume_pair,
    wedge,
)
from reidemeister.linalg import matmul

ONE = R("1")


def e(d, *idx):
    return Multivector.basis(d, tuple(idx), 1)


def rand_coeff(rng):
    return RatFunc(LaurentPoly({(rng.randint(-1, 1),): rng.choice((-2, -1, 1, 2))}, 1))


def rand_map(rng, gm, gp, density=0.4):
    deg = gp - gm
    blocks = {}
    for j in range(0, 2 * gm + 1):
        if not 0 <= j + deg <= 2 * gp:
            continue
        blk = {}
        for s in combinations(range(2 * gm), j):
            for t in combinations(range(2 * gp), j + deg):
                if rng.random() < density:
                    blk[(t, s)] = rand_coeff(rng)
        blocks[j] = blk
    return GradedMap(gm, gp, 1, blocks)


def rand_multivector(rng, d):
    terms = {}
    for k in range(d + 1):
        for s in combinations(range(d), k):
            if rng.random() < 0.5:
                terms[s] = rand_coeff(rng)
    return Multivector(d, terms, 1)


def embed(x: Multivector, index, dim):
    out = Multivector(dim, {}, 1)
    for s, c in x.terms.items():
        v = Multivector.scalar(dim, c, 1)
        for i in s:
            v = wedge(v, e(dim, index[i]))
        out = out + v
    return out


def concat_index(g, h):
    return [i if i < g else h + i for i in range(2 * g)], [g + i if i < h else 2 * g + i for i in range(2 * h)]


seeds = st.integers(0, 2**32 - 1)


def test_wedge_examples():
    assert wedge(e(3, 0), e(3, 1)) == -wedge(e(3, 1), e(3, 0))
    assert wedge(e(3, 0), e(3, 0)) == Multivector(3, {}, 1)
    x = e(3, 0) + e(3, 1)
    y = e(3, 0) - e(3, 1)
    assert wedge(x, y) == e(3, 0, 1).scale(R("-2"))


def test_volume_pair_examples():
    assert volume_pair(e(4, 0, 1, 2, 3), Multivector.scalar(4, ONE, 1)) == ONE
    assert volume_pair(e(2, 1), e(2, 0)) == R("-1")


def test_proj_eq_examples():
    m = lambda_extend([[R("1"), R("0")], [R("t"), R("1 - t")]], 1)
    p = ProjectiveGradedMap(m)
    assert proj_eq(p, ProjectiveGradedMap(m.scale_unit(MonomialUnit(1, (3,)))))
    assert proj_eq(p, ProjectiveGradedMap(m.scale(R("-1"))))
    assert not proj_eq(p, ProjectiveGradedMap(m.scale(R("1 + t"))))


def test_identity_tensor_identity():
    for g, h in ((0, 1), (1, 1), (1, 2)):
        assert tensor_koszul(identity_map(g, 1), identity_map(h, 1)) == identity_map(g + h, 1)


def test_koszul_sign_on_degree_one_factor():
    # a = identity on genus 1, b : genus 0 -> genus 1, 1 -> a1 (degree 1)
    a = identity_map(1, 1)
    b = GradedMap(0, 1, 1, {0: {((0,), ()): ONE}})
    t = tensor_koszul(a, b)
    # u = a1 of degree 1: (a (x) b)(a1 (x) 1) = -a1 (x) a1', i.e. -(a1 ^ a2)
    assert t.blocks[1][((0, 1), (0,))] == R("-1")
    assert t.blocks[0][((1,), ())] == ONE


@given(seeds)
def test_expansion_identity_even_dimension(seed):
    rng = random.Random(seed)
    d = rng.choice((2, 4))
    z = rand_multivector(rng, d)
    assert expand_via_volume(z) == z


@given(seeds)
def test_lambda_is_functorial(seed):
    rng = random.Random(seed)
    a = [[rand_coeff(rng) for _ in range(4)] for _ in range(4)]
    b = [[rand_coeff(rng) for _ in range(4)] for _ in range(4)]
    assert lambda_extend(matmul(a, b, 1), 1) == compose(lambda_extend(a, 1), lambda_extend(b, 1))


@given(seeds)
def test_lambda_acts_by_wedging_columns(seed):
    rng = random.Random(seed)
    a = [[rand_coeff(rng) for _ in range(4)] for _ in range(4)]
    la = lambda_extend(a, 1)
    cols = [Multivector(4, {(i,): a[i][j] for i in range(4)}, 1) for j in range(4)]
    for s in combinations(range(4), 2):
        assert la.apply(e(4, *s)) == wedge(cols[s[0]], cols[s[1]])


@given(seeds)
def test_tensor_matches_wedge_oracle(seed):
    rng = random.Random(seed)
    ga, gb = rng.randint(0, 1), rng.randint(0, 1)
    ha, hb = rng.randint(0, 2), rng.randint(0, 1)
    a, b = rand_map(rng, ga, ha), rand_map(rng, gb, hb)
    t = tensor_koszul(a, b)
    fs, ss = concat_index(ga, gb)
    ft, st_ = concat_index(ha, hb)
    for p in (s for k in range(2 * ga + 1) for s in combinations(range(2 * ga), k)):
        for q in (s for k in range(2 * gb + 1) for s in combinations(range(2 * gb), k)):
            src = wedge(embed(e(2 * ga, *p), fs, 2 * (ga + gb)), embed(e(2 * gb, *q), ss, 2 * (ga + gb)))
            img = wedge(embed(a.apply(e(2 * ga, *p)), ft, 2 * (ha + hb)), embed(b.apply(e(2 * gb, *q)), st_, 2 * (ha + hb)))
            if (b.degree * len(p)) % 2:
                img = -img
            assert t.apply(src) == img


@given(seeds)
def test_interchange_law(seed):
    rng = random.Random(seed)
    g0, h0 = rng.randint(0, 1), rng.randint(0, 1)
    g1, h1 = rng.randint(0, 2), rng.randint(0, 1)
    g2, h2 = rng.randint(0, 1), rng.randint(0, 2)
    a1, b1 = rand_map(rng, g0, g1), rand_map(rng, h0, h1)
    a2, b2 = rand_map(rng, g1, g2), rand_map(rng, h1, h2)
    lhs = compose(tensor_koszul(a2, b2), tensor_koszul(a1, b1))
    rhs = tensor_koszul(compose(a2, a1), compose(b2, b1))
    if (b2.degree * a1.degree) % 2:
        rhs = rhs.scale(R("-1"))
    assert lhs == rhs


@given(seeds)
def test_composition_associative(seed):
    rng = random.Random(seed)
    g = [rng.randint(0, 2) for _ in range(4)]
    a, b, c = (rand_map(rng, g[i], g[i + 1]) for i in range(3))
    assert compose(c, compose(b, a)) == compose(compose(c, b), a)
