import random

from hypothesis import given
from hypothesis import strategies as st

from conftest import P, R
from reidemeister.cobordism import CobObject, Cylinder, HeegaardWord, LowerAlpha, LowerBeta, UpperBeta, dual_word
from reidemeister.exterior import Multivector
from reidemeister.freegroup import FreeHom, twist_library
from reidemeister.functor import eval_word
from reidemeister.duality import (
    check_92,
    duality_unit,
    intersection_matrix,
    is_nonsingular,
    pair_wedge,
    pairing_preserved,
    verify_95,
    verify_duality,
)
from reidemeister.randgen import rand_object, rand_source, rand_twist, rand_word

seeds = st.integers(0, 2**32 - 1)


def symplectic(k, n):
    return [[P("1", n) if j == i + k else P("-1", n) if i == j + k else P("0", n)
             for j in range(2 * k)] for i in range(2 * k)]


def test_trivial_form_is_symplectic():
    for k in (1, 2, 3):
        assert intersection_matrix(CobObject(k, None, 1)).matrix() == symplectic(k, 1)


def test_example_form_genus_one():
    form = intersection_matrix(CobObject(1, [(1,), (0,)], 1))
    assert form.matrix() == [[P("1 - t"), P("t")], [P("-t^-1"), P("0")]]
    assert check_92(form)


def test_example_boundary_vector_identity():
    # d = (t - 1, 0): J + conj(J)^T equals d conj(d)^T entrywise
    form = intersection_matrix(CobObject(1, [(1,), (0,)], 1))
    j = form.matrix()
    d = [P("t - 1"), P("0")]
    for r in range(2):
        for c in range(2):
            assert j[r][c] + j[c][r].involute() == d[r] * d[c].involute()


@given(seeds)
def test_random_forms(seed):
    rng = random.Random(seed)
    k, n = rng.randint(1, 3), rng.randint(1, 2)
    form = intersection_matrix(rand_object(rng, k, n, zero_bias=0.2))
    assert check_92(form)
    assert is_nonsingular(form)


def test_pair_wedge_examples():
    form = intersection_matrix(CobObject(1, None, 1))
    f, g = R("1 + t"), R("t^2")
    x0, y0 = Multivector.scalar(2, f, 1), Multivector.scalar(2, g, 1)
    assert pair_wedge(x0, y0, form) == f * g.involute()
    a1, b1 = Multivector.basis(2, (0,), 1), Multivector.basis(2, (1,), 1)
    assert pair_wedge(a1, b1, form) == R("1")


@given(seeds)
def test_pair_wedge_sesquilinear(seed):
    rng = random.Random(seed)
    form = intersection_matrix(rand_object(rng, 2, 1, zero_bias=0.2))
    t = R("t")
    x = Multivector(4, {(0, 2): R("1"), (1, 3): R("2 - t")}, 1)
    y = Multivector(4, {(0, 1): R("t^-1"), (2, 3): R("1")}, 1)
    base = pair_wedge(x, y, form)
    assert pair_wedge(x.scale(t), y, form) == t * base
    assert pair_wedge(x, y.scale(t), form) == t.involute() * base


def test_pairing_preserved_library():
    for k in (1, 2):
        for f in twist_library(k):
            assert pairing_preserved(f, CobObject(k, [(i % 3 - 1, i % 2) for i in range(2 * k)], 2))


@given(seeds)
def test_pairing_preserved_composites(seed):
    rng = random.Random(seed)
    k = rng.randint(1, 3)
    assert pairing_preserved(rand_twist(rng, k), rand_object(rng, k, 2, zero_bias=0.2))


def test_duality_identity_cylinder():
    w = HeegaardWord(CobObject(1, [(1,), (2,)], 1), [Cylinder(FreeHom.identity(2))])
    assert verify_duality(w) and verify_95(w)
    u = duality_unit(w)
    assert u is not None and not any(u.exps)


def test_duality_lower_alpha_padded():
    for pad, lpad in ((0, 0), (1, 0), (0, 1), (1, 1)):
        src = CobObject(pad + lpad, [(1,)] * (pad + lpad) + [(0,)] * (pad + lpad), 1)
        w = HeegaardWord(src, [LowerAlpha(1, pad, lpad, phi_new=[(1,)])])
        assert verify_duality(w) and verify_95(w)


def test_unknot_exterior_dual():
    # unknot exterior: the longitude bounds, a 1 -> 0 morphism
    w = HeegaardWord(CobObject(1, [(1,), (0,)], 1), [UpperBeta(1)])
    assert verify_95(w) and verify_duality(w)
    d = dual_word(w)
    assert [p.kind for p in d.pieces] == ["lower-beta"]
    m = eval_word(d).rep
    assert list(m.blocks[0]) == [((1,), ())]
    assert m.blocks[0][((1,), ())].as_laurent().is_unit()


@given(seeds)
def test_duality_random_words(seed):
    rng = random.Random(seed)
    w = rand_word(rng, rand_source(rng, rng.randint(0, 2), 2), rng.randint(1, 5), 2)
    v, vb = eval_word(w), eval_word(dual_word(w))
    assert verify_duality(w, v, vb)
    assert verify_95(w, v, vb)


def test_duality_detects_wrong_dual():
    # pairing a cylinder against a non-inverse cylinder must fail
    f = twist_library(1)[0]
    o = CobObject(1, [(1,), (1,)], 1)
    w = HeegaardWord(o, [Cylinder(f)])
    wrong = HeegaardWord(w.target, [Cylinder(f)])
    assert not verify_duality(w, eval_word(w), eval_word(wrong))


def test_lower_beta_dual_roundtrip():
    w = HeegaardWord(CobObject(0, (), 2), [LowerBeta(2, phi_new=[(1, 0), (0, 1)])])
    assert dual_word(dual_word(w)) == w
    assert verify_duality(w)
