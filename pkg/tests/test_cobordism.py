import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from reidemeister.cobordism import (
    CobObject,
    Cylinder,
    HeegaardWord,
    LowerAlpha,
    LowerBeta,
    PreconditionError,
    PresentedCobordism,
    UpperAlpha,
    UpperBeta,
    dual_word,
    simplify_presentation,
    word_to_presentation,
)
from reidemeister.exterior import proj_eq
from reidemeister.freegroup import AbelMap, FreeHom, parse_word, twist_library
from reidemeister.functor import eval_presented
from reidemeister.randgen import rand_presented, rand_source, rand_word

seeds = st.integers(0, 2**32 - 1)


def test_piece_targets():
    o = CobObject(1, [(1,), (0,)], 1)
    assert LowerAlpha(1, pad=1).target(o) == CobObject(2, [(0,), (1,), (0,), (0,)], 1)
    assert LowerAlpha(1, lpad=1, phi_new=[(2,)]).target(o) == CobObject(2, [(1,), (0,), (0,), (2,)], 1)
    assert UpperBeta(1).target(o) == CobObject(0, (), 1)
    assert LowerBeta(2).target(CobObject(0, (), 1)).genus == 2


def test_upper_precondition():
    o = CobObject(1, [(0,), (1,)], 1)
    with pytest.raises(PreconditionError):
        UpperBeta(1).target(o)
    assert UpperAlpha(1).target(o).genus == 0


def test_cylinder_transports_phi():
    f = twist_library(1)[0]  # a -> a b
    o = CobObject(1, [(1, 1), (0, 1)], 2)
    w = HeegaardWord(o, [Cylinder(f)])
    # psi_+ = psi_- o f^-1: a -> a b^-1 gives (1, 0)
    assert w.target == CobObject(1, [(1, 0), (0, 1)], 2)


def test_cylinder_rejects_non_surface_map():
    swap = FreeHom([parse_word("x2"), parse_word("x1")], [parse_word("x2"), parse_word("x1")])
    with pytest.raises(ValueError):
        Cylinder(swap)


def test_genus_mismatch():
    with pytest.raises(ValueError):
        HeegaardWord(CobObject(1, None, 1), [UpperBeta(2)])


def test_dual_examples():
    o = CobObject(0, (), 1)
    assert dual_word(HeegaardWord(o)) == HeegaardWord(o)
    d = dual_word(HeegaardWord(o, [LowerAlpha(1)]))
    assert [p.kind for p in d.pieces] == ["upper-alpha"] and d.pieces[0].k == 1


@given(seeds)
def test_dual_is_involution(seed):
    rng = random.Random(seed)
    n = rng.randint(0, 2)
    w = rand_word(rng, rand_source(rng, n), rng.randint(0, 6))
    d = dual_word(w)
    assert d.source == w.target and d.target == w.source
    assert dual_word(d) == w


def test_presentation_deficiency_checked():
    with pytest.raises(ValueError):
        PresentedCobordism(2, [], AbelMap([(1,), (1,)]), [], [parse_word("x1")] * 2)


def test_presentation_phi_must_kill_relators():
    with pytest.raises(PreconditionError):
        PresentedCobordism(2, [parse_word("x1")], AbelMap([(1,), (0,)]), [], [parse_word("x2"), parse_word("x2")])


@given(seeds)
def test_simplification_preserves_value(seed):
    rng = random.Random(seed)
    p = rand_presented(rng, rng.randint(0, 2))
    q = simplify_presentation(p)
    assert q.ngens <= p.ngens and q.g == p.g
    assert proj_eq(eval_presented(p, simplify=False), eval_presented(q, simplify=False))


@given(seeds)
def test_word_presentation_objects(seed):
    rng = random.Random(seed)
    w = rand_word(rng, rand_source(rng, rng.randint(0, 2)), rng.randint(1, 5))
    p = word_to_presentation(w)
    assert p.source_object() == w.source
    assert p.target_object() == w.target
