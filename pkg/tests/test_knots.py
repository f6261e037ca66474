import random
from itertools import permutations

import pytest

from oracles import SEIFERT, seifert_alexander, sym_poly, unit_related
from reidemeister.cobordism import KnotInput
from reidemeister.freegroup import AbelMap, commutator, parse_word
from reidemeister.functor import knot_alexander
from reidemeister.knots import PD_CODES, crossing_signs, knot_corpus, wirtinger


def _mul(a, b):
    return tuple(a[b[i]] for i in range(len(b)))


def _inv(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def _image(w, imgs):
    acc = tuple(range(len(imgs[0])))
    for g, s in w:
        acc = _mul(acc, imgs[g] if s > 0 else _inv(imgs[g]))
    return acc


def permutation_reps(pd, n=5, limit=40, seed=3):
    """Nontrivial homomorphisms of the Wirtinger group into S_n, found by
    propagating the crossing relations from guesses for some arcs."""
    k = wirtinger(pd)
    signs = crossing_signs(pd)
    from reidemeister.knots import _arcs
    _, arc = _arcs(pd)
    rules = [(arc(j), arc(i), arc(kk), e) for (i, j, kk, _), e in zip(pd, signs)]
    perms = [p for p in permutations(range(n)) if p != tuple(range(n))]
    out = []

    def propagate(imgs):
        imgs = list(imgs)
        changed = True
        while changed:
            changed = False
            for o, a, b, e in rules:
                if imgs[o] is not None and imgs[a] is not None:
                    oo = imgs[o] if e > 0 else _inv(imgs[o])
                    v = _mul(_mul(oo, imgs[a]), _inv(oo))
                    if imgs[b] is None:
                        imgs[b] = v
                        changed = True
                    elif imgs[b] != v:
                        return None
        return imgs

    def search(imgs):
        if len(out) >= limit:
            return
        imgs = propagate(imgs)
        if imgs is None:
            return
        if None not in imgs:
            if len(set(imgs)) > 1:
                out.append(imgs)
            return
        i = imgs.index(None)
        for p in perms:
            imgs[i] = p
            search(list(imgs))

    rng = random.Random(seed)
    for x0 in rng.sample(perms, 20):
        search([x0] + [None] * (k.ngens - 1))
    return k, out


@pytest.mark.parametrize("name", sorted(SEIFERT))
def test_alexander_matches_seifert_oracle(name):
    d = knot_alexander(wirtinger(PD_CODES[name]))
    assert unit_related(sym_poly(d), seifert_alexander(SEIFERT[name]))


def test_unknot():
    assert knot_alexander(wirtinger([])).is_one()


def test_two_generator_trefoil_agrees():
    corpus = knot_corpus()
    assert knot_alexander(corpus["trefoil-2gen"]) == knot_alexander(corpus["trefoil"])


@pytest.mark.parametrize("name", ["trefoil", "figure-eight", "cinquefoil"])
def test_longitude_commutes_with_meridian(name):
    k, reps = permutation_reps(PD_CODES[name])
    assert len(reps) >= 5
    ident = tuple(range(5))
    for imgs in reps:
        for r in k.relators:
            assert _image(r, imgs) == ident
        assert _image(commutator(k.meridian, k.parallel), imgs) == ident


@pytest.mark.parametrize("name", ["trefoil", "figure-eight", "cinquefoil"])
def test_longitude_is_null_homologous(name):
    k = wirtinger(PD_CODES[name])
    assert k.phi.exp(k.parallel) == (0,)
    assert k.phi.exp(k.meridian) == (1,)


def test_signs():
    assert crossing_signs(PD_CODES["figure-eight"]).count(1) == 2
    assert abs(sum(crossing_signs(PD_CODES["trefoil"]))) == 3
    assert abs(sum(crossing_signs(PD_CODES["cinquefoil"]))) == 5


def test_bad_pd_rejected():
    with pytest.raises(ValueError):
        wirtinger([(1, 3, 2, 6)])


def test_deficiency_enforced():
    with pytest.raises(ValueError):
        KnotInput(2, [], AbelMap([(1,), (1,)]), parse_word("x1"))
