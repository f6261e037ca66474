import pytest

from reidemeister.suites import SUITES, replay, run_suite
from reidemeister.io import to_document
from reidemeister.knots import knot_corpus


@pytest.mark.parametrize("name", SUITES)
def test_small_runs_pass(name):
    rep = run_suite(name, seed=11, count=5)
    assert rep.ok, rep.counterexamples
    assert rep.instances >= 5


@pytest.mark.parametrize("name", SUITES)
def test_deterministic(name):
    assert run_suite(name, 4, 1, 3).as_dict() == run_suite(name, 4, 1, 3).as_dict()


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_nonzero_bias():
    rep = run_suite("functoriality", seed=0, nvars=1, count=20)
    assert rep.notes.get("nonzero", 0) > rep.notes.get("zero", 0)


def test_vanishing_sees_both_cases():
    rep = run_suite("vanishing", seed=0, count=50)
    assert rep.ok
    assert rep.notes.get("rank-deficient", 0) > 0 and rep.notes.get("full-rank", 0) > 0


def test_replay_knots():
    for k in knot_corpus().values():
        assert replay("alexander-symmetry", [to_document(k)])
