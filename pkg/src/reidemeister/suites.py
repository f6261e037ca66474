"""Randomized verification suites.

Every suite is deterministic given (seed, nvars, count).  A failing
instance is reported with its input documents, which ``replay`` re-parses
and re-checks.
"""

from __future__ import annotations

import random
from itertools import combinations
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from .cobordism import CobObject, Cylinder, HeegaardWord, compose_presented, dual_word, tensor_presented, word_to_presentation
from .coeff import LaurentPoly, RatFunc, unit_quotient
from .duality import check_92, intersection_matrix, is_nonsingular, pairing_preserved, verify_95, verify_duality
from .exterior import proj_eq
from .freegroup import fox_jacobian, gen
from .functor import (
    MagnusError,
    eval_presented,
    eval_word,
    fox_matrix,
    integral_form,
    integrality_check,
    knot_alexander,
    magnus_extract,
    reidemeister_function,
)
from .io import parse_document, to_document
from .knots import knot_corpus
from .linalg import det_field, rank
from .randgen import (
    rand_composable,
    rand_object,
    rand_presented,
    rand_ses,
    rand_source,
    rand_tensorable,
    rand_twist,
    rand_word,
)
from .torsion import ses_multiplicativity_check

SUITES = ("functoriality", "monoidality", "torsion-mult", "duality-92", "duality-95",
          "symmetry", "integrality", "vanishing")

DEFAULT_COUNTS = {
    "functoriality": 100,
    "monoidality": 100,
    "torsion-mult": 100,
    "duality-92": 50,
    "duality-95": 50,
    "symmetry": 20,
    "integrality": 50,
    "vanishing": 50,
}


@dataclass
class SuiteReport:
    suite: str
    seed: int
    instances: int = 0
    passed: int = 0
    notes: Dict[str, Any] = field(default_factory=dict)
    counterexamples: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def ok(self):
        return self.passed == self.instances and not self.counterexamples

    def record(self, ok: bool, check: str, docs=None, detail=""):
        self.instances += 1
        if ok:
            self.passed += 1
        else:
            entry = {"check": check, "detail": detail}
            if docs is not None:
                entry["documents"] = docs
                try:
                    entry["reproduced"] = not replay(check, docs)
                except Exception as e:  # a replay crash is itself worth reporting
                    entry["reproduced"] = f"replay raised {type(e).__name__}: {e}"
            self.counterexamples.append(entry)

    def bump(self, key, by=1):
        self.notes[key] = self.notes.get(key, 0) + by

    def as_dict(self):
        return {"suite": self.suite, "seed": self.seed, "instances": self.instances,
                "passed": self.passed, "ok": self.ok, "notes": dict(sorted(self.notes.items())),
                "counterexamples": self.counterexamples}


def _n(rng, nvars):
    return nvars if nvars is not None else rng.randint(0, 2)


def _nonzero_first(make, tries=5):
    """Draw up to ``tries`` candidates and keep the first with a nonzero
    value, so the sweep is not dominated by trivially zero maps."""
    cand = None
    for _ in range(tries):
        cand = make()
        if not cand[-1].rep.is_zero():
            return cand
    return cand


# ---------------------------------------------------------------- single checks


def check_functoriality(w1, w2) -> bool:
    whole = eval_word(w1.then(w2))
    parts = eval_word(w2).compose(eval_word(w1))
    glued = eval_presented(compose_presented(word_to_presentation(w1), word_to_presentation(w2)))
    return proj_eq(whole, parts) and proj_eq(whole, glued)


def check_monoidality(w1, w2) -> bool:
    whole = eval_word(w1.tensor(w2))
    parts = eval_word(w1).tensor(eval_word(w2))
    pres = eval_presented(tensor_presented(word_to_presentation(w1), word_to_presentation(w2)))
    return proj_eq(whole, parts) and proj_eq(whole, pres)


def check_dualities(w) -> bool:
    v, vb = eval_word(w), eval_word(dual_word(w))
    return verify_duality(w, v, vb) and verify_95(w, v, vb)


def reidemeister_vanishes(p) -> bool:
    """R_M is identically zero: its value on every g-tuple of generators
    (these span) is zero."""
    return all(not reidemeister_function(p, [gen(i) for i in s]) for s in combinations(range(p.ngens), p.g))


def relator_rank_deficient(p) -> bool:
    """rank of the Fox relator matrix < r, by elimination over the field."""
    r = len(p.relators)
    return r > 0 and rank([[RatFunc(x) for x in row] for row in fox_matrix(p.relators, p.phi)]) < r


def check_vanishing(p) -> bool:
    return reidemeister_vanishes(p) == relator_rank_deficient(p)


def check_integrality(x) -> bool:
    v = eval_word(x) if isinstance(x, HeegaardWord) else eval_presented(x)
    return integrality_check(v)


def _tau_symmetry(w):
    """For degree-0 words with nonzero Lambda^0 block: tau det r = conj tau
    and tau(M, d+M) = conj tau(M, d-M).  None when not applicable."""
    v = eval_word(w)
    try:
        tau, r = magnus_extract(v)
    except MagnusError:
        return None
    n = w.nvars
    first = unit_quotient(tau * det_field(r, n), tau.involute()) is not None
    other = eval_word(dual_word(w)).rep.blocks.get(0, {}).get(((), ()))
    second = other is not None and unit_quotient(tau, other.involute()) is not None
    return first and second


def check_cylinder_magnus(w) -> bool:
    """Mapping cylinder: tau = 1 up to a unit, r equals the Fox Jacobian
    exactly (r is unchanged by rescaling), the Jacobian preserves the
    intersection pairing and tau det r = conj tau."""
    p = w.pieces[0]
    tau, r = magnus_extract(eval_word(w))
    jac = [[RatFunc(y) for y in row] for row in fox_jacobian(p.hom, w.target.abel())]
    return (unit_quotient(tau, RatFunc.one(w.nvars)) is not None and r == jac
            and pairing_preserved(p.hom, w.target)
            and unit_quotient(tau * det_field(r, w.nvars), tau.involute()) is not None)


def check_alexander_symmetry(k) -> bool:
    d = knot_alexander(k)
    return unit_quotient(d, d.involute()) is not None


def check_alexander_readout(k) -> bool:
    """The integral form of the exterior value sends the meridian class to
    Delta(K)."""
    v = eval_presented(k.exterior())
    entry = integral_form(v).blocks.get(1, {}).get(((), (0,)))
    return integrality_check(v) and entry is not None and unit_quotient(entry, RatFunc(knot_alexander(k))) is not None


_CHECKS: Dict[str, Callable] = {
    "alexander-symmetry": lambda objs: check_alexander_symmetry(*objs),
    "alexander-readout": lambda objs: check_alexander_readout(*objs),
    "functoriality": lambda objs: check_functoriality(*objs),
    "monoidality": lambda objs: check_monoidality(*objs),
    "duality": lambda objs: check_dualities(*objs),
    "vanishing": lambda objs: check_vanishing(*objs),
    "integrality": lambda objs: check_integrality(*objs),
    "tau-symmetry": lambda objs: _tau_symmetry(*objs) is not False,
}


def replay(check: str, docs) -> bool:
    """Re-parse serialized instances and rerun the named check."""
    objs = [parse_document(d) for d in docs]
    return bool(_CHECKS[check](objs))


def _docs(*objs):
    return [to_document(o) for o in objs]


# ---------------------------------------------------------------- suites


def suite_functoriality(rep, rng, nvars, count):
    for _ in range(count):
        n = _n(rng, nvars)

        def make():
            w1, w2 = rand_composable(rng, n)
            return w1, w2, eval_word(w1.then(w2))

        w1, w2, v = _nonzero_first(make)
        rep.bump("nonzero" if not v.rep.is_zero() else "zero")
        rep.record(check_functoriality(w1, w2), "functoriality", _docs(w1, w2))


def suite_monoidality(rep, rng, nvars, count):
    for _ in range(count):
        n = _n(rng, nvars)

        def make():
            w1, w2 = rand_tensorable(rng, n)
            return w1, w2, eval_word(w1.tensor(w2))

        w1, w2, v = _nonzero_first(make)
        rep.bump("nonzero" if not v.rep.is_zero() else "zero")
        rep.record(check_monoidality(w1, w2), "monoidality", _docs(w1, w2))


def suite_torsion_mult(rep, rng, nvars, count):
    for _ in range(count):
        n = _n(rng, nvars)
        inst = rand_ses(rng, max(n, 1))
        ratio = ses_multiplicativity_check(*inst)
        n1 = ratio.as_laurent()
        sign = None
        if n1 is not None and n1 in (LaurentPoly.one(n1.nvars), -LaurentPoly.one(n1.nvars)):
            sign = 1 if n1 == LaurentPoly.one(n1.nvars) else -1
        rep.bump(f"sign {'+1' if sign == 1 else '-1' if sign == -1 else 'other'}")
        rep.record(sign is not None, "torsion-mult", None, f"ratio {ratio}")


def suite_duality_92(rep, rng, nvars, count):
    for k in (1, 2, 3):
        n = nvars if nvars is not None else 2
        triv = intersection_matrix(CobObject(k, None, n)).matrix()
        ok = all(triv[i][j] == (1 if j == i + k else -1 if i == j + k else 0)
                 for i in range(2 * k) for j in range(2 * k))
        rep.record(ok, "trivial-form", None, f"genus {k}")
        for _ in range(count):
            obj = rand_object(rng, k, n, zero_bias=0.2)
            form = intersection_matrix(obj)
            rep.record(check_92(form) and is_nonsingular(form), "form-identity", None, f"psi {obj.phi}")
    for _ in range(count):
        n = _n(rng, nvars)
        w = rand_word(rng, rand_source(rng, n, 2), rng.randint(1, 5), 2)
        v = eval_word(w)
        rep.bump("nonzero" if not v.rep.is_zero() else "zero")
        rep.record(verify_duality(w, v), "duality", _docs(w))


def suite_duality_95(rep, rng, nvars, count):
    for _ in range(count):
        n = _n(rng, nvars)
        w = rand_word(rng, rand_source(rng, n, 2), rng.randint(1, 5), 2)
        v = eval_word(w)
        rep.bump("nonzero" if not v.rep.is_zero() else "zero")
        rep.record(verify_95(w, v), "duality", _docs(w))


def suite_symmetry(rep, rng, nvars, count):
    for name, k in knot_corpus().items():
        rep.record(check_alexander_symmetry(k), "alexander-symmetry", [to_document(k)], name)
    for _ in range(count):
        n = nvars if nvars is not None else rng.randint(1, 2)
        g = rng.randint(1, 3)
        f = rand_twist(rng, g, rng.randint(1, 4))
        obj = rand_object(rng, g, n, zero_bias=0.2)
        w = HeegaardWord(obj, [Cylinder(f)])
        rep.record(check_cylinder_magnus(w), "cylinder-magnus", None, f"genus {g}")
    found = 0
    for _ in range(20 * count):
        if found >= count:
            break
        n = nvars if nvars is not None else rng.randint(1, 2)
        g = rng.randint(1, 2)
        w = rand_word(rng, rand_object(rng, g, n), rng.randint(2, 6), 3)
        if w.target.genus != g:
            continue
        res = _tau_symmetry(w)
        if res is None:
            continue
        found += 1
        rep.record(res, "tau-symmetry", _docs(w))
    rep.notes["homology-cobordism words"] = found


def suite_integrality(rep, rng, nvars, count):
    for _ in range(count):
        n = _n(rng, nvars)
        w = rand_word(rng, rand_source(rng, n), rng.randint(1, 6))
        rep.record(check_integrality(w), "integrality", _docs(w))
        p = rand_presented(rng, n)
        rep.record(check_integrality(p), "integrality", _docs(p))
    for name, k in knot_corpus().items():
        if k.parallel is None:
            continue
        rep.record(check_alexander_readout(k), "alexander-readout", [to_document(k)], name)


def suite_vanishing(rep, rng, nvars, count):
    for _ in range(count):
        n = _n(rng, nvars)
        p = rand_presented(rng, n)
        rep.bump("rank-deficient" if relator_rank_deficient(p) else "full-rank")
        rep.record(check_vanishing(p), "vanishing", _docs(p))


_RUNNERS = {
    "functoriality": suite_functoriality,
    "monoidality": suite_monoidality,
    "torsion-mult": suite_torsion_mult,
    "duality-92": suite_duality_92,
    "duality-95": suite_duality_95,
    "symmetry": suite_symmetry,
    "integrality": suite_integrality,
    "vanishing": suite_vanishing,
}


def run_suite(name: str, seed: int = 0, nvars: Optional[int] = None, count: Optional[int] = None) -> SuiteReport:
    if name not in _RUNNERS:
        raise KeyError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
    rep = SuiteReport(name, seed)
    rng = random.Random(f"{name}:{seed}")
    _RUNNERS[name](rep, rng, nvars, DEFAULT_COUNTS[name] if count is None else count)
    return rep
