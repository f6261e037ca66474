import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from reidemeister.coeff import LaurentPoly, RatFunc, parse_poly

settings.register_profile(
    "repo",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repo"))


def P(text, n=1):
    return parse_poly(text, n)


def R(num, den="1", n=1):
    return RatFunc(P(num, n), P(den, n))


def polys(n=1, max_terms=4, span=3, coeff=5):
    exps = st.tuples(*[st.integers(-span, span)] * n)
    return st.dictionaries(exps, st.integers(-coeff, coeff), max_size=max_terms).map(
        lambda d: LaurentPoly(d, n))


def nonzero_polys(n=1, **kw):
    return polys(n, **kw).filter(bool)


def ratfuncs(n=1):
    return st.builds(RatFunc, polys(n, max_terms=3), nonzero_polys(n, max_terms=2))


def units(n=1, span=3):
    return st.tuples(st.sampled_from((1, -1)), st.tuples(*[st.integers(-span, span)] * n))
