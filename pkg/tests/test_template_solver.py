"""Property tests for the affine-in-k template solver."""

from hypothesis import given, strategies as st

from stripcluster.families import EMPTY, _eq, _isect, _lt

COEF = st.integers(min_value=-5, max_value=5)
CONST = st.integers(min_value=-40, max_value=40)
K_RANGE = range(-60, 61)


def materialize(interval):
    if interval == EMPTY:
        return set()
    lo, hi = interval
    return {
        k
        for k in K_RANGE
        if (lo is None or k >= lo) and (hi is None or k <= hi)
    }


@given(COEF, CONST, COEF, CONST)
def test_lt_matches_enumeration(a1, b1, a2, b2):
    got = materialize(_lt((a1, b1), (a2, b2)))
    want = {k for k in K_RANGE if a1 * k + b1 < a2 * k + b2}
    # restrict to the probed range: unbounded solutions clip identically
    assert got == want


@given(COEF, CONST, CONST)
def test_eq_matches_enumeration(a, b, value):
    got = materialize(_eq((a, b), value))
    want = {k for k in K_RANGE if a * k + b == value}
    assert got == want


@given(COEF, CONST, COEF, CONST, CONST, CONST)
def test_isect_matches_enumeration(a1, b1, a2, b2, v1, v2):
    r1 = _lt((a1, b1), (a2, b2))
    r2 = _lt((0, v1), (1, v2))
    assert materialize(_isect(r1, r2)) == materialize(r1) & materialize(r2)
