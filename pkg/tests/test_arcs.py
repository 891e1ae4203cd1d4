import pytest
from hypothesis import given, strategies as st

from stripcluster import arcs as A

IDX = st.integers(min_value=-50, max_value=50)


def small_arcs(lo=-6, hi=6):
    return list(A.arcs_in_window(lo, hi))


def test_arc_constructors_reject_edges():
    with pytest.raises(ValueError):
        A.upper(0, 1)
    with pytest.raises(ValueError):
        A.lower(3, 2)
    A.conn(5, 5)  # connecting arcs are unrestricted


def test_cross_examples():
    assert A.cross(A.upper(0, 3), A.conn(1, 5))
    assert not A.cross(A.upper(0, 2), A.lower(5, 2))
    assert A.cross(A.conn(0, 0), A.conn(1, 1))
    for u in small_arcs(-3, 3):
        assert not A.cross(u, u)


def test_cross_shared_endpoint_never_crosses():
    for u in small_arcs(-4, 4):
        for v in small_arcs(-4, 4):
            if u != v and A.shared_endpoint(u, v) is not None:
                assert not A.cross(u, v)


def test_cross_symmetry_irreflexive_small():
    arcs = small_arcs()
    for u in arcs:
        for v in arcs:
            assert A.cross(u, v) == A.cross(v, u)


def test_tau_equivariance_and_self_cross_small():
    for u in small_arcs(-4, 4):
        assert A.cross(u, A.translate(u, 1))
        assert A.cross(u, A.translate(u, -1))
        for v in small_arcs(-4, 4):
            assert A.cross(u, v) == A.cross(A.translate(u, 3), A.translate(v, 3))


def test_translate_examples():
    assert A.translate(A.conn(0, 0), 1) == A.conn(1, 1)
    assert A.translate(A.upper(0, 2), -1) == A.upper(-1, 1)
    assert A.translate(A.lower(3, 0), 2) == A.lower(5, 2)


def test_translate_overflow_checked():
    with pytest.raises(OverflowError):
        A.translate(A.conn(A.I64_MAX, 0), 1)


def test_hshift_preserves_crossing():
    for u in small_arcs(-4, 4):
        for v in small_arcs(-4, 4):
            assert A.cross(u, v) == A.cross(A.hshift(u, 5), A.hshift(v, 5))


def test_conn_leq_examples_and_poset_axioms():
    assert A.conn_leq(A.conn(0, 1), A.conn(2, 0))
    assert not A.conn_leq(A.conn(0, 0), A.conn(1, 1))
    cs = [A.conn(i, j) for i in range(-3, 4) for j in range(-3, 4)]
    for u in cs:
        assert A.conn_leq(u, u)
        for v in cs:
            if A.conn_leq(u, v) and A.conn_leq(v, u):
                assert u == v
            for w in cs:
                if A.conn_leq(u, v) and A.conn_leq(v, w):
                    assert A.conn_leq(u, w)
    with pytest.raises(ValueError):
        A.conn_leq(A.upper(0, 2), A.conn(0, 0))


def test_order_crossing_duality():
    cs = [A.conn(i, j) for i in range(-4, 5) for j in range(-4, 5)]
    for u in cs:
        for v in cs:
            comparable = A.conn_leq(u, v) or A.conn_leq(v, u)
            assert comparable == (not A.cross(u, v))


def test_ccw_examples():
    l0, r1, r3 = A.upper_point(0), A.lower_point(1), A.lower_point(3)
    assert A.ccw_precedes(l0, r3, r1)
    assert A.ccw_precedes(l0, A.upper_point(-3), r1)
    assert A.ccw_precedes(A.lower_point(1), A.upper_point(1), A.upper_point(0))
    with pytest.raises(ValueError):
        A.ccw_precedes(l0, A.upper_point(1), r1)  # edge pair, not an arc


def test_ccw_block_order_at_upper_point():
    p = A.upper_point(0)
    sweep = (
        [A.upper_point(k) for k in range(-2, -7, -1)]
        + [A.lower_point(j) for j in range(4, -5, -1)]
        + [A.upper_point(k) for k in range(6, 1, -1)]
    )
    for s in range(len(sweep)):
        for t in range(s + 1, len(sweep)):
            assert A.ccw_precedes(p, sweep[s], sweep[t])
            assert not A.ccw_precedes(p, sweep[t], sweep[s])


def test_ccw_block_order_at_lower_point():
    q = A.lower_point(0)
    sweep = (
        [A.lower_point(k) for k in range(-2, -7, -1)]
        + [A.upper_point(j) for j in range(4, -5, -1)]
        + [A.lower_point(k) for k in range(6, 1, -1)]
    )
    for s in range(len(sweep)):
        for t in range(s + 1, len(sweep)):
            assert A.ccw_precedes(q, sweep[s], sweep[t])


def test_rotation_case_list():
    # every case of the irreducible-morphism description: the arcs rotating
    # onto a fixed target at a shared endpoint, by target kind
    p, q = 3, -1
    tgt = A.conn(p, q)
    assert A.rotates_to(A.conn(p, q + 4), tgt)  # [l_p, r_i], i > q
    assert A.rotates_to(A.upper(p - 5, p), tgt)  # [l_t, l_p], t < p-1
    assert A.rotates_to(A.conn(p + 2, q), tgt)  # [l_j, r_q], j > p
    assert A.rotates_to(A.lower(q, q - 4), tgt)  # [r_q, r_s], s < q-1
    up = A.upper(0, 4)
    assert A.rotates_to(A.upper(0, 7), up)  # [l_p, l_r], r > q+1
    assert A.rotates_to(A.upper(-4, 0), up)  # [l_r, l_p], r < p-1
    assert A.rotates_to(A.conn(0, 9), up)  # connecting at l_p


def test_rotation_matches_hom_characterization():
    # the rotation relation must coincide with the nonzero-Hom criterion
    # (the target crosses the translate of the source) on every pair of
    # distinct non-crossing arcs; this pins the CCW linearization
    arcs = small_arcs(-5, 5)
    for u in arcs:
        tu = A.translate(u, 1)
        for v in arcs:
            if u == v or A.cross(u, v):
                continue
            assert A.rotates_to(u, v) == A.cross(v, tu), (u, v)


def test_rotates_to_examples_and_antisymmetry():
    assert A.rotates_to(A.conn(0, 3), A.conn(0, 1))
    assert A.rotates_to(A.upper(-3, 0), A.conn(0, 1))
    assert not A.rotates_to(A.conn(0, 1), A.conn(0, 3))
    arcs = small_arcs(-4, 4)
    for u in arcs:
        assert not A.rotates_to(u, u)
        for v in arcs:
            if A.rotates_to(u, v):
                assert not A.rotates_to(v, u)
                assert not A.cross(u, v)


@given(
    st.sampled_from("UDC"),
    IDX,
    IDX,
    st.integers(min_value=-30, max_value=30),
)
def test_codec_roundtrip_and_translate(kind, i, j, k):
    if kind == "U":
        j = i + 2 + abs(j)
    elif kind == "D":
        i = j + 2 + abs(i)
    u = A.Arc(kind, i, j)
    assert A.parse_arc(str(u)) == u
    assert A.arc_from_json(A.arc_to_json(u)) == u
    assert A.translate(A.translate(u, k), -k) == u


def test_codec_rejects():
    assert A.parse_arc("C(0,-1)") == A.conn(0, -1)
    assert A.format_arc(A.lower(5, 2)) == "D(5,2)"
    for bad in ["U(0,1)", "D(2,1)", "X(0,3)", "C(0)", "C(a,b)", "", "C(0,1) extra"]:
        with pytest.raises(A.ArcParseError) as exc:
            A.parse_arc(bad)
        assert exc.value.pos >= 0


def test_arc_between():
    assert A.arc_between(A.upper_point(0), A.upper_point(2)) == A.upper(0, 2)
    assert A.arc_between(A.lower_point(2), A.lower_point(0)) == A.lower(2, 0)
    assert A.arc_between(A.lower_point(1), A.upper_point(0)) == A.conn(0, 1)
    with pytest.raises(ValueError):
        A.arc_between(A.upper_point(0), A.upper_point(1))
