import pytest

from stripcluster import arcs as A
from stripcluster import kernels as K
from stripcluster.catalog import projectives_desc, staircase
from stripcluster.families import BOTH, ConnFanUpper, LEFT, LowerFan, Periodic, RIGHT, UpperFan
from stripcluster.triangulation import (
    BoundaryEdge,
    FanMarker,
    IncomparableChainError,
    InvalidDescription,
    NotCompactError,
    TailNeighbor,
    TriangulationDesc,
    UncertifiedError,
    component_count,
    connecting_chain,
    fountains,
    incidence_at,
    is_compact,
    neighbor,
    validate,
    windowed_compactness_witness,
)

EXPECT = {
    "staircase": {"compact": True, "fountains": [], "components": 1},
    "two_fountain": {
        "compact": True,
        "fountains": [("l_4", "left"), ("l_5", "right")],
        "components": 3,
    },
    "full_fountain": {"compact": True, "fountains": [("l_0", "full")], "components": 3},
    "split_nested": {"compact": False, "fountains": []},
}


def brute_force_window_maximal(desc, wlo, whi, pad=8):
    """Independent maximality check: enumerate arcs with endpoints in the
    window; each must be a member or cross a member found by bounded
    search (kernel crossing over the padded member list)."""
    members = desc.members_in_window(wlo - pad, whi + pad)
    mset = set(members)
    enc_m = K.encode_arcs(members)
    probe = [u for u in A.arcs_in_window(wlo, whi) if u not in mset]
    enc_p = K.encode_arcs(probe)
    crossed = K.cross_matrix(enc_p, enc_m).any(axis=1)
    missing = [u for u, c in zip(probe, crossed) if not c]
    return missing


def test_catalog_validation_flags(cat):
    for name, desc in cat.items():
        rep = validate(desc)
        assert rep.pairwise_noncrossing, name
        assert rep.window_maximal, name
        assert rep.certified_maximal, (name, rep.notes)


def test_catalog_brute_force_maximality(cat):
    for name, desc in cat.items():
        assert brute_force_window_maximal(desc, -12, 12) == [], name


def test_noncrossing_counterexample_detected():
    desc = TriangulationDesc(frozenset({A.conn(0, 0), A.conn(1, 1)}), (), (-1, 2))
    rep = validate(desc)
    assert not rep.pairwise_noncrossing
    assert not rep.certified_maximal


def test_window_maximality_counterexample():
    desc = TriangulationDesc(frozenset({A.conn(0, 0)}), (), (-1, 1))
    rep = validate(desc)
    assert rep.pairwise_noncrossing
    assert not rep.window_maximal
    assert rep.counterexample is not None
    assert not desc.blocks(rep.counterexample)


def test_crossing_families_detected():
    # a connecting staircase marching left collides with an upper fan
    desc = TriangulationDesc(
        frozenset(),
        (
            UpperFan(0, -2, LEFT),
            Periodic((A.conn(0, 5),), 1, LEFT),
        ),
        (-2, 5),
    )
    rep = validate(desc)
    assert not rep.pairwise_noncrossing
    assert not rep.certified_maximal


def test_incomplete_fountain_not_certified():
    # a boundary fan without its connecting half is outside the catalog
    desc = TriangulationDesc(frozenset(), (UpperFan(0, -2, LEFT),), (-2, 0))
    rep = validate(desc)
    assert not rep.certified_maximal
    assert any("fountain" in n or "catalog" in n for n in rep.notes)


def test_periodic_without_connecting_seed_not_certified():
    desc = TriangulationDesc(
        frozenset(), (Periodic((A.upper(0, 2),), 1, BOTH),), (0, 2)
    )
    rep = validate(desc)
    assert not rep.certified_maximal


def test_ambiguous_membership_rejected():
    seed = (A.conn(0, 0),)
    desc = TriangulationDesc(
        frozenset({A.conn(1, -1)}), (Periodic(seed, 1, RIGHT),), (-1, 1)
    )
    with pytest.raises(InvalidDescription):
        validate(desc)


def test_members_in_window_staircase(cat):
    got = [str(u) for u in cat["staircase"].members_in_window(-1, 2)]
    assert got == ["C(-1,1)", "C(-1,2)", "C(0,0)", "C(0,1)", "C(1,-1)", "C(1,0)", "C(2,-1)"]
    assert cat["staircase"].members_in_window(0, 0) == [A.conn(0, 0)]


def test_contains_staircase(cat):
    t = cat["staircase"]
    assert t.contains(A.conn(3, -3))
    assert t.contains(A.conn(0, 1))
    assert not t.contains(A.upper(0, 2))


def test_compactness_and_fountains(cat):
    for name, desc in cat.items():
        rep = validate(desc)
        compact, witness = is_compact(desc, rep)
        assert compact == EXPECT[name]["compact"], name
        fs = [(str(f.base), f.kind) for f in fountains(desc, rep)]
        assert fs == EXPECT[name]["fountains"], name
        if compact:
            assert component_count(desc, rep)[2] == EXPECT[name]["components"]
        else:
            assert witness == "no connecting arc"
            with pytest.raises(NotCompactError):
                component_count(desc, rep)


def test_uncertified_inputs_error():
    desc = TriangulationDesc(frozenset({A.conn(0, 0)}), (), (-1, 1))
    with pytest.raises(UncertifiedError):
        is_compact(desc)
    with pytest.raises(UncertifiedError):
        fountains(desc)


def test_boundary_fan_without_conn_fan_is_not_compact():
    # a lower fan pair with a staircase has infinite incidence at the base
    # but no connecting arcs at all
    from stripcluster.catalog import split_nested

    desc = split_nested()
    rep = validate(desc)
    assert is_compact(desc, rep) == (False, "no connecting arc")


def test_connecting_chain(cat):
    t = cat["staircase"]
    got = [str(u) for u in connecting_chain(t, (-1, 2))]
    assert got == ["C(-1,2)", "C(-1,1)", "C(0,1)", "C(0,0)", "C(1,0)", "C(1,-1)", "C(2,-1)"]
    assert connecting_chain(cat["split_nested"], (-6, 6)) == []
    with pytest.raises(IncomparableChainError):
        connecting_chain(
            TriangulationDesc(frozenset({A.conn(0, 0), A.conn(1, 1)}), (), (-1, 2)),
            (-2, 2),
        )


def test_chain_extends_beyond_windows(cat):
    for name in ("staircase", "two_fountain", "full_fountain"):
        desc = cat[name]
        inner = set(connecting_chain(desc, (-6, 6)))
        outer = connecting_chain(desc, (-12, 12))
        assert outer[0] not in inner and outer[-1] not in inner, name
        lo_extra = [u for u in outer if A.conn_leq(u, min(inner, key=lambda v: (v.i, -v.j))) and u not in inner]
        hi_extra = [u for u in outer if A.conn_leq(max(inner, key=lambda v: (v.i, -v.j)), u) and u not in inner]
        assert lo_extra and hi_extra, name


def test_incidence_lists(cat):
    t = cat["staircase"]
    assert [str(x) for x in incidence_at(t, A.upper_point(0))] == ["C(0,1)", "C(0,0)"]
    assert [str(x) for x in incidence_at(t, A.upper_point(7))] == ["C(7,-6)", "C(7,-7)"]
    ff = cat["full_fountain"]
    items = incidence_at(ff, A.upper_point(0))
    assert all(isinstance(x, FanMarker) for x in items)
    kinds = [x.family.to_json()["kind"] + ":" + x.family.to_json()["dir"] for x in items]
    assert kinds == [
        "upper_fan:left",
        "conn_fan_upper:left",
        "conn_fan_upper:right",
        "upper_fan:right",
    ]
    # unfolded within a window
    unfolded = incidence_at(ff, A.upper_point(0), window=(-4, 4))
    assert [str(x) for x in unfolded] == [
        "U(-2,0)",
        "U(-3,0)",
        "U(-4,0)",
        "C(0,4)",
        "C(0,3)",
        "C(0,2)",
        "C(0,1)",
        "C(0,0)",
        "C(0,-1)",
        "C(0,-2)",
        "C(0,-3)",
        "C(0,-4)",
        "U(0,4)",
        "U(0,3)",
        "U(0,2)",
    ]


def test_neighbor_edges_and_tails(cat):
    t = cat["staircase"]
    assert neighbor(t, A.conn(0, 0), A.upper_point(0), -1) == A.conn(0, 1)
    assert neighbor(t, A.conn(0, 0), A.upper_point(0), +1) == BoundaryEdge(
        A.upper_point(0), A.upper_point(1)
    )
    ff = cat["full_fountain"]
    assert neighbor(ff, A.conn(0, 3), A.upper_point(0), -1) == A.conn(0, 4)
    assert neighbor(ff, A.conn(0, 3), A.upper_point(0), +1) == A.conn(0, 2)
    # fan members always have fan neighbours, so no member of the full
    # fountain ever sees a tail
    assert neighbor(ff, A.upper(0, 2), A.upper_point(0), -1) == A.upper(0, 3)
    # but an isolated arc behind an infinite connecting fan does: the
    # right-side fan's sweep positions accumulate upwards against it
    lone = TriangulationDesc(
        frozenset({A.upper(0, 2)}), (ConnFanUpper(0, 0, RIGHT),), (0, 2)
    )
    got = neighbor(lone, A.upper(0, 2), A.upper_point(0), -1)
    assert isinstance(got, TailNeighbor)
    # while the left-side fan has a nearest member
    lone2 = TriangulationDesc(
        frozenset({A.upper(0, 2)}), (ConnFanUpper(0, 3, LEFT),), (0, 3)
    )
    assert neighbor(lone2, A.upper(0, 2), A.upper_point(0), -1) == A.conn(0, 3)


def test_translated_description_invariance(cat):
    for name, desc in cat.items():
        for k in (2, -3):
            td = desc.translated(k)
            rep = validate(td)
            assert rep.certified_maximal, name
            assert is_compact(td, rep)[0] == EXPECT[name]["compact"]
            fs = fountains(td, rep)
            bases = [(str(f.base), f.kind) for f in fs]
            expected = [
                (f"l_{int(b.split('_')[1]) + k}", kind) for b, kind in EXPECT[name]["fountains"]
            ]
            assert bases == expected, name
            want = sorted(A.translate(u, k) for u in desc.members_in_window(-6, 6))
            assert sorted(td.members_in_window(-6 + k, 6 + k)) == want


def test_windowed_compactness_witness_matches_criterion(cat):
    probes = [A.conn(0, 0), A.conn(3, -2), A.upper(-2, 1), A.lower(2, -1)]
    for name, desc in cat.items():
        ok = all(windowed_compactness_witness(desc, u, (-8, 8), (-15, 15)) for u in probes)
        assert ok == EXPECT[name]["compact"], name


def test_json_roundtrip_catalog(cat):
    for desc in cat.values():
        assert TriangulationDesc.from_json(desc.to_json()) == desc


def test_projectives_desc_certifies(orientations):
    for name, o in orientations.items():
        desc = projectives_desc(o)
        rep = validate(desc)
        assert rep.certified_maximal, (name, rep.notes)
        assert is_compact(desc, rep) == (True, None)
        assert fountains(desc, rep) == []
        assert component_count(desc, rep) == (0, 0, 1)
        assert brute_force_window_maximal(desc, -10, 10) == [], name


def test_flip_walk_on_unequal_period_staircase(orientations):
    # projectives of the length-three cycle give a periodic description
    # whose upper and lower steps differ; flips must rebase those tails
    import random

    from stripcluster.cluster import flip

    rng = random.Random(5)
    desc = projectives_desc(orientations["rll"])
    assert any(getattr(f, "dl", 1) != f.period for f in desc.families)
    for step in range(30):
        members = desc.members_in_window(-9, 9) or desc.members_in_window(
            desc.window[0] - 2, desc.window[1] + 2
        )
        u = rng.choice(members)
        flipped, star = flip(desc, u)
        back, again = flip(flipped, star)
        assert again == u, step
        assert sorted(back.members_in_window(-12, 12)) == sorted(
            desc.members_in_window(-12, 12)
        ), step
        rep = validate(flipped)
        assert rep.certified_maximal, (step, u, rep.notes)
        assert is_compact(flipped, rep) == (True, None)
        assert component_count(flipped, rep) == (0, 0, 1)
        desc = flipped
