from stripcluster.verify import dictionary_check, fund_domain_objects, projectives_check


def test_dictionary_equivalence_small(orientations):
    # fast version of the flagship sweep; the acceptance suite runs the
    # full window
    for name, o in orientations.items():
        rep = dictionary_check(o, (-7, 7))
        assert rep.ok, (name, rep.to_json())
        assert rep.pairs > 200, name


def test_fund_domain_covers_all_variants(orientations):
    objs = fund_domain_objects(orientations["zigzag"], (-8, 8))
    variants = {x.variant for x in objs}
    assert variants == {"conn", "reg_l", "reg_r"}


def test_projectives_check(orientations):
    for name, o in orientations.items():
        out = projectives_check(o)
        assert out == {
            "certified": True,
            "compact": True,
            "quiver_matches_opposite": True,
        }, name
