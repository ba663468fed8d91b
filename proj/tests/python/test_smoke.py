import pytest

import twc


def test_root_system_basics():
    rs = twc.RootSystem.build("A", 2)
    assert rs.label == "A2"
    assert rs.rank == 2
    assert rs.num_positive_roots == 3
    assert rs.dim_g == 8
    assert rs.weyl_order == 6
    assert rs.cartan == [[2, -1], [-1, 2]]
    assert [0, 1] in rs.positive_roots and [1, 1] in rs.positive_roots


def test_inadmissible_type_raises_value_error():
    with pytest.raises(ValueError):
        twc.RootSystem.build("D", 3)
    with pytest.raises(ValueError):
        twc.RootSystem.build("X", 2)


def test_twist_resolution_and_orbits():
    rs = twc.RootSystem.build("D", 4)
    tri = twc.DiagramAut.resolve(rs, "triality")
    assert tri.one_line == [3, 2, 4, 1]
    assert tri.order == 3
    assert tri.orbits == [[1, 3, 4], [2]]
    with pytest.raises(ValueError):
        twc.DiagramAut.resolve(rs, "2,1,3,4")


def test_boundary_and_components_frozen_values():
    rs = twc.RootSystem.build("A", 2)
    flip = twc.DiagramAut.resolve(rs, "flip")
    boundary = twc.steinberg_boundary(rs, flip)
    assert boundary["count"] == 9
    assert boundary["kind"] == "steinberg_boundary"
    comps = twc.irreducible_components(rs, flip)
    assert comps["count"] == 2
    assert all(p["dim"] == 6 for p in comps["pieces"])

    ident = twc.DiagramAut.resolve(rs, "identity")
    assert twc.steinberg_boundary(rs, ident)["count"] == 5
    assert twc.pieces(rs, ident)["count"] == 13


def test_point_counts():
    rs = twc.RootSystem.build("A", 2)
    ident = twc.DiagramAut.resolve(rs, "identity")
    flip = twc.DiagramAut.resolve(rs, "flip")
    assert twc.boundary_count(rs, ident) == [1, 2, 4, 5, 4, 2]
    assert twc.boundary_count(rs, flip) == [1, 2, 4, 7, 8, 6, 2]
    assert twc.boundary_count_pretty(rs, ident) == "1 + 2q + 4q^2 + 5q^3 + 4q^4 + 2q^5"
    assert twc.poincare(rs) == [1, 2, 2, 1]
    assert twc.poincare(rs, [1]) == [1, 1]


def test_nilcone_and_validation():
    rs = twc.RootSystem.build("A", 2)
    ident = twc.DiagramAut.resolve(rs, "identity")
    cone = twc.nilcone(rs, ident, [1, 0])
    assert cone["count"] == 7
    flip = twc.DiagramAut.resolve(rs, "flip")
    with pytest.raises(ValueError):
        twc.nilcone(rs, flip, [1, 0])  # not flip-invariant
    with pytest.raises(ValueError):
        twc.nilcone(rs, ident, [-1, 0])  # not dominant
    with pytest.raises(ValueError):
        twc.nilcone(rs, ident, [0, 0])  # zero


def test_words_and_cosets():
    rs = twc.RootSystem.build("A", 2)
    assert twc.coset_reps(rs, [2]) == [[], [1], [2, 1]]
    assert twc.canonical_word(rs, [2, 1, 2]) == [1, 2, 1]
    assert twc.multiply(rs, [1], [1]) == []
    assert twc.act_on_weight(rs, [1], [1, 0]) == [-1, 1]
    flip = twc.DiagramAut.resolve(rs, "flip")
    assert twc.twisted_coxeter(rs, flip) == [[1], [2]]


def test_verify_reports():
    rs = twc.RootSystem.build("B", 2)
    ident = twc.DiagramAut.resolve(rs, "identity")
    assert twc.verification_checks() == [
        "weight-fixing",
        "height-inequality",
        "boundary-identity",
        "supp-minimality",
        "orbit-dichotomy",
    ]
    for check in twc.verification_checks():
        report = twc.verify(rs, ident, check, trials=10, seed=7)
        assert report["check"] == check
        assert report["cases"] > 0
        assert report["violations"] == []


def test_cap_exceeded_is_a_runtime_error():
    rs = twc.RootSystem.build("E", 8)
    ident = twc.DiagramAut.resolve(rs, "identity")
    with pytest.raises(RuntimeError, match="696729600"):
        twc.boundary_count(rs, ident)
    with pytest.raises(RuntimeError):
        twc.pieces(twc.RootSystem.build("A", 3),
                   twc.DiagramAut.resolve(twc.RootSystem.build("A", 3), "identity"),
                   cap=10)
