import json

import pytest

import sdrd


def test_graph_builders():
    g = sdrd.petersen(5, 2)
    assert g.order == 10
    assert g.is_cubic()
    assert g.family == "P(5,2)"
    assert g.name(7) == "v_2"
    assert g.id("u_3") == 3
    assert sdrd.grid(2, 4).edge_count == 10
    assert sdrd.parse_edge_list(g.to_edge_list()) == g
    with pytest.raises(ValueError):
        sdrd.Graph(3, [(0, 0)])


def test_validate_reports_violations():
    g = sdrd.complete(4)
    report = sdrd.validate(g, [2, 2, 2, 2])
    assert report["valid"] and report["weight"] == 8
    bad = sdrd.validate(g, [-1, -1, -1, 3])
    assert not bad["valid"]
    assert bad["violations"]
    with pytest.raises(ValueError):
        sdrd.validate(g, [1, 1])


def test_solve_methods_agree():
    g = sdrd.grid(2, 6)
    results = [sdrd.solve(g, method=m) for m in ("dp", "bnb", "brute")]
    assert {r["weight"] for r in results} == {6}
    assert results[0]["witness"] == results[1]["witness"] == results[2]["witness"]
    assert sdrd.validate(g, results[0]["witness"])["valid"]
    assert sdrd.solve(sdrd.petersen(9, 1))["weight"] == 11
    assert sdrd.solve(sdrd.flower_snark(5))["weight"] == 11


def test_solve_pins_and_limits():
    g = sdrd.grid(2, 4)
    res = sdrd.solve(g, fixed={0: -1, 1: -1, 4: -1, 5: -1})
    assert not res["feasible"] and res["weight"] is None
    with pytest.raises(sdrd.SizeLimitExceeded):
        sdrd.solve(sdrd.petersen(20, 3), method="bnb")


def test_constructions_and_bounds():
    assert "snark" in sdrd.scheme_families()
    g, labels, predicted = sdrd.construct("petersen-m1", 11)
    assert sum(labels) == predicted == 12
    assert sdrd.validate(g, labels)["valid"]
    assert sdrd.verify_discharge_certificate(g, labels)
    assert min(sdrd.discharge(g, labels)) >= 2

    report = sdrd.bound_report(sdrd.petersen(8, 3), 1)
    assert report["lower_cubic"] == 8
    assert report["upper_k"]["exact"] == "26/1"
    json.dumps(report)

    h = sdrd.petersen(6, 1)
    s = sdrd.alpha_total_dom_min(h)
    assert sdrd.is_alpha_total_dominating(h, s)
    assert sdrd.validate(h, sdrd.labeling_from_set(h, s))["valid"]


def test_block_atlas_pieces():
    c = [1, -1, 2, -1, -1, 1, -1, 3]
    canon = sdrd.canonical_constellation(c)
    assert sdrd.canonical_constellation(canon) == canon
    full = sdrd.solve_block(c)
    reduced = sdrd.solve_block(c, reduced=True)
    assert full is not None and reduced is not None
    assert sdrd.solve_block(canon) == full
    text = "d0,d1,d2,d3,d4,d5,d6,d7,minweight_C,minweight_Cprime,delta\n-1,-1,1,1,-1,-1,1,1,14,10,4\n"
    atlas = sdrd.atlas_from_csv(text)
    assert len(atlas) == 1
    assert atlas.find([1, 1, -1, -1, 1, 1, -1, -1]) == ([-1, -1, 1, 1, -1, -1, 1, 1], 14, 10, 4)
    assert atlas.to_csv() == text


def test_reproduce_subset():
    rows = sdrd.reproduce(jobs=2, only=[1, 3])
    assert [r["id"] for r in rows] == [1, 3]
    assert all(r["pass"] for r in rows)
