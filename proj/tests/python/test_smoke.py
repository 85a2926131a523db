import pytest

import sylvan


def test_atlas_and_codecs():
    p = sylvan.atlas("petersen")
    assert (p.n, p.m) == (10, 15)
    assert sylvan.write_graph6(p) == "IheA@GUAo"
    assert sylvan.parse_graph6("IheA@GUAo").m == 15
    s4 = sylvan.atlas("sylvester4")
    assert sylvan.write_pgf(s4) == "4; 0 1, 0 2, 0 3, 1 1, 2 2, 3 3"
    assert sylvan.parse_pgf(sylvan.write_pgf(s4)) == s4
    assert "sylvester16" in sylvan.atlas_names()
    with pytest.raises(ValueError):
        sylvan.parse_graph6("D?@")
    with pytest.raises(ValueError):
        sylvan.atlas("nosuch")


def test_enumerate_and_isomorphism():
    counts = [len(sylvan.enumerate_cubic(n)) for n in (4, 6, 8, 10)]
    assert counts == [1, 2, 5, 19]
    assert len(sylvan.enumerate_cubic(6, "multi")) == 6
    k4 = sylvan.atlas("k4")
    relabelled = sylvan.Graph(4, [(3, 2), (3, 1), (3, 0), (2, 1), (2, 0), (1, 0)])
    assert sylvan.is_isomorphic(k4, relabelled)
    assert sylvan.canonical_code(k4) == sylvan.canonical_code(relabelled)
    assert sylvan.automorphism_count(sylvan.atlas("petersen")) == 120


def test_h_colorings():
    r = sylvan.find_h_coloring(sylvan.atlas("k4"), sylvan.atlas("sylvester10"))
    assert r["status"] == "found"
    report = sylvan.check_h_coloring(sylvan.atlas("k4"), sylvan.atlas("sylvester10"), r["mapping"])
    assert report["complete"]
    assert sylvan.find_h_coloring(sylvan.atlas("petersen"), sylvan.atlas("sylvester16"))["status"] == "absent"
    counted = sylvan.find_h_coloring(sylvan.atlas("petersen"), sylvan.atlas("petersen"), count=True)
    assert counted["solutions"] == 120
    bad = sylvan.check_h_coloring(sylvan.atlas("k4"), sylvan.atlas("k4"), [0] * 6)
    assert not bad["complete"] and len(bad["failures"]) == 4


def test_s4_and_approx():
    for g in sylvan.enumerate_cubic(6, "pseudo"):
        assert sylvan.s4_color(g)["valid"]
    loops = sylvan.s4_color(sylvan.atlas("sylvester4"))
    assert loops["colours"][3] == ("a'", "a'")
    r = sylvan.approx_s_coloring(sylvan.atlas("petersen"))
    assert r["satisfied"] >= r["bound"] == 8
    assert len(r["witnesses"]) == 10 - r["satisfied"]
    near = sylvan.near_3_edge_coloring(sylvan.atlas("petersen"))
    assert near["problems"] == [] and len(near["gaps"]) == 2


def test_campaign():
    verdict, summary, lines = sylvan.run_campaign("prop7", max_n=10)
    assert verdict == "confirmed"
    assert len(summary["class2"]) == 2
    assert len(lines) == 27
