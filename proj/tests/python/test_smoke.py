"""End-to-end smoke tests for the python module."""

import stanley


def test_info_edge_counts():
    info = stanley.info("P:6,4")
    assert info["vertices"] == 24
    assert info["edges"] == 4 * 5 * 3 + 5 + 3
    wrapped = stanley.info("C:6,4")
    assert wrapped["edges"] == info["edges"] + 3 * 3 + 1


def test_generators_match_edge_count():
    gens = stanley.generators("P:4,4")
    assert gens["ambient"] == 16
    assert len(gens["gens"]) == 4 * 3 * 3 + 3 + 3
    assert len(gens["labels"]) == 16
    assert all(len(g) == 2 for g in gens["gens"])


def test_depth_closed_forms():
    assert stanley.depth("C:4,3") == 2
    assert stanley.depth("P:5,2") == 2  # ceil(5/3)
    assert stanley.depth("P:5,2", module="ideal") == 3
    assert stanley.depth("C:6,1", p=32003) == 2


def test_sdepth_with_witness():
    result = stanley.sdepth("C:3,2")
    assert result["exact"] and result["lower"] == 1
    spaces = result["witness"]["intervals"]
    assert all(set(iv["lo"]) <= set(iv["hi"]) for iv in spaces)

    ideal_side = stanley.sdepth("P:3,1", module="ideal")
    assert ideal_side["lower"] > stanley.sdepth("P:3,1")["lower"]


def test_pair_decompositions():
    for n in (3, 4, 5):
        out = stanley.verify_decomposition("C2quot", n)
        assert out["verified"]
        assert out["min_dimension"] >= out["lower_bound"]
    out = stanley.verify_decomposition("C3quot", 5)
    assert out["verified"] and out["min_dimension"] == 3


def test_suite_rows():
    report = stanley.run_suite("m2", max_vars=8)
    assert report["rows"]
    assert all(row["verdict"] == "pass" for row in report["rows"])
