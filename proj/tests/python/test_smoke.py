import pytest

import hfinite

M0_SPEC = {"algebra": {"family": "C", "n": 2}, "constructor": "m0"}
EXP_SPEC = {
    "algebra": {"family": "A", "n": 2},
    "constructor": "exponential",
    "params": {"b": ["2", "-1/3"], "lambda": [1, 0], "S": [2]},
}


def test_m0_builds_and_validates():
    m = hfinite.build_module(M0_SPEC)
    assert m.rank == 1
    assert m.algebra == "sp(4)"
    assert hfinite.bracket_report(m)["pass"]
    assert m.action("e(2e1)") == [["1/1*h1^2 + -2/1*h1 + 3/4"]]


def test_dump_round_trip_and_corruption():
    m = hfinite.build_module(EXP_SPEC)
    dump = hfinite.dump_module(m)
    back = hfinite.load_module(dump)
    assert hfinite.dump_module(back) == dump
    m0 = hfinite.dump_module(hfinite.build_module(M0_SPEC))
    m0["actions"][4][0][0] = "1/1*h1^2 + -2/1*h1 + 1/4"
    assert not hfinite.bracket_report(hfinite.load_module(m0))["pass"]


def test_rejects_bad_specs():
    bad = {**EXP_SPEC, "params": {**EXP_SPEC["params"], "b": [0, 1]}}
    with pytest.raises(Exception):
        hfinite.build_module(bad)
    with pytest.raises(ValueError):
        hfinite.load_module({"format": "other"})


def test_m0_certificate():
    cert = hfinite.certify(hfinite.build_module(M0_SPEC), ["1/3", "1/5"], radius=6)
    assert cert["pass"]
    assert cert["degree"] == 1
    poly = hfinite.trace_polynomial(hfinite.build_module(M0_SPEC), ["1/3", "1/5"], 6, ["e(-2e1)", "e(2e1)"])
    assert poly == "1/1*h1^2 + 2/1*h1 + 3/4"


def test_fingerprint_and_normal_form():
    fp = hfinite.build_module(M0_SPEC).fingerprint()
    assert all(v is not None for v in fp.values())
    nf = hfinite.normal_form("C", 2, ["0", "-1/2"])
    assert nf["normal_form"] == ["0/1", "-1/2"]


def test_exponential_matches_parabolic_verma():
    verma = {"algebra": {"family": "A", "n": 2}, "constructor": "verma", "params": {"b": [1, 1], "lambda": [1, 0]}}
    exp = {"algebra": {"family": "A", "n": 2}, "constructor": "exponential",
           "params": {"b": [1, 1], "lambda": [1, 0], "S": []}}
    v = hfinite.compare(hfinite.build_module(exp), hfinite.build_module(verma), ["1/3", "1/7"], radius=2, threshold=0)
    assert v["equivalent"]
    assert v["exceptional"] == []


def test_degrees_and_word_lists():
    assert hfinite.deg_k(2, [0, 0], 1) == 1
    assert hfinite.deg_k(2, [1, 1], 1) == 2
    assert sorted(hfinite.admissible_word_list(2, [0, 0], 1)) == [[1], [2, 1]]


def test_tensor_and_dual():
    m = hfinite.build_module(EXP_SPEC)
    t = hfinite.tensor(m, [1, 0])
    assert t.rank == 3 * m.rank
    assert hfinite.bracket_report(hfinite.dual(t))["pass"]
