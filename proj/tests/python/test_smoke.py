"""End-to-end exercises of the python bindings against the shipped data."""

import json
import os

import pytest

import nckit

FIXTURES = os.environ["NCKIT_FIXTURE_DIR"]
PROOFS = os.environ["NCKIT_PROOF_DIR"]


def fixture(name):
    with open(os.path.join(FIXTURES, name)) as f:
        return f.read()


def model(name):
    return nckit.Model.from_json(fixture(name))


def test_parse_render_round_trip():
    f = nckit.parse("#(p -> q) & #p")
    assert nckit.render(f) == "#!(p & !q) & #p"
    assert nckit.parse(nckit.render(f)) == f
    assert str(f) == nckit.render(f)
    assert f.modal_depth() == 1
    assert f.atoms() == ["p", "q"]
    assert f.in_language("tri")
    assert not f.in_language("pl")


def test_syntax_errors():
    with pytest.raises(nckit.FormulaSyntaxError):
        nckit.parse("p & ")
    with pytest.raises(nckit.FormulaSyntaxError):
        nckit.parse("[]p", "tri")  # box is outside the # sublanguage


def test_model_checking_fixture_values():
    m = model("sec2_M.json")
    assert m.worlds() == ["s", "t"]
    assert nckit.satisfies(m, "s", nckit.parse("#(p -> q) & #p"))
    assert not nckit.satisfies(m, "s", nckit.parse("#q"))
    with pytest.raises(nckit.UnknownWorldError):
        nckit.satisfies(m, "nowhere", nckit.parse("p"))


def test_model_and_frame_validity():
    ok, witness = nckit.valid_on_model(model("sec2_M.json"),
                                       nckit.parse("#true"))
    assert ok and witness is None

    ok, witness = nckit.valid_on_model(model("prop2_5.json"),
                                       nckit.parse("#p"))
    assert not ok and witness == "s"

    frame = nckit.Frame.from_json(fixture("oneway.json"))
    valid, valuation, world = nckit.valid_on_frame(
        frame, nckit.parse("p -> #(#p -> p)"))
    assert not valid
    assert valuation == {"p": {"s"}} and world == "s"
    assert frame.has_property("serial") is False


def test_translations_preserve_truth():
    m = model("prop7_4.json")
    for text in ["#p", "%p | o q", "!#!p"]:
        f = nckit.parse(text)
        boxed = nckit.to_box(f)
        assert boxed.in_language("box")
        for w in m.worlds():
            assert nckit.satisfies(m, w, f) == nckit.satisfies(m, w, boxed)
    # [] -> # needs reflexivity; prop7_4's frame is reflexive.
    back = nckit.to_blacktri(nckit.parse("[]p"))
    assert back.in_language("tri")
    for w in m.worlds():
        assert nckit.satisfies(m, w, back) == nckit.satisfies(
            m, w, nckit.parse("[]p"))


def test_bisimulation_and_contraction():
    m, n = model("prop3_2_M.json"), model("prop3_2_N.json")
    assert nckit.bisimilar(m, "s", n, "t", "tri")
    assert not nckit.bisimilar(m, "s", n, "t", "box")

    pairs = nckit.largest_bisimulation(m, "tri")
    assert ("s", "s") in pairs

    twins = nckit.Model.from_json(json.dumps({
        "worlds": ["a", "b"],
        "relation": [["a", "b"], ["b", "a"]],
        "valuation": {"p": ["a", "b"]},
    }))
    contracted, block_of = nckit.contract(twins)
    assert len(contracted.worlds()) == 1
    assert block_of["a"] == block_of["b"]
    assert nckit.satisfies(contracted, block_of["a"], nckit.parse("#p"))


def test_equivalence_and_separation():
    m = model("sec2_M.json")
    assert not nckit.logically_equivalent(m, "s", "t", "tri")
    sep = nckit.separating_formula(m, "s", "t", "tri")
    assert sep is not None
    assert nckit.satisfies(m, "s", sep) and not nckit.satisfies(m, "t", sep)
    assert nckit.logically_equivalent(m, "s", "s", "tri")
    assert nckit.separating_formula(m, "s", "s", "tri") is None


def test_proof_checking():
    with open(os.path.join(PROOFS, "a3.proof")) as f:
        text = f.read()
    report = nckit.check_proof(text)
    assert report["ok"]
    assert all(line["ok"] for line in report["lines"])

    bad = text.replace("#p -> (p & #(p | q)) | (!p & #(!p | r))", "#p -> p")
    report = nckit.check_proof(bad)
    assert not report["ok"]
    failing = [line for line in report["lines"] if not line["ok"]]
    assert failing and failing[0]["reason"]


def test_satisfiability():
    r = nckit.satisfiable(nckit.parse("p & !p"), [], 3)
    assert r["outcome"] == "unsat-certified"
    assert r["certification_bound"] == 1
    assert r.get("model") is None

    r = nckit.satisfiable(nckit.parse("!#p"), [], 2)
    assert r["outcome"] == "sat"
    assert nckit.satisfies(r["model"], r["world"], nckit.parse("!#p"))

    r = nckit.satisfiable(nckit.parse("!#p & !#!#p"), ["euclidean"], 3)
    assert r["outcome"] == "sat"
    assert r["model"].frame.has_property("euclidean")

    with pytest.raises(nckit.BudgetExceededError):
        nckit.satisfiable(nckit.parse("~p & ~(~p)"), [], 4, 2)
