import shutil

import pytest

from brickforge import fixtures as fx
from brickforge.polyhedra import VPolytope
from brickforge.verify import (Instance, check_counterexamples, check_newton, check_properties,
                               check_tables, check_tropical, check_typecone, counterexample_diffs,
                               property_failures, tropical_formula_diffs, trop_formulas)


def _copy_fixtures(tmp_path):
    for f in fx.fixture_dir().iterdir():
        if f.name.endswith(".tsv"):
            shutil.copy(f, tmp_path / f.name)
    return tmp_path


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "G2"])
def test_all_checks_pass(name):
    inst = Instance(name, tuple(range(1, 3 if name != "A1" else 2)))
    for res in (check_tables(inst), check_typecone(inst), check_newton(inst),
                check_tropical(inst), check_properties(inst)):
        assert res.passed, (res.check, res.witness)


def test_record_fields():
    res = check_newton(Instance("B2", (1, 2)), timing=False)
    assert res.record() == {"type": "B2", "coxeter_word": "12", "check": "newton",
                            "status": "pass", "witness": None, "millis": 0}


def test_newton_detects_a_wrong_summand(monkeypatch):
    inst = Instance("B2", (1, 2))
    real = inst.bg.summand_polytope
    monkeypatch.setattr(inst.bg, "summand_polytope",
                        lambda b: VPolytope(((0, 0), (1, 0))) if tuple(b) == (1, 2) else real(b))
    res = check_newton(inst)
    assert not res.passed and "(1, 2)" in res.witness


def test_typecone_detects_a_wrong_summand(monkeypatch):
    inst = Instance("B2", (1, 2))
    real = inst.bg.summand_polytope
    monkeypatch.setattr(inst.bg, "summand_polytope",
                        lambda b: VPolytope(((0, 0), (2, 4))) if tuple(b) == (1, 2) else real(b))
    assert not check_typecone(inst).passed


def test_counterexamples_pass_with_recorded_corrections():
    diffs, used = counterexample_diffs()
    assert diffs == [] and sorted(used) == ["1212121/facets/126", "212212/greedy_roots"]


def test_counterexamples_fail_without_corrections(tmp_path):
    d = _copy_fixtures(tmp_path)
    (d / "errata.tsv").write_text("fixture\tkey\tprinted\tcorrected\tnote\n")
    res = check_counterexamples(str(d))
    assert not res.passed


def test_tables_fail_without_corrections(tmp_path):
    d = _copy_fixtures(tmp_path)
    (d / "errata.tsv").write_text("fixture\tkey\tprinted\tcorrected\tnote\n")
    res = check_tables(Instance("A3", (1, 2, 3)), str(d))
    assert not res.passed and "a3_roots" in res.witness


def test_tropical_formula_fixture(tmp_path):
    inst = Instance("B2", (1, 2))
    assert tropical_formula_diffs(inst) == ([], 4)
    d = _copy_fixtures(tmp_path)
    p = d / "b2_tropical.tsv"
    p.write_text(p.read_text().replace("2 x_2 \\, , \\, y_1) - x_1\n", "y_1) - x_1\n"))
    assert tropical_formula_diffs(inst, str(d))[0]
    assert not check_tropical(inst, directory=str(d)).passed
    assert trop_formulas(inst)[(0, 1)] == "max(x1 + y2, 0) - x2"


def test_property_oracles_respect_budget():
    inst = Instance("A3", (1, 2, 3))
    assert property_failures(inst, oracle_budget=0) == []
    assert property_failures(inst) == []
