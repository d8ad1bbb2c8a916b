import os
import pathlib

import pytest

import syzlab

SPEC_DIR = pathlib.Path(os.environ.get("SYZLAB_SPEC_DIR", pathlib.Path(__file__).parents[2] / "specs"))


@pytest.fixture
def hypersurface():
    return syzlab.Ring(101, ["x", "y"], ["x^2"])


def test_groebner_basis_of_monomial_ideal_is_itself():
    assert sorted(syzlab.groebner_basis(101, ["x", "y"], ["x^2", "x*y"])) == ["x*y", "x^2"]


def test_ring_properties(hypersurface):
    assert hypersurface.variables == ["x", "y"]
    assert hypersurface.modulus == 101
    assert hypersurface.codimension == 1
    assert hypersurface.reduce("x^3+y") == "y"


def test_residue_field_betti_numbers(hypersurface):
    k = syzlab.Module.residue_field(hypersurface)
    assert syzlab.betti_numbers(k, 6) == [1, 2, 2, 2, 2, 2, 2]
    assert syzlab.complexity(k) == 1


def test_ring_multiplicity(hypersurface):
    A = syzlab.Module.free(hypersurface)
    data = syzlab.hilbert_data(A, ["x", "y"], 1)
    assert data["e"][0] == 2
    assert data["values"][:4] == [1, 3, 5, 7]


def test_growth_table_report(hypersurface):
    M = syzlab.Module.cyclic(hypersurface, ["x"])
    report = syzlab.coefficient_growth_table(M, 0, ["x", "y"], 1)
    assert report.passed
    assert report.columns[0] == "j"
    assert "verdict: PASS" in report.to_text()
    assert report.to_csv().splitlines()[0].startswith("j,")


def test_quasi_fit_recovers_alternating_sequence():
    fit = syzlab.quasi_fit([1, 2] * 6, 2)
    assert fit["degree"] == 0
    assert fit["even"] == "1"
    assert fit["odd"] == "2"


def test_bad_spec_raises():
    with pytest.raises(syzlab.SpecError):
        syzlab.parse_spec("char=101\nvars=x\n")


@pytest.mark.parametrize("name", ["hypersurface_x2_cyclic", "ci_x2y2_residue"])
def test_run_spec_verify(name, tmp_path):
    text = (SPEC_DIR / f"{name}.spec").read_text()
    passed, reports, summary = syzlab.run_spec(text, verify=True, cache_dir=tmp_path / "cache", out_dir=tmp_path / "out")
    assert passed
    assert reports and all(r.passed for r in reports)
    assert summary.rstrip().endswith("overall: PASS")
    assert (tmp_path / "out" / "report.txt").exists()
