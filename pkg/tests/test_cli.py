"""Command-line surface: outputs, schemas, exit codes, determinism."""

import json

import pytest

from heckeperiods.cli import factored_surd_str, main, parse_character
from heckeperiods.characters import CharacterError
from heckeperiods.cyclotomic import ExactNumber, QuadSurd
from fractions import Fraction


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_trace_text_flagship(capsys):
    code, out, _ = run(
        capsys, "trace", "--level", "1", "--weight", "12",
        "--character", "kronecker:-3", "--m", "1", "--n", "1",
    )
    assert code == 0
    assert out.strip() == "-(2^18*3^2/5)*sqrt(3)"


def test_trace_json_roundtrip(capsys):
    code, out, _ = run(
        capsys, "trace", "--level", "1", "--weight", "12",
        "--character", "kronecker:-3", "--m", "3", "--n", "1", "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    value = ExactNumber.from_json(data["exact"])
    from heckeperiods.cyclotomic import sqrt_integer

    assert value == sqrt_integer(3) * Fraction(-147456, 5)
    assert data["surd"] == "-147456/5*sqrt(3)"
    assert data["float"] == pytest.approx(-51080.2567761)


def test_theorem1_text_and_json(capsys):
    args = ("theorem1", "--level", "1", "--weight", "12", "--n", "1",
            "--character", "kronecker:-3")
    code, text_out, _ = run(capsys, *args)
    assert code == 0
    assert "((2^20)*sqrt(3))*X^9" in text_out
    code, json_out, _ = run(capsys, *args, "--format", "json")
    data = json.loads(json_out)
    assert data["polynomial"]["degree"] == 9
    coeffs = [ExactNumber.from_json(c) for c in data["polynomial"]["coefficients"]]
    from heckeperiods.cyclotomic import sqrt_integer

    assert coeffs[0] == sqrt_integer(3) * 2**20
    code, latex_out, _ = run(capsys, *args, "--format", "latex")
    assert code == 0 and "\\sqrt{3}" in latex_out


def test_crosscheck_small(capsys):
    code, out, _ = run(capsys, "crosscheck", "--grid", "small")
    assert code == 0
    assert out.startswith("ALL EQUAL")


def test_eigen_fixture(capsys):
    code, out, _ = run(capsys, "eigen", "--fixture", "t2-weight24-level1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    vectors = {tuple(p["eigenvector"]) for p in data["pairs"]}
    assert ("118041", "1135193 + 19*sqrt(144169)") in vectors
    assert ("118041", "1135193 - 19*sqrt(144169)") in vectors


def test_eigen_form_fixture(capsys):
    code, out, _ = run(capsys, "eigen", "--fixture", "gamma02-w16-even")
    assert code == 0
    assert out.strip() == "(7)*R_2 + (110)*R_4 + (168)*R_6"


def test_ratio_matches_library(capsys, registry, chi5):
    code, out, _ = run(
        capsys, "ratio", "--fixture", "sl2z-w24-even-plus", "--character",
        "kronecker:5", "--m1", "9", "--m2", "11", "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    from heckeperiods.eigenforms import twisted_lambda_ratio

    expected = twisted_lambda_ratio(registry.eigenform("sl2z-w24-even-plus"), chi5, 9, 11)
    assert ExactNumber.from_json(data["base"]) == expected.base
    assert ExactNumber.from_json(data["radical"]) == expected.radical
    assert data["radicand"] == 144169


def test_verify_numeric_lambda(capsys):
    code, out, _ = run(capsys, "verify-numeric", "--check", "lambda", "--m", "1",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["pass"] is True and data["abs_err"] < 1e-12


def test_verify_numeric_twisted(capsys):
    code, out, _ = run(capsys, "verify-numeric", "--check", "twisted", "--m", "3",
                       "--character", "kronecker:-3", "--format", "json")
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_fixtures_listing_and_dump(capsys, tmp_path):
    code, out, _ = run(capsys, "fixtures", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert "sl2z-w24-even-plus" in data["eigenforms"]
    target = tmp_path / "dumped"
    code, out, _ = run(capsys, "fixtures", "--dump", str(target))
    assert code == 0
    assert (target / "central_values.json").exists()
    dumped = json.loads((target / "central_values.json").read_text())
    assert dumped["rows"][0]["D"] == 8


def test_parity_error_exit_code(capsys):
    code, _, err = run(
        capsys, "trace", "--level", "1", "--weight", "12",
        "--character", "kronecker:-3", "--m", "2", "--n", "1",
    )
    assert code == 1
    assert "parity" in err


def test_validation_error_exit_code(capsys):
    code, _, err = run(
        capsys, "trace", "--level", "1", "--weight", "12",
        "--character", "kronecker:9", "--m", "1", "--n", "1",
    )
    assert code == 2
    assert "induced" in err


def test_deterministic_output(capsys):
    args = ("theorem1", "--level", "2", "--weight", "14", "--n", "2",
            "--character", "kronecker:5", "--format", "json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_parse_character_table_spec():
    chi = parse_character("table:5:0,zeta[4]^0,zeta[4]^1,zeta[4]^3,zeta[4]^2")
    assert chi.order == 4 and chi.is_primitive
    assert chi.value(2) == ExactNumber.zeta(4, 1)
    with pytest.raises(CharacterError):
        parse_character("table:5:0,zeta[4]^0")
    with pytest.raises(CharacterError):
        parse_character("mystery:3")
    with pytest.raises(CharacterError):
        parse_character("table:3:0,one,zeta[2]^1")


def test_factored_surd_rendering():
    assert factored_surd_str(QuadSurd(0, Fraction(-2359296, 5), 3)) == "-(2^18*3^2/5)*sqrt(3)"
    assert factored_surd_str(QuadSurd(Fraction(7, 2), 0, 1)) == "7/2"
    assert factored_surd_str(QuadSurd(0, 1, 2)) == "sqrt(2)"
    assert factored_surd_str(QuadSurd(-3, 0, 1)) == "-(3)"
