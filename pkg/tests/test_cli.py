import csv
import io
import json

import pytest

import toepinv
from toepinv import cli
from toepinv.cli import format_complex, main, parse_complex


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


# ------------------------------------------------------------- value formats


@pytest.mark.parametrize(
    "z, text",
    [
        (complex(-2, 0), "-2"),
        (complex(5, 0), "5"),
        (complex(0, 1), "i"),
        (complex(0, -1), "-i"),
        (complex(0, 14), "14i"),
        (complex(1, -2), "1-2i"),
        (complex(-0.5, 0.25), "-0.5+0.25i"),
    ],
)
def test_format_complex(z, text):
    assert format_complex(z) == text


@pytest.mark.parametrize(
    "text, z",
    [
        ("2", 2 + 0j),
        ("-2", -2 + 0j),
        ("i", 1j),
        ("-i", -1j),
        ("2-3i", 2 - 3j),
        (" 1 + 2i ", 1 + 2j),
        ("0.5i", 0.5j),
    ],
)
def test_parse_complex(text, z):
    assert parse_complex(text) == z


def test_parse_complex_roundtrip():
    for z in (1 + 2j, -14j, 0.25 - 0.75j, 3 + 0j):
        assert parse_complex(format_complex(z)) == z


# ------------------------------------------------------------------- invert


def test_invert_text(capsys):
    code, out = run(capsys, "invert", "--coeffs", "2,3,4")
    assert code == 0
    assert out.strip() == "-2, 5, -14"


def test_invert_complex_coefficients(capsys):
    code, out = run(capsys, "invert", "--coeffs", "2i,-3,-4i")
    assert code == 0
    assert out.strip() == "-2i, -5, 14i"


def test_invert_json(capsys):
    code, out = run(capsys, "invert", "--coeffs", "2,3,4", "--format", "json")
    report = json.loads(out)
    assert code == 0
    assert report["command"] == "invert"
    assert report["inverse"] == ["-2", "5", "-14"]
    assert report["order"] == 4


def test_invert_higher_order(capsys):
    # order 5: one more reversion coefficient beyond the closed form
    code, out = run(capsys, "invert", "--coeffs", "2,3,4,5")
    assert code == 0
    assert out.strip().startswith("-2, 5, -14, ")


def test_invert_bad_literal_exits_usage(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["invert", "--coeffs", "2,nope,4"])
    assert exc.value.code == 2


def test_unknown_choice_exits_usage():
    with pytest.raises(SystemExit) as exc:
        main(["search", "--class", "koebe", "--functional", "ts22"])
    assert exc.value.code == 2


def test_missing_required_flag_exits_usage():
    with pytest.raises(SystemExit) as exc:
        main(["search", "--class", "r"])
    assert exc.value.code == 2


# --------------------------------------------------------------- verify


def test_verify_extremal_passes(capsys):
    code, out = run(capsys, "verify-extremal")
    assert code == 0
    assert "checks passed" in out


def test_verify_extremal_json_schema(capsys):
    code, out = run(capsys, "verify-extremal", "--format", "json")
    report = json.loads(out)
    assert code == 0
    assert report["passed"] is True
    row = next(
        r for r in report["rows"]
        if r["class"] == "R" and r["functional"] == "TS32"
    )
    assert row["bound"] == {"num": 817, "den": 108}
    assert row["abs_error"] <= 1e-12


def test_verify_extremal_csv(capsys):
    code, out = run(capsys, "verify-extremal", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert len(rows) == 14
    assert set(rows[0]) == {
        "label", "class", "functional", "attained", "bound_num", "bound_den",
        "abs_error",
    }


def test_verify_extremal_detects_perturbed_catalog(capsys, monkeypatch):
    # negative control: poison one attained value and expect a failing exit
    import toepinv.classes as classes_mod

    original = classes_mod.extremal_catalog

    def poisoned():
        entries = original()
        bad = entries[0]
        attained = dict(bad.attained)
        key = next(iter(attained))
        attained[key] = attained[key] + 1
        entries[0] = classes_mod.ExtremalEntry(
            bad.class_id, bad.label, bad.forward_exact, bad.inverse_exact, attained
        )
        return entries

    monkeypatch.setattr(classes_mod, "extremal_catalog", poisoned)
    code, out = run(capsys, "verify-extremal")
    assert code == 1
    assert "FAILED" in out


def test_verify_extremal_output_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out = run(capsys, "verify-extremal", "--format", "json",
                    "--output", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["passed"] is True


# ---------------------------------------------------------------- search


def test_search_text(capsys):
    code, out = run(capsys, "search", "--class", "r", "--functional", "ts32",
                    "--seed", "42", "--starts", "4", "--iters", "600")
    assert code == 0
    assert "best value" in out
    assert "converged    yes" in out


def test_search_json_gap_within_tolerance(capsys):
    code, out = run(capsys, "search", "--class", "star", "--functional", "ts23",
                    "--starts", "4", "--iters", "600", "--format", "json")
    report = json.loads(out)
    assert code == 0
    assert report["exact_bound"] == {"num": 221, "den": 1}
    assert abs(report["relative_gap"]) <= 1e-4
    assert report["within_tolerance"] is True


def test_search_nonconverged_exit_code(capsys):
    code, out = run(capsys, "search", "--class", "convex", "--functional", "ts22",
                    "--starts", "1", "--iters", "1")
    assert code == 3
    assert "converged    no" in out


def test_search_is_deterministic_under_fixed_seed(capsys):
    argv = ["search", "--class", "r", "--functional", "ts22", "--seed", "11",
            "--starts", "3", "--iters", "400", "--format", "json"]
    _, first = run(capsys, *argv)
    _, second = run(capsys, *argv)
    assert first == second


def test_search_csv_single_row(capsys):
    code, out = run(capsys, "search", "--class", "convex", "--functional", "ts22",
                    "--starts", "2", "--iters", "400", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert len(rows) == 1
    assert rows[0]["class"] == "CONVEX"
    assert float(rows[0]["best_value"]) == pytest.approx(2.0, rel=1e-6)


# ----------------------------------------------------------------- lemma


def test_lemma_small_sample(capsys):
    code, out = run(capsys, "lemma", "--samples", "1500", "--seed", "3")
    assert code == 0
    assert out.strip().endswith("passed")
    assert out.count("yes") == 4


def test_lemma_json(capsys):
    code, out = run(capsys, "lemma", "--samples", "800", "--format", "json")
    report = json.loads(out)
    assert code == 0
    assert report["passed"] is True
    assert len(report["rows"]) == 4
    assert report["rows"][0]["mu"] == {"num": -14, "den": 3}


# --------------------------------------------------------------- compare


def test_compare_text_table(capsys):
    code, out = run(capsys, "compare", "--starts", "3", "--iters", "300")
    assert code == 0
    assert "VIOLATED" in out
    assert out.count("NOT_SHARP") == 8
    assert out.count("CONSISTENT") == 3


def test_compare_csv_columns_fixed(capsys):
    code, out = run(capsys, "compare", "--starts", "3", "--iters", "300",
                    "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert list(rows[0]) == [
        "class", "functional", "prior_claim", "exact_bound_num",
        "exact_bound_den", "numeric_max", "gap", "verdict",
    ]
    violated = next(r for r in rows if r["verdict"] == "VIOLATED")
    assert (violated["class"], violated["functional"]) == ("STARLIKE", "TS23")
    assert float(violated["numeric_max"]) > float(violated["prior_claim"])


def test_compare_json_row_content(capsys):
    code, out = run(capsys, "compare", "--starts", "3", "--iters", "300",
                    "--format", "json")
    report = json.loads(out)
    row = next(
        r for r in report["rows"]
        if r["class"] == "STARLIKE" and r["functional"] == "TS23"
    )
    assert code == 0
    assert row["verdict"] == "VIOLATED"
    assert row["prior_claim"] == 116.33
    assert row["exact_bound"] == {"num": 221, "den": 1}
    assert row["witness"] == "z/(1-iz)^2"
