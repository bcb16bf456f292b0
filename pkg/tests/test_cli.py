import json

import pytest

from kloosterman.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


def test_verify_field_passes(capsys):
    code, report, _ = run_json(capsys, "verify", "field")
    assert code == 0
    assert report["verdicts"]["all_checks"] == "pass"
    assert int(report["verdicts"]["checks_run"]) > 0


def test_verify_unknown_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "badname"])
    assert exc.value.code == 2
    assert "invalid choice" in capsys.readouterr().err


def test_recursion_compare_match(capsys):
    code, report, _ = run_json(capsys, "recursion", "--n", "3", "--q", "2", "--h", "1", "--compare")
    assert code == 0
    assert report["results"]["t1k_recursive"] == "1"
    assert report["results"]["t1k_direct"] == "1"
    assert report["verdicts"]["match"] is True


def test_recursion_negative_value(capsys):
    code, report, _ = run_json(capsys, "recursion", "--n", "1", "--q", "8", "--h", "3", "--compare")
    assert code == 0
    assert report["results"]["t1k_recursive"] == "-44"
    assert report["results"]["t1k_direct"] == "-44"


def test_recursion_range_error(capsys):
    code, out, err = run(capsys, "recursion", "--n", "1", "--q", "4", "--h", "1")
    assert code == 2
    assert "q >= 8" in err


def test_recursion_modulus_override(capsys):
    code, report, _ = run_json(
        capsys, "recursion", "--n", "1", "--q", "16", "--h", "3", "--modulus", "0x19"
    )
    assert code == 0
    base_code, base_report, _ = run_json(capsys, "recursion", "--n", "1", "--q", "16", "--h", "3")
    assert base_code == 0
    assert report["results"]["t1k_recursive"] == base_report["results"]["t1k_recursive"]


def test_histogram_enumeration_with_verdict(capsys):
    code, report, _ = run_json(capsys, "histogram", "--n", "1", "--q", "8", "--r-coset", "0")
    assert code == 0
    hist = report["results"]["histogram"]
    assert len(hist) == 8
    assert sum(int(v) for v in hist.values()) == 56
    assert report["verdicts"]["closed_form_agreement"] == "match"


def test_histogram_large_cell_enumeration(capsys):
    code, report, _ = run_json(capsys, "histogram", "--n", "3", "--q", "2", "--r-coset", "2")
    assert code == 0
    assert report["results"]["histogram"] == {"0": "293888", "1": "308224"}
    assert report["verdicts"]["closed_form_agreement"] == "match"


def test_histogram_closed_form_only(capsys):
    code, report, _ = run_json(
        capsys, "histogram", "--n", "3", "--q", "4", "--r-coset", "2", "--closed-form"
    )
    assert code == 0
    assert report["results"]["source"] == "closed-form"
    assert report["results"]["total"] == str(264241152 * 3780)


def test_histogram_closed_form_needs_distinguished_cell(capsys):
    code, _, err = run(capsys, "histogram", "--n", "2", "--q", "2", "--r-coset", "1", "--closed-form")
    assert code == 2
    assert "closed form" in err


def test_histogram_budget_error_mentions_alternatives(capsys):
    code, _, err = run(capsys, "histogram", "--n", "3", "--q", "4", "--r-coset", "2")
    assert code == 1
    assert "--closed-form" in err


def test_histogram_cache_round_trip(tmp_path, capsys):
    args = ("histogram", "--n", "1", "--q", "8", "--r-coset", "0", "--cache-dir", str(tmp_path))
    code, first, _ = run_json(capsys, *args)
    assert code == 0 and first["results"]["source"] == "enumeration"
    cache_files = list(tmp_path.glob("hist_*.json"))
    assert len(cache_files) == 1
    code, second, _ = run_json(capsys, *args)
    assert code == 0 and second["results"]["source"] == "cache"
    assert second["results"]["histogram"] == first["results"]["histogram"]


def test_histogram_cache_invalidated_on_modulus_mismatch(tmp_path, capsys):
    args = ("histogram", "--n", "1", "--q", "8", "--r-coset", "0", "--cache-dir", str(tmp_path))
    run_json(capsys, *args)
    [cache_file] = tmp_path.glob("hist_*.json")
    entry = json.loads(cache_file.read_text())
    entry["modulus"] = "9999"
    cache_file.write_text(json.dumps(entry))
    code, report, _ = run_json(capsys, *args)
    assert code == 0
    assert report["results"]["source"] == "enumeration"  # stale entry was not trusted


def test_histogram_workers_flag(capsys):
    base_code, base, _ = run_json(capsys, "histogram", "--n", "2", "--q", "2", "--r-coset", "1")
    code, parallel, _ = run_json(
        capsys, "histogram", "--n", "2", "--q", "2", "--r-coset", "1", "--workers", "2"
    )
    assert base_code == code == 0
    assert parallel["results"]["histogram"] == base["results"]["histogram"]


def test_histogram_weight_prefix_emission(capsys):
    code, report, _ = run_json(
        capsys, "histogram", "--n", "1", "--q", "8", "--r-coset", "0", "--jmax", "2"
    )
    assert code == 0
    assert report["results"]["weight_prefix"] == ["1", "0", "388"]


def test_tables_csv_q8(capsys):
    code, out, _ = run(capsys, "tables", "--q", "8", "--csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "a_bits,trace,k"
    k_values = sorted(int(line.split(",")[2]) for line in lines[1:8])
    assert k_values == [-5, -1, -1, -1, 3, 3, 3]


def test_tables_csv_q2(capsys):
    code, out, _ = run(capsys, "tables", "--q", "2", "--csv")
    assert code == 0
    assert out.strip().splitlines()[1] == "1,1,1"


def test_tables_moments_q4(capsys):
    code, report, _ = run_json(capsys, "tables", "--q", "4", "--hmax", "2")
    assert code == 0
    assert report["results"]["moments"]["1"]["mk"] == "1"
    assert report["results"]["moments"]["2"]["mk"] == "11"


def test_tables_rejects_huge_field(capsys):
    code, _, err = run(capsys, "tables", "--q", "2048")
    assert code == 2


def test_q_must_be_power_of_two(capsys):
    code, _, err = run(capsys, "tables", "--q", "6")
    assert code == 2
    assert "power of two" in err


def test_reports_are_deterministic_up_to_wall_time(capsys):
    _, first, _ = run_json(capsys, "verify", "kloosterman")
    _, second, _ = run_json(capsys, "verify", "kloosterman")
    first.pop("wall_time_seconds")
    second.pop("wall_time_seconds")
    assert first == second
