import json

import pytest

from cherednik.cli import build_parser, main, run_verification


def run_json(tmp_path, *argv):
    out = tmp_path / "report.json"
    rc = main(["--out", str(out), *argv])
    return rc, json.loads(out.read_text(encoding="utf-8"))


def test_group_command(tmp_path):
    rc, report = run_json(tmp_path, "group", "--group", "Sn:3:permutation")
    assert rc == 0
    assert report["order"] == 6
    assert report["degrees"] == [1, 2, 3]
    by_label = {e["label"]: e for e in report["irreducibles"]}
    assert by_label["(2, 1)"]["fake_polynomial_str"] == "q+q^2"
    assert by_label["(2, 1)"]["b_invariant"] == 1


def test_group_trivial(tmp_path):
    rc, report = run_json(tmp_path, "group", "--group", "Zm:1")
    assert rc == 0
    assert report["order"] == 1
    assert report["reflection_count"] == 0


def test_malformed_group_spec():
    with pytest.raises(ValueError):
        main(["group", "--group", "Xx:9"])


def test_cm_command(tmp_path):
    rc, report = run_json(tmp_path, "cm", "--group", "Zm:2", "--c", "1")
    assert rc == 0
    assert report["checks_pass"]
    assert report["block_count"] == 2
    assert {b["distinguished"] for b in report["blocks"]} == {"chi0", "chi1"}


def test_cm_zero_parameter(tmp_path):
    rc, report = run_json(tmp_path, "cm", "--group", "Zm:2", "--c", "zero")
    assert rc == 0
    assert report["block_count"] == 1
    assert report["blocks"][0]["distinguished"] == "chi0"


def test_cm_cap_exceeded(tmp_path):
    rc = main(["cm", "--group", "Sn:4:permutation", "--c", "zero"])
    assert rc == 2    # CapExceeded surfaces as a clean error exit


def test_characters_command(tmp_path):
    rc, report = run_json(tmp_path, "characters", "--group",
                          "Sn:3:permutation", "--c", "generic",
                          "--trunc", "12", "--check-hook")
    assert rc == 0
    by_label = {e["label"]: e for e in report["characters"]}
    std = by_label["(2, 1)"]
    assert std["generator_degrees"]["exponents"] == [1, 1, 3]
    assert std["hook_identity"] is True
    assert std["endo_character"]["truncation"] == 12
    # constant term of the endomorphism character is 1
    assert [0, 0, 1, 1] in std["endo_character"]["terms"]


def test_characters_csv_format(tmp_path):
    out = tmp_path / "chars.csv"
    rc = main(["--format", "csv", "--out", str(out), "characters",
               "--group", "Zm:3", "--c", "generic", "--rep", "chi1",
               "--trunc", "6"])
    assert rc == 0
    text = out.read_text(encoding="utf-8")
    assert "endo_character" in text
    assert text.count("\n") > 3


def test_element_command(tmp_path):
    rc, report = run_json(tmp_path, "element", "--group", "Zm:2",
                          "--c", "1", "--expr", "y1*x1")
    assert rc == 0
    assert report["normal_form"] == "w1+x1*y1"
    assert report["grading_degree"] == 0
    assert report["round_trip_ok"] is True


def test_element_command_bad_generator():
    with pytest.raises(ValueError):
        main(["element", "--group", "Zm:2", "--c", "1", "--expr", "s12"])


def test_reduce_command(tmp_path):
    rc, report = run_json(tmp_path, "reduce", "--group", "Sn:3:permutation",
                          "--c", "1", "--point", "1,1,0", "--trunc", "10")
    assert rc == 0
    assert report["orbit_size"] == 3
    assert report["stabilizer_order"] == 2
    assert report["stabilizer_degrees"] == [1, 1, 2]
    assert set(report["reduced_endo_characters"]) == {"(2,)", "(1, 1)"}


def test_reduce_point_validation():
    with pytest.raises(ValueError):
        main(["reduce", "--group", "Zm:3", "--c", "zero", "--point", "1,2"])


def test_bv_check_command(tmp_path):
    rc, report = run_json(tmp_path, "--seed", "7", "bv-check", "--n", "2",
                          "--trunc", "6", "--samples", "10")
    assert rc == 0
    assert report["checks_pass"]
    assert report["square_zero_failures"] == 0
    assert report["virtual_homology"]["conormal"]["total"] == 1
    assert report["virtual_homology"]["normal"]["total"] == 1
    assert report["koszul"]["regular"]


def test_custom_group_json(tmp_path):
    entry = [[1, 1, 1]]               # sum of one triple: 1/1 * zeta^1
    spec = {
        "conductor": 4,
        "name": "custom-z4",
        "generators": [[[entry]]],    # one 1x1 matrix [zeta_4]
    }
    path = tmp_path / "group.json"
    path.write_text(json.dumps(spec), encoding="utf-8")
    rc, report = run_json(tmp_path, "group", "--group", f"@{path}")
    assert rc == 0
    assert report["order"] == 4
    assert report["degrees"] == [4]


def test_verify_subset_and_determinism(tmp_path):
    argv = ["--seed", "3", "verify", "--suites", "characters,bv"]
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    assert main(["--out", str(out1), *argv]) == 0
    assert main(["--out", str(out2), *argv]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    report = json.loads(out1.read_text(encoding="utf-8"))
    assert report["all_pass"]
    assert set(report["suites"]) == {"characters", "bv"}


def test_verify_inject_fault(tmp_path):
    rc, report = run_json(tmp_path, "--seed", "3", "verify",
                          "--suites", "characters",
                          "--inject-fault", "characters")
    assert rc == 1
    assert not report["all_pass"]
    assert not report["suites"]["characters"]["pass"]


def test_verify_unknown_suite():
    with pytest.raises(SystemExit):
        main(["verify", "--suites", "nope"])


def test_table_format(tmp_path):
    out = tmp_path / "t.txt"
    rc = main(["--format", "table", "--out", str(out), "group",
               "--group", "Zm:2"])
    assert rc == 0
    text = out.read_text(encoding="utf-8")
    assert "order: 2" in text


def test_parser_help_exists():
    parser = build_parser()
    assert parser.prog == "cherednik"


def test_run_verification_reports_every_suite():
    report = run_verification(seed=1, suites=["bv"])
    assert report["suites"]["bv"]["pass"]
    names = [c["name"] for c in report["suites"]["bv"]["checks"]]
    assert "bv:n=1:D=4" in names and "bv:n=3:D=8" in names
