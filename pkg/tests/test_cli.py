import json

import pytest

from quintic.cli import main
from quintic.mpfield import PrecisionCtx, parse_complex

from golden import GOLDEN_COEFFS, GOLDEN_ROOTS


GOLDEN_ARGS = [
    "solve",
    "--m=-200i",
    "--n=1340",
    "--p=12.34910",
    "--q=-239.18200",
    "--r=339.2181700",
]


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_golden_json(capsys):
    code, out, _ = run(capsys, GOLDEN_ARGS + ["--digits", "200", "--json"])
    assert code == 0
    payload = json.loads(out)
    ctx = PrecisionCtx(digits=200)
    for entry, ref_text in zip(payload["roots"], GOLDEN_ROOTS):
        got = parse_complex(entry["re"], ctx) + parse_complex(entry["im"], ctx) * ctx.mpc(0, 1)
        ref = parse_complex(ref_text, ctx)
        assert abs(got - ref) <= ctx.pow10(-50) * abs(ref)
    diag = payload["diagnostics"]
    for key in ("alpha", "xi", "eta", "d", "A", "B", "s", "strategy", "shift",
                "precision_used", "candidate_residuals"):
        assert key in diag
    assert len(diag["candidate_residuals"]) == 4
    assert payload["input"]["digits"] == 200


def test_solve_fifth_roots_text(capsys):
    code, out, _ = run(
        capsys, ["solve", "--m=0", "--n=0", "--p=0", "--q=0", "--r=-1", "--digits", "50"]
    )
    assert code == 0
    assert "r1" in out and "r5" in out


def test_solve_flag_value_gluing(capsys):
    # a bare negative literal after the flag must not be eaten as an option
    code, out, _ = run(
        capsys, ["solve", "--m", "-200i", "--n", "1340", "--p", "12.34910",
                 "--q", "-239.18200", "--r", "339.2181700", "--digits", "50"]
    )
    assert code == 0


def test_solve_bad_literal_exit_1(capsys):
    code, _, err = run(
        capsys, ["solve", "--m=bogus", "--n=0", "--p=0", "--q=0", "--r=-1", "--digits", "50"]
    )
    assert code == 1
    assert "m" in err and "bogus" in err


def test_solve_structured_failure_exit_2(capsys):
    code, _, err = run(capsys, GOLDEN_ARGS + ["--digits", "50", "--strategy", "series"])
    assert code == 2
    assert "bring" in err


def test_solve_oracle_fallback(capsys):
    code, out, _ = run(
        capsys,
        GOLDEN_ARGS + ["--digits", "50", "--strategy", "series", "--fallback", "oracle", "--json"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["diagnostics"]["strategy"] == "oracle_fallback"
    assert len(payload["roots"]) == 5


def test_verify_roundtrip(tmp_path, capsys):
    code, out, _ = run(capsys, GOLDEN_ARGS + ["--digits", "60", "--json"])
    assert code == 0
    report = tmp_path / "report.json"
    report.write_text(out)
    code, out2, _ = run(capsys, ["verify", str(report)])
    assert code == 0
    assert "verified" in out2


def test_verify_detects_perturbation(tmp_path, capsys):
    code, out, _ = run(capsys, GOLDEN_ARGS + ["--digits", "60", "--json"])
    payload = json.loads(out)
    root = payload["roots"][2]
    bumped = parse_complex(root["re"]) + PrecisionCtx(digits=60).mpf("1e-10")
    from quintic.mpfield import format_complex

    root["re"] = format_complex(bumped, 45)
    report = tmp_path / "bad.json"
    report.write_text(json.dumps(payload))
    code, _, err = run(capsys, ["verify", str(report)])
    assert code == 2
    assert "residual" in err


def test_verify_malformed_json(tmp_path, capsys):
    report = tmp_path / "broken.json"
    report.write_text("{not json")
    code, _, err = run(capsys, ["verify", str(report)])
    assert code == 1


def test_verify_missing_fields(tmp_path, capsys):
    report = tmp_path / "fields.json"
    report.write_text(json.dumps({"roots": []}))
    code, _, err = run(capsys, ["verify", str(report)])
    assert code == 1


def test_bench_rows_and_tolerance(capsys):
    code, out, _ = run(capsys, ["bench", "--count", "3", "--digits", "50", "--seed", "7"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "seed,index,digits,strategy,cf_ms,oracle_ms,match_distance,status"
    assert len(lines) == 4
    ctx = PrecisionCtx(digits=50)
    for row in lines[1:]:
        cells = row.split(",")
        assert cells[-1] == "OK"
        assert abs(parse_complex(cells[-2], ctx)) <= ctx.pow10(-25)


def test_bench_zero_count(capsys):
    code, out, _ = run(capsys, ["bench", "--count", "0"])
    assert code == 0
    assert out.strip() == "seed,index,digits,strategy,cf_ms,oracle_ms,match_distance,status"


def test_bench_deterministic_modulo_timing(capsys):
    _, out1, _ = run(capsys, ["bench", "--count", "2", "--digits", "50", "--seed", "11"])
    _, out2, _ = run(capsys, ["bench", "--count", "2", "--digits", "50", "--seed", "11"])

    def strip_timing(text):
        rows = []
        for line in text.strip().splitlines():
            cells = line.split(",")
            if len(cells) == 8 and cells[4] and cells[4][0].isdigit():
                cells[4] = cells[5] = "-"
            rows.append(",".join(cells))
        return rows

    assert strip_timing(out1) == strip_timing(out2)


def test_env_digits_default(monkeypatch, capsys):
    monkeypatch.setenv("QUINTIC_DIGITS", "60")
    code, out, _ = run(capsys, ["solve", "--m=0", "--n=0", "--p=0", "--q=0", "--r=-1", "--json"])
    assert code == 0
    assert json.loads(out)["input"]["digits"] == 60


def test_flag_overrides_env(monkeypatch, capsys):
    monkeypatch.setenv("QUINTIC_DIGITS", "60")
    code, out, _ = run(
        capsys, ["solve", "--m=0", "--n=0", "--p=0", "--q=0", "--r=-1", "--digits", "50", "--json"]
    )
    assert code == 0
    assert json.loads(out)["input"]["digits"] == 50


def test_usage_error_exit_1(capsys):
    assert main(["solve", "--m=1"]) == 1
    assert main(["frobnicate"]) == 1
