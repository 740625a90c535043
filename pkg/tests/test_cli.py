import json

import pytest

from collatzlab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_scan_single_value(capsys, tmp_path):
    out_file = tmp_path / "one.csv"
    code, out, _ = run_cli(capsys, "scan", "--from", "5", "--to", "5",
                           "--out", str(out_file))
    assert code == 0
    assert out_file.read_text() == "x,sigma,odd_steps,p_odd\n5,5,1,0.2000000000\n"
    assert "scanned 1 starts" in out
    assert "max p_odd 0.2000000000 at x=5" in out


def test_scan_to_stdout_with_summary_on_stderr(capsys):
    code, out, err = run_cli(capsys, "scan", "--from", "5", "--to", "6")
    assert code == 0
    assert out.splitlines()[0] == "x,sigma,odd_steps,p_odd"
    assert "scanned 2 starts" in err


def test_scan_json_format(capsys, tmp_path):
    out_file = tmp_path / "records.json"
    code, _, _ = run_cli(capsys, "scan", "--from", "1", "--to", "10",
                         "--format", "json", "--out", str(out_file))
    assert code == 0
    rows = json.loads(out_file.read_text())
    assert rows[2] == {"x": 3, "sigma": 7, "odd_steps": 2, "p_odd": 2 / 7}


def test_scan_usage_errors(capsys):
    assert run_cli(capsys, "scan", "--from", "9", "--to", "3")[0] == 1
    assert run_cli(capsys, "scan", "--from", "0", "--to", "3")[0] == 1
    assert run_cli(capsys, "scan", "--from", "1", "--to", "2", "--threads", "0")[0] == 1


def test_scan_missing_flags_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["scan", "--from", "1"])
    assert exc.value.code == 1
    capsys.readouterr()


def test_scan_overflow_exit_2(capsys):
    big = str(2**63 + 1)
    code, _, err = run_cli(capsys, "scan", "--from", big, "--to", big)
    assert code == 2
    assert "64-bit" in err


def test_scan_cap_exit_2(capsys):
    code, _, err = run_cli(capsys, "scan", "--from", "27", "--to", "27", "--cap", "5")
    assert code == 2
    assert "27" in err


def test_scan_threads_byte_identical(capsys, tmp_path):
    files = []
    for workers in ("1", "3"):
        path = tmp_path / f"scan_{workers}.csv"
        code, _, _ = run_cli(capsys, "scan", "--from", "1", "--to", "20000",
                             "--threads", workers, "--out", str(path))
        assert code == 0
        files.append(path.read_bytes())
    assert files[0] == files[1]


def test_scan_cache_grows_and_speeds_reuse(capsys, tmp_path):
    cache = tmp_path / "stopping.cache"
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    assert run_cli(capsys, "scan", "--from", "1", "--to", "5000",
                   "--cache", str(cache), "--out", str(first))[0] == 0
    assert cache.exists()
    assert run_cli(capsys, "scan", "--from", "1", "--to", "5000",
                   "--cache", str(cache), "--out", str(second))[0] == 0
    assert first.read_bytes() == second.read_bytes()


def test_scan_plot_data(capsys, tmp_path):
    plot = tmp_path / "xy.dat"
    run_cli(capsys, "scan", "--from", "5", "--to", "6", "--plot", str(plot),
            "--out", str(tmp_path / "r.csv"))
    assert plot.read_text() == "5 0.2000000000\n6 0.2500000000\n"


def test_podd(capsys):
    code, out, _ = run_cli(capsys, "podd", "3", "--bits")
    assert code == 0
    assert out == "x=3 sigma=7 odd_steps=2 p_odd=0.2857142857 (2/7) bits=1010000\n"


def test_podd_validation(capsys):
    assert run_cli(capsys, "podd", "0")[0] == 1


def test_dist_writes_outputs(capsys, tmp_path):
    hist_csv = tmp_path / "hist.csv"
    fit_json = tmp_path / "fit.json"
    plot = tmp_path / "plot.dat"
    loglog = tmp_path / "loglog.dat"
    code, out, _ = run_cli(
        capsys, "dist", "--from", "1", "--to", "20000", "--bins", "100",
        "--fit-lo", "0.1", "--fit-hi", "0.36",
        "--out-hist", str(hist_csv), "--out-fit", str(fit_json),
        "--plot", str(plot), "--plot-loglog", str(loglog),
    )
    assert code == 0
    assert out.startswith("alpha=")
    payload = json.loads(fit_json.read_text())
    assert payload["sample_count"] == 20000
    assert hist_csv.read_text().splitlines()[0] == "bin_lo,bin_hi,probability"
    assert len(plot.read_text().splitlines()) == 100
    assert loglog.read_text()


def test_dist_usage_errors(capsys):
    assert run_cli(capsys, "dist", "--from", "1", "--to", "100", "--bins", "5")[0] == 1
    assert run_cli(capsys, "dist", "--from", "1", "--to", "100",
                   "--fit-lo", "0.4", "--fit-hi", "0.2")[0] == 1
    assert run_cli(capsys, "dist")[0] == 1  # neither --input nor a range


def test_dist_insufficient_bins_exit_3(capsys):
    code, _, err = run_cli(capsys, "dist", "--from", "1", "--to", "30",
                           "--bins", "20", "--fit-lo", "0.45", "--fit-hi", "0.5")
    assert code == 3
    assert "bins" in err


def test_dist_fits_planted_exponent_from_csv(capsys, tmp_path):
    # records whose odd-fraction histogram follows center^4 over the window
    bins = 250
    lines = ["x,sigma,odd_steps,p_odd"]
    x = 1
    sigma = 1_000_000
    for i in range(bins):
        center = (i + 0.5) * 0.5 / bins
        if not 0.25 <= center <= 0.365:
            continue
        copies = round(2_000_000 * center**4)
        odd = round(center * sigma)
        for _ in range(copies):
            lines.append(f"{x},{sigma},{odd},{center:.10f}")
            x += 1
    path = tmp_path / "synthetic.csv"
    path.write_text("\n".join(lines) + "\n")

    code, out, _ = run_cli(capsys, "dist", "--input", str(path), "--bins", str(bins))
    assert code == 0
    alpha = float(out.split()[0].split("=")[1])
    assert abs(alpha - 4.0) <= 0.01


def test_preds(capsys):
    code, out, _ = run_cli(capsys, "preds", "5", "--count", "4")
    assert code == 0
    assert out == "13 53 213 853\n"


def test_preds_multiple_of_3(capsys):
    code, out, err = run_cli(capsys, "preds", "9", "--count", "4")
    assert code == 0
    assert out == ""
    assert "multiple of 3: branch root" in err


def test_preds_validation(capsys):
    assert run_cli(capsys, "preds", "8")[0] == 1
    assert run_cli(capsys, "preds", "5", "--count", "0")[0] == 1


def test_tree_json(capsys):
    code, out, _ = run_cli(capsys, "tree", "--root", "5", "--max-value", "300",
                           "--max-depth", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == 5
    assert [c["value"] for c in payload["children"]] == [3, 13, 53, 213]


def test_tree_dot(capsys, tmp_path):
    out_file = tmp_path / "tree.gv"
    code, _, _ = run_cli(capsys, "tree", "--root", "1", "--max-value", "100",
                         "--max-depth", "3", "--format", "dot",
                         "--out", str(out_file))
    assert code == 0
    dot = out_file.read_text()
    assert dot.startswith("digraph")
    assert '"5" -> "1"' in dot
    assert "fillcolor=red" in dot  # 21 and 85 are multiples of 3


def test_tree_validation(capsys):
    assert run_cli(capsys, "tree", "--root", "4")[0] == 1


def test_seq_text(capsys):
    code, out, _ = run_cli(capsys, "seq", "--q", "2")
    assert code == 0
    assert out == "15 23 35 53  verified\n"
    code, out, _ = run_cli(capsys, "seq", "--q", "1", "--multiplier", "5")
    assert out == "39 59 89  verified\n"


def test_seq_json(capsys):
    code, out, _ = run_cli(capsys, "seq", "--q", "0", "--format", "json")
    assert code == 0
    assert json.loads(out)["values"] == ["3", "5"]


def test_seq_multiplier_rules(capsys):
    assert run_cli(capsys, "seq", "--q", "1", "--multiplier", "3")[0] == 1
    code, out, _ = run_cli(capsys, "seq", "--q", "1", "--multiplier", "25",
                           "--permissive")
    assert code == 0
    assert out == "199 299 449  verified\n"


def test_seq_table(capsys):
    code, out, _ = run_cli(capsys, "seq", "--q", "3", "--table")
    assert code == 0
    assert out.splitlines()[0] == "i,q0,q1,q2,q3"
    assert out.splitlines()[-1] == "3,,,,27"


def test_runseed(capsys):
    code, out, _ = run_cli(capsys, "runseed", "--s", "3", "--n", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "seed 47"
    assert lines[1] == "run 47 71 107 161"
    assert lines[2].startswith("pass")


def test_runseed_validation(capsys):
    assert run_cli(capsys, "runseed", "--s", "0", "--n", "1")[0] == 1


def test_verify_roots(capsys):
    code, out, _ = run_cli(capsys, "verify-roots", "--max", "1000")
    assert code == 0
    assert out == "0 counterexamples / 500 odd values checked\n"


def test_verify_roots_validation(capsys):
    assert run_cli(capsys, "verify-roots", "--max", "2")[0] == 1


def test_unknown_command_exits_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1
    capsys.readouterr()


def test_bad_output_path_exit_1(capsys, tmp_path):
    missing_dir = tmp_path / "no" / "such" / "dir" / "out.csv"
    code, _, err = run_cli(capsys, "scan", "--from", "1", "--to", "5",
                           "--out", str(missing_dir))
    assert code == 1
    assert "file error" in err


def test_podd_cap_exit_2(capsys):
    code, _, _ = run_cli(capsys, "podd", "27", "--cap", "10")
    assert code == 2
