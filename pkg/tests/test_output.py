import json
import math

from collatzlab import (
    TrajectoryRecord,
    histogram,
    power_law_fit,
    q_sequence,
    scan_range,
)
from collatzlab.output import (
    fit_to_json,
    format_fraction,
    histogram_to_csv,
    histogram_xy,
    histogram_xy_loglog,
    read_records_csv,
    records_to_csv,
    records_to_json,
    records_xy,
    sequence_to_json,
)


def test_format_fraction_ten_significant_digits():
    assert format_fraction(0.2) == "0.2000000000"
    assert format_fraction(2 / 7) == "0.2857142857"
    assert format_fraction(1 / 3) == "0.3333333333"
    assert format_fraction(0.0) == "0.0000000000"
    assert format_fraction(0.05) == "0.05000000000"
    assert format_fraction(0.5) == "0.5000000000"


def test_records_csv_golden_row():
    assert records_to_csv(scan_range(5, 5)) == (
        "x,sigma,odd_steps,p_odd\n"
        "5,5,1,0.2000000000\n"
    )


def test_records_csv_roundtrip(tmp_path):
    records = scan_range(1, 200)
    path = tmp_path / "records.csv"
    path.write_text(records_to_csv(records))
    assert read_records_csv(path) == records


def test_read_records_csv_rejects_wrong_header(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("a,b,c\n1,2,3\n")
    try:
        read_records_csv(path)
    except ValueError as exc:
        assert "header" in str(exc)
    else:
        raise AssertionError("expected ValueError")


def test_records_json():
    rows = json.loads(records_to_json(scan_range(5, 6)))
    assert rows[0] == {"x": 5, "sigma": 5, "odd_steps": 1, "p_odd": 0.2}


def test_histogram_csv_shape():
    h = histogram(scan_range(1, 500), 10)
    text = histogram_to_csv(h)
    lines = text.splitlines()
    assert lines[0] == "bin_lo,bin_hi,probability"
    assert len(lines) == 11
    assert lines[1].startswith("0.0000000000,0.05000000000,")


def test_fit_json_keys_and_values():
    h = histogram(scan_range(1, 20_000), 100)
    fit = power_law_fit(h, window=(0.1, 0.36))
    payload = json.loads(fit_to_json(fit))
    assert list(payload) == [
        "alpha", "intercept", "r_squared",
        "window_lo", "window_hi", "bins_used", "sample_count",
    ]
    assert payload["alpha"] == fit.alpha
    assert payload["sample_count"] == 20_000
    assert payload["window_lo"] == 0.1 and payload["window_hi"] == 0.36


def test_records_xy_lines():
    text = records_xy(scan_range(5, 6))
    assert text.splitlines() == ["5 0.2000000000", "6 0.2500000000"]


def test_histogram_xy_and_loglog():
    h = histogram(scan_range(1, 500), 10)
    lines = histogram_xy(h).splitlines()
    assert len(lines) == 10
    assert lines[0].split()[0] == "0.02500000000"

    loglines = histogram_xy_loglog(h).splitlines()
    assert 0 < len(loglines) <= 10
    c, p = map(float, loglines[0].split())
    # first nonzero bin reconstructs
    probs = [(ctr, pr) for ctr, pr in zip(h.centers, h.probabilities) if pr > 0]
    assert math.isclose(10**c, probs[0][0], rel_tol=1e-9)
    assert math.isclose(10**p, probs[0][1], rel_tol=1e-9)


def test_outputs_are_byte_stable():
    records = scan_range(1, 300)
    assert records_to_csv(records) == records_to_csv(records)
    h = histogram(records, 25)
    assert histogram_to_csv(h) == histogram_to_csv(h)


def test_sequence_json_uses_decimal_strings():
    payload = json.loads(sequence_to_json(q_sequence(2)))
    assert payload == {
        "q": 2,
        "multiplier": 1,
        "n_terms": [4, 6, 9],
        "values": ["15", "23", "35", "53"],
        "verified": True,
    }
    big = json.loads(sequence_to_json(q_sequence(120)))
    assert big["values"][-1] == str(6 * 3**120 - 1)
    scaled = json.loads(sequence_to_json(q_sequence(1, 5)))
    assert scaled["n_terms"] == [2, 3]
    assert scaled["values"] == ["39", "59", "89"]


def test_trajectory_record_exact_fraction():
    rec = TrajectoryRecord(3, 7, 2)
    assert str(rec.p_odd_exact) == "2/7"
    assert format_fraction(rec.p_odd) == "0.2857142857"
