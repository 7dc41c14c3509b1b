import csv
import io
import json
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from hyperpack.cli import main

GOLDEN = Path(__file__).parent / "golden"
SCHEMA = json.loads(resources.files("hyperpack").joinpath("schema/output_record.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_density_json_737(capsys):
    code, out, _ = run(capsys, "density", "--u", "7", "--v", "3", "--w", "7", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    jsonschema.validate(rec, SCHEMA)
    assert (rec["u"], rec["v"], rec["w"]) == (7, 3, 7)
    assert round(rec["density"], 5) == 0.81335
    assert round(rec["h"], 5) == 1.23469


@pytest.mark.parametrize(
    "mode,extra",
    [("one-hyperball", []), ("noncongruent-opt", []), ("noncongruent", ["--x", "0.1"])],
)
def test_density_modes_validate_against_schema(capsys, mode, extra):
    code, out, _ = run(capsys, "density", "--u", "5", "--v", "4", "--w", "5", "--mode", mode, "--format", "json", *extra)
    assert code == 0
    jsonschema.validate(json.loads(out), SCHEMA)


def test_density_noncongruent_at_published_x(capsys):
    # x printed with five decimals lies a hair past the exact interval end
    code, out, _ = run(
        capsys, "density", "--u", "5", "--v", "4", "--w", "5", "--mode", "noncongruent", "--x", "0.14166", "--format", "json"
    )
    assert code == 0
    assert round(json.loads(out)["density"], 5) == 0.79895


def test_density_csv_has_header_and_lf(capsys):
    _, out, _ = run(capsys, "density", "--u", "7", "--v", "3", "--w", "8", "--format", "csv")
    assert "\r" not in out
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 1 and rows[0]["density"] == "0.622507"


def test_pretty_output(capsys):
    code, out, _ = run(capsys, "density", "--u", "7", "--v", "3", "--w", "7")
    assert code == 0 and "0.813351" in out


@pytest.mark.parametrize(
    "triple,name",
    [(("3", "3", "3"), "NotHyperbolic"), (("4", "3", "5"), "NotDoublyTruncated"), (("2", "3", "7"), "InvalidParameters")],
)
def test_invalid_parameters_exit_2(capsys, triple, name):
    u, v, w = triple
    code, out, err = run(capsys, "density", "--u", u, "--v", v, "--w", w)
    assert code == 2 and out == ""
    obj = json.loads(err)
    assert obj["code"] == 2 and obj["name"] == name and obj["message"]


def test_infeasible_x_exit_3(capsys):
    code, _, err = run(capsys, "density", "--u", "5", "--v", "4", "--w", "5", "--mode", "noncongruent", "--x", "0.5")
    assert code == 3
    assert json.loads(err)["name"] == "FeasibilityError"


def test_case_not_applicable_exit_3(capsys):
    code, _, _ = run(capsys, "density", "--u", "5", "--v", "4", "--w", "5", "--mode", "noncongruent", "--x", "0", "--case", "2b")
    assert code == 3


def test_empty_scan_exit_4(capsys):
    code, _, err = run(capsys, "scan", "--mode", "two-congruent", "--min", "3", "--max", "4")
    assert code == 4
    assert json.loads(err)["name"] == "EmptyScan"


def test_scan_top(capsys):
    code, out, _ = run(capsys, "scan", "--mode", "two-congruent", "--max", "10", "--top", "3", "--format", "csv", "--threads", "1")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 3
    assert (rows[0]["u"], rows[0]["v"], rows[0]["w"]) == ("7", "3", "7")


@pytest.mark.parametrize("n", [1, 2, 3])
def test_table_matches_golden(capsys, n):
    code, out, _ = run(capsys, "table", str(n), "--format", "csv", "--threads", "1")
    assert code == 0
    assert out == (GOLDEN / f"table{n}.csv").read_text()


def test_table_independent_of_threads(capsys, monkeypatch):
    _, one, _ = run(capsys, "table", "3", "--format", "csv", "--threads", "1")
    monkeypatch.setenv("HYPERPACK_THREADS", "2")
    _, two, _ = run(capsys, "table", "3", "--format", "csv", "--threads", "1")
    assert one == two


def test_table_json_round_trip(capsys):
    _, out, _ = run(capsys, "table", "2", "--format", "json")
    recs = json.loads(out)
    assert len(recs) == 18
    for rec in recs:
        jsonschema.validate(rec, SCHEMA)
    golden = list(csv.DictReader(io.StringIO((GOLDEN / "table2.csv").read_text())))
    for rec, row in zip(recs, golden):
        assert f"{rec['density']:.6f}" == row["density"]


def _xy(out):
    rows = list(csv.reader(io.StringIO(out)))
    return rows[0], [(float(a), float(b)) for a, b in rows[1:]]


def test_plot_density_vs_x_monotone(capsys):
    code, out, _ = run(capsys, "plot-data", "--kind", "density-vs-x", "--u", "5", "--v", "4", "--w", "5", "--samples", "25")
    assert code == 0
    header, pts = _xy(out)
    assert header == ["x", "density"] and len(pts) == 25
    assert all(a[1] < b[1] for a, b in zip(pts, pts[1:]))
    assert pts[0][1] == pytest.approx(0.779549, abs=1e-6)  # x = 0 is the congruent packing


def test_plot_density_vs_p_single_peak(capsys):
    _, out, _ = run(capsys, "plot-data", "--kind", "density-vs-p", "--samples", "60")
    _, pts = _xy(out)
    ys = [y for _, y in pts]
    i = ys.index(max(ys))
    assert all(a < b for a, b in zip(ys[: i + 1], ys[1 : i + 1]))
    assert all(a > b for a, b in zip(ys[i:], ys[i + 1 :]))
    assert 6.0 < pts[i][0] < 6.2


def test_plot_two_samples_are_endpoints(capsys):
    _, out, _ = run(capsys, "plot-data", "--kind", "density-vs-p", "--p-lo", "6.1", "--p-hi", "6.9", "--samples", "2")
    _, pts = _xy(out)
    assert [p for p, _ in pts] == [6.1, 6.9]


def test_plot_rejects_one_sample(capsys):
    code, _, _ = run(capsys, "plot-data", "--kind", "density-vs-p", "--samples", "1")
    assert code == 2


def test_optimize_p(capsys):
    code, out, _ = run(capsys, "optimize-p", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["u"] == pytest.approx(6.05061, abs=1e-3)
    assert rec["density"] > 0.85328


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hyperpack", "density", "--u", "3", "--v", "3", "--w", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
    assert json.loads(proc.stderr)["name"] == "NotHyperbolic"
