import csv
import io
import json
import subprocess
import sys

import pytest

from dualmono import cli


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


@pytest.mark.parametrize(
    "text, expect",
    [("0:1:0.25", [0, 0.25, 0.5, 0.75, 1.0]), ("4:4.3:0.1", [4, 4.1, 4.2, 4.3]), ("1:1.05:0.1", [1.0])],
)
def test_parse_range_inclusive(text, expect):
    assert cli.parse_range(text) == pytest.approx(expect)


@pytest.mark.parametrize("text, value", [("2sqrt2", 2 * 2**0.5), ("sqrt2", 2**0.5), ("3.5", 3.5), ("1e-3", 1e-3)])
def test_parse_number(text, value):
    assert cli.parse_number(text) == pytest.approx(value)


@pytest.mark.parametrize("text", ["abc", "1:2", "2:1:0.1", "0:1:0"])
def test_parse_errors(text):
    with pytest.raises(cli.CLIError):
        cli.parse_range(text) if ":" in text else cli.parse_number(text)


def test_fmt_is_round_trip():
    assert cli.fmt(0.1 + 0.2) == "0.30000000000000004"
    assert float(cli.fmt(1 / 3)) == 1 / 3
    assert cli.fmt(None) == "" and cli.fmt(True) == "true" and cli.fmt(3) == "3"


def test_measure_dicke(capsys):
    code, out, _ = run(["measure", "--family", "dicke", "--n", "4", "--k", "1",
                        "--measure", "st", "--cut", "0"], capsys)
    assert code == 0
    (row,) = rows(out)
    assert list(row) == cli.MEASURE_COLUMNS
    assert abs(float(row["value"]) - 0.8113) <= 5e-4
    assert row["route"] == "spectral"


def test_measure_pair_and_json(capsys):
    code, out, _ = run(["measure", "--family", "w", "--n", "3", "--measure", "ttq", "--q", "2",
                        "--pair", "0", "2", "--format", "json"], capsys)
    assert code == 0
    (doc,) = json.loads(out)
    assert doc["cut"] == "0,2" and doc["route"] == "concurrence"
    assert doc["value"] == pytest.approx(4 / 9)


def test_state_file_round_trip(tmp_path, capsys):
    path = tmp_path / "ex1.json"
    base = ["--measure", "st", "--cut", "0"]
    _, out1, _ = run(["measure", "--family", "schmidt", "--params", "ex1",
                      "--save-state", str(path)] + base, capsys)
    _, out2, _ = run(["measure", "--state", str(path)] + base, capsys)
    assert float(rows(out1)[0]["value"]) == pytest.approx(float(rows(out2)[0]["value"]), abs=1e-14)


def test_schmidt_explicit_params(capsys):
    s5, s25 = 0.2**0.5, 0.4**0.5
    params = f"{s5},0,{s25},{s5},{s5}"
    _, out, _ = run(["measure", "--family", "schmidt", "--params", params,
                     "--measure", "concurrence"], capsys)
    assert float(rows(out)[0]["value"]) == pytest.approx(0.8, abs=1e-12)


def test_verify_fig2_ordering(capsys):
    code, out, _ = run(["verify", "--family", "schmidt", "--params", "ex1", "--measure", "st",
                        "--alpha-range", "2.828:12:0.1", "--bounds", "all"], capsys)
    assert code == 0
    data = rows(out)
    assert list(data[0]) == cli.VERIFY_COLUMNS
    assert len(data) == 92
    for r in data:
        vals = [float(r[c]) for c in ("rhs_thm", "rhs_mj", "rhs_weighted", "rhs_powersum")]
        assert vals == sorted(vals, reverse=True)
        assert float(r["slack_thm"]) >= 0 and r["m"] == "1"


def test_verify_bound_subset(capsys):
    code, out, _ = run(["verify", "--family", "w", "--n", "4", "--measure", "ttq", "--q", "2",
                        "--alpha", "2", "--bounds", "powersum,weighted"], capsys)
    assert code == 0
    (r,) = rows(out)
    assert r["rhs_thm"] == "" and r["slack_thm"] == ""
    assert float(r["rhs_powersum"]) == pytest.approx(3 / 16)


def test_indicator_fig6(capsys):
    code, out, _ = run(["indicator", "--family", "w", "--kind", "tau", "--n-range", "3:10"], capsys)
    assert code == 0
    data = rows(out)
    assert [int(r["param"]) for r in data] == list(range(3, 11))
    assert all(float(r["value"]) > 0 for r in data)


def test_indicator_q_points(capsys):
    code, out, _ = run(["indicator", "--family", "w", "--n", "5", "--kind", "omega",
                        "--q-points", "7"], capsys)
    assert code == 0
    data = rows(out)
    assert len(data) == 7 and all(float(r["value"]) > 0 for r in data)


def test_lemmas(capsys):
    code, out, _ = run(["lemmas", "--x-range", "2:3:1", "--t-step", "0.1"], capsys)
    assert code == 0
    data = rows(out)
    assert list(data[0]) == cli.LEMMA_COLUMNS
    assert {r["which"] for r in data} == {"L1", "L2", "L4"}


def test_random_suite_pass_and_property_failure(capsys):
    code, out, err = run(["random-suite", "--count", "5", "--seed", "3"], capsys)
    assert code == 0 and "0 failures" in err
    assert list(rows(out)[0]) == cli.SUITE_COLUMNS
    # a negative tolerance demands slack above 1, which no sample meets
    code, _, _ = run(["random-suite", "--count", "5", "--seed", "3", "--tol", "-1"], capsys)
    assert code == cli.EXIT_PROPERTY


@pytest.mark.parametrize(
    "argv",
    [
        ["measure", "--family", "schmidt", "--params", "1,2,3"],
        ["measure", "--family", "dicke", "--n", "4"],
        ["measure", "--measure", "st"],
        ["measure", "--family", "w", "--n", "3", "--measure", "ttq", "--q", "5", "--pair", "0", "1"],
        ["verify", "--family", "w", "--n", "4", "--alpha", "1"],
        ["verify", "--family", "w", "--n", "4"],
        ["verify", "--family", "w", "--n", "4", "--alpha", "3", "--bounds", "bogus"],
        ["indicator", "--family", "w", "--n", "4", "--kind", "omega", "--q", "4.9"],
        ["indicator", "--family", "schmidt", "--n-range", "3:5"],
        ["random-suite", "--measure", "eof", "--count", "1"],
        ["sweep", "--figure", "fig9"],
    ],
)
def test_validation_exit_code(argv, capsys, tmp_path):
    if argv[0] == "sweep":
        argv = argv + ["--out", str(tmp_path)]
    code, _, err = run(argv, capsys)
    assert code == cli.EXIT_INVALID and err.startswith("error:")


def test_unknown_family_and_bad_file(tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["measure", "--family", "cluster"])
    assert exc.value.code == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"num_qubits": 2}')
    code, _, _ = run(["measure", "--state", str(bad)], capsys)
    assert code == cli.EXIT_INVALID
    code, _, _ = run(["measure", "--state", str(tmp_path / "missing.json")], capsys)
    assert code == cli.EXIT_INVALID


def test_sweep_writes_all_figures(tmp_path, capsys):
    code, _, _ = run(["sweep", "--figure", "all", "--out", str(tmp_path)], capsys)
    assert code == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == [f"{f}.csv" for f in cli.FIGURES]
    fig7 = rows((tmp_path / "fig7.csv").read_text())
    assert list(fig7[0]) == ["q", "omega_q_N3", "omega_q_N5", "omega_q_N7", "omega_q_N10"]
    assert len(fig7) == 50
    assert list(rows((tmp_path / "fig6.csv").read_text())[0]) == ["N", "tau_t"]


def test_sweep_jobs_do_not_change_output(tmp_path, capsys):
    run(["sweep", "--figure", "fig2,fig7", "--out", str(tmp_path / "a")], capsys)
    run(["sweep", "--figure", "fig2,fig7", "--out", str(tmp_path / "b"), "--jobs", "4"], capsys)
    for name in ("fig2.csv", "fig7.csv"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_module_entry_point(tmp_path):
    out = tmp_path / "m.csv"
    proc = subprocess.run(
        [sys.executable, "-m", "dualmono", "measure", "--family", "ghz", "--n", "3",
         "--measure", "concurrence", "--out", str(out)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert out.read_text().splitlines()[1].startswith("concurrence,0|rest,1.0")
