import csv
import io
import json
import math

import numpy as np
import pytest

from spincorr import cli, oracle
from spincorr.errors import DomainError
from spincorr.families import cavity_decay, werner
from spincorr.measures import analyze
from spincorr.reconcile import CASES, reconcile
from spincorr.states import dump_state
from spincorr.sweep import ENTRY_COLUMNS, SweepSpec, format_csv, run_sweep


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


# -- analyze ----------------------------------------------------------------


def test_analyze_family_text():
    code, out, _ = run("analyze", "--family", "werner", "--x", "0.5")
    assert code == 0
    assert "indicator: 0.5\n" in out
    assert "concurrence: 0.25" in out
    assert "mu: 0.75" in out
    assert "classification: entangled_by_threshold" in out


def test_analyze_json_from_state_file(tmp_path):
    path = tmp_path / "rho.json"
    path.write_text(dump_state(werner(0.2)))
    code, out, _ = run("analyze", "--state", str(path), "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["indicator"] == pytest.approx(0.2)
    assert doc["concurrence"] == 0.0
    assert doc["mu"] is None
    assert doc["n_nonzero"] == 3


def test_analyze_random_seed_is_deterministic():
    first = run("analyze", "--seed", "42", "--rank", "2", "--json")
    assert first[0] == 0
    assert first == run("analyze", "--seed", "42", "--rank", "2", "--json")


def test_exit_code_validation(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"qubits": 1, "matrix": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]}))
    code, _, err = run("analyze", "--state", str(path))
    assert code == 2
    assert "trace" in err


def test_exit_code_parse(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert run("analyze", "--state", str(path))[0] == 3


def test_exit_code_io(tmp_path):
    assert run("analyze", "--state", str(tmp_path / "missing.json"))[0] == 4


def test_exit_code_bad_arguments():
    assert run("analyze", "--family", "rank2", "--x", "0.5")[0] == 2
    with pytest.raises(SystemExit) as info:
        run("analyze")
    assert info.value.code == 2


# -- sweep ------------------------------------------------------------------


def read_csv(text):
    return list(csv.reader(io.StringIO(text)))


def test_sweep_header_and_rows():
    code, out, _ = run("sweep", "--family", "werner", "--steps", "11")
    assert code == 0
    rows = read_csv(out)
    assert rows[0] == ["param"] + ENTRY_COLUMNS + ["N", "I", "C", "mu"]
    assert len(rows) == 12
    assert float(rows[1][0]) == pytest.approx(-1 / 3)
    assert float(rows[-1][0]) == 1.0
    assert float(rows[-1][-1]) == 0.0


def test_sweep_without_mu_column():
    code, out, _ = run("sweep", "--family", "cavity", "--a", "1", "--t-min", "0", "--t-max", "5", "--steps", "6")
    assert code == 0
    assert read_csv(out)[0][-1] == "C"


def test_sweep_rows_match_analyze():
    spec = SweepSpec("cavity", "T", 0.0, 3.0, 31, {"a": 0.6})
    for row in read_csv(format_csv(spec, run_sweep(spec)))[1:]:
        T = float(row[0])
        report = analyze(cavity_decay(0.6, T))
        assert float(row[11]) == pytest.approx(report.indicator, abs=1e-12)
        assert float(row[12]) == pytest.approx(report.concurrence, abs=1e-12)
        assert int(row[10]) == report.scm.n_nonzero
        assert np.allclose([float(v) for v in row[1:10]], report.scm.raw.ravel(), atol=1e-12)


def test_sweep_parallel_output_is_identical(tmp_path):
    paths = []
    for jobs in ("1", "4"):
        path = tmp_path / f"out{jobs}.csv"
        code, _, _ = run("sweep", "--family", "jc", "--theta", str(math.pi / 6), "--steps", "101",
                         "--jobs", jobs, "--csv", str(path))
        assert code == 0
        paths.append(path)
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert b"\r\n" not in paths[0].read_bytes()


def test_sweep_random_ensemble():
    code, out, _ = run("sweep", "--family", "random", "--seed", "3", "--steps", "8")
    assert code == 0
    rows = read_csv(out)
    assert rows[0][0] == "param"
    assert [r[0] for r in rows[1:]] == [str(k) for k in range(8)]
    assert out == run("sweep", "--family", "random", "--seed", "3", "--steps", "8")[1]


def test_sweep_bad_spec():
    assert run("sweep", "--family", "jc", "--steps", "5")[0] == 2
    assert run("sweep", "--family", "random", "--steps", "5")[0] == 2
    with pytest.raises(DomainError):
        SweepSpec("werner", "x", 1.0, 0.0, 5)
    with pytest.raises(DomainError):
        SweepSpec("werner", "theta", 0.0, 1.0, 5)


def test_sweep_unwritable_path(tmp_path):
    target = tmp_path / "missing" / "out.csv"
    assert run("sweep", "--family", "werner", "--steps", "3", "--csv", str(target))[0] == 4


# -- reconcile --------------------------------------------------------------


def test_reconcile_w_state():
    report = reconcile("w_state")
    assert report.value("published") == pytest.approx(5 / 9)
    assert report.value("definitional") == pytest.approx(14 / 27, abs=1e-12)
    assert report.value("oracle") == pytest.approx(14 / 27, abs=1e-12)
    assert report.value("diagnostic") == pytest.approx(5 / 9, abs=1e-12)


def test_reconcile_rank2_boundary():
    report = reconcile("rank2_boundary")
    assert report.value("published") == pytest.approx(1 / 3)
    assert report.value("definitional") == pytest.approx(1.0)
    assert report.value("oracle") == pytest.approx(1.0)


def test_reconcile_jc_general_theta():
    report = reconcile("jc_general_theta", theta=0.4, T=0.9)
    assert report.params == {"theta": 0.4, "T": 0.9}
    assert report.value("diagnostic") == pytest.approx(report.value("published"), abs=1e-12)
    assert report.value("definitional") == pytest.approx(report.value("oracle"), abs=1e-12)


def test_reconcile_ex5():
    report = reconcile("ex5_indicator")
    values = [r.value for r in report.rows]
    assert values[0] == pytest.approx(8 / 27)
    assert values[1] == pytest.approx(10 / 27)
    assert report.value("definitional") == pytest.approx(14 / 27, abs=1e-12)
    assert report.value("oracle") == pytest.approx(oracle.indicator(cavity_decay(1, 0).mat))


def test_reconcile_unknown_case():
    with pytest.raises(DomainError):
        reconcile("nope")


@pytest.mark.parametrize("case", CASES)
def test_reconcile_cli(case):
    code, out, _ = run("reconcile", case)
    assert code == 0
    assert out.startswith(case)
    code, out, _ = run("reconcile", case, "--json")
    assert json.loads(out)["case"] == case
