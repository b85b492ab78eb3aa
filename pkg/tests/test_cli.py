import csv
import io
import json

import wittcoh
from wittcoh import cli
from wittcoh import cochains


def run(args):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(args, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_dims_json_worked_example():
    code, out, _ = run(["dims", "--k", "1", "--n-max", "12", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["k"] == 1
    cells = {(c["n"], c["q"]): c["dim"] for c in payload["cells"]}
    assert cells[12, 2] == 3
    assert cells[12, 1] == 1
    assert (0, 1) not in cells  # no degree-0 cells at minimal index 1


def test_dims_json_roundtrip():
    code, out, _ = run(["dims", "--n-max", "10", "--format", "json"])
    payload = json.loads(out)
    assert json.loads(json.dumps(payload)) == payload


def test_dims_csv_roundtrip():
    code, out, _ = run(["dims", "--n-max", "10", "--format", "csv"])
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "q", "dim"]
    parsed = [(int(n), int(q), int(d)) for n, q, d in rows[1:]]
    code2, out2, _ = run(["dims", "--n-max", "10", "--format", "json"])
    cells = [(c["n"], c["q"], c["dim"]) for c in json.loads(out2)["cells"]]
    assert parsed == cells


def test_dims_zero_degree_no_cells():
    code, out, _ = run(["dims", "--k", "1", "--n-max", "0", "--format", "json"])
    assert code == 0
    assert json.loads(out)["cells"] == []


def test_dims_odd_rows_vanish_at_k0():
    code, out, _ = run(["dims", "--k", "0", "--n-max", "9", "--format", "json"])
    for cell in json.loads(out)["cells"]:
        if cell["n"] % 2:
            assert cell["dim"] == 0


def test_dims_include_negative_degree_for_km1():
    code, out, _ = run(["dims", "--k", "-1", "--n-max", "2", "--format", "json"])
    cells = {(c["n"], c["q"]): c["dim"] for c in json.loads(out)["cells"]}
    assert cells[-1, 1] == 0  # the degree -1 block exists and vanishes


def test_determinism_and_jobs_equivalence():
    base = run(["dims", "--n-max", "14", "--format", "json"])
    again = run(["dims", "--n-max", "14", "--format", "json"])
    parallel = run(["dims", "--n-max", "14", "--format", "json", "--jobs", "3"])
    assert base == again == parallel


def test_poincare_table():
    code, out, _ = run(["poincare", "--n-max", "12"])
    assert code == 0
    line = next(l for l in out.splitlines() if l.strip().startswith("12"))
    assert "t + 3*t^2 + 3*t^3" in line


def test_poincare_json_prediction_for_low_index_absent():
    code, out, _ = run(["poincare", "--k", "0", "--n-max", "6", "--format", "json"])
    payload = json.loads(out)
    assert all(row["predicted"] is None for row in payload["rows"])


def test_basis_json():
    code, out, _ = run(["basis", "--n-max", "12", "--format", "json"])
    payload = json.loads(out)
    cell = next(c for c in payload["cells"] if c["n"] == 12 and c["q"] == 2)
    assert cell["dim"] == 3
    assert [[2, 10]] in cell["representatives"]


def test_extensions_json():
    code, out, _ = run(["extensions", "--n-max", "4", "--format", "json"])
    payload = json.loads(out)
    entries = {(e["n"], e["label"]): e["support"] for e in payload["cocycles"]}
    assert entries[2, "u(0,1)"] == [[0, 2]]
    assert entries[4, "v"] == [[-1, 5], [1, 3]]
    assert len([e for e in payload["cocycles"] if e["n"] == 4]) == 2


def test_conjecture_consistent_run():
    code, out, _ = run(["conjecture", "--n-max", "8"])
    assert code == 0
    assert "conjecture-consistent" in out


def test_verify_tiny_bound_passes():
    code, out, _ = run(["verify", "--n-max", "0"])
    assert code == 0
    assert all(line.startswith(("PASS", " ")) for line in out.splitlines() if line.strip())


def test_verify_small_bound_passes():
    code, out, _ = run(["verify", "--n-max", "10", "--k", "2"])
    assert code == 0


def test_verify_detects_corrupted_coboundary(monkeypatch):
    wittcoh.clear_caches()
    monkeypatch.setattr(cochains, "_corrupted_generator", 9)
    try:
        code, out, _ = run(["verify", "--n-max", "12", "--k", "2"])
        assert code == 1
        assert "FAIL" in out
    finally:
        monkeypatch.setattr(cochains, "_corrupted_generator", None)
        wittcoh.clear_caches()


def test_usage_errors_exit_2():
    assert run(["dims", "--format", "yaml"])[0] == 2
    assert run(["nonsense"])[0] == 2
    code, _, err = run(["dims", "--k", "-3", "--n-max", "4"])
    assert code == 2
    assert "error" in err


def test_validation_rejects_bad_bounds():
    assert run(["dims", "--n-max", "-2"])[0] == 2
    assert run(["dims", "--n-max", "4", "--jobs", "0"])[0] == 2
    assert run(["dims", "--n-max", "4", "--q-max", "0"])[0] == 2
