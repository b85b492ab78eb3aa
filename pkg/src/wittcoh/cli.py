"""Command-line front end.

Subcommands: dims, poincare, basis, verify, conjecture, extensions.
Data goes to stdout; logs and usage errors to stderr.  Exit codes:
0 success (including conjecture evidence either way), 1 theorem violation or
internal inconsistency between the conjecture reductions, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .cochains import graded_slice, max_length
from .cohomology import (
    central_extension_basis,
    cohomology_basis,
    cohomology_dim,
    poincare_computed,
    poincare_predicted,
    poly_str,
)
from .conjecture import scan
from .verify import run_suites


@dataclass
class RunConfig:
    command: str
    k: int
    n_max: int | None
    q_max: int | None
    fmt: str
    jobs: int
    seed: int


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wittcoh",
        description="Graded GF(2) cohomology of the Lie algebras of polynomial "
        "vector fields on the line: dimension tables, bases, and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, default_k: int = 1) -> None:
        p.add_argument("--k", type=int, default=default_k, help="minimal generator index (>= -1)")
        p.add_argument("--n-max", type=int, default=None, help="largest degree")
        p.add_argument("--q-max", type=int, default=None, help="largest cochain length")
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")
        p.add_argument("--jobs", type=int, default=1, help="worker threads")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    for name, help_text, default_k in (
        ("dims", "brute-force dimension table of the graded cohomology", 1),
        ("poincare", "per-degree dimension polynomials (with the combinatorial prediction for k >= 1)", 1),
        ("basis", "cohomology representatives per degree and length", 1),
        ("verify", "run every verification suite", 4),
        ("conjecture", "evidence scan for the presentation of the index-1 ring", 1),
        ("extensions", "closed 2-cochains classifying the central extensions (k = -1)", -1),
    ):
        add_common(sub.add_parser(name, help=help_text), default_k)
    return parser


def _validate(cfg: RunConfig) -> str | None:
    if cfg.k < -1:
        return "--k must be >= -1"
    if cfg.n_max is not None and cfg.n_max < 0:
        return "--n-max must be >= 0"
    if cfg.q_max is not None and cfg.q_max < 1:
        return "--q-max must be >= 1"
    if cfg.jobs < 1:
        return "--jobs must be >= 1"
    return None


def _degree_range(cfg: RunConfig) -> range:
    lo = cfg.k if cfg.k < 0 else 0
    return range(lo, (cfg.n_max if cfg.n_max is not None else 20) + 1)


def _cells(cfg: RunConfig) -> list[tuple[int, int]]:
    out = []
    for n in _degree_range(cfg):
        top = max_length(cfg.k, n)
        if cfg.q_max is not None:
            top = min(top, cfg.q_max)
        for q in range(1, top + 1):
            if graded_slice(cfg.k, n, q).dim:
                out.append((n, q))
    return out


def _pool_map(cfg: RunConfig, fn, items):
    if cfg.jobs == 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
        return list(pool.map(fn, items))


def _emit_rows(cfg: RunConfig, stdout, header: list[str], rows: list[list], json_payload) -> None:
    if cfg.fmt == "json":
        print(json.dumps(json_payload), file=stdout)
    elif cfg.fmt == "csv":
        writer = csv.writer(stdout, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    else:
        widths = [
            max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows else len(str(h))
            for i, h in enumerate(header)
        ]
        print("  ".join(h.rjust(w) for h, w in zip(header, widths)), file=stdout)
        for r in rows:
            print("  ".join(str(v).rjust(w) for v, w in zip(r, widths)), file=stdout)


def cmd_dims(cfg: RunConfig, stdout, stderr) -> int:
    cells = _cells(cfg)
    dims = _pool_map(cfg, lambda cell: cohomology_dim(cfg.k, cell[0], cell[1]), cells)
    rows = [[n, q, d] for (n, q), d in zip(cells, dims)]
    payload = {"k": cfg.k, "cells": [{"n": n, "q": q, "dim": d} for n, q, d in rows]}
    _emit_rows(cfg, stdout, ["n", "q", "dim"], rows, payload)
    return 0


def cmd_poincare(cfg: RunConfig, stdout, stderr) -> int:
    degrees = [n for n in _degree_range(cfg)]
    computed = _pool_map(cfg, lambda n: poincare_computed(n, cfg.k), degrees)
    predicted = [poincare_predicted(n, cfg.k) if cfg.k >= 1 else None for n in degrees]
    rows = []
    for n, comp, pred in zip(degrees, computed, predicted):
        rows.append([n, poly_str(comp), poly_str(pred) if pred is not None else "-"])
    payload = {
        "k": cfg.k,
        "rows": [
            {
                "n": n,
                "computed": [[q, c] for q, c in sorted(comp.items())],
                "predicted": [[q, c] for q, c in sorted(pred.items())] if pred is not None else None,
            }
            for n, comp, pred in zip(degrees, computed, predicted)
        ],
    }
    _emit_rows(cfg, stdout, ["n", "computed", "predicted"], rows, payload)
    return 0


def cmd_basis(cfg: RunConfig, stdout, stderr) -> int:
    cells = _cells(cfg)
    bases = _pool_map(cfg, lambda cell: cohomology_basis(cfg.k, cell[0], cell[1]), cells)
    rows = []
    entries = []
    for (n, q), basis in zip(cells, bases):
        if basis.dim == 0:
            continue
        reps = [[list(mono) for mono in rep.support()] for rep in basis.representatives]
        entries.append({"n": n, "q": q, "dim": basis.dim, "representatives": reps})
        pretty = "; ".join(str(rep) for rep in basis.representatives)
        rows.append([n, q, basis.dim, pretty])
    payload = {"k": cfg.k, "cells": entries}
    _emit_rows(cfg, stdout, ["n", "q", "dim", "representatives"], rows, payload)
    return 0


def cmd_verify(cfg: RunConfig, stdout, stderr) -> int:
    results = run_suites(n_max=cfg.n_max, k_bound=max(cfg.k, 1), seed=cfg.seed)
    for res in results:
        print(res.summary(), file=stdout)
        for line in res.failures[:10]:
            print(f"    {line}", file=stdout)
        for line in res.notes[:10]:
            print(f"    note: {line}", file=stdout)
    return 0 if all(r.passed for r in results) else 1


def cmd_conjecture(cfg: RunConfig, stdout, stderr) -> int:
    n_max = cfg.n_max if cfg.n_max is not None else 24
    report = scan(n_max)
    findings = report.findings()
    rows = [
        ["hilbert", len(report.hilbert_cells), sum(1 for c in report.hilbert_cells if not c.equal)],
        ["counting", len(report.counting_cells), sum(1 for c in report.counting_cells if not c.equal)],
    ]
    payload = {
        "n_max": n_max,
        "hilbert": {"cells": len(report.hilbert_cells), "mismatches": rows[0][2]},
        "counting": {"cells": len(report.counting_cells), "mismatches": rows[1][2]},
        "findings": findings,
        "consistent": report.hilbert_ok and report.counting_ok,
    }
    _emit_rows(cfg, stdout, ["reduction", "cells", "mismatches"], rows, payload)
    if cfg.fmt != "json":
        for line in findings:
            print(line, file=stdout)
        if report.hilbert_ok and report.counting_ok:
            print(f"conjecture-consistent (n <= {n_max})", file=stdout)
        else:
            print("counterexample found", file=stdout)
    if not report.internally_consistent:
        print("internal inconsistency: the two reductions disagree", file=stderr)
        return 1
    return 0


def cmd_extensions(cfg: RunConfig, stdout, stderr) -> int:
    n_max = cfg.n_max if cfg.n_max is not None else 20
    entries = []
    rows = []
    for n in range(2, n_max + 1, 2):
        for label, c in central_extension_basis(n):
            support = [list(mono) for mono in c.support()]
            entries.append({"n": n, "label": label, "support": support})
            rows.append([n, label, " ".join(f"[{a},{b}]" for a, b in support)])
    payload = {"cocycles": entries}
    _emit_rows(cfg, stdout, ["n", "label", "support"], rows, payload)
    return 0


_COMMANDS = {
    "dims": cmd_dims,
    "poincare": cmd_poincare,
    "basis": cmd_basis,
    "verify": cmd_verify,
    "conjecture": cmd_conjecture,
    "extensions": cmd_extensions,
}


def main(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = RunConfig(
        command=args.command,
        k=args.k,
        n_max=args.n_max,
        q_max=args.q_max,
        fmt=args.format,
        jobs=args.jobs,
        seed=args.seed,
    )
    problem = _validate(cfg)
    if problem is not None:
        print(f"error: {problem}", file=stderr)
        return 2
    return _COMMANDS[cfg.command](cfg, stdout, stderr)


if __name__ == "__main__":
    raise SystemExit(main())
