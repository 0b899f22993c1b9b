"""Command-line front end: census, homology, Morse, orbit and triangle reports.

Every command emits a results payload plus a list of named checks
(expected vs actual); the exit status is 0 exactly when no check failed.
JSON output is schema-stable: {schema_version, command, params, results,
checks}.  Built complexes are cached on disk as descriptor keys plus
sparse-triplet boundary matrices, keyed by (n, k_cut) and invalidated when
the format or orientation convention changes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import homology, morse, symmetry, triangle
from .complexes import BoundaryMatrix, CellComplex, build_complex, euler_characteristic
from .faces import build_face_lattice, face_count, face_counts_by_type
from .homology import CERT_RANK_AGREE, CERT_SNF

SCHEMA_VERSION = 1
CACHE_FORMAT = 1
ORIENTATION_TAG = "lexmin-outward-v1"
DEFAULT_MAX_CELLS = 20000

ENV_CACHE_DIR = "HALFCUBE_CACHE_DIR"

KNOWN_ROWS = {
    0: (1,),
    1: (1, 1),
    2: (1, 3, 1),
    3: (1, 5, 7, 1),
    4: (1, 7, 17, 15, 1),
    5: (1, 9, 31, 49, 31, 1),
    6: (1, 11, 49, 111, 129, 63, 1),
}


# ---------------------------------------------------------------------------
# Cache


def cache_path(cache_dir: str, n: int, k_cut: int) -> str:
    return os.path.join(cache_dir, f"halfcube-n{n}-k{k_cut}-v{CACHE_FORMAT}.json")


def save_complex(cx: CellComplex, cache_dir: str) -> str:
    payload = {
        "format_version": CACHE_FORMAT,
        "orientation": ORIENTATION_TAG,
        "n": cx.n,
        "k_cut": cx.k_cut,
        "cells": [[list(f.key) for f in dim_cells] for dim_cells in cx.cells],
        "matrices": [
            {
                "degree": m.degree,
                "nrows": m.nrows,
                "ncols": m.ncols,
                "triplets": [list(t) for t in m.entries],
            }
            for m in cx.matrices()
        ],
    }
    os.makedirs(cache_dir, exist_ok=True)
    path = cache_path(cache_dir, cx.n, cx.k_cut)
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(payload, fh, sort_keys=True)
    os.replace(tmp, path)
    return path


def load_complex(cache_dir: str, n: int, k_cut: int) -> CellComplex | None:
    path = cache_path(cache_dir, n, k_cut)
    if not os.path.exists(path):
        return None
    try:
        with open(path) as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return None
    if (
        payload.get("format_version") != CACHE_FORMAT
        or payload.get("orientation") != ORIENTATION_TAG
        or payload.get("n") != n
        or payload.get("k_cut") != k_cut
    ):
        return None
    lattice = build_face_lattice(n)
    try:
        cells = [
            [lattice.index[tuple(key)] for key in dim_cells]
            for dim_cells in payload["cells"]
        ]
    except KeyError:
        return None
    cx = CellComplex(n, k_cut, lattice, cells)
    cx._matrices = [
        BoundaryMatrix(
            m["degree"],
            m["nrows"],
            m["ncols"],
            tuple(tuple(t) for t in m["triplets"]),
        )
        for m in payload["matrices"]
    ]
    return cx


def complexes_equal(a: CellComplex, b: CellComplex) -> bool:
    if (a.n, a.k_cut) != (b.n, b.k_cut):
        return False
    if [[f.key for f in cs] for cs in a.cells] != [[f.key for f in cs] for cs in b.cells]:
        return False
    return [m.entries for m in a.matrices()] == [m.entries for m in b.matrices()]


def get_complex(n: int, k_cut: int, cache_dir: str | None) -> CellComplex:
    if cache_dir:
        cx = load_complex(cache_dir, n, k_cut)
        if cx is not None:
            return cx
    cx = build_complex(n, k_cut)
    cx.matrices()
    if cache_dir:
        save_complex(cx, cache_dir)
    return cx


# ---------------------------------------------------------------------------
# Report plumbing


def check(checks, name, expected, actual):
    checks.append(
        {
            "name": name,
            "expected": expected,
            "actual": actual,
            "status": "pass" if expected == actual else "fail",
        }
    )


def skip(checks, name, expected, reason):
    checks.append({"name": name, "expected": expected, "actual": reason, "status": "skipped"})


def render(report, fmt: str, table_rows, header) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(header)
        w.writerows(table_rows)
        return buf.getvalue()
    widths = [len(h) for h in header]
    rows = [[str(x) for x in row] for row in table_rows]
    for row in rows:
        widths = [max(w, len(x)) for w, x in zip(widths, row)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    for row in rows:
        lines.append("  ".join(x.ljust(w) for x, w in zip(row, widths)))
    failed = [c for c in report["checks"] if c["status"] == "fail"]
    skipped = [c for c in report["checks"] if c["status"] == "skipped"]
    lines.append("")
    lines.append(
        f"checks: {len(report['checks']) - len(failed) - len(skipped)} passed, "
        f"{len(failed)} failed, {len(skipped)} skipped"
    )
    for c in failed:
        lines.append(f"  FAIL {c['name']}: expected {c['expected']}, got {c['actual']}")
    return "\n".join(lines) + "\n"


def exit_code(report) -> int:
    return 1 if any(c["status"] == "fail" for c in report["checks"]) else 0


# ---------------------------------------------------------------------------
# Commands


def run_faces(n: int):
    lattice = build_face_lattice(n)
    counts = lattice.counts()
    by_type = face_counts_by_type(n)
    checks = []
    results = []
    for dim, got in enumerate(counts):
        expected = face_count(n, dim)
        check(checks, f"faces.n={n}.dim={dim}", expected, got)
        simp, hc = by_type[dim]
        built_simp = sum(1 for f in lattice.faces[dim] if f.kind in ("vertex", "simplex"))
        built_hc = len(lattice.faces[dim]) - built_simp
        check(checks, f"faces.n={n}.dim={dim}.split", (simp, hc), (built_simp, built_hc))
        results.append({"dim": dim, "simplex": built_simp, "halfcube": built_hc, "total": got})
    return results, checks


def cmd_faces(args) -> int:
    results, checks = run_faces(args.n)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "faces",
        "params": {"n": args.n},
        "results": results,
        "checks": checks,
    }
    rows = [(r["dim"], r["simplex"], r["halfcube"], r["total"]) for r in results]
    sys.stdout.write(render(report, args.format, rows, ["dim", "simplex", "halfcube", "total"]))
    return exit_code(report)


def run_betti(n, k, cert, cache_dir, max_cells, characters=0):
    checks = []
    predicted = triangle.predicted_betti(n, k)
    result = {"n": n, "k": k, "predicted": predicted, "certificate": None, "betti": None}
    if max_cells is not None and homology._peak_cells(n, k) > max_cells:
        result["status"] = "skipped"
        skip(checks, f"betti.n={n}.k={k}.rank", predicted, "cell budget exceeded")
        return result, checks
    cx = get_complex(n, k, cache_dir)
    certification = CERT_SNF if cert == "snf" else CERT_RANK_AGREE
    prof = homology.homology_of(cx, reduced=True, certification=certification)
    result["betti"] = list(prof.betti)
    result["torsion"] = (
        None if prof.torsion is None else [list(t) for t in prof.torsion]
    )
    result["certificate"] = prof.certificate
    result["status"] = "ok"
    check(checks, f"betti.n={n}.k={k}.rank", predicted, prof.betti[k - 1])
    check(
        checks,
        f"betti.n={n}.k={k}.concentrated",
        True,
        prof.is_concentrated(k - 1),
    )
    check(
        checks,
        f"betti.n={n}.k={k}.euler",
        euler_characteristic(cx),
        sum((-1) ** d * b for d, b in enumerate(prof.betti)) + 1,
    )
    if characters:
        result["character_samples"] = character_samples(n, k, characters)
    return result, checks


def character_samples(n, k, count, seed=0):
    """Traces of the homology action on reproducible random group elements."""
    import random

    rng = random.Random(seed)
    out = []
    for _ in range(count):
        g = symmetry.random_wdn(n, rng)
        mat = symmetry.homology_action(n, k, g)
        out.append(
            {
                "perm": [p + 1 for p in g.perm],
                "signs": list(g.signs),
                "trace": sum(mat[i][i] for i in range(len(mat))),
            }
        )
    return out


def cmd_betti(args) -> int:
    result, checks = run_betti(
        args.n, args.k, args.cert, args.cache_dir, args.max_cells, args.characters
    )
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "betti",
        "params": {"n": args.n, "k": args.k, "cert": args.cert, "characters": args.characters},
        "results": result,
        "checks": checks,
    }
    rows = [
        (
            result["n"],
            result["k"],
            result["predicted"],
            result["betti"][args.k - 1] if result["betti"] else None,
            result["certificate"],
            result["status"],
        )
    ]
    sys.stdout.write(
        render(report, args.format, rows, ["n", "k", "predicted", "computed", "certificate", "status"])
    )
    return exit_code(report)


def run_morse(n, k, cache_dir):
    checks = []
    cx = get_complex(n, k, cache_dir)
    matching = morse.build_matching(cx)
    matching.validate()
    cert = morse.check_acyclic(matching)
    census = morse.unpaired_census(matching)
    chi = euler_characteristic(cx)
    predicted = 1 + (-1) ** (k - 1) * triangle.predicted_betti(n, k)
    check(checks, f"morse.n={n}.k={k}.acyclic", True, cert.acyclic)
    check(checks, f"morse.n={n}.k={k}.unpaired_above_cut", 0, sum(census[k:]))
    alt = sum((-1) ** p * u for p, u in enumerate(census))
    check(checks, f"morse.n={n}.k={k}.euler", chi, alt)
    check(checks, f"morse.n={n}.k={k}.euler_closed_form", predicted, chi)
    result = {
        "n": n,
        "k": k,
        "pairs": matching.pair_count(),
        "acyclic": cert.acyclic,
        "cycle": [list(key) for key in cert.cycle],
        "unpaired": census,
        "euler": chi,
    }
    return result, checks


def cmd_morse(args) -> int:
    result, checks = run_morse(args.n, args.k, args.cache_dir)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "morse",
        "params": {"n": args.n, "k": args.k},
        "results": result,
        "checks": checks,
    }
    rows = [
        (result["n"], result["k"], result["pairs"], result["acyclic"],
         " ".join(map(str, result["unpaired"])), result["euler"])
    ]
    sys.stdout.write(
        render(report, args.format, rows, ["n", "k", "pairs", "acyclic", "unpaired", "euler"])
    )
    return exit_code(report)


def run_orbits(n, extended):
    checks = []
    rep = symmetry.orbits(n, extended=extended)
    expected = symmetry.expected_orbit_profile(n, extended)
    results = []
    for dim, dim_orbits in enumerate(rep.orbits):
        got = sorted((o.kind, o.size) for o in dim_orbits)
        want = sorted(expected[dim])
        check(checks, f"orbits.n={n}.dim={dim}{'.ext' if extended else ''}", want, got)
        for o in dim_orbits:
            results.append(
                {
                    "dim": dim,
                    "kind": o.kind,
                    "size": o.size,
                    "representative": list(o.representative.key),
                }
            )
    return results, checks


def cmd_orbits(args) -> int:
    results, checks = run_orbits(args.n, args.extended)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "orbits",
        "params": {"n": args.n, "extended": args.extended},
        "results": results,
        "checks": checks,
    }
    rows = [(r["dim"], r["kind"], r["size"]) for r in results]
    sys.stdout.write(render(report, args.format, rows, ["dim", "kind", "size"]))
    return exit_code(report)


def run_triangle(rows_max):
    checks = []
    table = triangle.triangle_recurrence(rows_max)
    results = []
    agree_max = max(rows_max, 6)
    table_wide = triangle.triangle_recurrence(agree_max)
    all_agree = True
    for n in range(agree_max + 1):
        for k in range(n + 1):
            v = table_wide.value(n, k)
            if (
                triangle.triangle_alternating(n, k) != v
                or triangle.triangle_positive(n, k) != v
            ):
                all_agree = False
    for k in range(agree_max + 1):
        coeffs = triangle.gf_coefficients(k, agree_max)
        for n in range(agree_max + 1):
            if coeffs[n] != (table_wide.value(n, n - k) if n >= k else 0):
                all_agree = False
    check(checks, f"triangle.routes_agree.n<={agree_max}", True, all_agree)
    for n in range(min(rows_max, 6) + 1):
        check(checks, f"triangle.row.{n}", list(KNOWN_ROWS[n]), list(table.rows[n]))
    check(checks, f"triangle.strehl.n<={agree_max}", True, triangle.strehl_identity_check(agree_max))
    for n, row in enumerate(table.rows):
        results.append({"n": n, "row": list(row)})
    return results, checks


def cmd_triangle(args) -> int:
    results, checks = run_triangle(args.rows)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "triangle",
        "params": {"rows": args.rows},
        "results": results,
        "checks": checks,
    }
    rows = [(r["n"], " ".join(map(str, r["row"]))) for r in results]
    sys.stdout.write(render(report, args.format, rows, ["n", "row"]))
    return exit_code(report)


def _betti_job(job):
    n, k, cert, cache_dir, max_cells = job
    result, checks = run_betti(n, k, cert, cache_dir, max_cells)
    return result, checks


def cmd_verify(args) -> int:
    checks = []
    results = {"faces": [], "triangle": [], "betti": [], "morse": [], "orbits": []}

    for n in range(4, args.n_max + 1):
        res, ch = run_faces(n)
        results["faces"].append({"n": n, "counts": [r["total"] for r in res]})
        checks.extend(ch)

    res, ch = run_triangle(max(args.n_max, 6))
    results["triangle"] = res
    checks.extend(ch)

    jobs = []
    for n in range(4, args.n_max + 1):
        for k in range(3, n + 1):
            cert = "snf" if n <= 6 else "rank"
            jobs.append((n, k, cert, args.cache_dir, args.max_cells))
    if args.threads > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            job_out = list(pool.map(_betti_job, jobs))
    else:
        job_out = [_betti_job(j) for j in jobs]
    for (result, ch) in job_out:
        results["betti"].append(result)
        checks.extend(ch)

    for n in range(4, args.n_max + 1):
        for k in range(3, n + 1):
            result, ch = run_morse(n, k, args.cache_dir)
            results["morse"].append(result)
            checks.extend(ch)

    for n in range(4, args.n_max + 1):
        res, ch = run_orbits(n, extended=False)
        results["orbits"].append({"n": n})
        checks.extend(ch)
        if n == 4:
            res, ch = run_orbits(4, extended=True)
            results["orbits"].append({"n": 4, "extended": True})
            checks.extend(ch)

    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "params": {"n_max": args.n_max, "threads": args.threads},
        "results": results,
        "checks": checks,
    }
    rows = [(c["name"], c["status"]) for c in checks if c["status"] != "pass"] or [
        ("all", "pass")
    ]
    sys.stdout.write(render(report, args.format, rows, ["check", "status"]))
    return exit_code(report)


# ---------------------------------------------------------------------------
# Entry point


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--cache-dir",
        default=os.environ.get(ENV_CACHE_DIR),
        help=f"directory for cached complexes (default: ${ENV_CACHE_DIR})",
    )
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--threads", type=int, default=1, help="parallel (n,k) jobs in verify")
    common.add_argument(
        "--max-cells",
        type=int,
        default=DEFAULT_MAX_CELLS,
        help="refuse homology jobs whose largest chain group exceeds this",
    )

    ap = argparse.ArgumentParser(
        prog="halfcube",
        description="Exact face, homology, Morse, orbit and triangle reports "
        "for the n-dimensional half cube.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("faces", parents=[common],
                       help="per-dimension face census against the closed forms")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_faces)

    p = sub.add_parser("betti", parents=[common], help="homology of one cut complex")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cert", choices=("rank", "snf"), default="snf")
    p.add_argument(
        "--characters",
        type=int,
        default=0,
        metavar="COUNT",
        help="also report traces of the homology action on COUNT sampled elements",
    )
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("morse", parents=[common], help="canonical matching report")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_morse)

    p = sub.add_parser("orbits", parents=[common], help="face orbits under the type-D group")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--extended", action="store_true", help="include the n=4 reflection")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("triangle", parents=[common], help="triangle rows by four routes")
    p.add_argument("--rows", type=int, required=True)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("verify", parents=[common],
                       help="full sweep; exit 0 only if everything matches")
    p.add_argument("--n-max", type=int, default=6)
    p.set_defaults(func=cmd_verify)

    return ap


def validate_args(args) -> None:
    n = getattr(args, "n", None)
    if n is not None and not 4 <= n <= 32:
        raise SystemExit(f"usage error: --n must be in 4..32, got {n}")
    k = getattr(args, "k", None)
    if k is not None:
        if not 3 <= k <= n:
            raise SystemExit(f"usage error: --k must be in 3..{n}, got {k}")
    rows = getattr(args, "rows", None)
    if rows is not None and rows < 0:
        raise SystemExit("usage error: --rows must be nonnegative")
    n_max = getattr(args, "n_max", None)
    if n_max is not None and not 4 <= n_max <= 32:
        raise SystemExit(f"usage error: --n-max must be in 4..32, got {n_max}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    validate_args(args)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
