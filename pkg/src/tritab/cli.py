"""Command-line front end: spectra, characteristic polynomials, character
tables, PLU factors and cross-validation suites as JSON/CSV reports.

Every command prints a single report object::

    {"command": ..., "inputs": ..., "outputs": ..., "checks": [...]}

Reports are deterministic: identical inputs (and ``--seed``) produce
byte-identical output, timings appear only under ``--timing``, and no NaN or
infinity is ever serialized (non-finite values are omitted or reported as
errors).  ``--format csv`` switches the tabular payloads (eigenvalue lists,
polynomial tables, character tables) to CSV with 17 significant digits, which
round-trips doubles exactly; ``plu`` and ``verify`` reports stay JSON.

Exit codes: 0 success, 1 at least one verification check failed, 2 invalid
input, 3 precondition violation (zero subdiagonal, indefinite products, ...).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import oracle, plu, spectra, table_algebra
from .errors import InvalidParameterError, PreconditionError, TritabError
from .table_algebra import CharacterTable
from .tridiag import TridiagonalMatrix, charpoly_coeffs, charpoly_eval, slogdet_recurrence

DEFAULT_TOLERANCE = 1e-8
TOLERANCE_ENV_VAR = "TRITAB_TOLERANCE"
# Coefficient vectors and the dense determinant oracle are only trustworthy
# at modest orders; beyond this the CLI reports evaluations, never tables.
COEFF_EMIT_MAX = 64


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def _plain(obj):
    """Recursively convert to JSON-safe plain Python, rejecting NaN/Inf."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        if not math.isfinite(v):
            raise ValueError("refusing to serialize a non-finite number")
        return v
    if isinstance(obj, np.ndarray):
        return [_plain(v) for v in obj.tolist()]
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def render_json(report) -> str:
    return json.dumps(_plain(report), indent=2, allow_nan=False) + "\n"


def _fmt17(v) -> str:
    return format(float(v), ".17g")


def rows_to_csv(header, rows) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(
            ",".join(str(c) if isinstance(c, (str, int)) else _fmt17(c) for c in row)
        )
    return "\n".join(lines) + "\n"


def character_table_to_csv(table: CharacterTable) -> str:
    header = ["i"] + [f"j{j}" for j in range(table.d + 1)]
    rows = [[i] + list(table.values[i]) for i in range(table.d + 1)]
    return rows_to_csv(header, rows)


def parse_character_table_csv(text: str) -> CharacterTable:
    """Inverse of :func:`character_table_to_csv`; exact for .17g output."""
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise InvalidParameterError("empty character-table CSV")
    rows = []
    for ln in lines[1:]:
        cells = ln.split(",")
        rows.append([float(c) for c in cells[1:]])
    return CharacterTable(np.array(rows))


# ---------------------------------------------------------------------------
# input handling
# ---------------------------------------------------------------------------

def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidParameterError(message)


def _load_matrix(path: str) -> TridiagonalMatrix:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InvalidParameterError(f"cannot read matrix file {path!r}: {exc}")
    except json.JSONDecodeError as exc:
        raise InvalidParameterError(f"matrix file {path!r} is not valid JSON: {exc}")
    _require(isinstance(data, dict), "matrix file must hold a JSON object")
    for key in ("n", "sub", "diag", "sup"):
        _require(key in data, f"matrix file missing key {key!r}")
    n = data["n"]
    _require(isinstance(n, int) and n >= 1, '"n" must be a positive integer')
    for key, length in (("sub", n - 1), ("diag", n), ("sup", n - 1)):
        band = data[key]
        _require(
            isinstance(band, list) and len(band) == length,
            f'"{key}" must be a list of length {length}',
        )
    try:
        return TridiagonalMatrix(sub=data["sub"], diag=data["diag"], sup=data["sup"])
    except ValueError as exc:
        raise InvalidParameterError(f"bad matrix file {path!r}: {exc}")


def _resolve_tolerance(args) -> float:
    tol = args.tolerance
    if tol is None:
        env = os.environ.get(TOLERANCE_ENV_VAR)
        if env is not None:
            try:
                tol = float(env)
            except ValueError:
                raise InvalidParameterError(
                    f"{TOLERANCE_ENV_VAR}={env!r} is not a number"
                )
        else:
            tol = DEFAULT_TOLERANCE
    tol = float(tol)
    _require(math.isfinite(tol) and tol > 0.0, "tolerance must be a positive number")
    return tol


def _parse_points(text: str):
    try:
        pts = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise InvalidParameterError(f"--at expects comma-separated numbers, got {text!r}")
    _require(len(pts) > 0, "--at got an empty point list")
    _require(all(math.isfinite(p) for p in pts), "--at points must be finite")
    return pts


def _rel(a: float, b: float) -> float:
    return abs(a - b) / (1.0 + max(abs(a), abs(b)))


def _check(name: str, passed: bool, residual: float) -> dict:
    return {"name": name, "passed": bool(passed), "residual": float(residual)}


# ---------------------------------------------------------------------------
# parameter families
# ---------------------------------------------------------------------------

@dataclass
class _Family:
    inputs: dict
    matrix: TridiagonalMatrix
    closed_eigs: Optional[Callable[[], np.ndarray]]
    closed_charpoly: Callable[[float], float]
    scale: float  # magnitude of the closed charpoly's leading coefficient


def _build_family(args) -> _Family:
    kind = args.kind
    if kind == "A":
        _require(args.n is not None, "--kind A requires --n")
        n = args.n
        return _Family(
            {"kind": "A", "n": n},
            spectra.make_a(n),
            lambda: spectra.eigs_a(n),
            lambda x: spectra.charpoly_a_eval(n, x),
            1.0,
        )
    if kind == "P":
        _require(args.n is not None and args.a is not None, "--kind P requires --n and --a")
        n, a = args.n, args.a
        return _Family(
            {"kind": "P", "n": n, "a": a},
            spectra.make_p(n, a),
            None,
            lambda x: spectra.charpoly_p_eval(n, a, x),
            math.sqrt(abs(a)) ** n if a else 1.0,
        )
    if kind == "Q":
        _require(
            None not in (args.n, args.a, args.b, args.c),
            "--kind Q requires --n, --a, --b and --c",
        )
        n, a, b, c = args.n, args.a, args.b, args.c
        return _Family(
            {"kind": "Q", "n": n, "a": a, "b": b, "c": c},
            spectra.make_q(n, a, b, c),
            lambda: spectra.eigs_q(n, a, b, c),
            lambda x: spectra.charpoly_q_eval(n, a, b, c, x),
            max(math.sqrt(abs(b * c)) ** n, 1e-300),
        )
    if kind == "classI":
        _require(
            args.d is not None and args.alpha is not None,
            "--kind classI requires --d and --alpha",
        )
        d, alpha = args.d, args.alpha
        spec = table_algebra.class_i_spec(d, alpha)
        return _Family(
            {"kind": "classI", "d": d, "alpha": alpha},
            table_algebra.build_b1(spec),
            lambda: table_algebra.class_i_eigs(d, alpha),
            lambda x: table_algebra.class_i_charpoly_eval(d, alpha, x),
            alpha ** (d + 1),
        )
    if kind == "classII":
        _require(
            None not in (args.d, args.alpha, args.gamma),
            "--kind classII requires --d, --alpha and --gamma",
        )
        d, alpha, gamma = args.d, args.alpha, args.gamma
        spec = table_algebra.class_ii_spec(d, alpha, gamma)
        return _Family(
            {"kind": "classII", "d": d, "alpha": alpha, "gamma": gamma},
            table_algebra.build_b1(spec),
            lambda: table_algebra.class_ii_eigs(d, alpha, gamma),
            lambda x: table_algebra.class_ii_charpoly_eval(d, alpha, gamma, x),
            math.sqrt(alpha * gamma) ** (d + 1),
        )
    raise InvalidParameterError(f"unknown kind {kind!r}")


def _matrix_source(args):
    """Matrix + echo + optional closed charpoly, from --matrix or --kind."""
    if getattr(args, "matrix", None):
        _require(args.kind is None, "give either --matrix or --kind, not both")
        m = _load_matrix(args.matrix)
        return m, {"matrix": args.matrix, "n": m.n}, None
    _require(args.kind is not None, "need a matrix source: --kind or --matrix")
    fam = _build_family(args)
    return fam.matrix, fam.inputs, fam


def _gershgorin_interval(m: TridiagonalMatrix) -> tuple[float, float]:
    lo = float(np.min(m.diag))
    hi = float(np.max(m.diag))
    if m.n > 1:
        pad_lo = np.zeros(m.n)
        pad_lo[:-1] += np.abs(m.sup)
        pad_lo[1:] += np.abs(m.sub)
        lo = float(np.min(m.diag - pad_lo))
        hi = float(np.max(m.diag + pad_lo))
    return lo, hi


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_spectrum(args, tol: float):
    fam = _build_family(args)
    if fam.closed_eigs is not None:
        eigs = np.asarray(fam.closed_eigs(), dtype=np.float64)
    else:
        eigs = oracle.eig_roots(fam.matrix)
    outputs = {"eigenvalues": eigs}
    checks = []
    if args.verify:
        residuals = np.array([abs(fam.closed_charpoly(x)) / fam.scale for x in eigs])
        outputs["charpoly_residuals"] = residuals
        worst = float(residuals.max()) if eigs.size else 0.0
        checks.append(_check("charpoly_root_residual", worst <= tol * max(fam.matrix.n, 1), worst))
    report = {
        "command": "spectrum",
        "inputs": {**fam.inputs, "tolerance": tol},
        "outputs": outputs,
        "checks": checks,
    }
    csv_payload = rows_to_csv(
        ["index", "eigenvalue"], [[k, v] for k, v in enumerate(eigs)]
    )
    return report, csv_payload


def cmd_charpoly(args, tol: float):
    matrix, inputs, fam = _matrix_source(args)
    outputs = {}
    csv_payload = None
    if matrix.n <= COEFF_EMIT_MAX:
        coeffs = charpoly_coeffs(matrix).coeffs
        outputs["coefficients"] = list(coeffs)
        csv_payload = rows_to_csv(
            ["power", "coefficient"], [[k, c] for k, c in enumerate(coeffs)]
        )
    if args.at:
        pts = _parse_points(args.at)
        evaluate = fam.closed_charpoly if fam is not None else (
            lambda x: charpoly_eval(matrix, x)
        )
        values = [evaluate(x) for x in pts]
        _require(
            all(math.isfinite(v) for v in values),
            "characteristic polynomial overflows at the requested points; "
            "reduce |x| or the order",
        )
        outputs["points"] = pts
        outputs["values"] = values
        csv_payload = rows_to_csv(["x", "value"], list(zip(pts, values)))
    _require(outputs, f"order {matrix.n} exceeds {COEFF_EMIT_MAX}: pass --at to evaluate instead")
    checks = []
    if args.verify:
        lo, hi = _gershgorin_interval(matrix)
        span = (hi - lo) or 1.0
        grid = np.linspace(lo - 0.05 * span, hi + 0.05 * span, 21)
        if fam is not None:
            worst = max(
                _rel(fam.closed_charpoly(x), charpoly_eval(matrix, x)) for x in grid
            )
            checks.append(_check("closed_vs_recurrence", worst <= tol, worst))
        else:
            _require(
                matrix.n <= COEFF_EMIT_MAX,
                f"--verify with a matrix file needs n <= {COEFF_EMIT_MAX} "
                "(dense oracle cap)",
            )
            dense = matrix.to_dense()
            eye = np.eye(matrix.n)
            worst = max(
                _rel(charpoly_eval(matrix, x), oracle.dense_det(x * eye - dense))
                for x in grid
            )
            checks.append(_check("recurrence_vs_dense_oracle", worst <= tol, worst))
    report = {
        "command": "charpoly",
        "inputs": {**inputs, "tolerance": tol, **({"at": args.at} if args.at else {})},
        "outputs": outputs,
        "checks": checks,
    }
    return report, csv_payload


def cmd_characters(args, tol: float):
    d, alpha, gamma = args.d, args.alpha, args.gamma
    _require(d is not None and alpha is not None, "characters requires --d and --alpha")
    if args.klass == "I":
        _require(gamma is None, "--gamma only applies to --class II")
        closed = lambda: table_algebra.class_i_characters(d, alpha)
        generic = lambda: table_algebra.character_table(table_algebra.class_i_spec(d, alpha))
        inputs = {"class": "I", "d": d, "alpha": alpha}
    else:
        _require(gamma is not None, "--class II requires --gamma")
        closed = lambda: table_algebra.class_ii_characters(d, alpha, gamma)
        generic = lambda: table_algebra.character_table(
            table_algebra.class_ii_spec(d, alpha, gamma)
        )
        inputs = {"class": "II", "d": d, "alpha": alpha, "gamma": gamma}
    checks = []
    if args.method == "generic":
        table = generic()
    elif args.method == "closed":
        table = closed()
    else:
        table = closed()
        other = generic()
        disc = float(np.max(np.abs(table.values - other.values)))
        scale = 1.0 + float(np.max(np.abs(table.values)))
        outputs_disc = disc
        checks.append(_check("closed_vs_generic", disc <= tol * scale, disc / scale))
    outputs = {"table": table.values, "eigenvalues": table.eigs}
    if args.method == "both":
        outputs["max_discrepancy"] = outputs_disc
    report = {
        "command": "characters",
        "inputs": {**inputs, "method": args.method, "tolerance": tol},
        "outputs": outputs,
        "checks": checks,
    }
    return report, character_table_to_csv(table)


def cmd_plu(args, tol: float):
    matrix, inputs, _fam = _matrix_source(args)
    factors = plu.plu_factor(matrix)
    recon = plu.reconstruction_residual(matrix, factors)
    sup_norm = max(
        float(np.max(np.abs(matrix.diag))),
        float(np.max(np.abs(matrix.sub))),
        float(np.max(np.abs(matrix.sup))),
    )
    sign_p, log_p = plu.slogdet_via_plu(matrix)
    sign_r, log_r = slogdet_recurrence(matrix)
    outputs = {
        "n": matrix.n,
        "perm": list(factors.perm),
        "lrow": factors.lrow,
        "ucorner": factors.ucorner,
        "reconstruction_residual": recon,
        "matrix_sup_norm": sup_norm,
        "slogdet_plu": {"sign": sign_p, "log_abs_det": None if sign_p == 0.0 else log_p},
        "slogdet_recurrence": {
            "sign": sign_r,
            "log_abs_det": None if sign_r == 0.0 else log_r,
        },
    }
    det = plu.det_via_plu(matrix)
    if math.isfinite(det):
        outputs["det"] = det
    checks = []
    if args.verify:
        growth = max(1.0, float(np.max(np.abs(factors.lrow))))
        ratio = recon / (sup_norm * growth) if sup_norm else recon
        checks.append(_check("reconstruction_conditioned", ratio <= tol, ratio))
        if sign_p == sign_r == 0.0:
            dres = 0.0
        elif sign_p != sign_r:
            dres = math.inf
        else:
            dres = abs(log_p - log_r) / (1.0 + abs(log_r))
        checks.append(_check("det_agreement", dres <= tol, min(dres, 1e308)))
    report = {
        "command": "plu",
        "inputs": {**inputs, "tolerance": tol},
        "outputs": outputs,
        "checks": checks,
    }
    return report, None


# ---------------------------------------------------------------------------
# verify suites
# ---------------------------------------------------------------------------

def _suite_spectra(max_n: int, seed: int, tol: float):
    checks = []
    worst = 0.0
    for n in range(1, max_n + 1):
        diff = np.max(np.abs(spectra.eigs_a(n) - oracle.eig_roots(spectra.make_a(n))))
        worst = max(worst, float(diff))
    checks.append(_check("eigs_A_vs_oracle", worst <= tol, worst))

    rng = np.random.default_rng(seed)
    worst_q = 0.0
    for _ in range(20):
        n = int(rng.integers(1, max_n + 1))
        a = float(rng.uniform(-3.0, 3.0))
        sgn = 1.0 if rng.uniform() < 0.5 else -1.0
        b = sgn * float(rng.uniform(0.1, 3.0))
        c = sgn * float(rng.uniform(0.1, 3.0))
        diff = np.max(
            np.abs(spectra.eigs_q(n, a, b, c) - oracle.eig_roots(spectra.make_q(n, a, b, c)))
        )
        worst_q = max(worst_q, float(diff) / (1.0 + math.sqrt(b * c)))
    checks.append(_check("eigs_Q_vs_oracle", worst_q <= tol, worst_q))

    orders = [n for n in (1, 2, 3, 5, 8, 13, 21, 34, 55) if n <= min(max_n, COEFF_EMIT_MAX)]
    for name, make, closed, lo, hi in (
        ("A", spectra.make_a, spectra.charpoly_a_eval, -2.5, 2.5),
        (
            "P",
            lambda n: spectra.make_p(n, 2.0),
            lambda n, x: spectra.charpoly_p_eval(n, 2.0, x),
            -3.5,
            3.5,
        ),
        (
            "Q",
            lambda n: spectra.make_q(n, 1.0, 2.0, 3.0),
            lambda n, x: spectra.charpoly_q_eval(n, 1.0, 2.0, 3.0, x),
            -5.0,
            7.0,
        ),
    ):
        worst_c = 0.0
        for n in orders:
            m = make(n)
            for x in np.linspace(lo, hi, 25):
                worst_c = max(worst_c, _rel(closed(n, float(x)), charpoly_eval(m, float(x))))
        checks.append(_check(f"charpoly_identity_{name}", worst_c <= tol, worst_c))
    return checks


def _suite_characters(max_d: int, tol: float):
    checks = []
    worst_i = trace_i = 0.0
    for d in range(2, max_d + 1):
        for alpha in (0.5, 1.0, 2.0):
            closed = table_algebra.class_i_characters(d, alpha)
            generic = table_algebra.character_table(table_algebra.class_i_spec(d, alpha))
            scale = 1.0 + float(np.max(np.abs(closed.values)))
            worst_i = max(
                worst_i, float(np.max(np.abs(closed.values - generic.values))) / scale
            )
            trace_i = max(trace_i, abs(float(np.sum(closed.eigs)) - alpha) / (1.0 + alpha))
    checks.append(_check("classI_closed_vs_generic", worst_i <= tol, worst_i))
    checks.append(_check("classI_trace", trace_i <= tol, trace_i))

    worst_ii = trace_ii = sym_ii = 0.0
    for d in range(2, max_d + 1):
        for alpha, gamma in ((0.5, 2.0), (1.0, 1.0), (2.0, 0.5), (2.0, 2.0)):
            closed = table_algebra.class_ii_characters(d, alpha, gamma)
            generic = table_algebra.character_table(
                table_algebra.class_ii_spec(d, alpha, gamma)
            )
            scale = 1.0 + float(np.max(np.abs(closed.values)))
            worst_ii = max(
                worst_ii, float(np.max(np.abs(closed.values - generic.values))) / scale
            )
            eigs = closed.eigs
            trace_ii = max(trace_ii, abs(float(np.sum(eigs))))
            sym_ii = max(sym_ii, float(np.max(np.abs(eigs + eigs[::-1]))))
    checks.append(_check("classII_closed_vs_generic", worst_ii <= tol, worst_ii))
    checks.append(_check("classII_trace", trace_ii <= tol, trace_ii))
    checks.append(_check("classII_spectrum_symmetry", sym_ii <= tol, sym_ii))
    return checks


def _random_plu_matrix(rng, n: int) -> TridiagonalMatrix:
    sub = rng.uniform(0.1, 5.0, n - 1) * rng.choice((-1.0, 1.0), n - 1)
    return TridiagonalMatrix(
        sub=sub, diag=rng.uniform(-5.0, 5.0, n), sup=rng.uniform(-5.0, 5.0, n - 1)
    )


def _suite_plu(max_n: int, seed: int, tol: float):
    checks = []
    rng = np.random.default_rng(seed)
    small_hi = min(max_n, 12)
    orders = list(range(3, small_hi + 1))
    orders += [int(rng.integers(3, max_n + 1)) for _ in range(110)]
    worst_det = worst_cond = worst_small = 0.0
    for n in orders:
        m = _random_plu_matrix(rng, n)
        f = plu.plu_factor(m)
        sign_p, log_p = plu.slogdet_via_plu(m)
        sign_r, log_r = slogdet_recurrence(m)
        if sign_p != sign_r:
            worst_det = math.inf
        elif sign_p != 0.0:
            worst_det = max(worst_det, abs(log_p - log_r) / (1.0 + abs(log_r)))
        recon = plu.reconstruction_residual(m, f)
        sup_norm = max(
            float(np.max(np.abs(m.diag))),
            float(np.max(np.abs(m.sub))),
            float(np.max(np.abs(m.sup))),
        )
        growth = max(1.0, float(np.max(np.abs(f.lrow))))
        worst_cond = max(worst_cond, recon / (sup_norm * growth))
        if n <= 12:
            worst_small = max(worst_small, recon / sup_norm)
    checks.append(_check("det_agreement_slog", worst_det <= tol, min(worst_det, 1e308)))
    checks.append(
        _check("reconstruction_conditioned", worst_cond <= tol, worst_cond)
    )
    checks.append(_check("reconstruction_small_n", worst_small <= tol, worst_small))
    return checks


def cmd_verify(args, tol: float):
    suite = args.suite
    max_d = args.max_d if args.max_d is not None else 12
    _require(max_d >= 2, "--max-d must be >= 2")
    checks = []
    if suite in ("all", "spectra"):
        max_n = args.max_n if args.max_n is not None else 50
        _require(max_n >= 1, "--max-n must be >= 1")
        checks += _suite_spectra(max_n, args.seed, tol)
    if suite in ("all", "characters"):
        checks += _suite_characters(max_d, tol)
    if suite in ("all", "plu"):
        max_n = args.max_n if args.max_n is not None else 200
        _require(max_n >= 3, "--max-n must be >= 3 for the plu suite")
        checks += _suite_plu(max_n, args.seed, tol)
    report = {
        "command": "verify",
        "inputs": {
            "suite": suite,
            "max_d": max_d,
            "max_n": args.max_n,
            "seed": args.seed,
            "tolerance": tol,
        },
        "outputs": {
            "num_checks": len(checks),
            "failed": [c["name"] for c in checks if not c["passed"]],
        },
        "checks": checks,
    }
    return report, None


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------

def _add_family_flags(parser, with_matrix: bool):
    kinds = ("A", "P", "Q", "classI", "classII")
    parser.add_argument("--kind", choices=kinds, default=None, help="matrix family")
    parser.add_argument("--n", type=int, help="order (kinds A, P, Q)")
    parser.add_argument("--a", type=float, help="parameter a (kinds P, Q)")
    parser.add_argument("--b", type=float, help="parameter b (kind Q)")
    parser.add_argument("--c", type=float, help="parameter c (kind Q)")
    parser.add_argument("--d", type=int, help="dimension d (kinds classI, classII)")
    parser.add_argument("--alpha", type=float, help="alpha (kinds classI, classII)")
    parser.add_argument("--gamma", type=float, help="gamma (kind classII)")
    if with_matrix:
        parser.add_argument(
            "--matrix",
            metavar="PATH",
            help='JSON matrix file {"n":..., "sub":[...], "diag":[...], "sup":[...]}',
        )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", metavar="PATH", help="write the report to a file")
    common.add_argument("--seed", type=int, default=0, help="seed for random corpora")
    common.add_argument(
        "--tolerance",
        type=float,
        default=None,
        help=f"check tolerance (default {DEFAULT_TOLERANCE}, env {TOLERANCE_ENV_VAR})",
    )
    common.add_argument(
        "--timing", action="store_true", help="include elapsed_ms in the report"
    )

    parser = argparse.ArgumentParser(
        prog="tritab",
        description="Spectra, characteristic polynomials, character tables and "
        "cyclic-pivot PLU factors of structured tridiagonal matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", parents=[common], help="eigenvalues, descending")
    _add_family_flags(sp, with_matrix=False)
    sp.add_argument("--verify", action="store_true", help="check charpoly residuals")

    cp = sub.add_parser(
        "charpoly", parents=[common], help="characteristic polynomial det(xI - M)"
    )
    _add_family_flags(cp, with_matrix=True)
    cp.add_argument("--at", metavar="X1,X2,...", help="evaluate at the given points")
    cp.add_argument(
        "--verify", action="store_true", help="cross-check against an independent route"
    )

    ch = sub.add_parser(
        "characters", parents=[common], help="P-polynomial table algebra characters"
    )
    ch.add_argument("--class", dest="klass", required=True, choices=("I", "II"))
    ch.add_argument("--d", type=int, required=True)
    ch.add_argument("--alpha", type=float, required=True)
    ch.add_argument("--gamma", type=float)
    ch.add_argument(
        "--method",
        choices=("closed", "generic", "both"),
        default="closed",
        help="closed form, the generic recurrence pipeline, or both (reports "
        "the max entrywise discrepancy)",
    )

    pl = sub.add_parser(
        "plu", parents=[common], help="cyclic-pivot PLU factors and determinant"
    )
    _add_family_flags(pl, with_matrix=True)
    pl.add_argument(
        "--verify", action="store_true", help="check reconstruction and determinants"
    )

    vf = sub.add_parser("verify", parents=[common], help="run cross-validation suites")
    vf.add_argument(
        "--suite", choices=("all", "spectra", "characters", "plu"), default="all"
    )
    vf.add_argument("--max-d", type=int, default=None, help="largest d (characters)")
    vf.add_argument("--max-n", type=int, default=None, help="largest order (spectra, plu)")
    return parser


_DISPATCH = {
    "spectrum": cmd_spectrum,
    "charpoly": cmd_charpoly,
    "characters": cmd_characters,
    "plu": cmd_plu,
    "verify": cmd_verify,
}


def _write_output(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _print_error(exc: Exception) -> None:
    payload = {"error": {"type": type(exc).__name__, "message": str(exc)}}
    index = getattr(exc, "index", None)
    if index is not None:
        payload["error"]["index"] = index
    sys.stdout.write(render_json(payload))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        tol = _resolve_tolerance(args)
        report, csv_payload = _DISPATCH[args.command](args, tol)
    except InvalidParameterError as exc:
        _print_error(exc)
        return 2
    except PreconditionError as exc:
        _print_error(exc)
        return 3
    except (TritabError, ValueError) as exc:
        _print_error(exc)
        return 2
    if args.timing:
        report["elapsed_ms"] = (time.perf_counter() - start) * 1000.0
    if args.format == "csv" and csv_payload is not None:
        _write_output(csv_payload, args.out)
    else:
        _write_output(render_json(report), args.out)
    return 1 if any(not c["passed"] for c in report["checks"]) else 0


if __name__ == "__main__":
    raise SystemExit(main())
