"""Command-line surface.

Subcommands: analyze (single-state JSON report), werner-scan (CSV sweep of
the generalized Werner family), appendix-verify (closed-form catalog vs
direct numerics), random-scan (ensemble CSV of orbit dimensions and PPT
verdicts), dims (dimension bookkeeping), ball-check (maximal-ball and
absolute-separability diagnostics).

Exit codes: 0 success, 2 input error (unreadable/malformed/non-positive
input, unwritable output, bad arguments), 3 verification mismatch.  CSV
output uses ',' delimiters, '.' decimals, LF line endings, and 17
significant digits so doubles round-trip exactly; identical seeds and
flags give byte-identical files.  ORBIT_ATLAS_SEED supplies the default
seed where one applies.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from .entanglement import (
    absolutely_separable,
    concurrence_mixed,
    cstar,
    entanglement_of_formation,
    entanglement_report,
    maximal_ball_check,
    ppt_check,
)
from .gram import RANK_TOL, gram_direct
from .canonical import canonicalize_mixed_2x2, pure_stratum
from .states import (
    DensityMatrix,
    PureState,
    compose_bloch,
    bloch_to_json,
    bloch_from_json,
    decompose_bloch,
    pure_density,
    random_state,
    state_from_json,
    validate_density,
    werner_state,
)
from .strata import dims_report, weyl_cell
from .submaximal import CASES, verify_cases

__all__ = ["main"]


class _CliError(Exception):
    """Input-contract violation; caught in main and mapped to exit 2."""


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _default_seed() -> int:
    raw = os.environ.get("ORBIT_ATLAS_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError as exc:
        raise _CliError(f"ORBIT_ATLAS_SEED must be an integer, got {raw!r}") from exc


def _read_json(path: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _CliError(f"malformed JSON in {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise _CliError(f"{path}: expected a JSON object at top level")
    return doc


def _load_state(path: str) -> tuple[DensityMatrix, str]:
    """Read a state file; 'matrix' and Bloch ('g') payloads are accepted."""
    doc = _read_json(path)
    try:
        if "matrix" in doc:
            w, fmt = state_from_json(doc), "matrix"
        elif "g" in doc:
            w, fmt = compose_bloch(bloch_from_json(doc)), "bloch"
        else:
            raise ValueError("payload has neither a 'matrix' nor a 'g' key")
        validate_density(w)
    except ValueError as exc:
        raise _CliError(f"{path}: {exc}") from exc
    return w, fmt


def _open_out(path: str):
    try:
        return open(path, "w", encoding="ascii", newline="")
    except OSError as exc:
        raise _CliError(f"cannot write {path}: {exc}") from exc


def _floats(values) -> list[float]:
    return [float(x) for x in np.asarray(values).reshape(-1)]


def _canonical_payload(w: DensityMatrix) -> dict | None:
    if (w.k, w.m) != (2, 2):
        return None
    purity = float(np.trace(w.matrix @ w.matrix).real)
    if purity > 1.0 - 1e-8:
        vals, vecs = np.linalg.eigh(w.matrix)
        amp = vecs[:, -1]
        stratum = pure_stratum(PureState(2, 2, amp / np.linalg.norm(amp)))
        return {
            "type": "pure",
            "theta": stratum.theta,
            "stratum": stratum.label,
            "orbit_dim": stratum.orbit_dim,
        }
    form = canonicalize_mixed_2x2(decompose_bloch(w))
    return {
        "type": "mixed",
        "mu": _floats(form.mu),
        "a": _floats(form.a),
        "b": _floats(form.b),
        "det_sign": int(form.det_sign),
    }


def _cmd_analyze(args) -> int:
    w, fmt = _load_state(args.input)
    f = decompose_bloch(w)
    gram = gram_direct(w, args.tol)
    cell = weyl_cell(np.linalg.eigvalsh(w.matrix))
    ent = entanglement_report(w)
    report = {
        "k": w.k,
        "m": w.m,
        "input": {"path": args.input, "format": fmt},
        "bloch": json.loads(bloch_to_json(f)),
        "gram": {"spectrum": _floats(gram.spectrum), "local_dim": gram.rank},
        "weyl": {
            "spectrum": _floats(cell.spectrum),
            "pattern": list(cell.pattern),
            "label": cell.label,
            "global_dim": cell.global_dim,
        },
        "entanglement": {
            "concurrence": ent.concurrence,
            "eof": ent.eof,
            "ppt_spectrum": _floats(ent.ppt_spectrum),
            "ppt_verdict": ent.ppt_verdict,
            "in_maximal_ball": ent.in_maximal_ball,
            "cstar": ent.cstar,
            "absolutely_separable": ent.absolutely_separable,
        },
        "canonical": _canonical_payload(w),
        "effective_dim": cell.global_dim - gram.rank,
    }
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def _cmd_werner_scan(args) -> int:
    if args.x_steps < 2 or args.theta_steps < 2:
        raise _CliError("step counts must be at least 2")
    xs = np.linspace(0.0, 1.0, args.x_steps)
    thetas = np.linspace(0.0, np.pi / 2.0, args.theta_steps)
    with _open_out(args.out) as fh:
        fh.write("x,theta,concurrence,eof,min_pt_eigenvalue,in_ball\n")
        for x in xs:
            for theta in thetas:
                w = werner_state(float(x), float(theta))
                c = concurrence_mixed(w)
                ppt = ppt_check(w)
                row = [
                    _fmt(x),
                    _fmt(theta),
                    _fmt(c),
                    _fmt(entanglement_of_formation(c)),
                    _fmt(ppt.spectrum[0]),
                    "1" if maximal_ball_check(w) else "0",
                ]
                fh.write(",".join(row) + "\n")
    return 0


def _parse_cases(spec: str) -> list[int]:
    out: set[int] = set()
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        lo, sep, hi = part.partition("-")
        try:
            ids = range(int(lo), int(hi) + 1) if sep else [int(lo)]
        except ValueError as exc:
            raise _CliError(f"bad case selector {part!r}") from exc
        out.update(ids)
    bad = out - set(CASES)
    if bad or not out:
        raise _CliError(f"cases must be a nonempty subset of 1..9, got {spec!r}")
    return sorted(out)


def _cmd_appendix_verify(args) -> int:
    if args.samples < 1:
        raise _CliError("samples must be at least 1")
    case_ids = _parse_cases(args.cases)
    seed = args.seed if args.seed is not None else _default_seed()
    report = verify_cases(case_ids, samples=args.samples, seed=seed, tol=args.tol)
    payload = json.dumps(report, indent=2) + "\n"
    if args.out:
        with _open_out(args.out) as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    for cid in case_ids:
        case = report["cases"][str(cid)]
        if case["all_match"]:
            line = f"case {cid}: ok"
        else:
            line = f"case {cid}: MISMATCH ({', '.join(case['typo_candidates']) or 'flags'})"
        print(line, file=sys.stderr)
    return 0 if report["all_match"] else 3


def _cmd_random_scan(args) -> int:
    if args.k < 2 or args.m < 2:
        raise _CliError("subsystem dimensions must be at least 2")
    if args.count < 1:
        raise _CliError("count must be at least 1")
    seed = args.seed if args.seed is not None else _default_seed()
    rng = np.random.default_rng(seed)
    d_max = args.k**2 + args.m**2 - 2
    hits = 0
    with _open_out(args.out) as fh:
        fh.write("index,local_dim,gram_min,gram_max,ppt_verdict\n")
        for i in range(args.count):
            w = random_state(args.ensemble, args.k, args.m, rng)
            if args.ensemble == "pure":
                w = pure_density(w)
            gram = gram_direct(w, args.tol)
            hits += gram.rank == d_max
            row = [
                str(i),
                str(gram.rank),
                _fmt(gram.spectrum[0]),
                _fmt(gram.spectrum[-1]),
                ppt_check(w).verdict,
            ]
            fh.write(",".join(row) + "\n")
    frac = hits / args.count
    print(
        f"local_dim={d_max} attained by {hits}/{args.count} samples (fraction {frac:.6f})",
        file=sys.stderr,
    )
    return 0


def _cmd_dims(args) -> int:
    if args.k < 2 or args.m < 2:
        raise _CliError("subsystem dimensions must be at least 2")
    rep = dims_report(args.k, args.m)
    json.dump(
        {
            "k": args.k,
            "m": args.m,
            "max_local_dim": rep.max_local_dim,
            "generic_global_dim": rep.generic_global_dim,
            "effective_dim": rep.effective_dim,
        },
        sys.stdout,
        indent=2,
    )
    sys.stdout.write("\n")
    return 0


def _cmd_ball_check(args) -> int:
    if (args.input is None) == (args.spectrum is None):
        raise _CliError("give exactly one of INPUT or --spectrum")
    if args.input is not None:
        w, _ = _load_state(args.input)
        n = w.dim
        purity = float(np.trace(w.matrix @ w.matrix).real)
        in_ball = maximal_ball_check(w)
        spec = np.sort(np.linalg.eigvalsh(w.matrix).clip(0.0, None))[::-1]
        spec = spec / spec.sum()
    else:
        try:
            spec = np.sort(np.array([float(s) for s in args.spectrum.split(",")]))[::-1]
        except ValueError as exc:
            raise _CliError(f"bad --spectrum: {exc}") from exc
        n = spec.size
        if n < 2:
            raise _CliError("--spectrum needs at least 2 eigenvalues")
        if np.any(spec < -1e-12):
            raise _CliError("--spectrum entries must be nonnegative")
        if abs(spec.sum() - 1.0) > 1e-8:
            raise _CliError(f"--spectrum must sum to 1, got {spec.sum()}")
        purity = float(spec @ spec)
        in_ball = purity - 1.0 / n <= 1.0 / (n * (n - 1)) + 1e-12
    out = {
        "n": int(n),
        "purity": purity,
        "in_ball": bool(in_ball),
        "cstar": float(cstar(spec)) if n == 4 else None,
        "absolutely_separable": absolutely_separable(spec, args.tol) if n == 4 else None,
    }
    json.dump(out, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbit-atlas",
        description="Local-orbit geometry and entanglement diagnostics of bipartite states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full JSON report for one state file")
    p.add_argument("input", help="JSON state file ('matrix' or Bloch 'g' payload)")
    p.add_argument("--tol", type=float, default=RANK_TOL, help="Gram rank tolerance")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("werner-scan", help="CSV sweep of the generalized Werner family")
    p.add_argument("--x-steps", type=int, default=101, help="grid points for x in [0, 1]")
    p.add_argument("--theta-steps", type=int, default=91, help="grid points for theta in [0, pi/2]")
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(func=_cmd_werner_scan)

    p = sub.add_parser("appendix-verify", help="closed-form catalog vs direct numerics")
    p.add_argument("--cases", default="1-9", help="case subset, e.g. '1,3,5-7' (default 1-9)")
    p.add_argument("--samples", type=int, default=100, help="parameter points per case")
    p.add_argument("--seed", type=int, default=None, help="sampling seed (default ORBIT_ATLAS_SEED or 0)")
    p.add_argument("--tol", type=float, default=1e-9, help="residual tolerance")
    p.add_argument("--out", default=None, help="write the JSON report here instead of stdout")
    p.set_defaults(func=_cmd_appendix_verify)

    p = sub.add_parser("random-scan", help="CSV of orbit dimensions over a random ensemble")
    p.add_argument("--k", type=int, required=True, help="first subsystem dimension")
    p.add_argument("--m", type=int, required=True, help="second subsystem dimension")
    p.add_argument("--count", type=int, required=True, help="number of samples")
    p.add_argument("--seed", type=int, default=None, help="sampling seed (default ORBIT_ATLAS_SEED or 0)")
    p.add_argument("--ensemble", choices=("mixed", "pure"), default="mixed")
    p.add_argument("--tol", type=float, default=RANK_TOL, help="Gram rank tolerance")
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(func=_cmd_random_scan)

    p = sub.add_parser("dims", help="dimension bookkeeping for a K x M system")
    p.add_argument("k", type=int)
    p.add_argument("m", type=int)
    p.set_defaults(func=_cmd_dims)

    p = sub.add_parser("ball-check", help="maximal-ball and absolute-separability diagnostics")
    p.add_argument("input", nargs="?", default=None, help="JSON state file")
    p.add_argument("--spectrum", default=None, help="comma-separated eigenvalues instead of a file")
    p.add_argument("--tol", type=float, default=1e-12, help="c* threshold for absolute separability")
    p.set_defaults(func=_cmd_ball_check)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
