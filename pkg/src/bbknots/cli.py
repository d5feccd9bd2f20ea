"""Command line front end.

Every subcommand prints a short aligned table followed by one JSON line (the
machine block, tagged with ``schema``).  Exit codes: 0 success, 1 domain error
(bad fraction, bad tangle list, guard trip), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import braidcensus as bc
from . import elastic as el
from . import montesinos as mt
from . import rational as rt

SCHEMA = "bbknots.report/1"


class DomainError(Exception):
    pass


# engines -> machine blocks ----------------------------------------------------


def two_bridge_report(alpha: int, beta: int) -> dict:
    link = rt.RationalLink(alpha, beta)
    cf = rt.standard_cf(link)
    oriented = [
        {
            "orientation": o.value,
            "signed_vector": list(rt.orient_and_sign(cf, o).entries),
            "braid_index": rt.braid_index_oriented(rt.orient_and_sign(cf, o)),
        }
        for o in rt.orientations(cf)
    ]
    return {
        "command": "two-bridge",
        "alpha": alpha,
        "beta": beta,
        "continued_fraction": list(cf),
        "components": rt.component_count(cf),
        "oriented": oriented,
        "braid_index": rt.braid_index_unoriented(link),
        "bridge_index": 2,
        "bb": rt.is_bb_2bridge(link),
    }


def montesinos_report(m: mt.MontesinosLink) -> dict:
    out = {
        "command": "montesinos",
        "tangles": [str(t) for t in m.tangles],
        "delta": m.delta,
        "s": m.s,
        "components": mt.components(m),
        "crossings": mt.crossing_count(m),
        "alternating": m.alternating,
        "bridge_index": mt.bridge_index(m),
    }
    if m.alternating:
        pos = m if m.positive else m.mirror()
        rows = []
        for o in mt.orientations(m):
            pa = mt.classify(pos, o)
            rows.append(
                {
                    "bits": [int(b) for b in o.bits],
                    "class": pa.cls.value,
                    "parities": list(pa.parities),
                    "braid_index": mt.braid_index_oriented(m, o),
                    "seifert_circles": mt.seifert_circle_count(m, o),
                }
            )
        res = mt.is_bb_alternating(m)
        out.update(
            orientations=rows,
            braid_index=mt.braid_index_unoriented(m),
            bb=res.bb,
            witness=None if res.witness is None else [int(b) for b in res.witness.bits],
        )
    elif m.delta == 0:
        out["verdict"] = mt.is_bb_nonalternating_sufficient(m).value
    else:
        out["verdict"] = mt.Verdict.NO_VERDICT.value
    return out


def census_report(r: bc.CensusReport) -> dict:
    d = json.loads(r.to_json())
    d["command"] = "census"
    return d


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"malformed fraction {text!r}") from None


def _montesinos_from_args(tangles: str, delta: int) -> mt.MontesinosLink:
    fracs = [_parse_fraction(t) for t in tangles.split(",") if t.strip()]
    return mt.MontesinosLink.from_fractions(fracs, delta)


def classify_line(line: str) -> dict:
    """``two-bridge ALPHA BETA`` or ``montesinos F1,F2,... [delta=D]``."""
    kind, _, rest = line.strip().partition(" ")
    if kind == "two-bridge":
        parts = rest.replace(",", " ").split()
        if len(parts) != 2:
            raise DomainError("two-bridge lines need ALPHA BETA")
        return two_bridge_report(int(parts[0]), int(parts[1]))
    if kind == "montesinos":
        m = mt.parse_tangles(rest)
        return montesinos_report(mt.MontesinosLink.from_fractions(m.tangles, m.delta))
    raise DomainError(f"unknown spec kind {kind!r}; use 'two-bridge' or 'montesinos'")


def batch_classify(path) -> list[dict]:
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc.strerror}") from None
    records = []
    for lineno, line in enumerate(lines, 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            rec = {"line": lineno, "ok": True, **classify_line(line)}
        except (DomainError, ValueError, ArithmeticError) as exc:
            rec = {"line": lineno, "ok": False, "input": line, "error": str(exc)}
        records.append(rec)
    return records


def export_curve(curve: el.PolygonalCurve, path, fmt: str) -> None:
    try:
        if fmt == "obj":
            el.write_obj(curve, path)
        elif fmt == "csv":
            el.write_csv(curve, path)
        else:
            raise DomainError(f"unknown curve format {fmt!r}")
    except OSError as exc:
        raise DomainError(f"cannot write {path}: {exc.strerror}") from None


def _init_spec(args) -> el.TorusBraidInit:
    if bool(args.torus) == bool(args.word):
        raise DomainError("give exactly one of --torus P,Q and --word")
    torus = tuple(int(v) for v in args.torus.split(",")) if args.torus else None
    if torus is not None and len(torus) != 2:
        raise DomainError("--torus needs two integers P,Q")
    return el.TorusBraidInit(rho=args.rho, torus=torus, word=args.word, n=args.n)


def _bridge_for(spec: el.TorusBraidInit) -> int | None:
    if spec.torus is not None:
        return min(abs(v) for v in spec.torus)
    return None


def _jitter(curve: el.PolygonalCurve, amount: float, seed: int) -> el.PolygonalCurve:
    if amount <= 0:
        return curve
    rng = np.random.default_rng(seed)
    return el.PolygonalCurve(curve.vertices + amount / curve.n * rng.standard_normal(curve.vertices.shape))


# rendering ---------------------------------------------------------------------


def _table(rows: list[tuple[str, object]]) -> str:
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def render(report: dict) -> str:
    rows = [(k, v) for k, v in report.items() if k not in ("schema", "orientations", "oriented", "records")]
    text = _table([(k, json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in rows])
    for key in ("oriented", "orientations"):
        for r in report.get(key, []):
            text += "\n  " + "  ".join(f"{k}={json.dumps(v)}" for k, v in r.items())
    return text


# argument parsing ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bbknots", description=__doc__.splitlines()[0])
    p.add_argument("--out", help="also write the machine block(s) to this file")
    p.add_argument("--format", choices=("both", "json", "text"), default="both")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("two-bridge", help="2-bridge link B(alpha, beta)")
    s.add_argument("--alpha", type=int, required=True)
    s.add_argument("--beta", type=int, required=True)

    s = sub.add_parser("montesinos", help="Montesinos link from a tangle list")
    s.add_argument("--tangles", required=True, help="comma separated fractions, e.g. 1/2,1/2,-2/3")
    s.add_argument("--delta", type=int, default=0)

    s = sub.add_parser("census", help="alternating 3-braid census")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--to", type=int, help="run every n up to this value")
    s.add_argument("--max-n", type=int, default=24)
    s.add_argument("--workers", type=int, default=None)

    s = sub.add_parser("polyhedron", help="Conway polyhedron (sigma_1 sigma_2^-1)^k")
    s.add_argument("--k", type=int, required=True)

    s = sub.add_parser("conway-algebraic", help="bracket form [(a1;b1)(a2;b2)] and its variants")
    for name in ("a1", "b1", "a2", "b2"):
        s.add_argument(f"--{name}", type=int, required=True)
    s.add_argument("--variant", choices=sorted(mt.CONWAY_VARIANTS), default="plain")

    s = sub.add_parser("simulate", help="minimize bending energy plus theta * ropelength")
    s.add_argument("--torus", help="P,Q")
    s.add_argument("--word", help="braid word in a (sigma_1) and B (sigma_2^-1)")
    s.add_argument("--rho", type=float, default=0.3)
    s.add_argument("--n", type=int, default=128)
    s.add_argument("--config", help="key = value file of simulation parameters")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--jitter", type=float, default=0.0, help="random vertex noise, in units of the edge length")
    s.add_argument("--out-dir", help="write final curve (OBJ, CSV) and energy log here")

    s = sub.add_parser("classify", help="batch classification, one spec per line")
    s.add_argument("--input", required=True)

    s = sub.add_parser("export-curve", help="write an initial curve as OBJ or CSV")
    s.add_argument("--torus", help="P,Q")
    s.add_argument("--word")
    s.add_argument("--rho", type=float, default=0.3)
    s.add_argument("--n", type=int, default=128)
    s.add_argument("--curve-format", choices=("obj", "csv"), default="obj")
    s.add_argument("--path", required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--jitter", type=float, default=0.0)
    return p


def _dispatch(args) -> dict | list[dict]:
    if args.command == "two-bridge":
        return two_bridge_report(args.alpha, args.beta)
    if args.command == "montesinos":
        return montesinos_report(_montesinos_from_args(args.tangles, args.delta))
    if args.command == "census":
        last = args.to or args.n
        reports = [bc.census(n, max_n=args.max_n, workers=args.workers) for n in range(args.n, last + 1)]
        out = [census_report(r) for r in reports]
        if len(reports) >= 5:
            out.append({"command": "growth-fit", "n": [r.n for r in reports], "slope": bc.growth_fit(reports)})
        return out if len(out) > 1 else out[0]
    if args.command == "polyhedron":
        d = bc.conway_polyhedron(args.k)
        return {"command": "polyhedron", "k": args.k, **d, "word": str(d["word"])}
    if args.command == "conway-algebraic":
        r = mt.conway_algebraic_bb(args.a1, args.b1, args.a2, args.b2, args.variant)
        return {
            "command": "conway-algebraic",
            "verdict": r.verdict.value,
            "notation": r.notation,
            "braid_index": r.braid_index,
            "bridge_index": r.bridge_index,
            "one_component": r.one_component,
            "assumption": r.assumption,
        }
    if args.command == "simulate":
        return _simulate(args)
    if args.command == "classify":
        return batch_classify(args.input)
    if args.command == "export-curve":
        spec = _init_spec(args)
        curve = _jitter(el.braid_torus_init(spec), args.jitter, args.seed)
        export_curve(curve, args.path, args.curve_format)
        return {"command": "export-curve", "path": str(args.path), "format": args.curve_format, "n": curve.n}
    raise DomainError(f"unknown command {args.command}")


def _simulate(args) -> dict:
    params = el.SimParams.from_file(args.config) if args.config else el.SimParams(n=args.n)
    spec = _init_spec(args)
    curve = _jitter(el.braid_torus_init(spec), args.jitter, args.seed)
    result = el.minimize(curve, params, bridge=_bridge_for(spec))
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        export_curve(result.curve, out / "final.obj", "obj")
        export_curve(result.curve, out / "final.csv", "csv")
        el.write_energy_log(result.history, out / "energy.csv")
    f = result.final
    return {
        "command": "simulate",
        "init": {"torus": spec.torus, "word": spec.word, "rho": spec.rho, "n": spec.n, "seed": args.seed},
        "stages": result.stages,
        "e_bend": f.e_bend,
        "total_curvature": f.total_curvature,
        "ropelength": f.ropelength,
        "e_theta": f.e_theta,
        "elapsed": result.elapsed,
    }


def run(argv: list[str] | None = None) -> tuple[int, list[dict]]:
    """Parse and execute; returns the exit code and the machine blocks."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (2 if exc.code else 0), []
    try:
        result = _dispatch(args)
    except (DomainError, rt.InvalidFraction, mt.MontesinosError, bc.CensusLimitError, el.GuardError) as exc:
        err = {"schema": SCHEMA, "command": args.command, "error": str(exc)}
        _emit(args, [err], sys.stderr)
        return 1, [err]
    except ValueError as exc:
        err = {"schema": SCHEMA, "command": args.command, "error": str(exc)}
        _emit(args, [err], sys.stderr)
        return 1, [err]
    blocks = result if isinstance(result, list) else [result]
    blocks = [{"schema": SCHEMA, **b} for b in blocks]
    _emit(args, blocks, sys.stdout)
    if args.out:
        Path(args.out).write_text("".join(json.dumps(b, default=str) + "\n" for b in blocks))
    return 0, blocks


def _emit(args, blocks: list[dict], stream) -> None:
    for b in blocks:
        if args.format in ("both", "text"):
            print(render(b), file=stream)
        if args.format in ("both", "json"):
            print(json.dumps(b, default=str), file=stream)


def main(argv: list[str] | None = None) -> int:
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
