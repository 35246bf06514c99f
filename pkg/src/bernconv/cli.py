"""Command-line front end.

One verb per capability: measure histograms, field sweeps, raster rendering,
curve/horn/landmark geometry, intersection analysis, number classification,
local dimension, and the phase label.  Every verb takes --json for
machine-readable output carrying the same numbers as the plain text; exit
codes are 0 (success), 1 (domain or computation error), 2 (usage error).
Output files are only written after their content is fully computed.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import algebraic, curves, field as field_mod, measure
from .errors import BernconvError, DomainError, ParseError
from .polynomial import IntegerPolynomial
from .sequences import (BinarySequence, format_rational, from_rational,
                        parse_sequence)

_METHODS = (measure.METHOD_TRANSFER, measure.METHOD_CHAOS, measure.METHOD_INVERSE)


def _f(x: float) -> float:
    """Round-trip a float through 12 significant digits so plain text and
    JSON print identical numbers."""
    return float(f"{x:.12g}")


def _parse_seq(text: str) -> BinarySequence:
    if "/" in text:
        try:
            p, q = text.split("/")
            return from_rational(int(p), int(q))
        except ValueError as exc:
            raise ParseError(f"bad rational {text!r}") from exc
    return parse_sequence(text)


def _parse_coeffs(text: str) -> IntegerPolynomial:
    try:
        return IntegerPolynomial(int(c) for c in text.split(","))
    except ValueError as exc:
        raise ParseError(f"bad coefficient list {text!r}") from exc


def _emit(args, payload: dict, plain: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(plain)


# -- verb handlers --------------------------------------------------------------


def _histogram_from_args(args) -> measure.Histogram:
    if args.method == measure.METHOD_TRANSFER:
        return measure.transfer_measure(args.t, args.bins, tol=args.tol,
                                        max_iter=args.max_iter,
                                        refine=args.refine)
    if args.method == measure.METHOD_CHAOS:
        return measure.chaos_measure(args.t, args.bins, samples=args.samples,
                                     seed=args.seed, burn_in=args.burn_in)
    return measure.inverse_measure(args.t, args.bins, depth=args.depth)


def _cmd_measure(args) -> int:
    h = _histogram_from_args(args)
    table = measure.cdf(h)
    quantiles = {str(Fraction(p).limit_denominator(12)): _f(measure.quantile(table, p))
                 for p in (0.25, 1 / 3, 0.5, 2 / 3, 0.75)}
    payload = {
        "t": _f(h.t), "method": h.method, "bins": h.bins,
        "peak_density": _f(h.peak_density()), "quantiles": quantiles,
    }
    if args.out:
        Path(args.out).write_text(h.to_csv())
        payload["out"] = args.out
    lines = [f"t = {payload['t']}, method = {h.method}, bins = {h.bins}",
             f"peak density = {payload['peak_density']}"]
    lines += [f"quantile {k} = {v}" for k, v in quantiles.items()]
    if args.out:
        lines.append(f"histogram written to {args.out}")
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_field(args) -> int:
    params = {"tol": args.tol, "max_iter": args.max_iter,
              "samples": args.samples, "seed": args.seed,
              "burn_in": args.burn_in, "depth": args.depth,
              "refine": args.refine}
    fld = field_mod.compute_field(args.t_lo, args.t_hi, args.cols, args.bins,
                                  method=args.method, params=params,
                                  workers=args.workers)
    raw = field_mod.export_raw(fld)
    Path(args.out).write_bytes(raw)
    digest = hashlib.sha256(raw).hexdigest()
    payload = {"cols": fld.cols, "bins": fld.y_bins, "t_lo": _f(args.t_lo),
               "t_hi": _f(args.t_hi), "method": args.method,
               "bytes": len(raw), "sha256": digest, "out": args.out}
    _emit(args, payload,
          f"field {fld.cols} x {fld.y_bins} written to {args.out} "
          f"({len(raw)} bytes, sha256 {digest[:16]}...)")
    return 0


def _cmd_render(args) -> int:
    fld = field_mod.import_raw(Path(args.input).read_bytes())
    overlays = []
    for text in args.curve or ():
        overlays.append(_parse_seq(text))
    if args.horns is not None:
        for w in curves._all_words(args.horns):
            overlays.append(curves.HornWord(w))
    spec = field_mod.RenderSpec(colormap=args.colormap,
                                clip_percentile=args.clip, gamma=args.gamma,
                                overlays=tuple(overlays), height=args.height)
    img = field_mod.render(fld, spec)
    Path(args.out).write_bytes(img)
    payload = {"out": args.out, "bytes": len(img),
               "format": "P5" if args.colormap == "gray" else "P6",
               "width": fld.cols, "height": spec.height or fld.y_bins}
    _emit(args, payload,
          f"{payload['format']} image {payload['width']} x {payload['height']} "
          f"written to {args.out}")
    return 0


def _cmd_curve(args) -> int:
    b = _parse_seq(args.b)
    curve = curves.curve_of(b)
    payload = {"b": str(b), "value": format_rational(b.value()),
               "numerator": list(curve.numerator.coeffs),
               "denominator": list(curve.denominator.coeffs)}
    lines = [f"b = {b} = {b.value()}", f"y_b(t) = {curve}"]
    if args.at is not None:
        y = curve.eval(args.at)
        payload["at"] = {"t": _f(args.at), "y": _f(y)}
        lines.append(f"y_b({_f(args.at)}) = {_f(y)}")
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_tstar(args) -> int:
    b = _parse_seq(args.b)
    ts = curves.t_star(b)
    k = b.kneading_of()
    payload = {"b": str(b), "kneading": str(k), "t_star": _f(ts)}
    _emit(args, payload, f"t*({b}) = {_f(ts)}   (kneading sequence {k})")
    return 0


def _cmd_horns(args) -> int:
    if args.word is not None:
        words = [args.word]
    else:
        words = curves._all_words(args.level)
    entries = []
    for w in words:
        lo, hi = curves.horn_borders(w)
        entries.append({"word": w, "lower": list(lo.coeffs),
                        "upper": list(hi.coeffs),
                        "lower_str": str(lo), "upper_str": str(hi)})
    plain = "\n".join(
        f"D_{e['word'] or '(empty)'}: lower = {e['lower_str']}, "
        f"upper = {e['upper_str']}" for e in entries)
    _emit(args, {"horns": entries}, plain)
    return 0


def _cmd_landmarks(args) -> int:
    records = curves.landmark_scan(args.level)
    entries = []
    for rec in records:
        entry = rec.as_dict()
        entry["s"] = _f(entry["s"])
        entry["z"] = _f(entry["z"])
        try:
            nc = algebraic.classify_from_t_polynomial(rec.cleared_polynomial,
                                                      t_root=rec.s)
            entry["class"] = nc.as_dict()
            entry["class"]["beta"] = _f(entry["class"]["beta"])
        except (DomainError, BernconvError) as exc:
            entry["class"] = {"tag": None, "error": str(exc)}
        entries.append(entry)
    plain = "\n".join(
        f"s = {e['s']}  z = {e['z']}  [{e['class'].get('tag')}]  "
        f"poly = {e['poly']}  sources = {e['sources']}" for e in entries)
    _emit(args, {"level": args.level, "landmarks": entries}, plain)
    return 0


def classify_intersection(b: BinarySequence, c: BinarySequence) -> list:
    """Case analysis for the crossings of two address curves inside the overlap.

    Case "i": both sequences preperiodic (two addresses at the crossing);
    case "ii": exactly one periodic (countably many); case "iii": both
    periodic (uncountably many), with the growth/singularity test attached
    for the pair of minimal periods.  Cases i and ii additionally require
    the forward orbit of the crossing point to stay outside the overlap;
    when it does not, the report flags the violated assumption rather than
    claiming an address count.  Crossings outside the overlap are omitted;
    no crossing inside it yields an empty report.
    """
    records = [r for r in curves.curve_intersection(b, c) if r.inside_D]
    out = []
    b_periodic = not b.preperiod
    c_periodic = not c.preperiod
    case = {0: "i", 1: "ii", 2: "iii"}[b_periodic + c_periodic]
    for rec in records:
        entry = rec.as_dict()
        entry["case"] = case
        if case == "iii":
            m, n = len(b.period), len(c.period)
            sing = algebraic.singularity_test(m, n, rec.s)
            rho = algebraic.growth_rate(m, n)
            entry["addresses"] = "uncountable"
            entry["assumption_ok"] = None
            entry["singularity"] = {
                "m": m, "n": n, "growth_rate": _f(rho),
                "singular": sing.singular, "dim_bound": _f(sing.dim_bound),
            }
        else:
            ok = curves.orbit_outside_D(rec)
            entry["assumption_ok"] = ok
            if ok:
                entry["addresses"] = 2 if case == "i" else "countable"
            else:
                entry["addresses"] = None
                entry["note"] = "assumption violated: forward orbit meets the overlap"
        entry["s"] = _f(entry["s"])
        entry["z"] = _f(entry["z"])
        out.append(entry)
    return out


def _cmd_intersect(args) -> int:
    b, c = _parse_seq(args.b), _parse_seq(args.c)
    if args.full:
        reports = classify_intersection(b, c)
        payload = {"b": str(b), "c": str(c), "records": reports}
        lines = [f"crossings of y_b, b = {b}, and y_c, c = {c}, inside the overlap:"]
        for e in reports:
            extra = ""
            if "singularity" in e:
                sg = e["singularity"]
                extra = (f"  growth {sg['growth_rate']}, singular = "
                         f"{sg['singular']}, dim bound {sg['dim_bound']}")
            lines.append(f"  s = {e['s']}, z = {e['z']}, case {e['case']}, "
                         f"addresses = {e['addresses']}{extra}")
        if not reports:
            lines.append("  (none)")
        _emit(args, payload, "\n".join(lines))
        return 0
    records = curves.curve_intersection(b, c)
    entries = []
    for rec in records:
        e = rec.as_dict()
        e["s"], e["z"] = _f(e["s"]), _f(e["z"])
        entries.append(e)
    plain = "\n".join(
        f"s = {e['s']}, z = {e['z']}, inside_D = {e['inside_D']}" for e in entries) \
        or "(no intersection in (1/2, 1))"
    _emit(args, {"b": str(b), "c": str(c), "records": entries}, plain)
    return 0


def _cmd_classify(args) -> int:
    if (args.poly is None) == (args.tpoly is None):
        raise DomainError("pass exactly one of --poly or --tpoly")
    payload = {}
    if args.poly is not None:
        nc = algebraic.classify(_parse_coeffs(args.poly))
    else:
        poly_t = _parse_coeffs(args.tpoly)
        from .polynomial import real_roots_in_interval
        roots = real_roots_in_interval(poly_t)
        if not roots:
            raise DomainError(f"{poly_t!r} has no root in (1/2, 1)")
        nc = algebraic.classify_from_t_polynomial(poly_t, t_root=roots[0])
        payload["t_root"] = _f(roots[0])
        if len(roots) > 1:
            payload["t_roots_in_interval"] = [_f(r) for r in roots]
    payload.update(nc.as_dict())
    payload["beta"] = _f(payload["beta"])
    payload["moduli"] = [_f(m) for m in payload["moduli"]]
    plain = (f"tag = {nc.tag}, beta = {payload['beta']}, "
             f"conjugate moduli = {payload['moduli']}, "
             f"minimality_verified = {nc.minimality_verified}")
    if "t_root" in payload:
        plain += f", t root = {payload['t_root']}"
    _emit(args, payload, plain)
    return 0


def _cmd_dim(args) -> int:
    h = _histogram_from_args(args)
    table = measure.cdf(h)
    fit = measure.local_dimension(table, args.y, args.eps_lo, args.eps_hi,
                                  points=args.points)
    payload = {"t": _f(args.t), "y": _f(args.y), "bins": args.bins,
               "slope": _f(fit.slope) if np.isfinite(fit.slope) else "inf",
               "zero_ball": fit.zero_ball}
    if fit.residuals is not None:
        payload["max_residual"] = _f(float(np.abs(fit.residuals).max()))
    plain = (f"local dimension at y = {args.y}, t = {args.t}: "
             f"{payload['slope']}"
             + (" (zero-mass ball on the ladder)" if fit.zero_ball else ""))
    _emit(args, payload, plain)
    return 0


def _cmd_phase(args) -> int:
    ph = measure.phase_of(args.t)
    _emit(args, {"t": _f(args.t), "phase": ph}, f"phase({args.t}) = {ph}")
    return 0


# -- parser ----------------------------------------------------------------------


def _add_measure_flags(sp, with_bins_default=20000):
    sp.add_argument("--bins", type=int, default=with_bins_default)
    sp.add_argument("--method", choices=_METHODS, default=measure.METHOD_TRANSFER)
    sp.add_argument("--tol", type=float, default=1e-10)
    sp.add_argument("--max-iter", dest="max_iter", type=int, default=2000)
    sp.add_argument("--refine", type=int, default=4,
                    help="internal grid refinement of the transfer operator")
    sp.add_argument("--samples", type=int, default=10 ** 7)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--burn-in", dest="burn_in", type=int, default=1000)
    sp.add_argument("--depth", type=int, default=22)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="bernconv",
        description="Bernoulli convolutions: measures, curves, landmarks, fields.")
    from . import __version__
    ap.add_argument("--version", action="version",
                    version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="verb", required=True)

    sp = sub.add_parser("measure", help="histogram of one measure")
    sp.add_argument("--t", type=float, required=True)
    _add_measure_flags(sp)
    sp.add_argument("--out", help="write the histogram CSV here")
    sp.set_defaults(func=_cmd_measure)

    sp = sub.add_parser("field", help="column sweep over a t range")
    sp.add_argument("--t-lo", dest="t_lo", type=float, required=True)
    sp.add_argument("--t-hi", dest="t_hi", type=float, required=True)
    sp.add_argument("--cols", type=int, required=True)
    _add_measure_flags(sp)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--out", required=True, help="raw .batl output path")
    sp.set_defaults(func=_cmd_field)

    sp = sub.add_parser("render", help="rasterize a stored field")
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--colormap", default="thermal", choices=("thermal", "gray"))
    sp.add_argument("--clip", type=float, default=99.5)
    sp.add_argument("--gamma", type=float, default=0.8)
    sp.add_argument("--height", type=int, default=None)
    sp.add_argument("--curve", action="append",
                    help="overlay an address curve (sequence or p/q); repeatable")
    sp.add_argument("--horns", type=int, default=None,
                    help="overlay all horn borders up to this level")
    sp.set_defaults(func=_cmd_render)

    sp = sub.add_parser("curve", help="address curve of a sequence")
    sp.add_argument("--b", required=True, help="sequence, e.g. 01(10) or 5/12")
    sp.add_argument("--at", type=float, help="also evaluate at this t")
    sp.set_defaults(func=_cmd_curve)

    sp = sub.add_parser("tstar", help="entry parameter of an itinerary")
    sp.add_argument("--b", required=True)
    sp.set_defaults(func=_cmd_tstar)

    sp = sub.add_parser("horns", help="border polynomials of horns")
    sp.add_argument("--level", type=int, default=2)
    sp.add_argument("--word", help="a single horn word instead of a level sweep")
    sp.set_defaults(func=_cmd_horns)

    sp = sub.add_parser("landmarks", help="horn-border intersection parameters")
    sp.add_argument("--level", type=int, default=3)
    sp.set_defaults(func=_cmd_landmarks)

    sp = sub.add_parser("intersect", help="crossings of two address curves")
    sp.add_argument("--b", required=True)
    sp.add_argument("--c", required=True)
    sp.add_argument("--full", action="store_true",
                    help="attach the case analysis for crossings inside the overlap")
    sp.set_defaults(func=_cmd_intersect)

    sp = sub.add_parser("classify", help="number class of an algebraic integer")
    sp.add_argument("--poly", help="ascending coefficients of a monic polynomial in beta")
    sp.add_argument("--tpoly", help="ascending coefficients of a polynomial in t = 1/beta")
    sp.set_defaults(func=_cmd_classify)

    sp = sub.add_parser("dim", help="local dimension estimate from a histogram")
    sp.add_argument("--t", type=float, required=True)
    sp.add_argument("--y", type=float, required=True)
    _add_measure_flags(sp)
    sp.add_argument("--eps-lo", dest="eps_lo", type=float, default=5e-4)
    sp.add_argument("--eps-hi", dest="eps_hi", type=float, default=0.05)
    sp.add_argument("--points", type=int, default=16)
    sp.set_defaults(func=_cmd_dim)

    sp = sub.add_parser("phase", help="coarse regime label of a parameter")
    sp.add_argument("--t", type=float, required=True)
    sp.set_defaults(func=_cmd_phase)

    for p in sub.choices.values():
        p.add_argument("--json", action="store_true",
                       help="machine-readable output")
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except BernconvError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
