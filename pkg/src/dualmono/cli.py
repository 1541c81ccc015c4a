"""Command-line front end.

Verbs: ``measure``, ``verify``, ``sweep``, ``indicator``, ``lemmas``,
``random-suite``. Exit status is 0 on success, 2 on validation errors and 3
when a property check finds a negative slack or residual beyond ``--tol``.
Floats are written in shortest round-trip form so reruns are byte-identical.
"""
import argparse
import csv
import io
import json
import math
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import indicators, measures, monogamy, sampler, states
from .errors import DualMonoError

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_PROPERTY = 3

VERIFY_COLUMNS = ["alpha", "lhs", "rhs_powersum", "rhs_weighted", "rhs_mj", "rhs_thm", "m", "slack_thm"]
INDICATOR_COLUMNS = ["param", "value"]
LEMMA_COLUMNS = ["t", "x", "which", "residual"]
SUITE_COLUMNS = ["sample", "measure", "bound", "alpha", "m", "lhs", "rhs", "slack"]
MEASURE_COLUMNS = ["measure", "cut", "value", "route", "cross_check"]

BOUND_COLUMN = {
    "powersum": "rhs_powersum",
    "weighted": "rhs_weighted",
    "mj": "rhs_mj",
    "thm": "rhs_thm",
}

_NUM = re.compile(r"^\s*([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)?\s*\*?\s*(sqrt2)?\s*$")


class CLIError(DualMonoError):
    pass


# --- parsing helpers -----------------------------------------------------------


def parse_number(text: str) -> float:
    """Parse a float, optionally times ``sqrt2`` (``"2sqrt2"``, ``"sqrt2"``)."""
    m = _NUM.match(text)
    if not m or (m.group(1) is None and m.group(2) is None):
        raise CLIError(f"cannot parse number {text!r}")
    value = float(m.group(1)) if m.group(1) is not None else 1.0
    return value * math.sqrt(2.0) if m.group(2) else value


def parse_range(text: str) -> list:
    """``start:stop:step`` grid with the stop point included within 1e-12."""
    parts = text.split(":")
    if len(parts) != 3:
        raise CLIError(f"range {text!r} must be start:stop:step")
    start, stop, step = (parse_number(p) for p in parts)
    if step <= 0 or stop < start:
        raise CLIError(f"bad range {text!r}")
    count = int(math.floor((stop - start + 1e-12) / step)) + 1
    return [start + k * step for k in range(count)]


def parse_int_range(text: str) -> list:
    parts = [int(p) for p in text.split(":")]
    if len(parts) == 2:
        parts.append(1)
    if len(parts) != 3 or parts[2] <= 0:
        raise CLIError(f"bad integer range {text!r}")
    return list(range(parts[0], parts[1] + 1, parts[2]))


def linspace(lo, hi, count):
    return [float(x) for x in np.linspace(lo, hi, count)]


def fmt(value):
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def write_table(rows, columns, out=None, form="csv"):
    buf = io.StringIO()
    if form == "json":
        clean = [{c: _jsonable(r.get(c)) for c in columns} for r in rows]
        json.dump(clean, buf, indent=1)
        buf.write("\n")
    else:
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([fmt(r.get(c)) for c in columns])
    emit(buf.getvalue(), out)


def _jsonable(v):
    if isinstance(v, (np.floating,)):
        return float(v)
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (np.bool_,)):
        return bool(v)
    return v


def emit(text, out=None):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        with open(out, "w", newline="") as fh:
            fh.write(text)


# --- state sources -------------------------------------------------------------


def build_state(args) -> states.PureState:
    if getattr(args, "state", None):
        return states.load_state(args.state)
    family = args.family
    if family is None:
        raise CLIError("give --family or --state")
    if family == "schmidt":
        params = args.params or "ex1"
        if params == "ex1":
            return states.example1_state()
        vals = [parse_number(p) for p in params.split(",")]
        if len(vals) not in (5, 6):
            raise CLIError("schmidt params need five coefficients and an optional phase")
        return states.generalized_schmidt_state(vals[:5], vals[5] if len(vals) == 6 else 0.0)
    n = args.n
    if family == "dicke":
        if n is None or args.k is None:
            raise CLIError("dicke needs --n and --k")
        return states.dicke_state(n, args.k)
    if family == "w":
        if n is None:
            raise CLIError("w needs --n")
        return states.w_state(n)
    if family == "ghz":
        if n is None:
            raise CLIError("ghz needs --n")
        return states.ghz_state(n)
    raise CLIError(f"unknown family {family!r}")


def _measure_kind(args) -> measures.MeasureKind:
    q = args.q
    if args.measure in ("tsallis", "ttq") and q is None and ":" not in args.measure:
        q = 2.0
    return measures.MeasureKind.parse(args.measure, q)


def _map(fn, items, jobs):
    if jobs and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(i) for i in items]


# --- verbs ---------------------------------------------------------------------


def cmd_measure(args):
    psi = build_state(args)
    if args.save_state:
        states.dump_state(psi, args.save_state)
    kind = _measure_kind(args)
    if args.pair:
        i, j = args.pair
        mv = measures.measure_2q(states.reduced(psi, [i, j]), kind)
        cut = f"{i},{j}"
    else:
        cut_q = 0 if args.cut is None else args.cut
        mv = measures.measure_pure(psi, cut_q, kind)
        cut = f"{cut_q}|rest"
    row = {
        "measure": kind.label,
        "cut": cut,
        "value": mv.value,
        "route": mv.route.value,
        "cross_check": mv.cross_check,
    }
    write_table([row], MEASURE_COLUMNS, args.out, args.format)
    return EXIT_OK


def verify_rows(psi, focus, kind, alphas, bounds, jobs=1):
    fam = monogamy.family_for(kind)
    for b in bounds:
        bk = monogamy.BoundKind.THM_ORDERED if b == "thm" else monogamy.BoundKind(b)
        for a in alphas:
            monogamy.check_exponent(bk, a, fam.gamma)
    one, pairs, _ = monogamy.marginal_values(psi, focus, kind)
    prof = monogamy.ordering_profile(pairs, fam.gamma)

    def row(alpha):
        r = {"alpha": alpha, "lhs": one**alpha, "m": prof.m}
        for b in bounds:
            if b == "thm":
                bk = monogamy.BoundKind.THM_ORDERED if prof.full else monogamy.BoundKind.THM_MIXED
                c, _ = monogamy.coefficients(bk, prof.values, alpha, fam.gamma, prof.m)
            else:
                c, _ = monogamy.coefficients(monogamy.BoundKind(b), prof.values, alpha, fam.gamma)
            r[BOUND_COLUMN[b]] = float(np.dot(c, np.asarray(prof.values) ** alpha))
        if "thm" in bounds:
            r["slack_thm"] = r["lhs"] - r["rhs_thm"]
        return r

    return _map(row, alphas, jobs), prof


def _bounds(text):
    if text == "all":
        return ["powersum", "weighted", "mj", "thm"]
    out = [b.strip() for b in text.split(",") if b.strip()]
    for b in out:
        if b not in BOUND_COLUMN:
            raise CLIError(f"unknown bound {b!r}")
    return out


def cmd_verify(args):
    psi = build_state(args)
    kind = _measure_kind(args)
    if args.alpha_range:
        alphas = parse_range(args.alpha_range)
    elif args.alpha is not None:
        alphas = [parse_number(args.alpha)]
    else:
        raise CLIError("give --alpha or --alpha-range")
    bounds = _bounds(args.bounds)
    rows, prof = verify_rows(psi, args.focus, kind, alphas, bounds, args.jobs)
    if not prof.consistent:
        print(f"warning: ordering conditions inconsistent (m = {prof.m})", file=sys.stderr)
    write_table(rows, VERIFY_COLUMNS, args.out, args.format)
    tol = 1e-9 if args.tol is None else args.tol
    if prof.consistent and any(r.get("slack_thm", 0.0) < -tol for r in rows):
        return EXIT_PROPERTY
    return EXIT_OK


def indicator_value(psi, kind, focus, q):
    if kind == "tau":
        return indicators.tau_t(psi, focus).value
    return indicators.omega_q(psi, focus, q).value


def cmd_indicator(args):
    kind = args.kind
    rows = []
    if args.n_range:
        if args.family not in ("w", "dicke", "ghz"):
            raise CLIError("--n-range needs --family w, dicke or ghz")
        q = 2.0 if args.q is None else args.q
        for n in parse_int_range(args.n_range):
            args.n = n
            psi = build_state(args)
            rows.append({"param": n, "value": indicator_value(psi, kind, args.focus, q)})
    elif args.q_range or args.q_points:
        if kind != "omega":
            raise CLIError("q sweeps need --kind omega")
        psi = build_state(args)
        qs = parse_range(args.q_range) if args.q_range else linspace(
            measures.Q_MIN, measures.Q_MAX, args.q_points
        )
        vals = _map(lambda q: indicator_value(psi, kind, args.focus, q), qs, args.jobs)
        rows = [{"param": q, "value": v} for q, v in zip(qs, vals)]
    else:
        psi = build_state(args)
        q = 2.0 if args.q is None else args.q
        rows.append({"param": args.focus, "value": indicator_value(psi, kind, args.focus, q)})
    write_table(rows, INDICATOR_COLUMNS, args.out, args.format)
    return EXIT_OK


def lemma_rows(which, t_step, xs):
    rows = []
    for name in which:
        t_max = monogamy.GOLDEN_T if name == "L4" else 1.0
        count = int(math.floor(t_max / t_step + 1e-9)) + 1
        ts = [k * t_step for k in range(count)]
        if ts[-1] < t_max:
            ts.append(t_max)
        for x in xs:
            for t in ts:
                rows.append({"t": t, "x": x, "which": name,
                             "residual": monogamy.lemma_residual(t, x, name)})
    return rows


def cmd_lemmas(args):
    which = [w.strip() for w in args.which.split(",")]
    rows = lemma_rows(which, args.t_step, parse_range(args.x_range))
    write_table(rows, LEMMA_COLUMNS, args.out, args.format)
    tol = 1e-12 if args.tol is None else args.tol
    bad = [r for r in rows if r["residual"] < -tol]
    if bad:
        print(f"{len(bad)} lemma residuals below -{tol:g}", file=sys.stderr)
        return EXIT_PROPERTY
    return EXIT_OK


def suite_rows(psi, index, kinds):
    rows = []
    for kind in kinds:
        fam = monogamy.family_for(kind)
        one, pairs, _ = monogamy.marginal_values(psi, 0, kind)
        prof = monogamy.ordering_profile(pairs, fam.gamma)
        checks = [(monogamy.BoundKind.POWERSUM, fam.gamma)]
        if prof.consistent:
            bk = monogamy.BoundKind.THM_ORDERED if prof.full else monogamy.BoundKind.THM_MIXED
            checks.append((bk, 2.0 * fam.gamma))
        for bk, alpha in checks:
            c, _ = monogamy.coefficients(bk, prof.values, alpha, fam.gamma, prof.m)
            rhs = float(np.dot(c, np.asarray(prof.values) ** alpha))
            lhs = one**alpha
            rows.append({"sample": index, "measure": kind.label, "bound": bk.value,
                         "alpha": alpha, "m": prof.m, "lhs": lhs, "rhs": rhs,
                         "slack": lhs - rhs})
    return rows


def run_suite(num_qubits, count, seed, kinds, jobs=1):
    spec = sampler.SampleSpec(num_qubits, sampler.Ensemble.HAAR_PURE, seed, count)
    samples = list(sampler.haar_pure(spec))
    chunks = _map(lambda item: suite_rows(item[1], item[0], kinds), list(enumerate(samples)), jobs)
    return [r for chunk in chunks for r in chunk]


def cmd_random_suite(args):
    kinds = []
    for name in args.measure.split(","):
        name = name.strip()
        if name == "st":
            kinds.append(measures.ST_ENTROPY)
        elif name == "ttq":
            kinds.extend(measures.ttq(parse_number(q)) for q in args.q_list.split(","))
        else:
            raise CLIError(f"random-suite supports st and ttq, not {name!r}")
    rows = run_suite(args.qubits, args.count, args.seed, kinds, args.jobs)
    write_table(rows, SUITE_COLUMNS, args.out, args.format)
    tol = 1e-9 if args.tol is None else args.tol
    bad = [r for r in rows if r["slack"] < -tol]
    print(f"{len(rows)} checks, {len(bad)} failures (tol {tol:g})", file=sys.stderr)
    return EXIT_PROPERTY if bad else EXIT_OK


# --- figure datasets -------------------------------------------------------------

FIGURES = ("fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7")
FIG7_SIZES = (3, 5, 7, 10)


def figure_rows(name, jobs=1):
    """Rows and columns of one figure dataset."""
    r2 = math.sqrt(2.0)
    if name == "fig1":
        ts = [k / 100 for k in range(101)]
        return [{"t": t, "v": t - 2 * t**2 + t**4} for t in ts], ["t", "v"]
    if name in ("fig2", "fig3", "fig4", "fig5"):
        if name in ("fig2", "fig3"):
            kind = measures.ST_ENTROPY
            alphas = parse_range("2sqrt2:12:0.1")
        else:
            kind = measures.ttq(2.0)
            alphas = parse_range("4:12:0.1")
        psi = {
            "fig2": states.example1_state,
            "fig3": lambda: states.dicke_state(4, 1),
            "fig4": states.example1_state,
            "fig5": lambda: states.w_state(4),
        }[name]()
        rows, _ = verify_rows(psi, 0, kind, alphas, ["powersum", "weighted", "mj", "thm"], jobs)
        return rows, VERIFY_COLUMNS
    if name == "fig6":
        return [{"N": n, "tau_t": indicators.tau_t(states.w_state(n), 0).value}
                for n in range(3, 11)], ["N", "tau_t"]
    if name == "fig7":
        qs = linspace(measures.Q_MIN, measures.Q_MAX, 50)
        ws = {n: states.w_state(n) for n in FIG7_SIZES}

        def row(q):
            r = {"q": q}
            for n in FIG7_SIZES:
                r[f"omega_q_N{n}"] = indicators.omega_q(ws[n], 0, q).value
            return r

        return _map(row, qs, jobs), ["q"] + [f"omega_q_N{n}" for n in FIG7_SIZES]
    raise CLIError(f"unknown figure {name!r}")


def cmd_sweep(args):
    names = FIGURES if args.figure == "all" else [f.strip() for f in args.figure.split(",")]
    outdir = Path(args.out or "figures")
    ext = "json" if args.format == "json" else "csv"
    for name in names:
        rows, cols = figure_rows(name, args.jobs)
        write_table(rows, cols, outdir / f"{name}.{ext}", args.format)
        print(f"wrote {outdir / f'{name}.{ext}'} ({len(rows)} rows)", file=sys.stderr)
    return EXIT_OK


# --- argument parser --------------------------------------------------------------


def _common(parser):
    g = parser.add_argument_group("common")
    g.add_argument("--seed", type=lambda s: int(s, 0), default=None,
                   help=f"RNG seed (default ${sampler.SEED_ENV} or {sampler.DEFAULT_SEED})")
    g.add_argument("--tol", type=float, default=None, help="tolerance for property checks")
    g.add_argument("--out", default=None, help="output path (directory for sweep); stdout if omitted")
    g.add_argument("--format", choices=("csv", "json"), default="csv")
    g.add_argument("--jobs", type=int, default=1, help="worker threads for grid points")


def _state_opts(parser):
    g = parser.add_argument_group("state")
    g.add_argument("--family", choices=("schmidt", "dicke", "w", "ghz"))
    g.add_argument("--params", help="schmidt: 'ex1' or l0,l1,l2,l3,l4[,phi]")
    g.add_argument("--n", type=int, help="qubit count")
    g.add_argument("--k", type=int, help="Dicke excitation count")
    g.add_argument("--state", help="JSON state file {num_qubits, amplitudes: [[re, im], ...]}")


def build_parser():
    p = argparse.ArgumentParser(prog="dualmono", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    m = sub.add_parser("measure", help="evaluate one measure on a cut or a qubit pair")
    _state_opts(m)
    m.add_argument("--measure", default="st", help="concurrence|st|eof|tsallis|ttq|tangle")
    m.add_argument("--q", type=float)
    m.add_argument("--cut", type=int, help="focus qubit of the one-to-rest cut (default 0)")
    m.add_argument("--pair", type=int, nargs=2, metavar=("I", "J"),
                   help="two-qubit reduction instead of a cut")
    m.add_argument("--save-state", help="also write the state as JSON")
    _common(m)
    m.set_defaults(func=cmd_measure)

    v = sub.add_parser("verify", help="monogamy bounds over an exponent grid")
    _state_opts(v)
    v.add_argument("--measure", default="st", help="st or ttq")
    v.add_argument("--q", type=float)
    v.add_argument("--focus", type=int, default=0)
    v.add_argument("--alpha")
    v.add_argument("--alpha-range", help="start:stop:step, e.g. 2sqrt2:12:0.1")
    v.add_argument("--bounds", default="all", help="all or a list of powersum,weighted,mj,thm")
    _common(v)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", help="write figure datasets into --out directory")
    s.add_argument("--figure", default="all", help=f"all or a list of {','.join(FIGURES)}")
    _common(s)
    s.set_defaults(func=cmd_sweep)

    i = sub.add_parser("indicator", help="tau_t / omega_q indicators")
    _state_opts(i)
    i.add_argument("--kind", choices=("tau", "omega"), default="tau")
    i.add_argument("--q", type=float)
    i.add_argument("--q-range")
    i.add_argument("--q-points", type=int, help="evenly spaced q over the closed-form window")
    i.add_argument("--n-range", help="start:stop[:step] over qubit counts")
    i.add_argument("--focus", type=int, default=0)
    _common(i)
    i.set_defaults(func=cmd_indicator)

    lm = sub.add_parser("lemmas", help="residual grids of the scalar lemmas")
    lm.add_argument("--which", default="L1,L2,L4")
    lm.add_argument("--t-step", type=float, default=0.01)
    lm.add_argument("--x-range", default="2:10:0.25")
    _common(lm)
    lm.set_defaults(func=cmd_lemmas)

    r = sub.add_parser("random-suite", help="monogamy checks on Haar-random pure states")
    r.add_argument("--qubits", type=int, default=3)
    r.add_argument("--count", type=int, default=1000)
    r.add_argument("--measure", default="st,ttq")
    r.add_argument("--q-list", default="1.2,2,3")
    _common(r)
    r.set_defaults(func=cmd_random_suite)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", None) is None:
        args.seed = sampler.default_seed()
    try:
        return args.func(args)
    except DualMonoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
