"""``ghx``: command-line front end.

Exit status: 0 success, 1 internal error (a bug), 2 usage or parse error,
3 when ``phantom`` finds no phantom by its criterion.
"""

import argparse
import json
import os
import sys

from . import __version__
from .circle_model import (
    CONVENTION_VERSION,
    bracket_dims,
    homotopy,
    phantom_analysis,
    verify_counterexample,
)
from .freyd_envelope import env_hom_dims
from .graded_core import DEFAULT_WINDOW, PresentationMatrix, snf_canonicalize
from .grammar import (
    GrammarError,
    parse_envelope_object,
    parse_map,
    parse_module,
    parse_module_or_presentation,
    parse_spectrum,
)
from .hom_ext import TERM_NAMES, ext_module, hom_module, hom_space_basis, verify_hom_ext_exactness

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE, EXIT_NEGATIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_window(text):
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise UsageError(f"bad window {text!r}, expected LO:HI") from None
    if lo > hi:
        raise UsageError(f"empty window {text!r}")
    return lo, hi


def _default_window():
    env = os.environ.get("GHX_WINDOW")
    return parse_window(env) if env else DEFAULT_WINDOW


def _read(arg):
    if arg.startswith("@"):
        try:
            with open(arg[1:], encoding="utf-8") as fh:
                return fh.read().strip()
        except OSError as exc:
            raise UsageError(f"cannot read {arg[1:]}: {exc.strerror}") from None
    return arg


def _dims_json(module, window):
    return {str(k): v for k, v in module.dims(window).items() if v}


def _dims_rows(columns, window):
    """Table rows for every degree in ``window`` where some column is nonzero."""
    out = []
    for k in range(window[0], window[1] + 1):
        vals = [m.dim(k) for m in columns]
        if any(vals):
            out.append(f"{k:>6}  " + "  ".join(f"{v:>3}" for v in vals))
    return out


# -- verbs; each returns (payload dict, table lines, exit code)


def cmd_canon(args, window):
    parsed = parse_module_or_presentation(_read(args.expr))
    m = snf_canonicalize(parsed) if isinstance(parsed, PresentationMatrix) else parsed
    return {"module": str(m), "dims": _dims_json(m, window)}, [str(m)], EXIT_OK


def _hom_or_ext(fn):
    def run(args, window):
        m = fn(parse_module(_read(args.source)), parse_module(_read(args.target)))
        return {"module": str(m), "dims": _dims_json(m, window)}, [str(m)], EXIT_OK

    return run


def cmd_basis(args, window):
    m, n = parse_module(_read(args.source)), parse_module(_read(args.target))
    maps = [str(f) for f in hom_space_basis(m, n, args.degree)]
    payload = {"source": str(m), "target": str(n), "degree": args.degree, "maps": maps}
    return payload, maps or ["(no maps)"], EXIT_OK


def cmd_pi(args, window):
    x = parse_spectrum(_read(args.spectrum))
    h = homotopy(x)
    payload = {
        "spectrum": str(x),
        "top_level": str(h.top_level),
        "underlying": str(h.underlying),
        "top_level_dims": _dims_json(h.top_level, window),
        "underlying_dims": _dims_json(h.underlying, window),
    }
    lines = [f"top level: {h.top_level}", f"underlying: {h.underlying}",
             "degree  top  und"]
    lines += _dims_rows([h.top_level, h.underlying], window)
    return payload, lines, EXIT_OK


def cmd_bracket(args, window):
    x, y = parse_spectrum(_read(args.source)), parse_spectrum(_read(args.target))
    table = bracket_dims(x, y, window)
    rows = {str(k): list(v) for k, v in table.per_degree.items() if v[2]}
    payload = {"source": str(x), "target": str(y), "window": list(window), "per_degree": rows}
    lines = [f"[{x}, {y}]^T", "degree  hom  ext  total"]
    lines += [f"{k:>6}  {v[0]:>3}  {v[1]:>3}  {v[2]:>5}" for k, v in table.per_degree.items() if v[2]]
    return payload, lines, EXIT_OK


def _certificate_lines(d):
    lines = [f"{k}: {v}" for k, v in d.items() if k != "enumeration"]
    if "enumeration" in d:
        e = d["enumeration"]
        lines.append(f"maps checked: {e['maps_checked']}")
        lines.append(f"all kill c*E_X: {e['all_kill_c_multiples']}")
        for deg, idx, k in e["kernel_dims"]:
            lines.append(f"  degree {deg} map {idx}: kernel dimension {k}")
    return lines


def cmd_phantom(args, window):
    try:
        cert = phantom_analysis(args.a, args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    d = cert.to_dict()
    return d, _certificate_lines(d), EXIT_OK if cert.verdict else EXIT_NEGATIVE


def cmd_verify(args, window):
    try:
        report = verify_counterexample(args.a, args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    d = report.to_dict()
    return d, _certificate_lines(d), EXIT_OK if report.verdict else EXIT_NEGATIVE


def cmd_freyd_hom(args, window):
    a = parse_envelope_object(_read(args.source))
    b = parse_envelope_object(_read(args.target))
    dim = env_hom_dims(a, b, args.degree)
    payload = {"source": str(a), "target": str(b), "degree": args.degree, "dimension": dim}
    return payload, [str(dim)], EXIT_OK


def cmd_exact_check(args, window):
    incl, proj = parse_map(_read(args.inclusion)), parse_map(_read(args.projection))
    n = parse_module(_read(args.test_object))
    try:
        report = verify_hom_ext_exactness(incl, proj, n, window)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = {str(k): list(v) for k, v in report.dims.items() if any(v)}
    failure = None
    if report.first_failure is not None:
        failure = {"degree": report.first_failure[0], "term": TERM_NAMES[report.first_failure[1]]}
    payload = {"exact": report.exact, "window": list(window), "terms": list(TERM_NAMES),
               "dims": rows, "first_failure": failure}
    lines = [f"exact: {report.exact}", "degree  " + "  ".join(TERM_NAMES)]
    for k, v in report.dims.items():
        if any(v):
            lines.append(f"{k:>6}  " + "  ".join(f"{x:>8}" for x in v))
    if failure:
        lines.append(f"first failure: degree {failure['degree']} at {failure['term']}")
    return payload, lines, EXIT_OK if report.exact else EXIT_INTERNAL


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--window", metavar="LO:HI",
                        help="degree window (default GHX_WINDOW or -32:32)")
    common.add_argument("--format", choices=("table", "json"), default="table")

    parser = argparse.ArgumentParser(
        prog="ghx",
        description="Graded Q[c]-modules, free rational T-spectra and phantom maps.",
    )
    parser.add_argument("--version", action="version", version=f"ghx {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, func, help_, *positionals):
        p = sub.add_parser(name, parents=[common], help=help_)
        for pname, kwargs in positionals:
            p.add_argument(pname, **kwargs)
        p.set_defaults(func=func)

    expr = {"help": "expression, or @file"}
    add("canon", cmd_canon, "canonical form of a module or pres(...)", ("expr", expr))
    add("hom", _hom_or_ext(hom_module), "graded Hom", ("source", expr), ("target", expr))
    add("ext", _hom_or_ext(ext_module), "graded Ext^1", ("source", expr), ("target", expr))
    add("basis", cmd_basis, "basis of degree-n maps", ("source", expr), ("target", expr),
        ("degree", {"type": int}))
    add("pi", cmd_pi, "homotopy of a free T-spectrum", ("spectrum", expr))
    add("bracket", cmd_bracket, "dimensions of [X, Y]^T", ("source", expr), ("target", expr))
    add("phantom", cmd_phantom, "phantom certificate for S(a) -> S(b)",
        ("a", {"type": int}), ("b", {"type": int}))
    add("verify", cmd_verify, "phantom certificate checked by enumeration",
        ("a", {"type": int}), ("b", {"type": int}))
    add("freyd-hom", cmd_freyd_hom, "hom dimension in the Freyd envelope",
        ("source", expr), ("target", expr), ("degree", {"type": int}))
    add("exact-check", cmd_exact_check, "six-term Hom/Ext exactness check",
        ("inclusion", expr), ("projection", expr), ("test_object", expr))
    return parser


def _glue_window(argv):
    """``--window -4:4`` -> ``--window=-4:4`` so argparse does not take -4:4 for a flag."""
    out, it = [], iter(argv)
    for arg in it:
        if arg == "--window":
            nxt = next(it, None)
            out.append("--window" if nxt is None else f"--window={nxt}")
        else:
            out.append(arg)
    return out


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_glue_window(argv))
    except SystemExit as exc:
        return exc.code
    try:
        window = parse_window(args.window) if args.window else _default_window()
        payload, lines, code = args.func(args, window)
    except (UsageError, GrammarError) as exc:
        print(f"ghx {args.verb}: error: {exc}", file=stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"ghx {args.verb}: error: {exc}", file=stderr)
        return EXIT_USAGE
    except Exception as exc:  # invariant violations are bugs
        print(f"ghx {args.verb}: internal error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_INTERNAL
    if args.format == "json":
        doc = {"command": args.verb, "convention_version": CONVENTION_VERSION}
        doc.update(payload)
        print(json.dumps(doc, indent=2), file=stdout)
    else:
        for line in lines:
            print(line, file=stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
