"""Command line interface to the workbench.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 on success, 1
for invalid input, 2 for an internal failure, 3 when a mathematical check
fails (so CI can tell a refuted claim from a typo in the arguments).

Permutations are accepted as compact digit strings for n <= 9 ("2134") or
as JSON arrays ("[2,1,3,4]").  Shapes use the strict "(4,2,1)/(2,1)"
grammar.  Larger payloads (posets, tableaux, modules) are inline JSON or
@path to read a file.  Every JSON document emitted here is accepted back
by the corresponding reader.
"""

import argparse
import json
import sys
import traceback

from heckeposet import config, hecke
from heckeposet import verify as verify_checks
from heckeposet.permutations import LEFT, RIGHT, Permutation, weak_interval
from heckeposet.posets import (
    LabeledPoset,
    kp,
    poset_from_tableau,
    schur_recognize,
)
from heckeposet.shapes import (
    Composition,
    GeneralizedComposition,
    balanced_generalized_composition,
    parse_shape,
)
from heckeposet.structure import distinguished_filtration, equivalence_class
from heckeposet.tableaux import (
    Tableau,
    canonical_filling,
    enumerate_syt,
    reading,
    rectify,
    rsk,
)


class CheckFailed(Exception):
    """A mathematical check did not pass."""


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; the contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


# ---------------------------------------------------------------------------
# input parsing


def payload(text):
    """Inline JSON, or @path to load a file."""
    if text.startswith("@"):
        with open(text[1:]) as handle:
            return json.load(handle)
    return json.loads(text)


def parse_permutation(text):
    """Digit string for n <= 9, JSON array otherwise.

    >>> parse_permutation("2134").word
    (2, 1, 3, 4)
    """
    text = text.strip()
    if text.startswith("["):
        return Permutation(payload(text))
    if text.isdigit():
        return Permutation(int(c) for c in text)
    raise ValueError("not a permutation: %r" % text)


def _parse_parts(text):
    chunk = text.strip()
    if chunk.startswith("(") and chunk.endswith(")"):
        chunk = chunk[1:-1]
    items = [item.strip() for item in chunk.split(",") if item.strip()]
    if not items or not all(item.isdigit() for item in items):
        raise ValueError("malformed composition: %r" % text)
    return Composition(int(item) for item in items)


def parse_generalized(text):
    """Star-separated blocks, "(2,1)*(3)"."""
    return GeneralizedComposition([_parse_parts(b) for b in text.split("*")])


def _side(args):
    return LEFT if args.side == "left" else RIGHT


def _load_poset(args):
    return LabeledPoset.from_json(payload(args.poset))


def _poset_source(args):
    """A poset from --poset JSON or from the reference labeling of --shape."""
    if getattr(args, "poset", None) and getattr(args, "shape", None):
        raise ValueError("give --poset or --shape, not both")
    if getattr(args, "poset", None):
        return _load_poset(args)
    if getattr(args, "shape", None):
        shape = parse_shape(args.shape)
        return poset_from_tableau(canonical_filling(shape, "tau0"))
    raise ValueError("give --poset or --shape")


_MODULE_SOURCES = ("module", "poset", "shape", "bottom", "simple", "projective")


def _build_module(args):
    """One module from exactly one of the source flags."""
    given = [s for s in _MODULE_SOURCES if getattr(args, s, None) is not None]
    if getattr(args, "bottom", None) and not getattr(args, "top", None):
        raise ValueError("--bottom needs --top")
    if len(given) != 1:
        raise ValueError(
            "give exactly one of --module, --poset, --shape, "
            "--bottom/--top, --simple, --projective"
        )
    which = given[0]
    if which == "module":
        return hecke.HeckeModule.from_json(payload(args.module))
    if which == "poset":
        return hecke.poset_module(_load_poset(args))
    if which == "shape":
        return hecke.tableau_module(parse_shape(args.shape))
    if which == "bottom":
        return hecke.interval_module(
            parse_permutation(args.bottom), parse_permutation(args.top)
        )
    if which == "simple":
        return hecke.simple_module(_parse_parts(args.simple))
    return hecke.projective(parse_generalized(args.projective))


# ---------------------------------------------------------------------------
# output


def _table_lines(data, indent=""):
    if isinstance(data, dict):
        for key in data:
            value = data[key]
            if isinstance(value, (dict, list)):
                yield "%s%s:" % (indent, key)
                yield from _table_lines(value, indent + "  ")
            else:
                yield "%s%s: %s" % (indent, key, value)
    elif isinstance(data, list):
        for value in data:
            if isinstance(value, (dict, list)):
                yield from _table_lines(value, indent + "  ")
            else:
                yield "%s%s" % (indent, value)
    else:
        yield "%s%s" % (indent, data)


def _emit(args, data, dot=None):
    if args.format == "json":
        json.dump(data, sys.stdout, sort_keys=True)
        sys.stdout.write("\n")
    elif args.format == "table":
        for line in _table_lines(data):
            sys.stdout.write(line + "\n")
    else:  # dot
        if dot is None:
            raise ValueError("this output has no DOT form; use json or table")
        sys.stdout.write(dot + "\n")
    return 0


# ---------------------------------------------------------------------------
# poset commands


def cmd_poset_check_regular(args):
    poset = _load_poset(args)
    return _emit(args, {"n": poset.n, "regular": poset.is_regular()})


def cmd_poset_linexts(args):
    poset = _load_poset(args)
    side = _side(args)
    exts = poset.linear_extensions(side)
    data = {
        "side": side,
        "count": len(exts),
        "extensions": [p.to_json() for p in exts],
    }
    return _emit(args, data)


def cmd_poset_tau(args):
    poset = _load_poset(args)
    tab = schur_recognize(poset)
    if tab is None:
        return _emit(args, {"schur": False})
    return _emit(
        args,
        {"schur": True, "shape": tab.shape.to_json(), "tableau": tab.to_json()},
    )


def cmd_poset_kp(args):
    poset = _load_poset(args)
    if args.form == "fundamental":
        return _emit(args, kp(poset).to_json())
    m = args.m if args.m is not None else poset.n
    table = kp(poset, "monomial", m=m)
    data = {
        "m": m,
        "coefficients": [[list(c), v] for c, v in sorted(table.items())],
    }
    return _emit(args, data)


# ---------------------------------------------------------------------------
# interval commands


def cmd_interval_compute(args):
    interval = weak_interval(
        parse_permutation(args.bottom), parse_permutation(args.top), _side(args)
    )
    return _emit(args, interval.to_json(), dot=interval.to_dot())


def cmd_interval_class(args):
    interval = weak_interval(
        parse_permutation(args.bottom), parse_permutation(args.top), LEFT
    )
    descriptor = equivalence_class(interval)
    return _emit(args, descriptor.to_json())


def cmd_interval_dot(args):
    interval = weak_interval(
        parse_permutation(args.bottom), parse_permutation(args.top), _side(args)
    )
    sys.stdout.write(interval.to_dot() + "\n")
    return 0


# ---------------------------------------------------------------------------
# module commands


def cmd_module_build(args):
    mod = _build_module(args)
    dot = mod.to_dot() if mod.maps is not None else None
    return _emit(args, mod.to_json(), dot=dot)


def cmd_module_ch(args):
    mod = _build_module(args)
    return _emit(args, hecke.characteristic(mod).to_json())


def cmd_module_cover(args):
    poset = _poset_source(args)
    bp, _, _ = hecke.balanced_labels(poset)
    eta = hecke.cover_witness(poset)
    if not eta.is_surjective():
        raise CheckFailed("cover map is not surjective")
    data = {
        "generalized_composition": bp.to_json(),
        "projective_dim": eta.source.dim,
        "module_dim": eta.target.dim,
        "surjective": True,
    }
    return _emit(args, data)


def cmd_module_hull(args):
    poset = _poset_source(args)
    _, bi, _ = hecke.balanced_labels(poset)
    iota = hecke.hull_witness(poset)
    if not iota.is_injective():
        raise CheckFailed("hull map is not injective")
    data = {
        "generalized_composition": bi.to_json(),
        "module_dim": iota.source.dim,
        "injective_dim": iota.target.dim,
        "injective": True,
    }
    return _emit(args, data)


def cmd_module_iso(args):
    a = hecke.HeckeModule.from_json(payload(args.first))
    b = hecke.HeckeModule.from_json(payload(args.second))
    result = hecke.is_isomorphic(a, b, tries=args.tries, seed=args.seed)
    return _emit(args, {"status": result.status, "reason": result.reason})


def cmd_module_indecomp(args):
    mod = _build_module(args)
    return _emit(args, {"indecomposable": hecke.is_indecomposable(mod)})


def cmd_module_filtration(args):
    poset = _poset_source(args)
    filtration = distinguished_filtration(poset)
    return _emit(args, filtration.to_json())


# ---------------------------------------------------------------------------
# shape commands


def cmd_shape_bal(args):
    shape = parse_shape(args.shape)
    data = {
        "proj": balanced_generalized_composition(shape, "proj").to_json(),
        "inj": balanced_generalized_composition(shape, "inj").to_json(),
    }
    return _emit(args, data)


def cmd_shape_bracket(args):
    g = parse_generalized(args.composition)
    data = {
        "blocks": g.to_json(),
        "bracket": sorted(list(c) for c in g.bracket()),
    }
    return _emit(args, data)


def cmd_shape_predicates(args):
    shape = parse_shape(args.shape)
    info = shape.predicates()
    data = {
        "shape": shape.to_json(),
        "connected": info["connected"],
        "basic": info["basic"],
        "is_ribbon": info["is_ribbon"],
        "contains_disconnected_ribbon": info["contains_disconnected_ribbon"],
        "components": [c.to_json() for c in info["components"]],
    }
    return _emit(args, data)


# ---------------------------------------------------------------------------
# tableau commands


def cmd_tableau_enumerate(args):
    shape = parse_shape(args.shape)
    tabs = enumerate_syt(shape)
    data = {"count": len(tabs)}
    if not args.count_only:
        data["tableaux"] = [t.to_json() for t in tabs]
    return _emit(args, data)


def cmd_tableau_rsk(args):
    perm = parse_permutation(args.perm)
    p, q = rsk(perm)
    return _emit(args, {"insertion": p.to_json(), "recording": q.to_json()})


def cmd_tableau_rectify(args):
    t = Tableau.from_json(payload(args.tableau))
    return _emit(args, rectify(t).to_json())


def cmd_tableau_reading(args):
    if args.tau is not None:
        tau = Tableau.from_json(payload(args.tau))
    elif args.shape is not None:
        tau = canonical_filling(parse_shape(args.shape), args.labeling)
    else:
        raise ValueError("give --tau or --shape")
    t = Tableau.from_json(payload(args.tableau))
    word = reading(tau, t)
    data = {"word": word.to_json()}
    if word.n <= 9:
        data["compact"] = word.compact()
    return _emit(args, data)


# ---------------------------------------------------------------------------
# verify commands


def _print_report(args, report):
    if args.format == "json":
        sys.stdout.write(verify_checks.reports_to_jsonl([report]))
    else:
        sys.stdout.write(report.summary_line() + "\n")
    sys.stdout.flush()


def cmd_verify_run(args):
    params = dict(payload(args.params)) if args.params else {}
    if args.seed is not None and "seed" not in params:
        params["seed"] = args.seed
    report = verify_checks.run_check(args.check, params)
    _print_report(args, report)
    if report.failures:
        raise CheckFailed(
            "%s: %d of %d instances failed"
            % (args.check, len(report.failures), report.instances)
        )
    return 0


def cmd_verify_suite(args):
    reports = verify_checks.run_suite(
        args.level, progress=lambda r: _print_report(args, r)
    )
    failed = [r for r in reports if r.failures]
    total = sum(r.instances for r in reports)
    print(
        "%d checks, %d instances, %d failing checks"
        % (len(reports), total, len(failed)),
        file=sys.stderr,
    )
    if failed:
        raise CheckFailed(
            "failing checks: " + ", ".join(r.check_id for r in failed)
        )
    return 0


def cmd_verify_replay(args):
    report = verify_checks.replay(payload(args.payload))
    _print_report(args, report)
    if report.failures:
        raise CheckFailed("replayed instance still fails")
    return 0


# ---------------------------------------------------------------------------
# wiring


def _common(default_format="json"):
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("json", "table", "dot"),
        default=default_format,
        help="output format (default %s)" % default_format,
    )
    common.add_argument("--seed", type=int, default=None, help="RNG seed")
    common.add_argument(
        "--cap-n", type=int, default=None, help="override the size cap"
    )
    common.add_argument(
        "--cap-dim", type=int, default=None, help="override the dimension cap"
    )
    return common


def _add_module_sources(sub, with_module=True):
    if with_module:
        sub.add_argument("--module", help="module JSON (inline or @path)")
    sub.add_argument("--poset", help="poset JSON (inline or @path)")
    sub.add_argument("--shape", help='skew shape, e.g. "(4,2,1)/(2,1)"')
    sub.add_argument("--bottom", help="interval bottom permutation")
    sub.add_argument("--top", help="interval top permutation")
    sub.add_argument("--simple", help='composition, e.g. "(2,2)"')
    sub.add_argument("--projective", help='generalized composition, e.g. "(2)*(2)"')


def build_parser():
    parser = _Parser(prog="heckeposet", description=__doc__.split("\n")[0])
    groups = parser.add_subparsers(dest="group", metavar="GROUP")

    # poset
    poset = groups.add_parser("poset", help="labeled poset queries")
    psub = poset.add_subparsers(dest="sub", metavar="SUB")
    p = psub.add_parser("check-regular", parents=[_common()])
    p.add_argument("--poset", required=True, help="poset JSON (inline or @path)")
    p.set_defaults(func=cmd_poset_check_regular)
    p = psub.add_parser("linexts", parents=[_common()])
    p.add_argument("--poset", required=True)
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.set_defaults(func=cmd_poset_linexts)
    p = psub.add_parser("tau", parents=[_common()])
    p.add_argument("--poset", required=True)
    p.set_defaults(func=cmd_poset_tau)
    p = psub.add_parser("kp", parents=[_common()])
    p.add_argument("--poset", required=True)
    p.add_argument("--form", choices=("fundamental", "monomial"), default="fundamental")
    p.add_argument("--m", type=int, default=None, help="variables for the monomial form")
    p.set_defaults(func=cmd_poset_kp)

    # interval
    interval = groups.add_parser("interval", help="weak order intervals")
    isub = interval.add_subparsers(dest="sub", metavar="SUB")
    p = isub.add_parser("compute", parents=[_common()])
    p.add_argument("--bottom", required=True)
    p.add_argument("--top", required=True)
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.set_defaults(func=cmd_interval_compute)
    p = isub.add_parser("class", parents=[_common()])
    p.add_argument("--bottom", required=True)
    p.add_argument("--top", required=True)
    p.set_defaults(func=cmd_interval_class)
    p = isub.add_parser("dot", parents=[_common(default_format="dot")])
    p.add_argument("--bottom", required=True)
    p.add_argument("--top", required=True)
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.set_defaults(func=cmd_interval_dot)

    # module
    module = groups.add_parser("module", help="0-Hecke modules")
    msub = module.add_subparsers(dest="sub", metavar="SUB")
    p = msub.add_parser("build", parents=[_common()])
    _add_module_sources(p, with_module=False)
    p.set_defaults(func=cmd_module_build, module=None)
    p = msub.add_parser("ch", parents=[_common()])
    _add_module_sources(p)
    p.set_defaults(func=cmd_module_ch)
    p = msub.add_parser("cover", parents=[_common()])
    p.add_argument("--poset")
    p.add_argument("--shape")
    p.set_defaults(func=cmd_module_cover)
    p = msub.add_parser("hull", parents=[_common()])
    p.add_argument("--poset")
    p.add_argument("--shape")
    p.set_defaults(func=cmd_module_hull)
    p = msub.add_parser("iso", parents=[_common()])
    p.add_argument("--first", required=True, help="module JSON (inline or @path)")
    p.add_argument("--second", required=True, help="module JSON (inline or @path)")
    p.add_argument("--tries", type=int, default=200)
    p.set_defaults(func=cmd_module_iso)
    p = msub.add_parser("indecomp", parents=[_common()])
    _add_module_sources(p)
    p.set_defaults(func=cmd_module_indecomp)
    p = msub.add_parser("filtration", parents=[_common()])
    p.add_argument("--poset")
    p.add_argument("--shape")
    p.set_defaults(func=cmd_module_filtration)

    # shape
    shape = groups.add_parser("shape", help="skew shapes and compositions")
    ssub = shape.add_subparsers(dest="sub", metavar="SUB")
    p = ssub.add_parser("bal", parents=[_common()])
    p.add_argument("--shape", required=True)
    p.set_defaults(func=cmd_shape_bal)
    p = ssub.add_parser("bracket", parents=[_common()])
    p.add_argument("--composition", required=True, help='e.g. "(2)*(2)"')
    p.set_defaults(func=cmd_shape_bracket)
    p = ssub.add_parser("predicates", parents=[_common()])
    p.add_argument("--shape", required=True)
    p.set_defaults(func=cmd_shape_predicates)

    # tableau
    tableau = groups.add_parser("tableau", help="standard Young tableaux")
    tsub = tableau.add_subparsers(dest="sub", metavar="SUB")
    p = tsub.add_parser("enumerate", parents=[_common()])
    p.add_argument("--shape", required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_tableau_enumerate)
    p = tsub.add_parser("rsk", parents=[_common()])
    p.add_argument("--perm", required=True)
    p.set_defaults(func=cmd_tableau_rsk)
    p = tsub.add_parser("rectify", parents=[_common()])
    p.add_argument("--tableau", required=True, help="tableau JSON (inline or @path)")
    p.set_defaults(func=cmd_tableau_rectify)
    p = tsub.add_parser("reading", parents=[_common()])
    p.add_argument("--tableau", required=True, help="tableau JSON (inline or @path)")
    p.add_argument("--tau", help="labeling tableau JSON")
    p.add_argument("--shape", help="shape whose reference labeling to use")
    p.add_argument(
        "--labeling",
        choices=("tau0", "tau1", "T_row", "T_col"),
        default="tau0",
    )
    p.set_defaults(func=cmd_tableau_reading)

    # verify
    verify = groups.add_parser("verify", help="sweeping checks")
    vsub = verify.add_subparsers(dest="sub", metavar="SUB")
    p = vsub.add_parser("run", parents=[_common()])
    p.add_argument("--check", required=True, choices=verify_checks.check_ids())
    p.add_argument("--params", help="check parameters as JSON")
    p.set_defaults(func=cmd_verify_run)
    p = vsub.add_parser("suite", parents=[_common()])
    p.add_argument("--level", choices=("fast", "full", "extended"), default="fast")
    p.set_defaults(func=cmd_verify_suite)
    p = vsub.add_parser("replay", parents=[_common()])
    p.add_argument("--payload", required=True, help="failure payload JSON")
    p.set_defaults(func=cmd_verify_replay)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "func"):
        parser.print_usage(sys.stderr)
        return 1
    if args.cap_n is not None:
        config.CAP_N = args.cap_n
    if args.cap_dim is not None:
        config.CAP_DIM = args.cap_dim
    try:
        return args.func(args)
    except CheckFailed as exc:
        print("check failed: %s" % exc, file=sys.stderr)
        return 3
    except (ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        print("invalid input: %s" % exc, file=sys.stderr)
        return 1
    except Exception:  # anything else is a bug, not bad input
        traceback.print_exc()
        return 2


if __name__ == "__main__":
    sys.exit(main())
