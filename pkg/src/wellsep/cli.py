"""Command-line front end.

Exit codes: 0 success, 2 input/parse error, 3 numerical non-convergence,
4 precondition violation.
"""

import argparse
import logging
import sys

from . import __version__, experiments
from .errors import (
    CoincidentCenter, DegenerateDisc, InvalidRegime, NonConvergence, ParseError,
    ShiftCollision, TableIOError, ZeroEigenvalue,
)
from .gershgorin import RADIUS_MODES, classify_separation, compute_discs, separation_report
from .mmio import (
    ResultTable, content_hash, format_matrix_market, read_matrix_market, write_matrix_market,
    write_table,
)
from .perron import compare_starts, gen_perron_test
from .perturb import gen_hessenberg_positive, gen_separated_symmetric, gen_structured_S

log = logging.getLogger("wellsep")

EXIT_OK, EXIT_INPUT, EXIT_NONCONVERGENCE, EXIT_PRECONDITION = 0, 2, 3, 4


def _nonneg_float(text):
    v = float(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {text}")
    return v


def _unit_float(text):
    v = float(text)
    if not 0.0 <= v <= 1.0:
        raise argparse.ArgumentTypeError(f"must lie in [0, 1], got {text}")
    return v


def _pos_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--radius-mode", choices=RADIUS_MODES, default="row")
    common.add_argument("--out", default=None, help="output path (default: stdout)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")

    parser = argparse.ArgumentParser(
        prog="wellsep", description="Gershgorin-based eigenvalue perturbation toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("discs", parents=[common], help="Gershgorin discs of a matrix")
    p.add_argument("matrix")

    p = sub.add_parser("bounds", parents=[common], help="relative errors vs disc bounds")
    p.add_argument("matrix")
    p.add_argument("--truncate", type=_unit_float, default=0.5,
                   help="off-diagonal scale c of the perturbed matrix")
    p.add_argument("--eigvec-trend", metavar="PATH", default=None,
                   help="also write the eigvec_trend table to PATH")

    p = sub.add_parser("interlace", parents=[common], help="interlacing under A + tS")
    p.add_argument("--n", type=_pos_int, default=50)
    p.add_argument("--t", type=_nonneg_float, default=1.0)
    p.add_argument("--trials", type=_pos_int, default=20)

    p = sub.add_parser("condition", parents=[common], help="eigenvector condition bound")
    p.add_argument("--n", type=_pos_int, default=20)
    p.add_argument("--trials", type=_pos_int, default=10)
    p.add_argument("--family", choices=("symmetric", "hessenberg"), default="symmetric")
    p.add_argument("--matrix", default=None, help="check this matrix instead of generating")
    p.add_argument("--delta-scale", type=_nonneg_float, default=0.01)

    p = sub.add_parser("perron", parents=[common], help="seeded vs random power method")
    p.add_argument("--n", type=_pos_int, default=100)
    p.add_argument("--trials", type=_pos_int, default=50)
    p.add_argument("--K", type=float, default=None, help="seed shift (default 2*max diag)")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--max-iter", type=_pos_int, default=10_000)

    p = sub.add_parser("generate", parents=[common], help="write a test matrix (Matrix Market)")
    p.add_argument("--family", choices=("sep-sym", "hessenberg", "perron", "S"), required=True)
    p.add_argument("--n", type=_pos_int, default=100)
    p.add_argument("--sep", choices=("linear", "quadratic"), default="linear")
    return parser


def _metadata(args, **extra):
    config = {k: v for k, v in sorted(vars(args).items())}
    meta = {"config": config, "radius_mode": args.radius_mode, "seed": args.seed,
            "tool_version": __version__}
    meta.update(extra)
    return meta


def _emit(table, args, path=None):
    text = write_table(table, args.format, path or args.out)
    if text is not None:
        sys.stdout.write(text)


def _load(path):
    with open(path, "rb") as fh:
        digest = content_hash(fh.read())
    return read_matrix_market(path), digest


def cmd_discs(args):
    A, digest = _load(args.matrix)
    discs = compute_discs(A, args.radius_mode)
    rep = separation_report(discs, args.radius_mode)
    summary = {
        "pairwise_gap": rep.pairwise_gap, "disjoint": rep.disjoint,
        "unit_circle_clear": rep.unit_circle_clear, "origin_clear": rep.origin_clear,
        "sep_constant_linear": rep.sep_constant_linear,
        "sep_constant_quadratic": rep.sep_constant_quadratic,
        "max_radius": rep.max_radius, "separation_order": classify_separation(rep),
    }
    table = ResultTable(
        "discs",
        [("index", "index"), ("center", "complex"), ("row_radius", "real"),
         ("col_radius", "real"), ("min_radius", "real")],
        metadata=_metadata(args, input_hash=digest, separation=summary),
    )
    for d in discs:
        table.append(d.index, d.center, d.row_radius, d.col_radius, d.min_radius)
    _emit(table, args)
    return EXIT_OK


def cmd_bounds(args):
    A, digest = _load(args.matrix)
    rep = separation_report(compute_discs(A), args.radius_mode)
    if not rep.disjoint:
        log.warning("discs are not disjoint in %s mode; bounds may not apply", args.radius_mode)
    records = experiments.error_bounds(A, args.truncate, args.radius_mode)
    held = sum(r.holds for r in records)
    meta = _metadata(args, input_hash=digest, disjoint=rep.disjoint,
                     pairs_within_bound=held, pairs=len(records))
    _emit(experiments.error_bounds_table(records, meta), args)
    if args.eigvec_trend:
        trend = experiments.eigvec_trend_table(A, args.radius_mode, _metadata(args, input_hash=digest))
        write_table(trend, args.format, args.eigvec_trend)
    return EXIT_OK


def cmd_interlace(args):
    results = experiments.interlace_trials(args.n, args.t, args.trials, args.seed)
    table = ResultTable(
        "interlace",
        [("trial", "index"), ("n", "index"), ("t", "real"), ("interlaced", "string"),
         ("first_violation", "index"), ("min_shift", "real"), ("max_shift", "real")],
        metadata=_metadata(args),
    )
    for i, r in enumerate(results):
        shift = r.pert_eigs - r.base_eigs
        table.append(i, args.n, args.t, str(r.interlaced).lower(),
                     -1 if r.first_violation is None else r.first_violation,
                     float(shift.min()), float(shift.max()))
    table.metadata["all_interlaced"] = all(r.interlaced for r in results)
    _emit(table, args)
    return EXIT_OK


def cmd_condition(args):
    table = ResultTable("condition", experiments.CONDITION_COLUMNS, metadata=_metadata(args))
    if args.matrix:
        A, digest = _load(args.matrix)
        table.metadata["input_hash"] = digest
        n = A.n
        delta = args.delta_scale * gen_structured_S(n, args.seed).entries
        records = [experiments.condition_check(A, delta)]
    else:
        records = experiments.condition_trials(args.n, args.trials, args.seed,
                                               args.delta_scale, args.family)
    for i, r in enumerate(records):
        table.append(i, r.n, r.k_est, r.kappa_computed, r.kappa_bound, r.delta_norm,
                     r.bf_bound, r.max_eig_shift, r.status)
    _emit(table, args)
    return EXIT_OK


def cmd_perron(args):
    cmp = compare_starts(args.n, args.trials, args.K, args.tol, args.seed, args.max_iter)
    summary = cmp.summary()
    table = ResultTable("perron_trace", experiments.PERRON_TRACE_COLUMNS,
                        metadata=_metadata(args, summary=summary))
    for trial, trace in cmp.traces:
        for it, res in enumerate(trace.error_log):
            table.append(trial, trace.start_kind, it, res)
    _emit(table, args)
    print(f"mean iterations: random {summary['mean_random']:.2f}, "
          f"seeded {summary['mean_seeded']:.2f}, saving {summary['mean_saving']:.2f} "
          f"({summary['excluded']} excluded)", file=sys.stderr)
    return EXIT_OK


def cmd_generate(args):
    if args.family == "sep-sym":
        A = gen_separated_symmetric(args.n, args.sep, args.seed)
    elif args.family == "hessenberg":
        A = gen_hessenberg_positive(args.n, args.seed, sep=args.sep)
    elif args.family == "perron":
        A = gen_perron_test(args.n, args.seed)
    else:
        A = gen_structured_S(args.n, args.seed)
    if args.out:
        write_matrix_market(A, args.out, "array")
    else:
        sys.stdout.write(format_matrix_market(A, "array"))
    return EXIT_OK


COMMANDS = {
    "discs": cmd_discs, "bounds": cmd_bounds, "interlace": cmd_interlace,
    "condition": cmd_condition, "perron": cmd_perron, "generate": cmd_generate,
}


def main(argv=None):
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ParseError, TableIOError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NonConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except (DegenerateDisc, InvalidRegime, ShiftCollision, CoincidentCenter, ZeroEigenvalue,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
