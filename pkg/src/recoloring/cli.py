"""Command-line entry point.

Every command prints one ``key=value`` summary line on stdout and writes its
data (graph, coloring, sequence, partition) to ``--out`` when given.

Exit codes: 0 success, 1 malformed input or usage, 2 precondition violated,
3 verification failed, 4 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import math
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import formats
from .errors import (
    BudgetExceededError,
    InputError,
    InvalidSequenceError,
    PreconditionError,
    RecoloringError,
)
from .generators import (
    icosahedron,
    random_degenerate,
    random_proper_coloring,
    square_grid,
    triangulated_grid,
)
from .graph import degeneracy_order, densest_subgraph, is_proper, verify_sequence
from .linear import transform_linear
from .oracle import DEFAULT_BUDGET, find_frozen, reconf_stats, shortest_transformation
from .partition import PartitionFailure, build_partition
from .sparse import eliminate_color, recolor_vertex, sparse_length_bound, transform_sparse

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_PRECONDITION = 2
EXIT_VERIFY = 3
EXIT_BUDGET = 4


class UsageError(RecoloringError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunReport:
    command: str
    inputs: dict[str, str] = field(default_factory=dict)
    sequence_length: int | None = None
    per_vertex_max_recolorings: int | None = None
    bound_checked: bool | None = None
    extra: dict[str, object] = field(default_factory=dict)
    started: float = field(default_factory=time.perf_counter)

    def digest(self, name, path):
        self.inputs[name.rstrip("_")] = hashlib.sha256(Path(path).read_bytes()).hexdigest()[:12]

    def record_sequence(self, seq, n):
        self.sequence_length = len(seq)
        self.per_vertex_max_recolorings = max(seq.recolor_counts(n), default=0)

    def line(self) -> str:
        parts = [f"command={self.command}"]
        parts += [f"{k}={v}" for k, v in self.extra.items()]
        if self.sequence_length is not None:
            parts.append(f"sequence_length={self.sequence_length}")
            parts.append(f"per_vertex_max_recolorings={self.per_vertex_max_recolorings}")
        if self.bound_checked is not None:
            parts.append(f"bound_checked={str(self.bound_checked).lower()}")
        parts += [f"digest_{k}={v}" for k, v in self.inputs.items()]
        elapsed = (time.perf_counter() - self.started) * 1000
        parts.append(f"elapsed_ms={elapsed:.1f}")
        return " ".join(parts)


def _load(report, args, name, reader):
    path = getattr(args, name)
    if path is None:
        raise UsageError(f"--{name.rstrip('_')} is required")
    report.digest(name, path)
    return reader(path)


def _emit(args, text):
    if args.out:
        formats.write_text(args.out, text)


def cmd_generate(args, report):
    kind = args.kind
    if kind == "icosahedron":
        g = icosahedron()
    elif kind == "tri-grid":
        g = triangulated_grid(args.m)
    elif kind == "grid":
        g = square_grid(args.m)
    elif kind == "random-degenerate":
        if args.n is None or args.d is None:
            raise UsageError("random-degenerate needs --n and --d")
        g = random_degenerate(args.n, args.d, args.seed)
    else:  # coloring
        g = _load(report, args, "graph", formats.read_graph)
        if args.k is None:
            raise UsageError("coloring needs --k")
        c = random_proper_coloring(g, args.k, args.seed)
        report.extra.update(kind=kind, n=g.n, k=c.k)
        _emit(args, formats.format_coloring(c))
        return EXIT_OK
    report.extra.update(kind=kind, n=g.n, m=g.m)
    _emit(args, formats.format_graph(g))
    return EXIT_OK


def cmd_partition(args, report):
    g = _load(report, args, "graph", formats.read_graph)
    p = build_partition(g, args.d)
    if isinstance(p, PartitionFailure):
        report.extra.update(status="failed", residual=len(p.vertices), witness_mad_at_least=args.d)
        return EXIT_PRECONDITION
    report.extra.update(status="ok", levels=p.t, degree_bound=p.degree_bound)
    _emit(args, formats.format_partition(p))
    return EXIT_OK


def _pick_sparse_d(g, k):
    for d in range(1, k):
        if not isinstance(build_partition(g, d), PartitionFailure):
            return d
    return None


def cmd_transform(args, report):
    g = _load(report, args, "graph", formats.read_graph)
    alpha = _load(report, args, "from_", formats.read_coloring)
    beta = _load(report, args, "to", formats.read_coloring)
    k = alpha.k if args.k is None else args.k
    alpha, beta = alpha.with_k(k), beta.with_k(k)
    if not (is_proper(g, alpha) and is_proper(g, beta)):
        raise InputError("both colorings must be proper")
    d_linear = degeneracy_order(g).degeneracy + 1
    mode = args.mode
    d_sparse = args.d
    if mode == "auto":
        if k >= 2 * d_linear:
            mode = "linear"
        else:
            d_sparse = _pick_sparse_d(g, k)
            if d_sparse is None:
                witness = build_partition(g, k - 1) if k > 1 else None
                raise PreconditionError(
                    f"k={k} < 2d={2 * d_linear} and no partition of degree <= {k - 2}"
                    + (f"; dense residual on {len(witness.vertices)} vertices" if witness else ""),
                    witness=witness,
                )
            mode = "sparse"
    if mode == "linear":
        seq = transform_linear(g, alpha, beta, k)
        report.record_sequence(seq, g.n)
        report.bound_checked = report.per_vertex_max_recolorings <= d_linear
        report.extra.update(mode="linear", d=d_linear, k=k)
    else:
        if d_sparse is None:
            d_sparse = _pick_sparse_d(g, k)
            if d_sparse is None:
                raise PreconditionError(f"no partition of degree <= {k - 2} exists")
        seq = transform_sparse(g, d_sparse, alpha, beta)
        report.record_sequence(seq, g.n)
        density, _ = densest_subgraph(g) if g.n else (Fraction(0), [])
        eps = d_sparse - density
        if 0 < eps < d_sparse:
            report.bound_checked = len(seq) <= sparse_length_bound(g.n, d_sparse, eps)
        else:
            report.bound_checked = False
        report.extra.update(mode="sparse", d=d_sparse, k=k)
    if verify_sequence(g, alpha, seq) != beta:
        report.extra.update(status="verification_failed")
        return EXIT_VERIFY
    _emit(args, formats.format_sequence(seq))
    return EXIT_OK


def cmd_recolor_vertex(args, report):
    g = _load(report, args, "graph", formats.read_graph)
    p = _load(report, args, "partition", formats.read_partition)
    gamma = _load(report, args, "from_", formats.read_coloring)
    if args.vertex is None:
        raise UsageError("--vertex is required")
    v = args.vertex - 1
    seq, out = recolor_vertex(g, p, gamma, v)
    report.record_sequence(seq, g.n)
    report.bound_checked = True
    report.extra.update(vertex=args.vertex, new_color=out[v])
    _emit(args, formats.format_sequence(seq))
    return EXIT_OK


def cmd_eliminate_color(args, report):
    g = _load(report, args, "graph", formats.read_graph)
    p = _load(report, args, "partition", formats.read_partition)
    gamma = _load(report, args, "from_", formats.read_coloring)
    seq, _ = eliminate_color(g, p, gamma, gamma.k)
    report.record_sequence(seq, g.n)
    report.bound_checked = True
    report.extra.update(dead_color=gamma.k)
    _emit(args, formats.format_sequence(seq))
    return EXIT_OK


def cmd_verify(args, report):
    g = _load(report, args, "graph", formats.read_graph)
    start = _load(report, args, "from_", formats.read_coloring)
    seq = _load(report, args, "seq", formats.read_sequence)
    report.record_sequence(seq, g.n)
    if not is_proper(g, start):
        raise InputError("start coloring is not proper")
    try:
        end = verify_sequence(g, start, seq)
    except InvalidSequenceError as exc:
        report.extra.update(status="invalid", step=exc.step)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    if args.to is not None:
        target = _load(report, args, "to", formats.read_coloring)
        if end.colors != target.colors:
            report.extra.update(status="wrong_end")
            return EXIT_VERIFY
    report.extra.update(status="valid")
    _emit(args, formats.format_coloring(end))
    return EXIT_OK


def cmd_oracle(args, report):
    g = _load(report, args, "graph", formats.read_graph)
    if args.query == "distance":
        alpha = _load(report, args, "from_", formats.read_coloring)
        beta = _load(report, args, "to", formats.read_coloring)
        k = alpha.k if args.k is None else args.k
        dist = shortest_transformation(g, k, alpha.with_k(k), beta.with_k(k), args.budget)
        report.extra.update(distance="inf" if math.isinf(dist) else dist)
        return EXIT_OK
    if args.k is None:
        raise UsageError("--k is required")
    if args.query == "stats":
        stats = reconf_stats(g, args.k, args.budget, threads=args.threads)
        report.extra.update(
            colorings=stats.num_colorings,
            components=stats.num_components,
            diameter="inf" if math.isinf(stats.diameter) else int(stats.diameter),
            diameter_exact=str(stats.diameter_exact).lower(),
            frozen=stats.num_frozen,
        )
        return EXIT_OK
    frozen = find_frozen(g, args.k, args.budget)
    report.extra.update(frozen=len(frozen))
    _emit(args, "".join(formats.format_coloring(c) for c in frozen))
    return EXIT_OK


def cmd_mad(args, report):
    g = _load(report, args, "graph", formats.read_graph)
    value, witness = densest_subgraph(g)
    report.extra.update(mad=str(value), witness_size=len(witness))
    return EXIT_OK


def cmd_degeneracy(args, report):
    g = _load(report, args, "graph", formats.read_graph)
    cert = degeneracy_order(g)
    report.extra.update(degeneracy=cert.degeneracy)
    _emit(args, " ".join(str(v + 1) for v in cert.order) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--graph")
    common.add_argument("--from", dest="from_")
    common.add_argument("--to")
    common.add_argument("--k", type=int)
    common.add_argument("--d", type=int)
    common.add_argument("--mode", choices=["linear", "sparse", "auto"], default="auto")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--partition")
    common.add_argument("--seq")
    common.add_argument("--vertex", type=int, help="1-based vertex id")
    common.add_argument("--m", type=int, default=1)
    common.add_argument("--n", type=int)

    parser = _Parser(prog="recoloring", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    gen = sub.add_parser("generate", parents=[common])
    gen.add_argument(
        "kind", choices=["icosahedron", "tri-grid", "grid", "random-degenerate", "coloring"]
    )
    gen.set_defaults(func=cmd_generate)
    part = sub.add_parser("partition", parents=[common])
    part.set_defaults(func=cmd_partition)
    sub.add_parser("transform", parents=[common]).set_defaults(func=cmd_transform)
    sub.add_parser("recolor-vertex", parents=[common]).set_defaults(func=cmd_recolor_vertex)
    sub.add_parser("eliminate-color", parents=[common]).set_defaults(func=cmd_eliminate_color)
    sub.add_parser("verify", parents=[common]).set_defaults(func=cmd_verify)
    orc = sub.add_parser("oracle", parents=[common])
    orc.add_argument("query", choices=["stats", "distance", "frozen"])
    orc.set_defaults(func=cmd_oracle)
    sub.add_parser("mad", parents=[common]).set_defaults(func=cmd_mad)
    sub.add_parser("degeneracy", parents=[common]).set_defaults(func=cmd_degeneracy)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    name = args.command if args.command != "oracle" else f"oracle-{args.query}"
    report = RunReport(name)
    try:
        code = args.func(args, report)
    except (formats.ParseError, InputError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        report.extra.update(status="precondition_failed")
        print(report.line())
        return EXIT_PRECONDITION
    except InvalidSequenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    print(report.line())
    return code


if __name__ == "__main__":
    sys.exit(main())
