"""Plain-text file formats for graphs, colorings, sequences and partitions.

Graph (DIMACS-like, 1-based endpoints)::

    c optional comment
    p edge <n> <m>
    e <u> <v>

Coloring::

    k <k>
    <c_1> <c_2> ... <c_n>

Sequence (1-based vertices)::

    s <count>
    r <vertex> <from> <to>

Partition::

    t <levels> <degree_bound>
    <L_1> <L_2> ... <L_n>

Lines starting with ``c`` are comments in every format.
"""

from __future__ import annotations

from pathlib import Path

from .errors import InputError, RecoloringError
from .graph import Coloring, Graph, RecolorSequence, RecolorStep
from .partition import LevelPartition

__all__ = [
    "ParseError",
    "format_graph",
    "parse_graph",
    "format_coloring",
    "parse_coloring",
    "format_sequence",
    "parse_sequence",
    "format_partition",
    "parse_partition",
    "read_graph",
    "read_coloring",
    "read_sequence",
    "read_partition",
    "write_text",
]


class ParseError(RecoloringError):
    """Malformed input file; ``line`` and ``column`` are 1-based."""

    def __init__(self, message, line, column=1, source=None):
        where = f"{source}:" if source else ""
        super().__init__(f"{where}{line}:{column}: {message}")
        self.line = line
        self.column = column


def _tokens(text: str):
    """Yield ``(line_no, [(col, token), ...])`` for every non-comment, non-blank line."""
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("c"):
            continue
        toks = []
        col = 0
        for part in raw.split():
            col = raw.index(part, col)
            toks.append((col + 1, part))
            col += len(part)
        yield line_no, toks


def _int(tok, line_no, what, source):
    col, text = tok
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected integer {what}, got {text!r}", line_no, col, source) from None


def _header(lines, tag, arity, source):
    try:
        line_no, toks = next(lines)
    except StopIteration:
        raise ParseError(f"missing '{tag}' header", 1, 1, source) from None
    if toks[0][1] != tag or len(toks) != arity + 1:
        raise ParseError(f"expected '{tag}' header with {arity} fields", line_no, toks[0][0], source)
    return line_no, toks[1:]


def format_graph(g: Graph) -> str:
    out = [f"p edge {g.n} {g.m}"]
    out += [f"e {u + 1} {v + 1}" for u, v in g.sorted_edges()]
    return "\n".join(out) + "\n"


def parse_graph(text: str, source=None) -> Graph:
    lines = _tokens(text)
    line_no, toks = next(lines, (1, [(1, "")]))
    if len(toks) != 4 or toks[0][1] != "p" or toks[1][1] != "edge":
        raise ParseError("expected 'p edge <n> <m>' header", line_no, toks[0][0], source)
    n = _int(toks[2], line_no, "vertex count", source)
    m = _int(toks[3], line_no, "edge count", source)
    edges = []
    seen = set()
    for line_no, toks in lines:
        if toks[0][1] != "e" or len(toks) != 3:
            raise ParseError("expected 'e <u> <v>'", line_no, toks[0][0], source)
        u = _int(toks[1], line_no, "endpoint", source)
        v = _int(toks[2], line_no, "endpoint", source)
        for tok, x in ((toks[1], u), (toks[2], v)):
            if not 1 <= x <= n:
                raise ParseError(f"endpoint {x} outside 1..{n}", line_no, tok[0], source)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line_no, toks[1][0], source)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {u} {v}", line_no, toks[0][0], source)
        seen.add(key)
        edges.append((u - 1, v - 1))
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}", 1, 1, source)
    return Graph.from_edges(n, edges)


def format_coloring(c: Coloring) -> str:
    return f"k {c.k}\n" + " ".join(map(str, c.colors)) + "\n"


def parse_coloring(text: str, source=None) -> Coloring:
    lines = _tokens(text)
    line_no, fields = _header(lines, "k", 1, source)
    k = _int(fields[0], line_no, "color count", source)
    if k < 1:
        raise ParseError("color count must be positive", line_no, fields[0][0], source)
    colors = []
    for line_no, toks in lines:
        for tok in toks:
            c = _int(tok, line_no, "color", source)
            if not 1 <= c <= k:
                raise ParseError(f"color {c} outside 1..{k}", line_no, tok[0], source)
            colors.append(c)
    return Coloring(k, tuple(colors))


def format_sequence(seq: RecolorSequence) -> str:
    out = [f"s {len(seq)}"]
    out += [f"r {s.vertex + 1} {s.from_color} {s.to_color}" for s in seq]
    return "\n".join(out) + "\n"


def parse_sequence(text: str, source=None) -> RecolorSequence:
    lines = _tokens(text)
    line_no, fields = _header(lines, "s", 1, source)
    count = _int(fields[0], line_no, "step count", source)
    steps = []
    for line_no, toks in lines:
        if toks[0][1] != "r" or len(toks) != 4:
            raise ParseError("expected 'r <vertex> <from> <to>'", line_no, toks[0][0], source)
        v, a, b = (_int(t, line_no, "field", source) for t in toks[1:])
        if v < 1:
            raise ParseError(f"vertex {v} must be 1-based", line_no, toks[1][0], source)
        if a == b:
            raise ParseError("step does not change the color", line_no, toks[3][0], source)
        steps.append(RecolorStep(v - 1, a, b))
    if len(steps) != count:
        raise ParseError(f"header declares {count} steps, found {len(steps)}", 1, 1, source)
    return RecolorSequence(tuple(steps))


def format_partition(p: LevelPartition) -> str:
    return f"t {p.t} {p.degree_bound}\n" + " ".join(map(str, p.levels)) + "\n"


def parse_partition(text: str, source=None) -> LevelPartition:
    lines = _tokens(text)
    line_no, fields = _header(lines, "t", 2, source)
    t = _int(fields[0], line_no, "level count", source)
    bound = _int(fields[1], line_no, "degree bound", source)
    levels = []
    for line_no, toks in lines:
        for tok in toks:
            x = _int(tok, line_no, "level", source)
            if not 1 <= x <= t:
                raise ParseError(f"level {x} outside 1..{t}", line_no, tok[0], source)
            levels.append(x)
    try:
        p = LevelPartition(tuple(levels), bound)
    except InputError as exc:
        raise ParseError(str(exc), line_no, 1, source) from None
    if p.t != t:
        raise ParseError(f"header declares {t} levels, found {p.t}", 1, 1, source)
    return p


def _read(path, parser):
    path = Path(path)
    return parser(path.read_text(), source=str(path))


def read_graph(path) -> Graph:
    return _read(path, parse_graph)


def read_coloring(path) -> Coloring:
    return _read(path, parse_coloring)


def read_sequence(path) -> RecolorSequence:
    return _read(path, parse_sequence)


def read_partition(path) -> LevelPartition:
    return _read(path, parse_partition)


def write_text(path, text: str) -> None:
    Path(path).write_text(text)
