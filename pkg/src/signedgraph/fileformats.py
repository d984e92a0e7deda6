"""Plain-text graph and orientation formats, plus DOT export.

Graph files:

    SG 1
    n 5
    e 0 1 +
    e 0 3 -
    ...

Orientation files carry the checksum of the graph they were made for:

    OR 1
    bind 3f2c9a1b8d04
    o 0 +1 -1
    ...

Both formats round-trip exactly, edge order included.  Blank lines and
lines starting with ``#`` are ignored.
"""

from .core import Edge, GraphError, SignedGraph
from .orientation import Orientation

GRAPH_MAGIC = "SG 1"
ORIENT_MAGIC = "OR 1"


class FormatError(ValueError):
    """Malformed graph or orientation file."""


def _sign_char(s: int) -> str:
    return "+" if s > 0 else "-"


def serialize_graph(g: SignedGraph) -> str:
    lines = [GRAPH_MAGIC, "n %d" % g.n]
    for e in g.edges:
        lines.append("e %d %d %s" % (e.u, e.v, _sign_char(e.sign)))
    return "\n".join(lines) + "\n"


def _meaningful_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def parse_graph(text: str) -> SignedGraph:
    lines = list(_meaningful_lines(text))
    if not lines or lines[0][1] != GRAPH_MAGIC:
        raise FormatError("missing '%s' header" % GRAPH_MAGIC)
    if len(lines) < 2 or not lines[1][1].startswith("n "):
        raise FormatError("missing 'n <count>' line")
    try:
        n = int(lines[1][1][2:])
    except ValueError:
        raise FormatError("bad vertex count on line %d" % lines[1][0]) from None
    edges = []
    for lineno, line in lines[2:]:
        parts = line.split()
        if len(parts) != 4 or parts[0] != "e":
            raise FormatError("line %d: expected 'e <u> <v> <+|->'" % lineno)
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise FormatError("line %d: bad endpoint" % lineno) from None
        if parts[3] == "+":
            s = 1
        elif parts[3] == "-":
            s = -1
        else:
            raise FormatError("line %d: bad sign %r" % (lineno, parts[3]))
        edges.append(Edge(u, v, s))
    try:
        return SignedGraph(n, tuple(edges))
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def serialize_orientation(eta: Orientation) -> str:
    lines = [ORIENT_MAGIC, "bind %s" % eta.binding]
    for eid, (a, b) in enumerate(eta.pairs):
        lines.append("o %d %+d %+d" % (eid, a, b))
    return "\n".join(lines) + "\n"


def parse_orientation(text: str, g: SignedGraph) -> Orientation:
    lines = list(_meaningful_lines(text))
    if not lines or lines[0][1] != ORIENT_MAGIC:
        raise FormatError("missing '%s' header" % ORIENT_MAGIC)
    if len(lines) < 2 or not lines[1][1].startswith("bind "):
        raise FormatError("missing 'bind <checksum>' line")
    binding = lines[1][1][5:].strip()
    if binding != g.checksum:
        raise FormatError(
            "orientation bound to %s but graph checksum is %s" % (binding, g.checksum)
        )
    pairs = [None] * g.m
    for lineno, line in lines[2:]:
        parts = line.split()
        if len(parts) != 4 or parts[0] != "o":
            raise FormatError("line %d: expected 'o <edge-id> <±1> <±1>'" % lineno)
        try:
            eid, a, b = int(parts[1]), int(parts[2]), int(parts[3])
        except ValueError:
            raise FormatError("line %d: bad integer" % lineno) from None
        if not (0 <= eid < g.m):
            raise FormatError("line %d: edge id %d out of range" % (lineno, eid))
        if pairs[eid] is not None:
            raise FormatError("line %d: duplicate edge id %d" % (lineno, eid))
        pairs[eid] = (a, b)
    missing = [i for i, p in enumerate(pairs) if p is None]
    if missing:
        raise FormatError("missing incidence pairs for edge ids %s" % missing)
    try:
        return Orientation.from_pairs(g, pairs)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def to_dot(g: SignedGraph) -> str:
    """DOT rendering; negative edges come out dashed."""
    lines = ["graph signed {"]
    for v in range(g.n):
        lines.append("  %d;" % v)
    for e in g.edges:
        if e.sign > 0:
            lines.append("  %d -- %d;" % (e.u, e.v))
        else:
            lines.append("  %d -- %d [style=dashed];" % (e.u, e.v))
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graph(path) -> SignedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(path, g: SignedGraph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_graph(g))


def read_orientation(path, g: SignedGraph) -> Orientation:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_orientation(fh.read(), g)


def write_orientation(path, eta: Orientation) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_orientation(eta))
