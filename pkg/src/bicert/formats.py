"""Text formats: whitespace edge lists, DIMACS, and DOT rendering."""

from __future__ import annotations

from .certificates import CheckOutcome, verify_outcome
from .errors import InputError, ParseError
from .graph import Graph, build_graph

# fixed fills for the two sides; certificate edges go bold red
_SIDE_COLORS = ("#a6cee3", "#fdbf6f")


def _int_token(token: str, line_no: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} {token!r} is not an integer", line_no) from None


def parse_edge_list(text: str) -> Graph:
    """Parse "u v" lines; "#" starts a comment; blank lines are skipped.

    The first significant line may be a header ``n <count>`` declaring the
    vertex count (this is how isolated trailing vertices survive a round
    trip).  Without a header, n is one more than the largest id seen.
    Duplicate edge lines become parallel edges; ``u u`` is a loop.
    """
    declared: int | None = None
    header_possible = True
    pairs: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header_possible and tokens[0] == "n":
            if len(tokens) != 2:
                raise ParseError("header must be 'n <count>'", line_no)
            declared = _int_token(tokens[1], line_no, "vertex count")
            if declared < 0:
                raise ParseError(f"vertex count {declared} is negative", line_no)
            header_possible = False
            continue
        header_possible = False
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {len(tokens)} tokens", line_no)
        u = _int_token(tokens[0], line_no, "vertex id")
        v = _int_token(tokens[1], line_no, "vertex id")
        if u < 0 or v < 0:
            raise ParseError(f"vertex ids must be non-negative: {u} {v}", line_no)
        if declared is not None and (u >= declared or v >= declared):
            raise ParseError(
                f"vertex id exceeds declared count {declared}: {u} {v}", line_no
            )
        pairs.append((u, v))
    n = declared if declared is not None else (
        1 + max((max(u, v) for u, v in pairs), default=-1)
    )
    return build_graph(n, pairs)


def write_edge_list(g: Graph) -> str:
    """Serialize with an ``n`` header so isolated vertices round-trip."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.pairs)
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS: "c" comments, one "p edge <n> <m>", "e <u> <v>" 1-based.

    Every malformation is reported with its line number: a missing or
    duplicate problem line, an edge before it, vertices outside [1, n],
    unknown line types, or a final edge count differing from the declared m.
    """
    n: int | None = None
    declared_m = 0
    pairs: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", line_no)
            if len(tokens) != 4 or tokens[1] != "edge":
                raise ParseError("problem line must be 'p edge <n> <m>'", line_no)
            n = _int_token(tokens[2], line_no, "vertex count")
            declared_m = _int_token(tokens[3], line_no, "edge count")
            if n < 0 or declared_m < 0:
                raise ParseError("counts must be non-negative", line_no)
        elif tokens[0] == "e":
            if n is None:
                raise ParseError("edge line before problem line", line_no)
            if len(tokens) != 3:
                raise ParseError("edge line must be 'e <u> <v>'", line_no)
            u = _int_token(tokens[1], line_no, "vertex id")
            v = _int_token(tokens[2], line_no, "vertex id")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(
                    f"vertex ids must lie in [1, {n}]: {u} {v}", line_no
                )
            pairs.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {tokens[0]!r}", line_no)
    if n is None:
        raise ParseError("missing problem line")
    if len(pairs) != declared_m:
        raise ParseError(
            f"problem line declared {declared_m} edges, found {len(pairs)}"
        )
    return build_graph(n, pairs)


def write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.pairs)
    return "\n".join(lines) + "\n"


def write_dot(g: Graph, outcome: CheckOutcome) -> str:
    """Render the graph with its certificate as byte-stable DOT.

    Bipartite outcomes fill the two sides with two fixed colors; odd-cycle
    outcomes draw the certificate's edges (matched by id) bold red.  The
    outcome is re-verified first; one that fails is an input error.  An
    empty graph renders as a valid empty DOT body.
    """
    if not verify_outcome(g, outcome):
        raise InputError("outcome does not verify against this graph")
    lines = ["graph certified {"]
    if outcome.bipartition is not None:
        side = outcome.bipartition.side
        for v in range(g.n):
            lines.append(
                f'  {v} [style=filled, fillcolor="{_SIDE_COLORS[side[v]]}"];'
            )
        lines.extend(f"  {u} -- {v};" for u, v in g.pairs)
    else:
        in_cycle = set(outcome.odd_cycle.edge_ids)
        for v in range(g.n):
            lines.append(f"  {v};")
        for eid, (u, v) in enumerate(g.pairs):
            if eid in in_cycle:
                lines.append(f"  {u} -- {v} [color=red, penwidth=2.0];")
            else:
                lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
