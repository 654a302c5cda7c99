"""Certificates of two-colorability and their verifiers.

Every checker in this package returns one of two verifiable artifacts: a
``Bipartition`` (a proper two-sided assignment) or an ``OddCycle`` (an
odd-length closed walk through distinct vertices, length 1 meaning a loop).
Verification is linear and independent of how the certificate was found.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InputError
from .graph import ComponentLabeling, Graph, Path


@dataclass(frozen=True)
class Bipartition:
    """Side assignment, one 0/1 entry per vertex."""

    side: list[int]

    def sides(self) -> tuple[list[int], list[int]]:
        """Vertex lists (side 0, side 1), each in ascending order."""
        zero = [v for v, s in enumerate(self.side) if s == 0]
        one = [v for v, s in enumerate(self.side) if s == 1]
        return zero, one


@dataclass(frozen=True)
class OddCycle:
    """Cycle ``vertices[i] -- vertices[(i+1) % k]`` via ``edge_ids[i]``; k odd.

    k == 1 encodes a loop certificate.
    """

    vertices: list[int]
    edge_ids: list[int]

    @property
    def length(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class CheckOutcome:
    """Exactly one of ``bipartition`` / ``odd_cycle``."""

    bipartition: Bipartition | None = None
    odd_cycle: OddCycle | None = None

    def __post_init__(self):
        if (self.bipartition is None) == (self.odd_cycle is None):
            raise InputError("outcome must carry exactly one certificate")

    @property
    def is_bipartite(self) -> bool:
        return self.bipartition is not None

    @property
    def branch(self) -> str:
        return "bipartite" if self.bipartition is not None else "odd_cycle"


def verify_bipartition(g: Graph, bp: Bipartition) -> bool:
    """True iff ``bp`` is a total 0/1 assignment separating every edge.

    A partial or non-binary assignment is an input error, not a False.
    Loops can never be separated, so any loop forces False.
    """
    side = bp.side
    if len(side) != g.n:
        raise InputError(
            f"assignment covers {len(side)} vertices, graph has {g.n}"
        )
    for s in side:
        if s != 0 and s != 1:
            raise InputError(f"side values must be 0 or 1, got {s!r}")
    for u, v in g.pairs:
        if side[u] == side[v]:
            return False
    return True


def verify_odd_cycle(g: Graph, cycle: OddCycle) -> bool:
    """True iff ``cycle`` is a genuine odd cycle of ``g``.

    Malformed input returns False rather than raising: odd length >= 1,
    distinct vertices, edge ids in range, and each claimed edge must join
    the consecutive vertex pair it is assigned to (a loop for k == 1).
    """
    verts = cycle.vertices
    k = len(verts)
    if k == 0 or k % 2 == 0 or len(cycle.edge_ids) != k:
        return False
    if len(set(verts)) != k:
        return False
    m = g.m
    for i, eid in enumerate(cycle.edge_ids):
        if not isinstance(eid, int) or not (0 <= eid < m):
            return False
        a, b = verts[i], verts[(i + 1) % k]
        u, v = g.pairs[eid]
        if (u, v) != (a, b) and (u, v) != (b, a):
            return False
    return True


def verify_outcome(g: Graph, outcome: CheckOutcome) -> bool:
    """Run the matching verifier for whichever certificate is present."""
    if outcome.bipartition is not None:
        return verify_bipartition(g, outcome.bipartition)
    return verify_odd_cycle(g, outcome.odd_cycle)


def flip_component(bp: Bipartition, component: Iterable[int]) -> Bipartition:
    """Swap the side of every vertex in ``component``; pure, an involution.

    Verification is preserved exactly when ``component`` is a union of whole
    connected components of the graph being certified.
    """
    side = list(bp.side)
    for v in component:
        if not (0 <= v < len(side)):
            raise InputError(f"vertex {v} outside the assignment")
        side[v] ^= 1
    return Bipartition(side)


def merge_bipartitions(
    labeling: ComponentLabeling,
    parts: list[Bipartition],
    back_maps: list[list[int]],
) -> Bipartition:
    """Combine per-component assignments into one global assignment.

    ``parts[i]`` colors the i-th component in its local ids;
    ``back_maps[i]`` translates local to global ids.  Every component must
    be present and every vertex covered.
    """
    if len(parts) != labeling.k or len(back_maps) != labeling.k:
        raise InputError(
            f"expected {labeling.k} components, got {len(parts)} parts"
            f" and {len(back_maps)} back maps"
        )
    n = len(labeling.component_of)
    side: list[int | None] = [None] * n
    for part, back in zip(parts, back_maps):
        if len(part.side) != len(back):
            raise InputError("component assignment and back map sizes differ")
        for local, s in enumerate(part.side):
            old = back[local]
            if not (0 <= old < n):
                raise InputError(f"back map target {old} out of range")
            side[old] = s
    if any(s is None for s in side):
        missing = side.index(None)
        raise InputError(f"vertex {missing} not covered by any component")
    return Bipartition(side)  # type: ignore[arg-type]


def check_path_parity(bp: Bipartition, path: Path) -> bool:
    """True iff sides strictly alternate along ``path``.

    For a verified bipartition this means the endpoints share a side exactly
    when the path length is even.  Zero-length paths alternate vacuously.
    """
    side = bp.side
    verts = path.vertices
    for v in verts:
        if not (0 <= v < len(side)):
            raise InputError(f"path vertex {v} outside the assignment")
    return all(side[verts[i]] != side[verts[i + 1]] for i in range(len(verts) - 1))


def canonicalize_bipartition(
    labeling: ComponentLabeling, bp: Bipartition
) -> Bipartition:
    """Flip components so the smallest vertex of each lands on side 0.

    Puts the two equivalent assignments of each component into one normal
    form, letting outputs of different algorithms be compared directly.
    """
    if len(bp.side) != len(labeling.component_of):
        raise InputError("assignment and labeling cover different vertex counts")
    flip = [0] * labeling.k
    seen = [False] * labeling.k
    for v, c in enumerate(labeling.component_of):
        if not seen[c]:
            seen[c] = True
            flip[c] = bp.side[v]
    return Bipartition(
        [s ^ flip[c] for s, c in zip(bp.side, labeling.component_of)]
    )
