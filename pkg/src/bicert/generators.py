"""Seeded graph generators with bit-stable output.

All randomness flows through SplitMix64 (Steele, Lea, and Vigna's published
64-bit mixer), so a given ``GenSpec`` produces the identical graph on every
platform and Python version.  The platform RNG is deliberately not used.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graph import Graph, build_graph

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

FOREST_ISOLATION_PROBABILITY = 0.1


class SplitMix64:
    """Reference SplitMix64 stream; 64-bit state, 64-bit output."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        # multiply-shift reduction; bias is bound/2^64, negligible and stable
        return (self.next_u64() * bound) >> 64

    def random(self) -> float:
        # 53-bit mantissa in [0, 1)
        return (self.next_u64() >> 11) * (2.0 ** -53)


@dataclass(frozen=True)
class GenSpec:
    """Parameters for one generated graph.

    ``kind`` is one of random, planted_bipartite, planted_odd_cycle, forest.
    Exactly the fields relevant to the kind may be set; ``m`` (edge count)
    and ``p`` (edge probability) are mutually exclusive.  ``allow_loops``
    and ``allow_multi`` apply to the random kind only.
    """

    kind: str
    n: int | None = None
    n_left: int | None = None
    n_right: int | None = None
    m: int | None = None
    p: float | None = None
    cycle_len: int | None = None
    allow_loops: bool = False
    allow_multi: bool = False
    seed: int = 0


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InputError(message)


def _common_checks(spec: GenSpec) -> None:
    _require(isinstance(spec.seed, int) and 0 <= spec.seed <= _MASK64,
             f"seed must be a 64-bit unsigned integer, got {spec.seed!r}")
    if spec.p is not None:
        _require(spec.m is None, "m and p are mutually exclusive")
        _require(0.0 <= spec.p <= 1.0, f"p must lie in [0, 1], got {spec.p}")
    if spec.m is not None:
        _require(spec.m >= 0, f"m must be non-negative, got {spec.m}")


def _forbid(spec: GenSpec, fields: list[str]) -> None:
    for name in fields:
        value = getattr(spec, name)
        default = False if name in ("allow_loops", "allow_multi") else None
        _require(value == default,
                 f"field {name!r} does not apply to kind {spec.kind!r}")


def gen_random(spec: GenSpec) -> Graph:
    """Uniform random graph on ``n`` vertices.

    With ``p``: every unordered pair (and loop, when allowed) is included
    independently, pairs enumerated in ascending order.  With ``m``: pairs
    are drawn until ``m`` survive the loop/duplicate rules.
    """
    _require(spec.kind == "random", f"kind {spec.kind!r} is not random")
    _common_checks(spec)
    _forbid(spec, ["n_left", "n_right", "cycle_len"])
    n = spec.n
    _require(n is not None and n >= 0, "random kind requires n >= 0")
    _require((spec.m is None) != (spec.p is None),
             "random kind requires exactly one of m, p")
    rng = SplitMix64(spec.seed)
    pairs: list[tuple[int, int]] = []
    if spec.p is not None:
        for u in range(n):
            start = u if spec.allow_loops else u + 1
            for v in range(start, n):
                if rng.random() < spec.p:
                    pairs.append((u, v))
        return build_graph(n, pairs)
    m = spec.m
    if m > 0:
        _require(n >= 1 if spec.allow_loops else n >= 2,
                 f"no legal edges exist for n={n} with these flags")
    if not spec.allow_multi:
        capacity = n * (n - 1) // 2 + (n if spec.allow_loops else 0)
        _require(m <= capacity,
                 f"m={m} exceeds the {capacity} distinct pairs available")
    seen: set[tuple[int, int]] = set()
    while len(pairs) < m:
        u = rng.below(n)
        v = rng.below(n)
        if u == v and not spec.allow_loops:
            continue
        if not spec.allow_multi:
            key = (u, v) if u <= v else (v, u)
            if key in seen:
                continue
            seen.add(key)
        pairs.append((u, v))
    return build_graph(n, pairs)


def gen_planted_bipartite(spec: GenSpec) -> Graph:
    """Graph with all edges between [0, n_left) and [n_left, n_left+n_right).

    ``p`` enumerates cross pairs in ascending order; ``m`` samples cross
    pairs with replacement, so parallel edges can occur.
    """
    _require(spec.kind == "planted_bipartite",
             f"kind {spec.kind!r} is not planted_bipartite")
    _common_checks(spec)
    _forbid(spec, ["n", "cycle_len", "allow_loops", "allow_multi"])
    left, right = spec.n_left, spec.n_right
    _require(left is not None and left >= 0, "planted_bipartite requires n_left >= 0")
    _require(right is not None and right >= 0, "planted_bipartite requires n_right >= 0")
    _require((spec.m is None) != (spec.p is None),
             "planted_bipartite requires exactly one of m, p")
    rng = SplitMix64(spec.seed)
    n = left + right
    pairs = _planted_pairs(rng, spec, left, right)
    return build_graph(n, pairs)


def _planted_pairs(
    rng: SplitMix64, spec: GenSpec, left: int, right: int
) -> list[tuple[int, int]]:
    pairs: list[tuple[int, int]] = []
    if spec.p is not None:
        for u in range(left):
            for v in range(left, left + right):
                if rng.random() < spec.p:
                    pairs.append((u, v))
        return pairs
    if spec.m:
        _require(left > 0 and right > 0,
                 "cross edges need both sides non-empty")
    for _ in range(spec.m or 0):
        pairs.append((rng.below(left), left + rng.below(right)))
    return pairs


def gen_planted_odd_cycle(spec: GenSpec) -> Graph:
    """A planted bipartite base plus one odd cycle on fresh vertices.

    The cycle occupies ids [base_n, base_n + cycle_len); when the base is
    non-empty, one bridge edge joins a random base vertex to the first
    cycle vertex.  An empty base yields the bare cycle.  ``m``/``p`` size
    the base; omitting both means an edgeless base.
    """
    _require(spec.kind == "planted_odd_cycle",
             f"kind {spec.kind!r} is not planted_odd_cycle")
    _common_checks(spec)
    _forbid(spec, ["n", "allow_loops", "allow_multi"])
    left, right = spec.n_left, spec.n_right
    _require(left is not None and left >= 0, "planted_odd_cycle requires n_left >= 0")
    _require(right is not None and right >= 0, "planted_odd_cycle requires n_right >= 0")
    cycle_len = spec.cycle_len
    _require(cycle_len is not None and cycle_len >= 3 and cycle_len % 2 == 1,
             f"cycle_len must be an odd integer >= 3, got {cycle_len}")
    rng = SplitMix64(spec.seed)
    base_n = left + right
    pairs = _planted_pairs(rng, spec, left, right)
    first = base_n
    for i in range(cycle_len - 1):
        pairs.append((first + i, first + i + 1))
    pairs.append((first + cycle_len - 1, first))
    if base_n > 0:
        pairs.append((rng.below(base_n), first))
    return build_graph(base_n + cycle_len, pairs)


def gen_forest(spec: GenSpec) -> Graph:
    """Uniform attachment forest.

    Vertex v > 0 stays isolated with probability 0.1, otherwise joins a
    uniformly chosen earlier vertex.  Always acyclic; m < n whenever n > 0.
    """
    _require(spec.kind == "forest", f"kind {spec.kind!r} is not forest")
    _common_checks(spec)
    _forbid(spec, ["n_left", "n_right", "cycle_len", "allow_loops", "allow_multi"])
    _require(spec.m is None and spec.p is None,
             "forest takes no m or p; its edge count is random")
    n = spec.n
    _require(n is not None and n >= 0, "forest requires n >= 0")
    rng = SplitMix64(spec.seed)
    pairs = []
    for v in range(1, n):
        if rng.random() < FOREST_ISOLATION_PROBABILITY:
            continue
        pairs.append((rng.below(v), v))
    return build_graph(n, pairs)


_GENERATORS = {
    "random": gen_random,
    "planted_bipartite": gen_planted_bipartite,
    "planted_odd_cycle": gen_planted_odd_cycle,
    "forest": gen_forest,
}

KIND_NAMES = tuple(_GENERATORS)


def generate(spec: GenSpec) -> Graph:
    """Dispatch on ``spec.kind``."""
    try:
        fn = _GENERATORS[spec.kind]
    except KeyError:
        raise InputError(
            f"unknown kind {spec.kind!r}; expected one of {KIND_NAMES}"
        ) from None
    return fn(spec)
