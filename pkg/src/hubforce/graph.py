"""Weighted digraphs with an optional distinguished hub.

The graph is immutable after construction.  Edge weights are non-negative
integers; zero-weight edges are never stored, and duplicate edges sum.
Self-loops are permitted and participate in scores like any other edge.
Edges into the hub (including a hub self-loop) are stored and serialized
but never influence the hub's next state, which is fixed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional


class GraphError(ValueError):
    """Invalid graph construction or use."""


class GraphFormatError(GraphError):
    """Malformed graph file; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class HubRequiredError(GraphError):
    """A hub-dependent operation was called on a hub-free graph."""

    def __init__(self, message: str = "hub required"):
        super().__init__(message)


@dataclass(frozen=True)
class WeightSummary:
    """Per-vertex in-weight split into the hub's share and everyone else's.

    ``hub_weight[v]`` is the weight of the edge hub -> v, ``rest_weight[v]``
    the total in-weight of v from non-hub sources.  ``max_rest`` is the
    maximum of ``rest_weight`` over non-hub vertices (0 if there are none);
    it doubles as the uniform hub-strength threshold.
    """

    hub_weight: tuple[int, ...]
    rest_weight: tuple[int, ...]
    max_rest: int


class InfluenceGraph:
    """Immutable weighted digraph, optionally with a distinguished hub."""

    __slots__ = ("_n", "_hub", "_weights", "_in_edges", "_summary")

    def __init__(self, n: int, hub: Optional[int], weights: dict[tuple[int, int], int]):
        # Not validated here; go through build_graph().
        self._n = n
        self._hub = hub
        self._weights = weights
        in_edges: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for (u, v), w in sorted(weights.items()):
            in_edges[v].append((u, w))
        self._in_edges = tuple(tuple(lst) for lst in in_edges)
        self._summary = self._summarize() if hub is not None else None

    def _summarize(self) -> WeightSummary:
        hub = self._hub
        hub_w = [0] * self._n
        rest_w = [0] * self._n
        for (u, v), w in self._weights.items():
            if u == hub:
                hub_w[v] += w
            else:
                rest_w[v] += w
        max_rest = max((rest_w[v] for v in range(self._n) if v != hub), default=0)
        return WeightSummary(tuple(hub_w), tuple(rest_w), max_rest)

    @property
    def n(self) -> int:
        return self._n

    @property
    def hub(self) -> Optional[int]:
        return self._hub

    @property
    def num_edges(self) -> int:
        return len(self._weights)

    def require_hub(self) -> int:
        if self._hub is None:
            raise HubRequiredError()
        return self._hub

    def weight(self, u: int, v: int) -> int:
        """Weight of edge u -> v (0 if absent)."""
        return self._weights.get((u, v), 0)

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """All stored edges as (u, v, w), sorted by (u, v)."""
        for (u, v) in sorted(self._weights):
            yield u, v, self._weights[(u, v)]

    def in_edges(self, v: int) -> tuple[tuple[int, int], ...]:
        """Positive-weight in-edges of v as (source, weight) pairs."""
        return self._in_edges[v]

    def non_hubs(self) -> Iterator[int]:
        return (v for v in range(self._n) if v != self._hub)

    def hub_weight(self, v: int) -> int:
        self.require_hub()
        return self._summary.hub_weight[v]

    def rest_weight(self, v: int) -> int:
        self.require_hub()
        return self._summary.rest_weight[v]

    @property
    def max_rest(self) -> int:
        self.require_hub()
        return self._summary.max_rest

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, InfluenceGraph):
            return NotImplemented
        return (
            self._n == other._n
            and self._hub == other._hub
            and self._weights == other._weights
        )

    def __repr__(self) -> str:
        return f"InfluenceGraph(n={self._n}, hub={self._hub}, edges={len(self._weights)})"


def build_graph(
    n: int,
    hub: Optional[int] = None,
    edges: Iterable[tuple[int, int, int]] = (),
) -> InfluenceGraph:
    """Validate and construct a graph from an edge list.

    Duplicate (u, v) pairs are summed; zero-weight edges are dropped.
    Raises GraphError on out-of-range endpoints or hub, or negative weights.
    """
    if n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n}")
    if hub is not None and not 0 <= hub < n:
        raise GraphError(f"hub {hub} out of range for n={n}")
    weights: dict[tuple[int, int], int] = {}
    for u, v, w in edges:
        if not 0 <= u < n or not 0 <= v < n:
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if w < 0:
            raise GraphError(f"edge ({u}, {v}) has negative weight {w}")
        if w == 0:
            continue
        weights[(u, v)] = weights.get((u, v), 0) + w
    return InfluenceGraph(n, hub, weights)


def weight_summary(g: InfluenceGraph) -> WeightSummary:
    """Hub/rest in-weight decomposition; requires the hub to be present."""
    g.require_hub()
    return g._summary


def attach_uniform_hub(g: InfluenceGraph, broadcast_weight: int) -> InfluenceGraph:
    """Replace all hub out-edges with weight-W edges to every non-hub.

    W = 0 removes the hub's out-edges entirely.  Edges into the hub and
    among non-hubs are untouched.
    """
    hub = g.require_hub()
    if broadcast_weight < 0:
        raise GraphError(f"broadcast weight must be >= 0, got {broadcast_weight}")
    edges = [(u, v, w) for u, v, w in g.edges() if u != hub]
    if broadcast_weight > 0:
        edges.extend((hub, v, broadcast_weight) for v in g.non_hubs())
    return build_graph(g.n, hub, edges)


# --- text format -----------------------------------------------------------
#
# Line-oriented, UTF-8, '#' starts a comment.  The first significant line is
# the header `n=<int> hub=<int|none>`; every following line is one directed
# edge `<u> <v> <w>`.


def parse_graph(text: str) -> InfluenceGraph:
    """Parse the line-oriented text format; errors carry line numbers."""
    header: Optional[tuple[int, Optional[int]]] = None
    edges: list[tuple[int, int, int]] = []
    edge_lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            header = _parse_header(line, lineno)
            continue
        parts = line.split()
        if any("=" in p for p in parts):
            raise GraphFormatError(f"unknown directive {line!r}", lineno)
        if len(parts) != 3:
            raise GraphFormatError(f"expected '<u> <v> <w>', got {line!r}", lineno)
        try:
            u, v, w = (int(p) for p in parts)
        except ValueError:
            raise GraphFormatError(f"non-integer edge field in {line!r}", lineno) from None
        edges.append((u, v, w))
        edge_lines.append(lineno)
    if header is None:
        raise GraphFormatError("missing 'n=<int> hub=<int|none>' header", 1)
    n, hub = header
    if n < 1:
        raise GraphFormatError(f"vertex count must be >= 1, got {n}", 1)
    if hub is not None and not 0 <= hub < n:
        raise GraphFormatError(f"hub {hub} out of range for n={n}", 1)
    for (u, v, w), lineno in zip(edges, edge_lines):
        if not 0 <= u < n or not 0 <= v < n:
            raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}", lineno)
        if w < 0:
            raise GraphFormatError(f"negative weight {w}", lineno)
    return build_graph(n, hub, edges)


def _parse_header(line: str, lineno: int) -> tuple[int, Optional[int]]:
    parts = line.split()
    if len(parts) != 2:
        raise GraphFormatError(f"expected 'n=<int> hub=<int|none>', got {line!r}", lineno)
    values = {}
    for part in parts:
        key, sep, value = part.partition("=")
        if not sep or key not in ("n", "hub"):
            raise GraphFormatError(f"unknown directive {part!r}", lineno)
        values[key] = value
    if set(values) != {"n", "hub"}:
        raise GraphFormatError(f"header must set both n and hub, got {line!r}", lineno)
    try:
        n = int(values["n"])
    except ValueError:
        raise GraphFormatError(f"invalid vertex count {values['n']!r}", lineno) from None
    if values["hub"] == "none":
        hub: Optional[int] = None
    else:
        try:
            hub = int(values["hub"])
        except ValueError:
            raise GraphFormatError(f"invalid hub {values['hub']!r}", lineno) from None
    return n, hub


def serialize_graph(g: InfluenceGraph) -> str:
    """Render the text format; parse_graph(serialize_graph(g)) == g."""
    hub = "none" if g.hub is None else str(g.hub)
    lines = [f"n={g.n} hub={hub}"]
    lines.extend(f"{u} {v} {w}" for u, v, w in g.edges())
    return "\n".join(lines) + "\n"


# --- JSON format -----------------------------------------------------------


def graph_to_json_obj(g: InfluenceGraph) -> dict:
    return {
        "n": g.n,
        "hub": g.hub,
        "edges": [[u, v, w] for u, v, w in g.edges()],
    }


def graph_from_json_obj(obj: dict) -> InfluenceGraph:
    try:
        n = obj["n"]
        hub = obj.get("hub")
        raw_edges = obj.get("edges", [])
    except TypeError:
        raise GraphError("graph JSON must be an object with keys n, hub, edges") from None
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphError("'n' must be an integer")
    if hub is not None and (not isinstance(hub, int) or isinstance(hub, bool)):
        raise GraphError("'hub' must be an integer or null")
    edges = []
    for entry in raw_edges:
        if len(entry) != 3 or not all(isinstance(x, int) and not isinstance(x, bool) for x in entry):
            raise GraphError(f"edge entry {entry!r} must be [u, v, w] integers")
        edges.append((entry[0], entry[1], entry[2]))
    return build_graph(n, hub, edges)


def load_graph(path: str) -> InfluenceGraph:
    """Read a graph file, choosing the format by extension (.json or text)."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"{path}: invalid JSON: {exc}") from None
        return graph_from_json_obj(obj)
    return parse_graph(text)
