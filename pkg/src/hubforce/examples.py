"""Built-in example graphs.

``hellc4`` is a hub-free 4-cycle with unit weights in both directions; under
plain majority it oscillates between the two checkerboard states.
``heaven`` adds a central hub broadcasting weight W to each cycle vertex,
whose one-step consensus threshold is W = 2.
"""

from __future__ import annotations

from .graph import InfluenceGraph, build_graph

EXAMPLE_NAMES = ("hellc4", "heaven")


def _cycle_edges(vertices: list[int]) -> list[tuple[int, int, int]]:
    edges = []
    for i, u in enumerate(vertices):
        v = vertices[(i + 1) % len(vertices)]
        edges.append((u, v, 1))
        edges.append((v, u, 1))
    return edges


def hellc4() -> InfluenceGraph:
    """4-cycle, unit weights both ways, no hub."""
    return build_graph(4, None, _cycle_edges([0, 1, 2, 3]))


def heaven(broadcast_weight: int = 2) -> InfluenceGraph:
    """4-cycle plus hub (vertex 4) broadcasting W to each cycle vertex.

    W = 0 keeps the hub but omits its edges.  Every cycle vertex has
    rest weight 2, so one-step consensus holds exactly when W >= 2.
    """
    if broadcast_weight < 0:
        raise ValueError(f"broadcast weight must be >= 0, got {broadcast_weight}")
    edges = _cycle_edges([0, 1, 2, 3])
    if broadcast_weight > 0:
        edges.extend((4, v, broadcast_weight) for v in range(4))
    return build_graph(5, 4, edges)


def example_graph(name: str, broadcast_weight: int | None = None) -> InfluenceGraph:
    """Look up an example by CLI name; hellc4 takes no weight parameter."""
    if name == "hellc4":
        if broadcast_weight is not None:
            raise ValueError("hellc4 takes no broadcast weight")
        return hellc4()
    if name == "heaven":
        return heaven(2 if broadcast_weight is None else broadcast_weight)
    raise ValueError(f"unknown example {name!r} (expected one of {', '.join(EXAMPLE_NAMES)})")
