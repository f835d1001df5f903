"""Jordan center and distance-to-center layering by boolean matrix powers."""
from __future__ import annotations

import json
from dataclasses import dataclass

from .bitmatrix import BoolSymMatrix, from_graph, multiply, multiply_tracking
from .graph import Graph, GraphError, check_connected


@dataclass(frozen=True)
class PartitionResult:
    """``radius`` plus, for every node label, ``layers[label] = ecc - radius``."""

    radius: int
    layers: dict[str, int]

    @property
    def depth(self) -> int:
        return max(self.layers.values(), default=0)

    def center(self) -> list[str]:
        return sorted(x for x, k in self.layers.items() if k == 0)

    def layer_sets(self) -> dict[int, set[str]]:
        out: dict[int, set[str]] = {}
        for label, k in self.layers.items():
            out.setdefault(k, set()).add(label)
        return out

    def to_json(self) -> str:
        doc = {"radius": self.radius, "depth": self.depth, "layers": self.layers}
        return json.dumps(doc, sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> PartitionResult:
        doc = json.loads(text)
        result = cls(int(doc["radius"]), {str(k): int(v) for k, v in doc["layers"].items()})
        if result.depth != doc["depth"]:
            raise ValueError(f"depth {doc['depth']} disagrees with layers (max {result.depth})")
        return result


def doubling_powers(a1: BoolSymMatrix, threads: int | None = None) -> list[BoolSymMatrix]:
    """Successive squares ``R(A~), R(A~^2), R(A~^4), ...`` with no full row.

    Stops before the first square that has a full row. Empty when ``a1``
    itself already has one (radius <= 1).
    """
    powers: list[BoolSymMatrix] = []
    current = a1
    while not current.has_full_row():
        powers.append(current)
        current = multiply(current, current, threads)
    return powers


def assemble_below_radius(
    powers: list[BoolSymMatrix], threads: int | None = None
) -> tuple[BoolSymMatrix, int]:
    """Greedy binary descent to ``(R(A~^e), e)`` with ``e = radius - 1``.

    ``powers[k]`` must be ``R(A~^(2^k))`` as returned by :func:`doubling_powers`.
    """
    if not powers:
        raise ValueError("need at least one power")
    acc = powers[-1]
    e = 1 << (len(powers) - 1)
    for k in range(len(powers) - 2, -1, -1):
        trial = multiply(acc, powers[k], threads)
        if not trial.has_full_row():
            acc, e = trial, e + (1 << k)
    return acc, e


def partition(g: Graph, use_doubling: bool = True, threads: int | None = None) -> PartitionResult:
    """Center and layers of a connected graph.

    Node ``i`` lands in layer ``k`` when ``n0 + k`` is the first power whose
    row ``i`` is full, ``n0`` being the radius. With ``use_doubling`` the
    powers below the radius are reached by repeated squaring; otherwise every
    power from 1 up is computed. Both give identical results.
    """
    if not check_connected(g):
        raise GraphError("graph not connected")
    if g.n == 1:
        return PartitionResult(0, {g.labels[0]: 0})

    a1 = from_graph(g)
    base, power = a1, 1
    if use_doubling:
        powers = doubling_powers(a1, threads)
        if powers:
            base, power = assemble_below_radius(powers, threads)

    # fill power per node index
    filled = {int(i): power for i in base.full_rows()}
    current = base
    while len(filled) < g.n:
        power += 1
        current = multiply_tracking(a1, current, power, filled, threads)

    radius = min(filled.values())
    return PartitionResult(radius, {label: filled[i] - radius for i, label in enumerate(g.labels)})
