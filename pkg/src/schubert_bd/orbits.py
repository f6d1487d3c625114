"""
Weak-order graphs on orbits.

The K-level graph has one node per symmetric clan and an ``i``-labelled edge
``γ -> s_i γ`` whenever ``s_i`` moves ``γ``.  The L-level graph splits every
disconnected clan into two halves and lifts the edges: between two split
orbits the edges run half to half, and from a split orbit into a connected one
both halves point at the single target.  A connected orbit with an edge into
a split one is not supposed to occur and raises :class:`ForbiddenSplitPattern`.

Which half of a split source goes to which half of a split target cannot be
read off the clans; halves are matched index to index (1 to 1, 2 to 2), so the
L-level graph is canonical only up to swapping the two halves of each orbit.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from enum import Enum
from graphlib import CycleError, TopologicalSorter

from .action import Rule, act_simple
from .clans import Clan, enumerate_symmetric_clans, is_disconnected
from .errors import ForbiddenSplitPattern
from .weyl import LieType, _lie_type

__all__ = [
    "Component", "EdgeStyle", "OrbitNode", "OrbitEdge", "OrbitGraph",
    "k_orbit_graph", "l_orbit_graph",
]


class Component(str, Enum):
    WHOLE = "whole"
    HALF_1 = "half_1"
    HALF_2 = "half_2"


class EdgeStyle(str, Enum):
    SINGLE = "single"
    DOUBLE = "double"


@dataclass(frozen=True)
class OrbitNode:
    clan: Clan
    component: Component = Component.WHOLE

    def label(self) -> str:
        tag = {Component.HALF_1: "¹", Component.HALF_2: "²"}.get(self.component, "")
        return f"{self.clan}{tag}"


@dataclass(frozen=True)
class OrbitEdge:
    source: OrbitNode
    target: OrbitNode
    label: int
    style: EdgeStyle
    rule: Rule


@dataclass(frozen=True)
class OrbitGraph:
    level: str
    lie_type: LieType
    rank: int
    nodes: tuple[OrbitNode, ...]
    edges: tuple[OrbitEdge, ...]

    def successors(self, node: OrbitNode) -> list[OrbitNode]:
        return [e.target for e in self.edges if e.source == node]

    def topological_order(self) -> list[OrbitNode]:
        """Raises :class:`graphlib.CycleError` if the graph has a cycle."""
        ts = TopologicalSorter({n: [] for n in self.nodes})
        for e in self.edges:
            ts.add(e.target, e.source)
        return list(ts.static_order())

    def is_acyclic(self) -> bool:
        try:
            self.topological_order()
        except CycleError:
            return False
        return True

    def reaches(self, source: OrbitNode, target: OrbitNode) -> bool:
        seen, queue = {source}, deque([source])
        adjacency: dict[OrbitNode, list[OrbitNode]] = {}
        for e in self.edges:
            adjacency.setdefault(e.source, []).append(e.target)
        while queue:
            node = queue.popleft()
            if node == target:
                return True
            for nxt in adjacency.get(node, []):
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return False

    def to_dot(self) -> str:
        ids = {node: f"n{k}" for k, node in enumerate(self.nodes)}
        name = f"{self.level}_orbits_{self.lie_type.value}{self.rank}"
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box fontname=monospace];"]
        if self.level == "L":
            lines.append('  // half labels are a convention: swapping the halves of any orbit is equally valid')
        for node in self.nodes:
            lines.append(f'  {ids[node]} [label="{node.label()}"];')
        for e in self.edges:
            attrs = f'label="{e.label}"'
            if e.style is EdgeStyle.DOUBLE:
                attrs += ' color="black:invis:black"'
            lines.append(f"  {ids[e.source]} -> {ids[e.target]} [{attrs}];")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_records(self) -> list[dict]:
        head = {"type": self.lie_type.value, "rank": self.rank, "level": self.level}
        out = [dict(head, kind="node", clan=str(n.clan), component=n.component.value)
               for n in self.nodes]
        out += [dict(head, kind="edge", source=e.source.label(), target=e.target.label(),
                     reflection=e.label, style=e.style.value, rule=e.rule.value)
                for e in self.edges]
        return out

    def to_json_lines(self) -> str:
        return "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in self.to_records())


def k_orbit_graph(rank: int, lie_type) -> OrbitGraph:
    t = _lie_type(lie_type)
    clans = enumerate_symmetric_clans(rank, t)
    nodes = tuple(OrbitNode(c) for c in clans)
    edges = []
    for gamma in clans:
        for i in range(1, rank + 1):
            out = act_simple(i, gamma, t)
            if out.result == gamma:
                continue
            merge = is_disconnected(gamma) and not is_disconnected(out.result)
            edges.append(OrbitEdge(OrbitNode(gamma), OrbitNode(out.result), i,
                                   EdgeStyle.DOUBLE if merge else EdgeStyle.SINGLE, out.rule))
    return OrbitGraph("K", t, rank, nodes, tuple(edges))


def _lift(clan: Clan) -> list[OrbitNode]:
    if is_disconnected(clan):
        return [OrbitNode(clan, Component.HALF_1), OrbitNode(clan, Component.HALF_2)]
    return [OrbitNode(clan)]


def l_orbit_graph(rank: int, lie_type) -> OrbitGraph:
    k = k_orbit_graph(rank, lie_type)
    nodes = tuple(n for node in k.nodes for n in _lift(node.clan))
    edges = []
    for e in k.edges:
        src, dst = _lift(e.source.clan), _lift(e.target.clan)
        if len(src) == 1 and len(dst) == 2:
            raise ForbiddenSplitPattern(
                f"connected {e.source.clan} -> disconnected {e.target.clan} under s_{e.label}")
        if len(src) == 2 and len(dst) == 2:
            pairs = zip(src, dst)
        else:
            pairs = ((s, dst[0]) for s in src)
        edges.extend(OrbitEdge(s, d, e.label, EdgeStyle.SINGLE, e.rule) for s, d in pairs)
    return OrbitGraph("L", k.lie_type, rank, nodes, tuple(edges))
