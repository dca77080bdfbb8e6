"""Immutable directed graph with string labels mapped to dense indices.

Node indices follow first appearance in the input edge sequence. The
sequential solvers sweep in index order, so this ordering matters.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

import numpy as np

from linkrank.errors import EdgeListError, GraphError

__all__ = [
    "NodeRef",
    "DirectedGraph",
    "build_graph",
    "parse_edge_list",
    "read_edge_list",
    "backlinks",
    "references",
]

_FIELD_SPLIT = re.compile(r"[ \t\f\v]+")


@dataclass(frozen=True, order=True)
class NodeRef:
    index: int
    label: str


NodeLike = Union[NodeRef, str, int]


@dataclass(frozen=True, eq=False)
class DirectedGraph:
    """Simple digraph; build with :func:`build_graph`.

    ``out_adj[u]`` and ``in_adj[v]`` hold neighbor indices sorted ascending.
    """

    labels: tuple[str, ...]
    out_adj: tuple[tuple[int, ...], ...]
    in_adj: tuple[tuple[int, ...], ...]
    _index: dict = field(repr=False, compare=False)

    @property
    def node_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.out_adj)

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u, succ in enumerate(self.out_adj) for v in succ)

    def nodes(self) -> list[NodeRef]:
        return [NodeRef(i, lab) for i, lab in enumerate(self.labels)]

    def node(self, key: NodeLike) -> NodeRef:
        """Resolve a label, index or NodeRef to a NodeRef of this graph."""
        if isinstance(key, NodeRef):
            if 0 <= key.index < len(self.labels) and self.labels[key.index] == key.label:
                return key
            raise GraphError(f"unknown node {key.label!r}")
        if isinstance(key, str):
            try:
                return NodeRef(self._index[key], key)
            except KeyError:
                raise GraphError(f"unknown node {key!r}") from None
        if isinstance(key, int) and 0 <= key < len(self.labels):
            return NodeRef(key, self.labels[key])
        raise GraphError(f"unknown node {key!r}")

    def index_of(self, key: NodeLike) -> int:
        return self.node(key).index

    def out_degree(self, key: NodeLike) -> int:
        return len(self.out_adj[self.index_of(key)])

    def in_degree(self, key: NodeLike) -> int:
        return len(self.in_adj[self.index_of(key)])

    def out_degrees(self) -> list[int]:
        return [len(s) for s in self.out_adj]

    def in_degrees(self) -> list[int]:
        return [len(s) for s in self.in_adj]

    def has_edge(self, src: NodeLike, dst: NodeLike) -> bool:
        return self.index_of(dst) in self.out_adj[self.index_of(src)]

    def __repr__(self) -> str:
        return f"DirectedGraph(nodes={self.node_count}, edges={self.edge_count})"


def build_graph(
    edge_pairs: Iterable[tuple[str, str]], allow_self_loops: bool = False
) -> DirectedGraph:
    """Build a graph from ``(src, dst)`` label pairs.

    Duplicate pairs are dropped silently. Self-loops raise
    :class:`GraphError` unless ``allow_self_loops`` is set.
    """
    index: dict[str, int] = {}
    labels: list[str] = []
    out_sets: list[set[int]] = []
    in_sets: list[set[int]] = []

    def intern(label):
        if not isinstance(label, str) or not label:
            raise GraphError(f"node labels must be non-empty strings, got {label!r}")
        i = index.get(label)
        if i is None:
            i = index[label] = len(labels)
            labels.append(label)
            out_sets.append(set())
            in_sets.append(set())
        return i

    n_pairs = 0
    for src, dst in edge_pairs:
        n_pairs += 1
        if src == dst and not allow_self_loops:
            raise GraphError(f"self-loop on node {src!r} (pass allow_self_loops=True to keep it)")
        u, v = intern(src), intern(dst)
        out_sets[u].add(v)
        in_sets[v].add(u)
    if n_pairs == 0:
        raise GraphError("edge list is empty")

    return DirectedGraph(
        labels=tuple(labels),
        out_adj=tuple(tuple(sorted(s)) for s in out_sets),
        in_adj=tuple(tuple(sorted(s)) for s in in_sets),
        _index=index,
    )


def backlinks(g: DirectedGraph, n: NodeLike) -> list[NodeRef]:
    """Pages linking to ``n``, in index order."""
    return [NodeRef(i, g.labels[i]) for i in g.in_adj[g.index_of(n)]]


def references(g: DirectedGraph, m: NodeLike) -> list[NodeRef]:
    """Pages ``m`` links to, in index order."""
    return [NodeRef(i, g.labels[i]) for i in g.out_adj[g.index_of(m)]]


def parse_edge_list(text: str) -> list[tuple[str, str]]:
    """Parse a whitespace-separated edge list.

    Blank lines and lines starting with ``#`` are skipped. Any other line
    must hold exactly two fields, otherwise :class:`EdgeListError` is raised
    with the 1-based line number.

    >>> parse_edge_list("# c\\nA B\\n\\nB\\tA\\n")
    [('A', 'B'), ('B', 'A')]
    """
    pairs = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = _FIELD_SPLIT.split(stripped)
        if len(fields) != 2:
            raise EdgeListError(lineno, f"expected 2 fields, got {len(fields)}: {stripped!r}")
        pairs.append((fields[0], fields[1]))
    return pairs


def read_edge_list(path, allow_self_loops: bool = False) -> DirectedGraph:
    with open(path, encoding="utf-8", newline="") as fh:
        text = fh.read()
    return build_graph(parse_edge_list(text), allow_self_loops=allow_self_loops)


def induced_adjacency(g: DirectedGraph, nodes: Sequence[int]):
    """Dense 0/1 adjacency of the subgraph induced by ``nodes`` (kept in given order)."""
    pos = {v: k for k, v in enumerate(nodes)}
    a = np.zeros((len(nodes), len(nodes)))
    for k, u in enumerate(nodes):
        for v in g.out_adj[u]:
            j = pos.get(v)
            if j is not None:
                a[k, j] = 1.0
    return a
