"""DAG representation plus the ancestor/descendant machinery built on it.

Nodes are dense integers 0..node_count-1.  External string names, when
present, live in a bidirectional table on the Dag itself; everything
algorithmic works on the integer ids.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    CycleDetected,
    DuplicateEdge,
    ForeignNode,
    SelfLoop,
    UnknownEndpoint,
)

NodeSet = frozenset[int]


class Dag:
    """Immutable directed acyclic graph over dense integer node ids.

    `parents` and `children` are exact transposes of the edge sequence,
    and acyclicity is checked eagerly at construction, so downstream
    algorithms never re-validate.
    """

    __slots__ = ("node_count", "edges", "parents", "children", "names",
                 "_name_to_id", "_edge_set")

    def __init__(self, node_count: int, edges: Iterable[tuple[int, int]],
                 names: Sequence[str] | None = None) -> None:
        if node_count < 0:
            raise ValueError("node_count must be nonnegative")
        self.node_count = node_count

        if names is None:
            self.names = None
            self._name_to_id = None
        else:
            self.names = tuple(names)
            if len(self.names) != node_count:
                raise ValueError(
                    f"got {len(self.names)} names for {node_count} nodes")
            self._name_to_id = {nm: i for i, nm in enumerate(self.names)}
            if len(self._name_to_id) != node_count:
                raise ValueError("node names must be unique")

        seen: set[tuple[int, int]] = set()
        pairs: list[tuple[int, int]] = []
        parents: list[list[int]] = [[] for _ in range(node_count)]
        children: list[list[int]] = [[] for _ in range(node_count)]
        for tail, head in edges:
            if not (0 <= tail < node_count and 0 <= head < node_count):
                raise UnknownEndpoint(
                    f"edge ({tail}, {head}) leaves the node range "
                    f"0..{node_count - 1}")
            if tail == head:
                raise SelfLoop(f"self-loop on node {self.node_name(tail)}")
            pair = (tail, head)
            if pair in seen:
                raise DuplicateEdge(
                    f"duplicate edge {self.node_name(tail)} -> "
                    f"{self.node_name(head)}")
            seen.add(pair)
            pairs.append(pair)
            children[tail].append(head)
            parents[head].append(tail)

        self.edges: tuple[tuple[int, int], ...] = tuple(pairs)
        self.parents: tuple[tuple[int, ...], ...] = tuple(
            tuple(p) for p in parents)
        self.children: tuple[tuple[int, ...], ...] = tuple(
            tuple(c) for c in children)
        self._edge_set = seen
        self._check_acyclic()

    # -- name handling -------------------------------------------------

    def node_name(self, node: int) -> str:
        return self.names[node] if self.names is not None else str(node)

    def node_id(self, name: str) -> int:
        if self._name_to_id is None:
            raise ForeignNode(f"graph has no node names, cannot resolve {name!r}")
        try:
            return self._name_to_id[name]
        except KeyError:
            raise ForeignNode(f"unknown node name {name!r}") from None

    def has_edge(self, tail: int, head: int) -> bool:
        return (tail, head) in self._edge_set

    def __repr__(self) -> str:
        return f"Dag(nodes={self.node_count}, edges={len(self.edges)})"

    # -- validation ----------------------------------------------------

    def _check_acyclic(self) -> None:
        indegree = [len(p) for p in self.parents]
        ready = deque(v for v in range(self.node_count) if indegree[v] == 0)
        settled = 0
        while ready:
            v = ready.popleft()
            settled += 1
            for c in self.children[v]:
                indegree[c] -= 1
                if indegree[c] == 0:
                    ready.append(c)
        if settled != self.node_count:
            cycle = self._find_cycle(indegree)
            names = [self.node_name(v) for v in cycle]
            raise CycleDetected(
                "graph contains a cycle: " + " -> ".join(names + [names[0]]),
                cycle=tuple(names))

    def _find_cycle(self, indegree: list[int]) -> list[int]:
        # Every node still carrying in-degree has a parent that does too,
        # so walking parent pointers inside that set must close a loop.
        start = min(v for v in range(self.node_count) if indegree[v] > 0)
        position: dict[int, int] = {}
        path: list[int] = []
        v = start
        while v not in position:
            position[v] = len(path)
            path.append(v)
            v = next(p for p in self.parents[v] if indegree[p] > 0)
        loop = path[position[v]:]
        loop.reverse()  # parent pointers run against the edges
        return loop


def build_dag(node_names: Sequence[str],
              edges: Iterable[tuple[str, str]]) -> Dag:
    """Assemble a Dag from external node names and name-pair edges."""
    names = list(node_names)
    index: dict[str, int] = {}
    for nm in names:
        if nm in index:
            raise ValueError(f"duplicate node name {nm!r}")
        index[nm] = len(index)
    pairs = []
    for tail, head in edges:
        if tail not in index:
            raise UnknownEndpoint(f"unknown edge endpoint {tail!r}")
        if head not in index:
            raise UnknownEndpoint(f"unknown edge endpoint {head!r}")
        pairs.append((index[tail], index[head]))
    return Dag(len(names), pairs, names=names)


def checked_nodes(dag: Dag, nodes: Iterable[int]) -> NodeSet:
    """Freeze `nodes` into a set after validating membership in `dag`."""
    members = frozenset(nodes)
    for v in members:
        if not (0 <= v < dag.node_count):
            raise ForeignNode(
                f"node {v} is not in the graph (node_count={dag.node_count})")
    return members


@dataclass(frozen=True)
class DescendantTable:
    """Per-node flags: is this node, or one of its descendants, conditioned on?

    `flags[v]` is reflexive: a conditioned node flags itself.
    """

    flags: tuple[bool, ...]
    conditioning_set: NodeSet


def descendant_table(dag: Dag, conditioning: Iterable[int]) -> DescendantTable:
    """Mark every node that is in `conditioning` or has a descendant there.

    A single reverse breadth-first sweep from the conditioning set along
    parent links; each edge is looked at most once.
    """
    members = checked_nodes(dag, conditioning)
    flags = [False] * dag.node_count
    queue = deque()
    for v in members:
        flags[v] = True
        queue.append(v)
    parents = dag.parents
    while queue:
        v = queue.popleft()
        for p in parents[v]:
            if not flags[p]:
                flags[p] = True
                queue.append(p)
    return DescendantTable(flags=tuple(flags), conditioning_set=members)


def ancestral_set(dag: Dag, members: Iterable[int]) -> NodeSet:
    """All nodes with a directed path into `members`, plus `members` itself."""
    wanted = checked_nodes(dag, members)
    seen = set(wanted)
    queue = deque(wanted)
    parents = dag.parents
    while queue:
        v = queue.popleft()
        for p in parents[v]:
            if p not in seen:
                seen.add(p)
                queue.append(p)
    return frozenset(seen)


class DoubledGraph:
    """Directed graph holding each base edge in both orientations.

    Base edge k appears as link 2*k (original direction) and link 2*k+1
    (reversed); `out_links[v]` lists every link leaving v.  Trail
    traversal over the base dag becomes plain directed traversal here,
    with the orientation tag recording which way the base arrow points.
    """

    __slots__ = ("base", "node_count", "link_tails", "link_heads",
                 "link_reversed", "out_links")

    def __init__(self, base: Dag) -> None:
        self.base = base
        self.node_count = base.node_count
        n_links = 2 * len(base.edges)
        tails = [0] * n_links
        heads = [0] * n_links
        reversed_ = [False] * n_links
        out: list[list[int]] = [[] for _ in range(base.node_count)]
        for k, (t, h) in enumerate(base.edges):
            o = 2 * k
            r = o + 1
            tails[o] = t
            heads[o] = h
            tails[r] = h
            heads[r] = t
            reversed_[r] = True
            out[t].append(o)
            out[h].append(r)
        self.link_tails = tuple(tails)
        self.link_heads = tuple(heads)
        self.link_reversed = tuple(reversed_)
        self.out_links = tuple(tuple(ls) for ls in out)

    @property
    def link_count(self) -> int:
        return len(self.link_tails)

    def __repr__(self) -> str:
        return (f"DoubledGraph(nodes={self.node_count}, "
                f"links={self.link_count})")


def doubled_graph(dag: Dag) -> DoubledGraph:
    """Both-orientations view of `dag` with exactly 2*|edges| links."""
    return DoubledGraph(dag)
