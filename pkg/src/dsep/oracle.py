"""Ground-truth machinery: exhaustive trails and exact discrete distributions.

Everything here is deliberately independent of the sweep engines so it
can referee them: separation verdicts come from enumerating simple
trails one by one, and probabilistic claims are checked on exact joint
tables built as the product of per-node conditional tables.  Hard size
guards keep the exhaustive paths honest.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .dag import Dag, NodeSet, checked_nodes, descendant_table
from .engine import SeparationQuery, Trail, is_active_trail
from .errors import ForeignNode, OracleScaleExceeded

TRAIL_NODE_LIMIT = 12          # largest graph the trail enumerator accepts
JOINT_SIZE_LIMIT = 1 << 20     # largest joint table (number of entries)
CPT_SUM_TOL = 1e-12
JOINT_MASS_TOL = 1e-9


def _iter_simple_trails(dag: Dag, start: int, goal: int) -> Iterator[Trail]:
    """Depth-first enumeration of node-simple trails between two nodes."""
    nodes = [start]
    edges: list[tuple[int, int]] = []
    on_path = {start}

    def extend(v: int) -> Iterator[Trail]:
        # Children first, then parents, both in stored order: deterministic.
        for c in dag.children[v]:
            if c not in on_path:
                yield from step(c, (v, c))
        for p in dag.parents[v]:
            if p not in on_path:
                yield from step(p, (p, v))

    def step(nxt: int, edge: tuple[int, int]) -> Iterator[Trail]:
        nodes.append(nxt)
        edges.append(edge)
        if nxt == goal:
            yield Trail(tuple(nodes), tuple(edges))
        else:
            on_path.add(nxt)
            yield from extend(nxt)
            on_path.discard(nxt)
        nodes.pop()
        edges.pop()

    yield from extend(start)


def enumerate_simple_trails(dag: Dag, start: int, goal: int) -> list[Trail]:
    """All node-simple trails between two distinct nodes, directions ignored.

    Refuses graphs above TRAIL_NODE_LIMIT nodes: the count can grow
    factorially and silence would be worse than an error.
    """
    if dag.node_count > TRAIL_NODE_LIMIT:
        raise OracleScaleExceeded(
            f"trail enumeration is capped at {TRAIL_NODE_LIMIT} nodes, "
            f"graph has {dag.node_count}")
    for v in (start, goal):
        if not (0 <= v < dag.node_count):
            raise ForeignNode(f"node {v} is not in the graph")
    if start == goal:
        raise ValueError("trail endpoints must differ")
    return list(_iter_simple_trails(dag, start, goal))


def dsep_bruteforce(dag: Dag, query: SeparationQuery) -> NodeSet:
    """Separated set computed trail by trail; the referee for both engines."""
    if dag.node_count > TRAIL_NODE_LIMIT:
        raise OracleScaleExceeded(
            f"brute-force separation is capped at {TRAIL_NODE_LIMIT} nodes, "
            f"graph has {dag.node_count}")
    sources = checked_nodes(dag, query.sources)
    cond = checked_nodes(dag, query.conditioning)
    separated = []
    for alpha in range(dag.node_count):
        if alpha in sources or alpha in cond:
            continue
        connected = any(
            is_active_trail(dag, trail, cond)
            for j in sorted(sources)
            for trail in _iter_simple_trails(dag, j, alpha))
        if not connected:
            separated.append(alpha)
    return frozenset(separated)


@dataclass(frozen=True)
class DiscreteNetwork:
    """Per-node conditional probability tables over a dag.

    Node v's table has one axis per parent (in `dag.parents[v]` order)
    followed by v's own axis; slices along the last axis are probability
    vectors.
    """

    dag: Dag
    arities: tuple[int, ...]
    cpts: tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arities", tuple(self.arities))
        object.__setattr__(self, "cpts", tuple(self.cpts))
        n = self.dag.node_count
        if len(self.arities) != n or len(self.cpts) != n:
            raise ValueError("need one arity and one table per node")
        if any(a < 2 for a in self.arities):
            raise ValueError("arity must be at least 2 for every node")
        for v in range(n):
            expected = tuple(self.arities[p] for p in self.dag.parents[v])
            expected += (self.arities[v],)
            cpt = self.cpts[v]
            if cpt.shape != expected:
                raise ValueError(
                    f"table for node {v} has shape {cpt.shape}, "
                    f"expected {expected}")
            if np.any(cpt < 0.0) or np.any(cpt > 1.0):
                raise ValueError(f"table for node {v} leaves [0, 1]")
            sums = cpt.sum(axis=-1)
            if np.max(np.abs(sums - 1.0)) > CPT_SUM_TOL:
                raise ValueError(
                    f"table for node {v} has rows not summing to 1")


def _joint_size(arities: Sequence[int]) -> int:
    size = 1
    for a in arities:
        size *= a
    return size


def random_network(dag: Dag, arity: int, seed: int) -> DiscreteNetwork:
    """Seeded network with uniform arity and strictly positive tables.

    Rows are drawn uniformly from [0.1, 1.0] and normalized, keeping
    every configuration possible and no row degenerate.
    """
    if arity < 2:
        raise ValueError("arity must be at least 2")
    arities = (arity,) * dag.node_count
    if _joint_size(arities) > JOINT_SIZE_LIMIT:
        raise OracleScaleExceeded(
            f"joint table would have {_joint_size(arities)} entries, "
            f"limit is {JOINT_SIZE_LIMIT}")
    rng = np.random.default_rng(seed)
    cpts = []
    for v in range(dag.node_count):
        shape = tuple(arities[p] for p in dag.parents[v]) + (arity,)
        raw = rng.uniform(0.1, 1.0, size=shape)
        cpts.append(raw / raw.sum(axis=-1, keepdims=True))
    return DiscreteNetwork(dag, arities, tuple(cpts))


@dataclass(frozen=True)
class JointTable:
    """Exact joint distribution, one axis per node."""

    probs: np.ndarray
    arities: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arities", tuple(self.arities))
        if self.probs.shape != self.arities:
            raise ValueError(
                f"table shape {self.probs.shape} does not match arities "
                f"{self.arities}")
        if np.any(self.probs < 0.0):
            raise ValueError("joint table has negative entries")
        if abs(float(self.probs.sum()) - 1.0) > JOINT_MASS_TOL:
            raise ValueError("joint table mass is not 1")

    def probability(self, assignment: Sequence[int]) -> float:
        return float(self.probs[tuple(assignment)])


def joint(network: DiscreteNetwork) -> JointTable:
    """Multiply every conditional table out into the full joint."""
    arities = network.arities
    if _joint_size(arities) > JOINT_SIZE_LIMIT:
        raise OracleScaleExceeded(
            f"joint table would have {_joint_size(arities)} entries, "
            f"limit is {JOINT_SIZE_LIMIT}")
    n = network.dag.node_count
    probs = np.ones(arities, dtype=np.float64)
    for v in range(n):
        axes = list(network.dag.parents[v]) + [v]
        cpt = network.cpts[v]
        # Rearrange the table's axes into ascending global-node order,
        # then broadcast it over the full joint shape.
        order = sorted(range(len(axes)), key=axes.__getitem__)
        arranged = np.transpose(cpt, order)
        shape = [1] * n
        for ax in axes:
            shape[ax] = arities[ax]
        probs = probs * arranged.reshape(shape)
    return JointTable(probs=probs, arities=arities)


def _grouped_marginal(table: JointTable, groups: Sequence[Sequence[int]]):
    """Collapse the joint onto the given variable groups, one axis per group."""
    flat = [v for group in groups for v in group]
    rest = [v for v in range(len(table.arities)) if v not in set(flat)]
    arr = np.transpose(table.probs, flat + rest)
    sizes = [math.prod(table.arities[v] for v in group) for group in groups]
    arr = arr.reshape(sizes + [-1])
    return arr.sum(axis=-1)


def max_ci_violation(table: JointTable, first: Iterable[int],
                     second: Iterable[int],
                     conditioning: Iterable[int] = ()) -> float:
    """Largest |P(a,b|c) - P(a|c) P(b|c)| over assignments with P(c) > 0."""
    a_vars = sorted(set(first))
    b_vars = sorted(set(second))
    c_vars = sorted(set(conditioning))
    groups = (a_vars, b_vars, c_vars)
    seen: set[int] = set()
    for group in groups:
        for v in group:
            if not (0 <= v < len(table.arities)):
                raise ForeignNode(f"variable {v} is not in the joint table")
            if v in seen:
                raise ValueError("variable groups must be disjoint")
            seen.add(v)
    m = _grouped_marginal(table, groups)          # [a, b, c]
    p_c = m.sum(axis=(0, 1))
    p_ac = m.sum(axis=1)
    p_bc = m.sum(axis=0)
    mask = p_c > 0.0
    if not mask.any():
        return 0.0
    pc = p_c[mask]
    joint_given_c = m[:, :, mask] / pc
    product = (p_ac[:, mask] / pc)[:, None, :] * (p_bc[:, mask] / pc)[None, :, :]
    return float(np.max(np.abs(joint_given_c - product)))


def ci_holds(table: JointTable, first: Iterable[int], second: Iterable[int],
             conditioning: Iterable[int] = (), tol: float = 1e-9) -> bool:
    """Exact conditional-independence test at tolerance `tol`.

    Assignments with zero conditioning mass are skipped: they constrain
    nothing.
    """
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    return max_ci_violation(table, first, second, conditioning) <= tol


@dataclass(frozen=True)
class TripleOutcome:
    """Numeric evidence for one (source, conditioning, target) claim."""

    source: int
    target: int
    conditioning: frozenset[int]
    separated: bool
    max_violation: float      # largest CI deviation over the trial networks
    networks_violating: int   # trials with a deviation above the dependence tol


@dataclass(frozen=True)
class Theorem2Report:
    """Aggregated outcomes of `check_theorem2`.

    Separated triples must show no deviation beyond `soundness_tol`
    (those that do appear in `soundness_violations`).  Connected triples
    are expected to show a deviation beyond `dependence_tol` in at least
    one network; the quiet ones appear in `dependence_misses`.
    """

    outcomes: tuple[TripleOutcome, ...]
    trials: int
    soundness_tol: float
    dependence_tol: float

    @property
    def separated_count(self) -> int:
        return sum(1 for o in self.outcomes if o.separated)

    @property
    def connected_count(self) -> int:
        return sum(1 for o in self.outcomes if not o.separated)

    @property
    def soundness_violations(self) -> tuple[TripleOutcome, ...]:
        return tuple(o for o in self.outcomes
                     if o.separated and o.max_violation > self.soundness_tol)

    @property
    def dependence_misses(self) -> tuple[TripleOutcome, ...]:
        return tuple(o for o in self.outcomes
                     if not o.separated and o.networks_violating == 0)


def _oracle_separated(dag: Dag, source: int, target: int,
                      cond: NodeSet) -> bool:
    flags = descendant_table(dag, cond).flags

    def active(trail: Trail) -> bool:
        for p in range(1, len(trail.nodes) - 1):
            if trail.head_to_head(p):
                if not flags[trail.nodes[p]]:
                    return False
            elif trail.nodes[p] in cond:
                return False
        return True

    return not any(active(t) for t in _iter_simple_trails(dag, source, target))


def sample_triples(dag: Dag, seed: int,
                   max_triples: int = 64) -> list[tuple[int, frozenset[int], int]]:
    """Deterministic (source, conditioning, target) triples for numeric checks.

    Exhaustive when the total count fits the budget, sampled otherwise.
    """
    n = dag.node_count
    if n < 2:
        return []
    total = n * (n - 1) * (1 << max(0, n - 2))
    triples: list[tuple[int, frozenset[int], int]] = []
    if total <= max_triples:
        for j in range(n):
            for k in range(n):
                if k == j:
                    continue
                others = [v for v in range(n) if v != j and v != k]
                for mask in range(1 << len(others)):
                    cond = frozenset(others[i] for i in range(len(others))
                                     if mask >> i & 1)
                    triples.append((j, cond, k))
        return triples
    rng = random.Random(f"{seed}:triples")
    chosen: set[tuple[int, frozenset[int], int]] = set()
    attempts = 0
    while len(chosen) < max_triples and attempts < max_triples * 50:
        attempts += 1
        j, k = rng.sample(range(n), 2)
        cond = frozenset(v for v in range(n)
                         if v != j and v != k and rng.random() < 0.35)
        chosen.add((j, cond, k))
    return sorted(chosen, key=lambda t: (t[0], t[2], sorted(t[1])))


def check_theorem2(dag: Dag, trials: int, seed: int, *,
                   max_triples: int = 64,
                   soundness_tol: float = 1e-9,
                   dependence_tol: float = 1e-6) -> Theorem2Report:
    """Numeric spot-check that separation verdicts match exact independence.

    For each sampled triple the verdict comes from the trail oracle; the
    numeric side builds `trials` seeded binary networks once and measures
    the largest CI deviation per network.
    """
    if dag.node_count > TRAIL_NODE_LIMIT:
        raise OracleScaleExceeded(
            f"numeric checking is capped at {TRAIL_NODE_LIMIT} nodes, "
            f"graph has {dag.node_count}")
    if trials < 1:
        raise ValueError("need at least one trial network")
    seed_rng = random.Random(f"{seed}:networks")
    net_seeds = [seed_rng.randrange(2 ** 32) for _ in range(trials)]
    tables = [joint(random_network(dag, 2, s)) for s in net_seeds]

    outcomes = []
    for source, cond, target in sample_triples(dag, seed, max_triples):
        separated = _oracle_separated(dag, source, target, cond)
        worst = 0.0
        violating = 0
        for table in tables:
            dev = max_ci_violation(table, (source,), (target,), cond)
            worst = max(worst, dev)
            if dev > dependence_tol:
                violating += 1
        outcomes.append(TripleOutcome(
            source=source, target=target, conditioning=cond,
            separated=separated, max_violation=worst,
            networks_violating=violating))
    return Theorem2Report(outcomes=tuple(outcomes), trials=trials,
                          soundness_tol=soundness_tol,
                          dependence_tol=dependence_tol)
