"""Which stored tables and which observations can matter for a query.

Each node gets a dummy parent standing for the parameters of its
conditional table.  Dummies that stay d-connected to the query sources
mark requisite tables; ordinary nodes that stay d-connected mark
observations that could still change the answer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dag import Dag, NodeSet, checked_nodes
from .engine import SeparationQuery, dsep_set_fast


@dataclass(frozen=True)
class AugmentedDag:
    """A dag plus one parentless dummy parent per base node.

    Dummy ids are assigned after all base ids: the dummy of base node v
    is `base.node_count + v`.  `graph` holds the combined dag.
    """

    base: Dag
    graph: Dag
    dummy_of: dict[int, int]

    def is_dummy(self, node: int) -> bool:
        return node >= self.base.node_count


def augment_dummies(dag: Dag) -> AugmentedDag:
    """Attach a fresh dummy parent to every node of `dag`."""
    n = dag.node_count
    edges = list(dag.edges) + [(n + v, v) for v in range(n)]
    names = None
    if dag.names is not None:
        names = list(dag.names) + [nm + "'" for nm in dag.names]
    graph = Dag(2 * n, edges, names=names)
    return AugmentedDag(base=dag, graph=graph,
                        dummy_of={v: n + v for v in range(n)})


def requisite_parameters(dag: Dag, query: SeparationQuery) -> NodeSet:
    """Base nodes whose conditional tables the query answer can depend on.

    Computed as the dummies still d-connected to the sources in the
    augmented dag, reported by their base node ids.
    """
    checked_nodes(dag, query.sources | query.conditioning)
    aug = augment_dummies(dag)
    separated = dsep_set_fast(aug.graph, SeparationQuery(query.sources,
                                                         query.conditioning))
    n = dag.node_count
    return frozenset(v for v in range(n) if (n + v) not in separated)


def relevant_variables(dag: Dag, query: SeparationQuery) -> NodeSet:
    """Base nodes whose observed values could still change the query answer.

    The complement of the separated set, minus the sources and the
    conditioning set themselves.
    """
    separated = dsep_set_fast(dag, query)
    return (frozenset(range(dag.node_count)) - separated
            - query.sources - query.conditioning)
