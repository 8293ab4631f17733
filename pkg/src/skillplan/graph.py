"""Subject dependency graphs: the unknown-subject DAG slice behind a target.

The graph contains every subject the user still has to acquire on some
prerequisite path into the target, with the arcs between them. A chain can
only start at a subject that is basic or whose remaining prerequisites are
all known; in a cycle-free catalog that is equivalent to backward
reachability from the target through unknown subjects.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import CyclicCatalogError, UnknownTargetError
from .model import Catalog, prerequisite_cycles


@dataclass(frozen=True)
class SubjectDependencyGraph:
    nodes: frozenset[str]
    arcs: frozenset[tuple[str, str]]  # (prerequisite, dependent)
    target: str

    def __bool__(self) -> bool:
        return bool(self.nodes)


def build_sdg(catalog: Catalog, known_subjects: frozenset[str] | set[str],
              target: str) -> SubjectDependencyGraph:
    """Collect the unknown subjects the user must pass through to reach target.

    Returns an empty graph when the target is already known.
    """
    if target not in catalog.subject_by_id:
        raise UnknownTargetError(target)
    if prerequisite_cycles(catalog):
        raise CyclicCatalogError("prerequisite relation is not a DAG")

    known = frozenset(known_subjects)
    if target in known:
        return SubjectDependencyGraph(frozenset(), frozenset(), target)

    nodes = {target}
    stack = [target]
    while stack:
        sid = stack.pop()
        for p in catalog.subject_by_id[sid].prerequisite_set:
            if p in known or p not in catalog.subject_by_id:
                continue
            if p not in nodes:
                nodes.add(p)
                stack.append(p)

    arcs = set()
    for sid in nodes:
        for p in catalog.subject_by_id[sid].prerequisite_set:
            if p in nodes:
                arcs.add((p, sid))

    return SubjectDependencyGraph(frozenset(nodes), frozenset(arcs), target)


def topological_order(graph: SubjectDependencyGraph) -> list[str]:
    """Linearize the graph; ties are broken by ascending subject id."""
    succ: dict[str, list[str]] = {n: [] for n in graph.nodes}
    indegree = {n: 0 for n in graph.nodes}
    for a, b in graph.arcs:
        succ[a].append(b)
        indegree[b] += 1

    ready = [n for n, d in indegree.items() if d == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        n = heapq.heappop(ready)
        order.append(n)
        for m in succ[n]:
            indegree[m] -= 1
            if indegree[m] == 0:
                heapq.heappush(ready, m)
    if len(order) != len(graph.nodes):
        raise CyclicCatalogError("dependency graph contains a cycle")
    return order


def export_edge_list(graph: SubjectDependencyGraph) -> str:
    """Debug export: one ``a<TAB>b`` line per arc, sorted."""
    return "".join(f"{a}\t{b}\n" for a, b in sorted(graph.arcs))
