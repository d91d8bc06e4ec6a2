"""Edge-weighted trees, leaf distances, and PCG realization.

A pairwise compatibility instance is a tree with non-negative rational
edge weights plus a closed interval [d_min, d_max]. Realizing it yields
the graph on the tree's leaves whose edges are exactly the leaf pairs at
tree distance inside the interval. Everything is exact: weights and
bounds are Fractions and interval membership is exact comparison, so a
distance equal to a bound is an edge, full stop.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import (
    DuplicateLabel,
    InvalidInput,
    InvalidInterval,
    LabelMismatch,
    NegativeWeight,
    NotATree,
    UnknownEndpoint,
    UnknownLabel,
)
from .graphs import Graph, new_graph
from .rational import coerce_rational, format_rational, parse_rational


@dataclass(frozen=True)
class WeightedTree:
    """Immutable tree with Fraction edge weights.

    `edges` holds (node index, node index, weight) triples. Build through
    `new_tree`, which validates connectivity and the edge count.
    """

    nodes: tuple[str, ...]
    edges: tuple[tuple[int, int, Fraction], ...]

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.nodes)}

    @cached_property
    def _adjacency(self) -> tuple[tuple[tuple[int, Fraction], ...], ...]:
        rows: list[list[tuple[int, Fraction]]] = [[] for _ in self.nodes]
        for i, j, w in self.edges:
            rows[i].append((j, w))
            rows[j].append((i, w))
        return tuple(tuple(row) for row in rows)

    @cached_property
    def leaf_set(self) -> tuple[str, ...]:
        """Degree-one nodes in node order; a lone node counts as a leaf."""
        if len(self.nodes) == 1:
            return (self.nodes[0],)
        degree = [0] * len(self.nodes)
        for i, j, _ in self.edges:
            degree[i] += 1
            degree[j] += 1
        return tuple(label for i, label in enumerate(self.nodes) if degree[i] == 1)

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(f"no node labelled {label!r}") from None


def new_tree(nodes, weighted_edges) -> WeightedTree:
    """Build a validated WeightedTree from (u, v, weight) triples."""
    node_list = list(nodes)
    if not node_list:
        raise NotATree("a tree needs at least one node")
    for label in node_list:
        if not isinstance(label, str):
            raise InvalidInput(f"node labels must be strings, got {label!r}")
    seen = set()
    for label in node_list:
        if label in seen:
            raise DuplicateLabel(f"duplicate node label {label!r}")
        seen.add(label)
    index = {label: i for i, label in enumerate(node_list)}
    triples: list[tuple[int, int, Fraction]] = []
    for edge in weighted_edges:
        u, v, raw_w = edge[0], edge[1], edge[2]
        if u not in index:
            raise UnknownEndpoint(f"edge endpoint {u!r} is not a node")
        if v not in index:
            raise UnknownEndpoint(f"edge endpoint {v!r} is not a node")
        if u == v:
            raise NotATree(f"edge {u!r} - {v!r} is a loop")
        w = coerce_rational(raw_w)
        if w < 0:
            raise NegativeWeight(f"edge {u!r} - {v!r} has weight {w}")
        triples.append((index[u], index[v], w))
    n = len(node_list)
    if len(triples) != n - 1:
        raise NotATree(f"{n} nodes need exactly {n - 1} edges, got {len(triples)}")
    # n-1 edges and full connectivity together rule out cycles.
    reach = {0}
    frontier = [0]
    adj: list[list[int]] = [[] for _ in node_list]
    for i, j, _ in triples:
        adj[i].append(j)
        adj[j].append(i)
    while frontier:
        cur = frontier.pop()
        for nxt in adj[cur]:
            if nxt not in reach:
                reach.add(nxt)
                frontier.append(nxt)
    if len(reach) != n:
        raise NotATree("edge set does not connect all nodes")
    return WeightedTree(tuple(node_list), tuple(triples))


def _distances_from(tree: WeightedTree, start: int) -> list[Fraction]:
    dist: list[Fraction | None] = [None] * len(tree.nodes)
    dist[start] = Fraction(0)
    stack = [start]
    rows = tree._adjacency
    while stack:
        cur = stack.pop()
        base = dist[cur]
        for nxt, w in rows[cur]:
            if dist[nxt] is None:
                dist[nxt] = base + w
                stack.append(nxt)
    return dist  # type: ignore[return-value]


def tree_distance(tree: WeightedTree, u: str, v: str) -> Fraction:
    """Exact path weight between any two nodes (leaves or internal)."""
    i = tree.index_of(u)
    j = tree.index_of(v)
    return _distances_from(tree, i)[j]


def all_leaf_distances(tree: WeightedTree) -> dict[tuple[str, str], Fraction]:
    """Complete symmetric leaf-pair distance table.

    Keys are unordered pairs stored as sorted label tuples, one entry per
    pair of distinct leaves.
    """
    leaves = tree.leaf_set
    leaf_index = [tree.index_of(label) for label in leaves]
    table: dict[tuple[str, str], Fraction] = {}
    for p, src in enumerate(leaf_index):
        dist = _distances_from(tree, src)
        for q in range(p + 1, len(leaf_index)):
            a, b = leaves[p], leaves[q]
            key = (a, b) if a < b else (b, a)
            table[key] = dist[leaf_index[q]]
    return table


@dataclass(frozen=True)
class PcgInstance:
    """A weighted tree together with a closed distance interval."""

    tree: WeightedTree
    d_min: Fraction
    d_max: Fraction

    def __post_init__(self):
        object.__setattr__(self, "d_min", coerce_rational(self.d_min))
        object.__setattr__(self, "d_max", coerce_rational(self.d_max))
        if self.d_min < 0 or self.d_max < self.d_min:
            raise InvalidInterval(
                f"need 0 <= d_min <= d_max, got [{self.d_min}, {self.d_max}]"
            )


def pcg_realize(inst: PcgInstance) -> Graph:
    """Graph on the tree's leaves; edge iff d_min <= distance <= d_max."""
    leaves = inst.tree.leaf_set
    edges = [
        pair
        for pair, d in all_leaf_distances(inst.tree).items()
        if inst.d_min <= d <= inst.d_max
    ]
    return new_graph(leaves, edges)


def is_witness(inst: PcgInstance, g: Graph) -> bool:
    """True iff realizing `inst` reproduces `g` edge for edge.

    The leaf labels must equal the graph's labels as sets; comparison is
    by labelled edges, not up to isomorphism.
    """
    leaves = set(inst.tree.leaf_set)
    if leaves != set(g.labels):
        raise LabelMismatch(
            "tree leaves and graph vertices differ: "
            f"{sorted(leaves ^ set(g.labels))!r} unmatched"
        )
    realized = pcg_realize(inst)
    return set(realized.edges()) == set(g.edges())


# ---------------------------------------------------------------------------
# serialization


def tree_to_json(tree: WeightedTree) -> dict:
    """JSON-ready dict with weights in canonical rational text form."""
    return {
        "nodes": list(tree.nodes),
        "edges": [
            [tree.nodes[i], tree.nodes[j], format_rational(w)]
            for i, j, w in tree.edges
        ],
    }


def _parse_tree_fields(data) -> WeightedTree:
    nodes = data["nodes"]
    edges = data["edges"]
    if not isinstance(nodes, list):
        raise InvalidInput('"nodes" must be a list')
    if not isinstance(edges, list):
        raise InvalidInput('"edges" must be a list')
    triples = []
    for item in edges:
        if not isinstance(item, list) or len(item) != 3:
            raise InvalidInput(
                f"each tree edge must be [node, node, weight], got {item!r}"
            )
        triples.append((item[0], item[1], parse_rational(item[2])))
    return new_tree(nodes, triples)


def tree_from_json(data) -> WeightedTree:
    """Parse the {"nodes", "edges"} schema; instance keys are tolerated
    and ignored so a realization instance file also reads as its tree."""
    if not isinstance(data, dict) or not set(data) >= {"nodes", "edges"}:
        raise InvalidInput('tree JSON must have the keys "nodes" and "edges"')
    if set(data) - {"nodes", "edges", "d_min", "d_max"}:
        raise InvalidInput(f"unexpected keys in tree JSON: {sorted(set(data) - {'nodes', 'edges', 'd_min', 'd_max'})}")
    return _parse_tree_fields(data)


def instance_to_json(inst: PcgInstance) -> dict:
    out = tree_to_json(inst.tree)
    out["d_min"] = format_rational(inst.d_min)
    out["d_max"] = format_rational(inst.d_max)
    return out


def instance_from_json(data) -> PcgInstance:
    if not isinstance(data, dict) or set(data) != {"nodes", "edges", "d_min", "d_max"}:
        raise InvalidInput(
            'instance JSON must have exactly the keys "nodes", "edges", "d_min", "d_max"'
        )
    tree = _parse_tree_fields(data)
    return PcgInstance(tree, parse_rational(data["d_min"]), parse_rational(data["d_max"]))


def dumps_tree(tree: WeightedTree) -> str:
    return json.dumps(tree_to_json(tree), indent=2) + "\n"


def dumps_instance(inst: PcgInstance) -> str:
    return json.dumps(instance_to_json(inst), indent=2) + "\n"


def loads_tree(text: str) -> WeightedTree:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"not valid JSON: {exc}") from None
    return tree_from_json(data)


def loads_instance(text: str) -> PcgInstance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"not valid JSON: {exc}") from None
    return instance_from_json(data)


def tree_to_dot(tree: WeightedTree) -> str:
    """Graphviz text with edge weights as labels."""
    lines = ["graph T {"]
    lines.extend(f'  "{label}";' for label in tree.nodes)
    lines.extend(
        f'  "{tree.nodes[i]}" -- "{tree.nodes[j]}" [label="{format_rational(w)}"];'
        for i, j, w in tree.edges
    )
    lines.append("}")
    return "\n".join(lines) + "\n"
