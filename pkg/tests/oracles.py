"""Independent brute-force oracles for cross-checking the library.

Everything here recomputes answers from first principles (subset
enumeration, permutation search, path walking) so a library bug cannot
hide by agreeing with itself. The oracles read graphs only through the
public edge-list surface, never through the adjacency internals.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from pcgkit import Graph, WeightedTree, new_graph, new_tree, tree_to_json


def edge_pair_set(g: Graph) -> set[frozenset[str]]:
    return {frozenset(e) for e in g.edges()}


def brute_hole_vertex_sets(g: Graph) -> set[frozenset[str]]:
    """Vertex sets of induced cycles of length >= 4, by subset enumeration."""
    pairs = edge_pair_set(g)
    labels = g.labels
    out: set[frozenset[str]] = set()
    for size in range(4, len(labels) + 1):
        for combo in itertools.combinations(labels, size):
            degs_ok = True
            for v in combo:
                d = sum(1 for w in combo if w != v and frozenset((v, w)) in pairs)
                if d != 2:
                    degs_ok = False
                    break
            if not degs_ok:
                continue
            seen = {combo[0]}
            stack = [combo[0]]
            while stack:
                cur = stack.pop()
                for w in combo:
                    if w not in seen and frozenset((cur, w)) in pairs:
                        seen.add(w)
                        stack.append(w)
            if len(seen) == size:
                out.add(frozenset(combo))
    return out


def complement_is_forest(g: Graph) -> bool:
    """Forest test on the complement, by DFS cycle hunting (no edge counts)."""
    labels = g.labels
    pairs = edge_pair_set(g)
    nbrs = {
        v: [w for w in labels if w != v and frozenset((v, w)) not in pairs]
        for v in labels
    }
    seen: set[str] = set()
    for root in labels:
        if root in seen:
            continue
        seen.add(root)
        stack = [(root, None)]
        while stack:
            cur, parent = stack.pop()
            for w in nbrs[cur]:
                if w == parent:
                    continue
                if w in seen:
                    return False
                seen.add(w)
                stack.append((w, cur))
    return True


def brute_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Permutation search; fine up to 7 or so vertices."""
    if g1.vertex_count != g2.vertex_count:
        return False
    pairs1 = edge_pair_set(g1)
    pairs2 = edge_pair_set(g2)
    if len(pairs1) != len(pairs2):
        return False
    for perm in itertools.permutations(g2.labels):
        mapping = dict(zip(g1.labels, perm))
        if all(frozenset((mapping[u], mapping[v])) in pairs2 for u, v in pairs1):
            return True
    return False


def graph_from_pair_mask(labels, pair_list, mask: int) -> Graph:
    """Graph whose edges are the pairs selected by the bits of `mask`."""
    edges = [pair_list[i] for i in range(len(pair_list)) if (mask >> i) & 1]
    return new_graph(labels, edges)


def random_tree(rng, n_nodes: int) -> WeightedTree:
    """Random tree with small rational weights, zero weight included."""
    nodes = [f"t{i}" for i in range(n_nodes)]
    edges = []
    for i in range(1, n_nodes):
        j = rng.randrange(i)
        w = Fraction(rng.randint(0, 12), rng.randint(1, 4))
        edges.append((nodes[i], nodes[j], w))
    return new_tree(nodes, edges)


def naive_tree_distance(tree: WeightedTree, u: str, v: str) -> Fraction:
    """Path-walk distance computed from the serialized edge list."""
    data = tree_to_json(tree)
    adj: dict[str, list[tuple[str, Fraction]]] = {}
    for a, b, w in data["edges"]:
        q = Fraction(w)
        adj.setdefault(a, []).append((b, q))
        adj.setdefault(b, []).append((a, q))
    parent: dict[str, tuple[str, Fraction] | None] = {u: None}
    frontier = [u]
    while frontier:
        nxt = []
        for cur in frontier:
            for other, w in adj.get(cur, ()):
                if other not in parent:
                    parent[other] = (cur, w)
                    nxt.append(other)
        frontier = nxt
    total = Fraction(0)
    cur = v
    while parent[cur] is not None:
        step = parent[cur]
        total += step[1]
        cur = step[0]
    return total
