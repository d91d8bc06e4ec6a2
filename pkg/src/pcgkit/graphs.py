"""Simple undirected graphs with named vertices.

The vertex set is an ordered tuple of unique string labels; adjacency is
one integer bitmask per vertex, which keeps the exhaustive searches in
`pcgkit.analysis` cheap. Construction always validates, so a `Graph`
instance is simple (no loops, no parallel edges) and symmetric by the
time anyone sees it.

Also home to the graph families used throughout: grids, cycles, cycle
complements, cliques, and the bipartite gadget H with its augmented
variants H1, H2, H4.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    DuplicateEdge,
    DuplicateLabel,
    InvalidInput,
    OutOfRange,
    SelfLoop,
    SizeLimitExceeded,
    TooSmall,
    UnknownEndpoint,
    UnknownLabel,
)

ISOMORPHISM_VERTEX_CAP = 32


def _bits(mask: int):
    """Yield set bit positions of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    `adj[i]` holds the neighbour set of vertex i as a bitmask over vertex
    indices. Prefer `new_graph` for construction from labelled edges; the
    validation here is a backstop against malformed direct construction.
    """

    labels: tuple[str, ...]
    adj: tuple[int, ...]

    def __post_init__(self):
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise DuplicateLabel("vertex labels must be unique")
        if len(self.adj) != n:
            raise InvalidInput("adjacency row count does not match label count")
        full = (1 << n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise InvalidInput(f"adjacency bits out of range at vertex {i}")
            if (row >> i) & 1:
                raise SelfLoop(f"self loop at {self.labels[i]!r}")
            for j in _bits(row):
                if not (self.adj[j] >> i) & 1:
                    raise InvalidInput(
                        f"asymmetric adjacency between {self.labels[i]!r} "
                        f"and {self.labels[j]!r}"
                    )

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @cached_property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(f"no vertex labelled {label!r}") from None

    def has_vertex(self, label: str) -> bool:
        return label in self._index

    def degree(self, label: str) -> int:
        return self.adj[self.index_of(label)].bit_count()

    def neighbors(self, label: str) -> tuple[str, ...]:
        row = self.adj[self.index_of(label)]
        return tuple(self.labels[j] for j in _bits(row))

    def has_edge(self, u: str, v: str) -> bool:
        return (self.adj[self.index_of(u)] >> self.index_of(v)) & 1 == 1

    def edges(self) -> list[tuple[str, str]]:
        """All edges as label pairs, each pair sorted, list sorted."""
        out = []
        for i, row in enumerate(self.adj):
            for j in _bits(row):
                if j > i:
                    a, b = self.labels[i], self.labels[j]
                    out.append((a, b) if a < b else (b, a))
        out.sort()
        return out


def new_graph(labels, edges) -> Graph:
    """Build a validated Graph from labels and unordered label pairs."""
    label_list = list(labels)
    for label in label_list:
        if not isinstance(label, str):
            raise InvalidInput(f"labels must be strings, got {label!r}")
    seen = set()
    for label in label_list:
        if label in seen:
            raise DuplicateLabel(f"duplicate label {label!r}")
        seen.add(label)
    index = {label: i for i, label in enumerate(label_list)}
    adj = [0] * len(label_list)
    used_pairs = set()
    for edge in edges:
        u, v = edge[0], edge[1]
        if u not in index:
            raise UnknownEndpoint(f"edge endpoint {u!r} is not a vertex")
        if v not in index:
            raise UnknownEndpoint(f"edge endpoint {v!r} is not a vertex")
        if u == v:
            raise SelfLoop(f"self loop at {u!r}")
        pair = frozenset((u, v))
        if pair in used_pairs:
            raise DuplicateEdge(f"duplicate edge {u!r} - {v!r}")
        used_pairs.add(pair)
        i, j = index[u], index[v]
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return Graph(tuple(label_list), tuple(adj))


def complement(g: Graph) -> Graph:
    """Complement on the same labels: edges become non-edges and back."""
    n = g.vertex_count
    full = (1 << n) - 1
    adj = tuple((full & ~g.adj[i]) & ~(1 << i) for i in range(n))
    return Graph(g.labels, adj)


def induced_subgraph(g: Graph, keep) -> Graph:
    """Subgraph induced by `keep` labels, vertex order inherited from g."""
    keep_set = set(keep)
    for label in keep_set:
        if not g.has_vertex(label):
            raise UnknownLabel(f"no vertex labelled {label!r}")
    positions = [i for i, label in enumerate(g.labels) if label in keep_set]
    new_pos = {old: new for new, old in enumerate(positions)}
    adj = []
    for old in positions:
        row = 0
        for j in _bits(g.adj[old]):
            if j in new_pos:
                row |= 1 << new_pos[j]
        adj.append(row)
    return Graph(tuple(g.labels[i] for i in positions), tuple(adj))


def connected_components(g: Graph) -> list[list[str]]:
    """Vertex labels grouped by component, in vertex order."""
    n = g.vertex_count
    unseen = (1 << n) - 1
    out = []
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        frontier = 1 << start
        reached = 0
        while frontier:
            reached |= frontier
            nxt = 0
            for i in _bits(frontier):
                nxt |= g.adj[i]
            frontier = nxt & ~reached
        out.append([g.labels[i] for i in _bits(reached)])
        unseen &= ~reached
    return out


# ---------------------------------------------------------------------------
# isomorphism


def _refined_colors(adj: tuple[int, ...]) -> list[int]:
    """Iterated neighbourhood colour refinement, starting from degrees."""
    n = len(adj)
    colors = [row.bit_count() for row in adj]
    while True:
        signatures = [
            (colors[i], tuple(sorted(colors[j] for j in _bits(adj[i]))))
            for i in range(n)
        ]
        palette = {sig: c for c, sig in enumerate(sorted(set(signatures)))}
        refreshed = [palette[sig] for sig in signatures]
        if refreshed == colors:
            return colors
        colors = refreshed


def are_isomorphic(g1: Graph, g2: Graph, max_vertices: int = ISOMORPHISM_VERTEX_CAP) -> bool:
    """Exact isomorphism test for small graphs.

    Colour refinement rules out most non-isomorphic pairs, then a
    backtracking search over colour-compatible assignments settles the
    rest. Raises SizeLimitExceeded above `max_vertices` vertices rather
    than running an open-ended search.
    """
    if g1.vertex_count > max_vertices or g2.vertex_count > max_vertices:
        raise SizeLimitExceeded(
            f"isomorphism search capped at {max_vertices} vertices"
        )
    n = g1.vertex_count
    if n != g2.vertex_count or g1.edge_count != g2.edge_count:
        return False
    c1 = _refined_colors(g1.adj)
    c2 = _refined_colors(g2.adj)
    if sorted(c1) != sorted(c2):
        return False
    if n == 0:
        return True

    class_size: dict[int, int] = {}
    for c in c1:
        class_size[c] = class_size.get(c, 0) + 1

    # Assignment order: most constrained first, then grow along edges so
    # adjacency checks prune early.
    order: list[int] = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        best = min(
            remaining,
            key=lambda v: (
                -(g1.adj[v] & placed).bit_count(),
                class_size[c1[v]],
                -g1.adj[v].bit_count(),
                v,
            ),
        )
        order.append(best)
        placed |= 1 << best
        remaining.discard(best)

    candidates_by_color: dict[int, list[int]] = {}
    for w in range(n):
        candidates_by_color.setdefault(c2[w], []).append(w)

    mapping = [-1] * n
    used = [False] * n

    def assign(depth: int) -> bool:
        if depth == n:
            return True
        v = order[depth]
        for w in candidates_by_color.get(c1[v], ()):
            if used[w]:
                continue
            ok = True
            for u in order[:depth]:
                if ((g1.adj[v] >> u) & 1) != ((g2.adj[w] >> mapping[u]) & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if assign(depth + 1):
                return True
            used[w] = False
            mapping[v] = -1
        return False

    return assign(0)


# ---------------------------------------------------------------------------
# generators


@dataclass(frozen=True)
class GridSpec:
    """Dimensions of a k-by-l grid, k rows and l columns, both >= 1."""

    k: int
    l: int

    def __post_init__(self):
        if self.k < 1 or self.l < 1:
            raise OutOfRange(f"grid dimensions must be >= 1, got {self.k}x{self.l}")


def grid_label(x: int, y: int) -> str:
    """Label of the grid vertex in row x, column y."""
    return f"u_{x},{y}"


def gen_grid(spec: GridSpec) -> Graph:
    """Grid graph: vertices u_x,y, edges between horizontal and vertical
    neighbours."""
    labels = [grid_label(x, y) for x in range(1, spec.k + 1) for y in range(1, spec.l + 1)]
    edges = []
    for x in range(1, spec.k + 1):
        for y in range(1, spec.l + 1):
            if y < spec.l:
                edges.append((grid_label(x, y), grid_label(x, y + 1)))
            if x < spec.k:
                edges.append((grid_label(x, y), grid_label(x + 1, y)))
    return new_graph(labels, edges)


def _ring_labels(n: int) -> list[str]:
    return [f"v{i}" for i in range(1, n + 1)]


def gen_cycle(n: int) -> Graph:
    """Cycle v1 - v2 - ... - vn - v1, n >= 3."""
    if n < 3:
        raise TooSmall(f"a cycle needs at least 3 vertices, got {n}")
    labels = _ring_labels(n)
    edges = [(labels[i], labels[(i + 1) % n]) for i in range(n)]
    return new_graph(labels, edges)


def gen_cycle_complement(n: int) -> Graph:
    """Complement of the n-cycle on the same labels, n >= 4."""
    if n < 4:
        raise TooSmall(f"a cycle complement needs at least 4 vertices, got {n}")
    return complement(gen_cycle(n))


def gen_complete(n: int) -> Graph:
    """Complete graph on v1..vn, n >= 1."""
    if n < 1:
        raise TooSmall(f"a complete graph needs at least 1 vertex, got {n}")
    labels = _ring_labels(n)
    return new_graph(labels, itertools.combinations(labels, 2))


def gen_empty(n: int) -> Graph:
    """Edgeless graph on v1..vn, n >= 1."""
    if n < 1:
        raise TooSmall(f"an edgeless graph needs at least 1 vertex, got {n}")
    return new_graph(_ring_labels(n), [])


def gen_H() -> Graph:
    """Bipartite gadget on parts A = {a1..a5} and B = {b1..b10}.

    The B-side neighbourhoods are the ten 3-element subsets of A, taken
    in lexicographic order, so every a-vertex has degree 6, every
    b-vertex degree 3, and no two b-vertices share a neighbourhood.
    """
    a_side = [f"a{i}" for i in range(1, 6)]
    b_side = [f"b{j}" for j in range(1, 11)]
    edges = []
    for j, triple in enumerate(itertools.combinations(a_side, 3), start=1):
        edges.extend((f"b{j}", a) for a in triple)
    return new_graph(a_side + b_side, edges)


def gen_H1() -> Graph:
    """The gadget H with its A side completed to a clique."""
    base = gen_H()
    a_side = [f"a{i}" for i in range(1, 6)]
    return new_graph(base.labels, base.edges() + list(itertools.combinations(a_side, 2)))


def gen_H2() -> Graph:
    """The gadget H plus the 5-cycle a1-a2-a3-a4-a5-a1 and a clique on B."""
    base = gen_H()
    a_side = [f"a{i}" for i in range(1, 6)]
    b_side = [f"b{j}" for j in range(1, 11)]
    ring = [(a_side[i], a_side[(i + 1) % 5]) for i in range(5)]
    return new_graph(
        base.labels,
        base.edges() + ring + list(itertools.combinations(b_side, 2)),
    )


def gen_H4() -> Graph:
    """H1 joined completely to five new vertices inducing a 5-cycle complement.

    The c-side pairs at cyclic distance two are adjacent (that is the
    complement of the cycle c1-c2-c3-c4-c5), and every c-vertex is
    adjacent to all of A and B.
    """
    base = gen_H1()
    c_side = [f"c{i}" for i in range(1, 6)]
    inner = [
        (c_side[i], c_side[j])
        for i in range(5)
        for j in range(i + 1, 5)
        if (j - i) % 5 not in (1, 4)
    ]
    join = [(old, c) for old in base.labels for c in c_side]
    return new_graph(list(base.labels) + c_side, base.edges() + inner + join)


# ---------------------------------------------------------------------------
# serialization


def graph_to_json(g: Graph) -> dict:
    """JSON-ready dict: labels in order, edges canonically sorted."""
    return {"labels": list(g.labels), "edges": [list(e) for e in g.edges()]}


def graph_from_json(data) -> Graph:
    """Parse and fully validate the {"labels", "edges"} schema."""
    if not isinstance(data, dict) or set(data) != {"labels", "edges"}:
        raise InvalidInput('graph JSON must have exactly the keys "labels" and "edges"')
    labels = data["labels"]
    edges = data["edges"]
    if not isinstance(labels, list):
        raise InvalidInput('"labels" must be a list')
    if not isinstance(edges, list):
        raise InvalidInput('"edges" must be a list')
    pairs = []
    for item in edges:
        if not isinstance(item, list) or len(item) != 2:
            raise InvalidInput(f"each edge must be a two-element list, got {item!r}")
        pairs.append((item[0], item[1]))
    return new_graph(labels, pairs)


def dumps_graph(g: Graph) -> str:
    """Canonical graph JSON text; equal graphs always serialize identically."""
    return json.dumps(graph_to_json(g), indent=2) + "\n"


def loads_graph(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"not valid JSON: {exc}") from None
    return graph_from_json(data)


def graph_to_dot(g: Graph) -> str:
    """Graphviz text; every vertex is emitted so isolated ones survive."""
    lines = ["graph G {"]
    lines.extend(f'  "{label}";' for label in g.labels)
    lines.extend(f'  "{u}" -- "{v}";' for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
