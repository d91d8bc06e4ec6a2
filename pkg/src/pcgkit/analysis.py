"""Structural tests for PCG membership.

Everything here inspects the complement of the input graph. The negative
certificate is a pair of obstructions (a hole, meaning an induced cycle
of length at least four, or an induced complement of a cycle on five or
more vertices) whose disjoint union is an induced subgraph of the
complement: vertex-disjoint and with no complement edges between them.
Mere vertex-disjointness is not enough; the complement of any large
cycle or grid contains two vertex-disjoint holes joined by edges, and
those graphs are PCGs. An acyclic complement certifies membership.
Between the two certificates the honest answer is Unknown, and the
classifier also reports coarser structural classes of the complement:

  g1: no holes at all
  g2: at least two holes, every obstruction pair shares a vertex, and
      two holes sharing a vertex cover the complement's whole edge set
  g3: two vertex-disjoint holes plus connecting edges make up exactly
      the complement's edge set (a heuristic reading)
  g4: exactly one hole

Searches are exhaustive but capped; a search that hits its cap degrades
the report to truncated/Unknown instead of failing or guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidInput, SizeLimitExceeded
from .graphs import Graph, _bits, complement, connected_components

DEFAULT_HOLE_LIMIT = 10_000
HOLE_SEARCH_VERTEX_CAP = 64
CYCLE_COMPLEMENT_VERTEX_CAP = 20
CLASS_FLAG_HOLE_CAP = 500

HOLE = "hole"
CYCLE_COMPLEMENT = "cycle_complement"

VERDICT_IS_PCG = "IsPCG"
VERDICT_IS_NOT_PCG = "IsNotPCG"
VERDICT_UNKNOWN = "Unknown"


def _canonical_cycle(labels: list[str]) -> tuple[str, ...]:
    """Canonical form of a cyclic order: rotate the smallest label to the
    front, then walk toward its smaller neighbour."""
    pivot = labels.index(min(labels))
    rotated = labels[pivot:] + labels[:pivot]
    if rotated[1] > rotated[-1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


@dataclass(frozen=True)
class Hole:
    """An induced cycle of length >= 4, stored in canonical cyclic order."""

    vertices: tuple[str, ...]

    def __post_init__(self):
        if len(self.vertices) < 4:
            raise InvalidInput("a hole has at least four vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidInput("hole vertices must be distinct")

    @property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)


@dataclass(frozen=True)
class HoleSearch:
    """Result of hole enumeration; `truncated` means the limit cut it off."""

    holes: tuple[Hole, ...]
    truncated: bool


@dataclass(frozen=True)
class Obstruction:
    """A PCG obstruction certificate.

    For kind "hole", `vertices` is the induced cycle in cyclic order. For
    kind "cycle_complement", `vertices` is the ordering of the cycle
    whose complement is induced, so consecutive vertices are non-adjacent
    and all others adjacent.
    """

    kind: str
    vertices: tuple[str, ...]

    def __post_init__(self):
        if self.kind not in (HOLE, CYCLE_COMPLEMENT):
            raise InvalidInput(f"unknown obstruction kind {self.kind!r}")

    @property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)


def _enumerate_hole_index_cycles(g: Graph):
    """Yield every induced cycle of length >= 4 once, as index tuples.

    Cycles are grown as induced paths anchored at their minimum vertex:
    every later vertex exceeds the anchor, a new vertex may touch only
    the current head, and touching the anchor as well (and nothing else)
    closes the cycle. Keeping only closings with path[1] < last kills the
    mirror-image duplicate.
    """
    adj = g.adj

    def extend(path: list[int], mask: int):
        head = path[-1]
        anchor_bit = 1 << path[0]
        for w in _bits(adj[head]):
            if w <= path[0] or (mask >> w) & 1:
                continue
            conflicts = adj[w] & mask & ~(1 << head)
            if conflicts == 0:
                path.append(w)
                yield from extend(path, mask | (1 << w))
                path.pop()
            elif conflicts == anchor_bit and len(path) >= 3 and path[1] < w:
                yield (*path, w)

    for start in range(g.vertex_count):
        yield from extend([start], 1 << start)


def find_holes(g: Graph, limit: int = DEFAULT_HOLE_LIMIT) -> HoleSearch:
    """Exhaustively enumerate holes, stopping after `limit` of them.

    Deterministic: anchors and neighbours are scanned in vertex order, so
    equal inputs give byte-identical inventories.
    """
    if g.vertex_count > HOLE_SEARCH_VERTEX_CAP:
        raise SizeLimitExceeded(
            f"hole search capped at {HOLE_SEARCH_VERTEX_CAP} vertices"
        )
    if limit < 1:
        raise InvalidInput(f"hole limit must be positive, got {limit}")
    holes: list[Hole] = []
    truncated = False
    for cycle in _enumerate_hole_index_cycles(g):
        if len(holes) == limit:
            truncated = True
            break
        holes.append(Hole(_canonical_cycle([g.labels[i] for i in cycle])))
    return HoleSearch(tuple(holes), truncated)


def is_hole(g: Graph, ordered: tuple[str, ...]) -> bool:
    """Validate a claimed hole against the graph it lives in."""
    m = len(ordered)
    if m < 4 or len(set(ordered)) != m:
        return False
    idx = [g.index_of(v) for v in ordered]
    for a in range(m):
        for b in range(a + 1, m):
            adjacent = (g.adj[idx[a]] >> idx[b]) & 1 == 1
            consecutive = b - a == 1 or (a == 0 and b == m - 1)
            if adjacent != consecutive:
                return False
    return True


def is_cycle_complement_witness(g: Graph, ordered: tuple[str, ...]) -> bool:
    """Validate a claimed induced cycle complement: `ordered` is the cycle
    whose consecutive pairs are the induced subgraph's non-edges."""
    m = len(ordered)
    if m < 5 or len(set(ordered)) != m:
        return False
    idx = [g.index_of(v) for v in ordered]
    for a in range(m):
        for b in range(a + 1, m):
            adjacent = (g.adj[idx[a]] >> idx[b]) & 1 == 1
            consecutive = b - a == 1 or (a == 0 and b == m - 1)
            if adjacent == consecutive:
                return False
    return True


def find_cycle_complements(
    g: Graph,
    n_min: int = 5,
    n_max: int = 10,
    vertex_cap: int = CYCLE_COMPLEMENT_VERTEX_CAP,
) -> list[Obstruction]:
    """Vertex subsets inducing the complement of an n-cycle, n_min <= n <= n_max.

    A subset qualifies iff its within-subset complement is a single
    cycle, so the check is degree filtering plus one cycle walk. Subset
    search is exponential in spirit, hence the vertex cap.
    """
    if n_min < 5:
        raise InvalidInput(f"cycle complements start at 5 vertices, got n_min={n_min}")
    if g.vertex_count > vertex_cap:
        raise SizeLimitExceeded(
            f"cycle complement search capped at {vertex_cap} vertices"
        )
    adj = g.adj
    out: list[Obstruction] = []
    for n in range(n_min, min(n_max, g.vertex_count) + 1):
        want = n - 3  # induced degree when the complement within is 2-regular
        for combo in combinations(range(g.vertex_count), n):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if any((adj[v] & mask).bit_count() != want for v in combo):
                continue
            # Walk the within-subset complement; it must be one n-cycle.
            start = combo[0]
            co_adj = {v: mask & ~adj[v] & ~(1 << v) for v in combo}
            first_two = sorted(_bits(co_adj[start]))
            order = [start, first_two[0]]
            while True:
                nxt_bits = co_adj[order[-1]] & ~(1 << order[-2])
                if len(order) == n:
                    break
                nxt = nxt_bits.bit_length() - 1
                if nxt == start or (1 << nxt) & ~mask:
                    break
                order.append(nxt)
            if len(order) == n and (co_adj[order[-1]] >> start) & 1:
                out.append(
                    Obstruction(
                        CYCLE_COMPLEMENT,
                        _canonical_cycle([g.labels[v] for v in order]),
                    )
                )
    return out


def validate_obstruction(g: Graph, obs: Obstruction) -> bool:
    if obs.kind == HOLE:
        return is_hole(g, obs.vertices)
    return is_cycle_complement_witness(g, obs.vertices)


def sufficient_condition(g: Graph) -> bool:
    """True iff the complement is acyclic, which certifies PCG membership."""
    gc = complement(g)
    return gc.edge_count == gc.vertex_count - len(connected_components(gc))


def _index_mask(g: Graph, labels) -> int:
    mask = 0
    for label in labels:
        mask |= 1 << g.index_of(label)
    return mask


def obstructions_independent(g: Graph, a: Obstruction, b: Obstruction) -> bool:
    """True iff the two certificates are vertex-disjoint and no edge of g
    joins them, i.e. their disjoint union is induced in g."""
    ma = _index_mask(g, a.vertices)
    mb = _index_mask(g, b.vertices)
    if ma & mb:
        return False
    return all(g.adj[i] & mb == 0 for i in _bits(ma))


def _first_independent_pair(
    gc: Graph, obstructions: list[Obstruction]
) -> tuple[Obstruction, Obstruction] | None:
    masks = [_index_mask(gc, o.vertices) for o in obstructions]
    for i in range(len(obstructions)):
        for j in range(i + 1, len(obstructions)):
            if masks[i] & masks[j]:
                continue
            if all(gc.adj[v] & masks[j] == 0 for v in _bits(masks[i])):
                return (obstructions[i], obstructions[j])
    return None


def _exists_vertex_disjoint_pair(obstructions: list[Obstruction]) -> bool:
    sets = [o.vertex_set for o in obstructions]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if sets[i].isdisjoint(sets[j]):
                return True
    return False


def necessary_condition_violated(
    g: Graph,
    hole_limit: int = DEFAULT_HOLE_LIMIT,
    cc_n_max: int = 10,
    cc_vertex_cap: int = CYCLE_COMPLEMENT_VERTEX_CAP,
) -> tuple[Obstruction, Obstruction] | None:
    """First independent obstruction pair in the complement, if any.

    Independent means vertex-disjoint with no complement edge between the
    two certificates, so the complement contains their disjoint union as
    an induced subgraph. None means no such pair was found within the
    search limits, which is not a PCG membership claim.
    """
    gc = complement(g)
    search = find_holes(gc, hole_limit)
    obstructions = [Obstruction(HOLE, h.vertices) for h in search.holes]
    obstructions.extend(find_cycle_complements(gc, 5, cc_n_max, cc_vertex_cap))
    return _first_independent_pair(gc, obstructions)


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class ClassFlags:
    """Structural class signals for the complement; None means the search
    was cut short and the flag cannot be decided."""

    g1: bool | None
    g2: bool | None
    g3: bool | None
    g4: bool | None


@dataclass(frozen=True)
class ClassificationReport:
    verdict: str
    sufficient_holds: bool
    necessary_violated: tuple[Obstruction, Obstruction] | None
    holes: tuple[Hole, ...]
    holes_truncated: bool
    searches_complete: bool
    class_flags: ClassFlags
    notes: tuple[str, ...]


def _cycle_edge_set(ordered: tuple[str, ...]) -> frozenset[frozenset[str]]:
    m = len(ordered)
    return frozenset(
        frozenset((ordered[a], ordered[(a + 1) % m])) for a in range(m)
    )


def _edge_label_set(g: Graph) -> frozenset[frozenset[str]]:
    return frozenset(frozenset(e) for e in g.edges())


def classify(
    g: Graph,
    hole_limit: int = DEFAULT_HOLE_LIMIT,
    cc_n_max: int = 10,
    cc_vertex_cap: int = CYCLE_COMPLEMENT_VERTEX_CAP,
) -> ClassificationReport:
    """Run every membership test and bundle the evidence.

    Verdict: IsPCG when the complement is acyclic, IsNotPCG when a
    validated independent obstruction pair (vertex-disjoint, no
    complement edges between) exists in the complement, Unknown
    otherwise. A truncated or skipped search never produces a definite
    negative claim; it surfaces as flags set to None plus a note.
    """
    gc = complement(g)
    notes: list[str] = []
    sufficient = sufficient_condition(g)

    holes: tuple[Hole, ...] = ()
    holes_truncated = False
    holes_complete = True
    try:
        search = find_holes(gc, hole_limit)
        holes = search.holes
        holes_truncated = search.truncated
        if search.truncated:
            holes_complete = False
            notes.append(
                f"hole enumeration stopped at the limit of {hole_limit}; "
                "hole-dependent answers are inconclusive"
            )
    except SizeLimitExceeded:
        holes_complete = False
        notes.append(
            f"complement exceeds the {HOLE_SEARCH_VERTEX_CAP}-vertex hole "
            "search cap; hole search skipped"
        )

    obstructions = [Obstruction(HOLE, h.vertices) for h in holes]
    cc_complete = True
    try:
        obstructions.extend(find_cycle_complements(gc, 5, cc_n_max, cc_vertex_cap))
    except SizeLimitExceeded:
        cc_complete = False
        notes.append(
            f"complement exceeds the {cc_vertex_cap}-vertex cycle complement "
            "search cap; that search was skipped"
        )

    pair = _first_independent_pair(gc, obstructions)
    if pair is not None:
        if not (
            validate_obstruction(gc, pair[0])
            and validate_obstruction(gc, pair[1])
            and obstructions_independent(gc, pair[0], pair[1])
        ):
            raise AssertionError("internal error: obstruction pair failed revalidation")

    if sufficient:
        verdict = VERDICT_IS_PCG
    elif pair is not None:
        verdict = VERDICT_IS_NOT_PCG
    else:
        verdict = VERDICT_UNKNOWN
        if not (holes_complete and cc_complete):
            notes.append("no obstruction pair found within limits; not a membership claim")

    gc_edges = _edge_label_set(gc)
    flags = _class_flags(
        holes,
        holes_complete,
        cc_complete,
        _exists_vertex_disjoint_pair(obstructions),
        gc_edges,
        notes,
    )

    notes.append(
        "g2 uses the strict reading: two vertex-sharing holes must cover "
        "the complement's entire edge set"
    )
    notes.append(
        "g3 is a heuristic reading: two vertex-disjoint holes plus the "
        "edges between them must be the complement's entire edge set"
    )

    return ClassificationReport(
        verdict=verdict,
        sufficient_holds=sufficient,
        necessary_violated=pair,
        holes=holes,
        holes_truncated=holes_truncated,
        searches_complete=holes_complete and cc_complete,
        class_flags=flags,
        notes=tuple(notes),
    )


def _class_flags(
    holes: tuple[Hole, ...],
    holes_complete: bool,
    cc_complete: bool,
    some_pair_vertex_disjoint: bool,
    gc_edges: frozenset[frozenset[str]],
    notes: list[str],
) -> ClassFlags:
    if not holes_complete:
        return ClassFlags(None, None, None, None)
    g1 = len(holes) == 0
    g4 = len(holes) == 1
    if len(holes) > CLASS_FLAG_HOLE_CAP:
        notes.append(
            f"more than {CLASS_FLAG_HOLE_CAP} holes; pairwise class checks skipped"
        )
        return ClassFlags(g1, None, None, g4)
    g2: bool | None = False
    g3 = False
    if not cc_complete:
        # "every obstruction pair shares a vertex" is unknowable when the
        # cycle complement search was cut off.
        g2 = None
    elif len(holes) >= 2 and not some_pair_vertex_disjoint:
        for h1, h2 in combinations(holes, 2):
            if h1.vertex_set & h2.vertex_set:
                if _cycle_edge_set(h1.vertices) | _cycle_edge_set(h2.vertices) == gc_edges:
                    g2 = True
                    break
    if len(holes) >= 2:
        for h1, h2 in combinations(holes, 2):
            if h1.vertex_set & h2.vertex_set:
                continue
            covered = _cycle_edge_set(h1.vertices) | _cycle_edge_set(h2.vertices)
            cross = {
                e
                for e in gc_edges
                if len(e & h1.vertex_set) == 1 and len(e & h2.vertex_set) == 1
            }
            if cross and covered | cross == gc_edges:
                g3 = True
                break
    return ClassFlags(g1, g2, g3, g4)


# ---------------------------------------------------------------------------
# serialization


def obstruction_to_json(obs: Obstruction) -> dict:
    return {"kind": obs.kind, "vertices": list(obs.vertices)}


def report_to_json(report: ClassificationReport) -> dict:
    pair = report.necessary_violated
    return {
        "verdict": report.verdict,
        "sufficient_holds": report.sufficient_holds,
        "necessary_violated": (
            None
            if pair is None
            else [obstruction_to_json(pair[0]), obstruction_to_json(pair[1])]
        ),
        "holes": [list(h.vertices) for h in report.holes],
        "holes_truncated": report.holes_truncated,
        "searches_complete": report.searches_complete,
        "class_flags": {
            "g1": report.class_flags.g1,
            "g2": report.class_flags.g2,
            "g3": report.class_flags.g3,
            "g4": report.class_flags.g4,
        },
        "notes": list(report.notes),
    }


def render_report(report: ClassificationReport) -> str:
    """Human-readable rendering of a classification report."""

    def yn(value: bool | None) -> str:
        return "undecided" if value is None else ("yes" if value else "no")

    lines = [f"verdict: {report.verdict}"]
    lines.append(f"complement acyclic (sufficient): {yn(report.sufficient_holds)}")
    if report.necessary_violated is None:
        lines.append("independent obstruction pair: none found")
    else:
        first, second = report.necessary_violated
        lines.append("independent obstruction pair:")
        lines.append(f"  {first.kind}: {' - '.join(first.vertices)}")
        lines.append(f"  {second.kind}: {' - '.join(second.vertices)}")
    suffix = " (truncated)" if report.holes_truncated else ""
    lines.append(f"holes in complement: {len(report.holes)}{suffix}")
    for hole in report.holes[:20]:
        lines.append(f"  {' - '.join(hole.vertices)}")
    if len(report.holes) > 20:
        lines.append(f"  ... {len(report.holes) - 20} more")
    flags = report.class_flags
    lines.append(
        "class flags: "
        f"g1={yn(flags.g1)} g2={yn(flags.g2)} g3={yn(flags.g3)} g4={yn(flags.g4)}"
    )
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"
