"""Distance criticality: determining pairs, decision procedures, reports.

A graph is distance critical when deleting any single vertex changes some
distance between two surviving vertices (a finite distance becoming
unreachable counts).  Equivalently, every vertex v admits a determining
pair: two nonadjacent vertices whose unique common neighbor is v.  The
equivalence holds componentwise, so both tests below accept disconnected
input; a graph with no vertices is not distance critical by convention.

The pairs method is the workhorse: it needs no distance recomputation and
reports, per vertex, the lexicographically least witness pair.  The direct
method recomputes all-pairs distances after each deletion and exists as an
independent check of the same predicate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, all_pairs_distances, bits


def common_neighbors(g: Graph, a: int, b: int) -> tuple[int, ...]:
    """Vertices adjacent to both a and b, ascending."""
    if a == b:
        raise ValueError("common_neighbors needs two distinct vertices")
    return tuple(bits(g.adj[a] & g.adj[b]))


def determining_pairs_of(g: Graph, v: int) -> list[tuple[int, int]]:
    """All determining pairs of v, sorted lexicographically.

    A determining pair of v is a nonadjacent pair a < b whose unique
    common neighbor is v; both endpoints necessarily lie in N(v).
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    adj = g.adj
    bit_v = 1 << v
    nb = list(bits(adj[v]))
    out = []
    for i, a in enumerate(nb):
        ra = adj[a]
        for b in nb[i + 1:]:
            if not ra >> b & 1 and ra & adj[b] == bit_v:
                out.append((a, b))
    return out


def _witness_for(adj, v: int) -> tuple[int, int] | None:
    bit_v = 1 << v
    nb = list(bits(adj[v]))
    for i, a in enumerate(nb):
        ra = adj[a]
        for b in nb[i + 1:]:
            if not ra >> b & 1 and ra & adj[b] == bit_v:
                return (a, b)
    return None


def involved_set(g: Graph) -> tuple[int, ...]:
    """Vertices occurring as an endpoint of some determining pair."""
    adj = g.adj
    s = 0
    for a in range(g.n):
        ra = adj[a]
        for b in range(a + 1, g.n):
            if not ra >> b & 1:
                c = ra & adj[b]
                if c and c & (c - 1) == 0:
                    s |= (1 << a) | (1 << b)
    return tuple(bits(s))


@dataclass(frozen=True)
class CriticalityReport:
    """Verdict plus per-vertex witnesses and the involved set.

    witnesses[v] is the lexicographically least determining pair of v, or
    None; for the pairs method the verdict is true exactly when every
    entry is present.  involved lists every vertex occurring in any
    determining pair of the graph, not only in the chosen witnesses.
    """

    n: int
    verdict: bool
    method: str
    witnesses: tuple[tuple[int, int] | None, ...]
    involved: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "critical": self.verdict,
            "method": self.method,
            "witnesses": [
                [v, a, b]
                for v, w in enumerate(self.witnesses)
                if w is not None
                for a, b in [w]
            ],
            "involved": list(self.involved),
        }


def is_distance_critical_pairs(g: Graph) -> CriticalityReport:
    """Determining-pair test with witnesses; no distance recomputation."""
    witnesses = tuple(_witness_for(g.adj, v) for v in range(g.n))
    verdict = g.n > 0 and all(w is not None for w in witnesses)
    return CriticalityReport(
        n=g.n,
        verdict=verdict,
        method="pairs",
        witnesses=witnesses,
        involved=involved_set(g),
    )


def is_distance_critical_direct(g: Graph) -> bool:
    """Delete every vertex and compare all surviving pairwise distances."""
    if g.n == 0:
        return False
    base = all_pairs_distances(g).rows
    for v in range(g.n):
        h = g.delete_vertex(v)
        sub = all_pairs_distances(h).rows
        changed = False
        for x in range(h.n):
            gx = x if x < v else x + 1
            row_b = base[gx]
            row_s = sub[x]
            for y in range(x + 1, h.n):
                gy = y if y < v else y + 1
                if row_b[gy] != row_s[y]:
                    changed = True
                    break
            if changed:
                break
        if not changed:
            return False
    return True


def _girth_exceeds_4(adj, n: int) -> bool:
    """No triangle and no 4-cycle (acyclic also qualifies)."""
    for a in range(n):
        ra = adj[a]
        for b in bits(ra >> (a + 1) << (a + 1)):
            if ra & adj[b]:
                return False
        absent = ~(ra | ((1 << (a + 1)) - 1)) & ((1 << n) - 1)
        for b in bits(absent):
            c = ra & adj[b]
            if c & (c - 1):
                return False
    return True


def _is_critical_fast(adj, n: int) -> bool:
    """Pairs test with rejection filters and girth shortcut; verdict only.

    Filters: minimum degree >= 2 is forced because a determining pair of v
    needs two nonadjacent neighbors of v; a vertex adjacent to all others
    ruins every other vertex's pairs (it is always a second common
    neighbor), which kills any graph on >= 2 vertices.  Shortcut: with
    minimum degree >= 2 and girth > 4, any two neighbors of any vertex
    form a determining pair, so the graph is critical outright.
    """
    if n <= 1:
        return False
    for row in adj:
        d = row.bit_count()
        if d < 2 or d == n - 1:
            return False
    if _girth_exceeds_4(adj, n):
        return True
    for v in range(n):
        if _witness_for(adj, v) is None:
            return False
    return True


def is_distance_critical(g: Graph) -> bool:
    """Filtered pairs verdict; same predicate as the report methods."""
    return _is_critical_fast(g.adj, g.n)


def _is_edge_maximal_fast(adj, n: int) -> bool:
    """No single added edge keeps the graph critical (assumes it is)."""
    for x in range(n):
        absent = ~(adj[x] | ((1 << (x + 1)) - 1)) & ((1 << n) - 1)
        for y in bits(absent):
            trial = list(adj)
            trial[x] |= 1 << y
            trial[y] |= 1 << x
            if _is_critical_fast(trial, n):
                return False
    return True


def is_edge_maximal_critical(g: Graph) -> bool:
    """True when no single edge can be added without losing criticality."""
    if not _is_critical_fast(g.adj, g.n):
        raise ValueError("graph is not distance critical")
    return _is_edge_maximal_fast(g.adj, g.n)
