"""Explicit families of distance-critical graphs.

Provided families:

  cycle, cycle_power   building blocks (C_n and its k-th power)
  gamma                a dense family on m(m+5)/2 vertices whose clique
                       number grows with m
  embed_host           embeds an arbitrary graph as an induced subgraph of
                       a distance-critical host of the same flavour
  max_degree_extremal  distance-critical graphs attaining the largest
                       possible maximum degree, n - 4, for n >= 6
  regular_extremal     vertex-regular distance-critical graphs of degree
                       floor((n-1)/4) + floor(n/4) for n >= 5
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import MAX_VERTICES, Graph, bits


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def cycle_power(n: int, k: int) -> Graph:
    """The k-th power of C_n: i ~ j iff their cyclic distance is at most k.

    2k-regular when 2k < n; k >= n // 2 gives the complete graph."""
    if n < 3:
        raise ValueError("cycle power needs at least 3 vertices")
    if not 1 <= k < n:
        raise ValueError("power k must satisfy 1 <= k < n")
    edges = {(min(i, (i + d) % n), max(i, (i + d) % n))
             for i in range(n) for d in range(1, k + 1)}
    return Graph.from_edges(n, sorted(edges))


@dataclass(frozen=True)
class GammaLayout:
    """Vertex numbering of gamma(m).

    a maps each unordered pair {i, j} (keyed (i, j), i < j < m) to the
    clique vertex it labels; b[i] is the i-th middle vertex (i < m); c[t]
    is the t-th rim-cycle vertex (t < 2m).
    """

    m: int
    a: dict[tuple[int, int], int]
    b: tuple[int, ...]
    c: tuple[int, ...]


def _gamma_on(m: int, pair_labels: list[tuple[int, int]]) -> tuple[Graph, GammaLayout]:
    """Shared builder: clique part labelled by the given pairs over range(m)."""
    na = len(pair_labels)
    n = na + 3 * m
    if n > MAX_VERTICES:
        raise ValueError(f"construction order {n} exceeds {MAX_VERTICES}")
    a = {pq: idx for idx, pq in enumerate(pair_labels)}
    b = tuple(na + i for i in range(m))
    c = tuple(na + m + t for t in range(2 * m))
    edges = []
    for idx in range(na):
        for jdx in range(idx + 1, na):
            edges.append((idx, jdx))
    for (i, j), idx in a.items():
        edges.append((idx, b[i]))
        edges.append((idx, b[j]))
    for i in range(m):
        edges.append((b[i], c[i]))
        edges.append((b[i], c[i + m]))
    for t in range(2 * m):
        edges.append((c[t], c[(t + 1) % (2 * m)]))
    return Graph.from_edges(n, edges), GammaLayout(m=m, a=a, b=b, c=c)


def gamma(m: int) -> tuple[Graph, GammaLayout]:
    """Distance-critical graph on m(m+5)/2 vertices with an m(m-1)/2-clique.

    Structure: a clique whose vertices are labelled by the unordered pairs
    from an m-set, a middle layer b_0..b_{m-1} where the pair {i, j} is
    joined to b_i and b_j, and a rim cycle c_0..c_{2m-1} with b_i joined to
    the antipodal rim pair c_i, c_{i+m}.  Every clique vertex {i, j} is the
    unique common neighbour of the nonadjacent pair (b_i, b_j); every b_i
    of (c_i, c_{i+m}); every rim vertex of its two rim neighbours.
    """
    if m < 3:
        raise ValueError("gamma needs m >= 3")
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    return _gamma_on(m, pairs)


def embed_host(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Embed g as an induced subgraph of a distance-critical host.

    Uses the smallest m with m(m-1)/2 >= g.n, labels the vertices of g by
    the lexicographically least m-set pairs, keeps exactly the edges of g
    on that part (the clique of gamma is thinned to a copy of g), and
    attaches the full middle and rim structure.  The witness pairs for
    criticality never use edges inside the pair-labelled part, so the host
    is distance critical for every g.  Returns the host and the injection
    from V(g) to host vertices.
    """
    if g.n < 3:
        raise ValueError("embedding needs a graph on at least 3 vertices")
    m = (1 + math.isqrt(1 + 8 * g.n)) // 2
    while m * (m - 1) // 2 < g.n:
        m += 1
    all_pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    pair_labels = all_pairs[: g.n]
    host, layout = _gamma_on(m, pair_labels)
    # _gamma_on built a full clique on the labelled part; rebuild adjacency
    # keeping only the edges of g there.
    adj = list(host.adj)
    part_mask = (1 << g.n) - 1
    for v in range(g.n):
        adj[v] = (adj[v] & ~part_mask) | g.adj[v]
    host = Graph(host.n, adj, check=False)
    return host, {v: v for v in range(g.n)}


def max_degree_extremal(n: int) -> Graph:
    """Distance-critical graph on n vertices with the extremal maximum degree.

    For n >= 8 the maximum degree of a distance-critical graph is at most
    n - 4 and this construction attains it; the seeds n = 6, 7 attain the
    true extremes for those orders (degree 2 and 3).
    """
    if n < 6:
        raise ValueError("no distance-critical graph of order below 5; "
                         "extremal family starts at n = 6")
    if n == 6:
        return cycle(6)
    if n == 7:
        g = cycle(6)
        g = Graph(7, list(g.adj) + [0], check=False)
        g = g.add_edge(6, 0).add_edge(6, 3)
        return g
    even = n - (n % 2)
    k = even // 2 - 2
    u = list(range(k))
    up = list(range(k, 2 * k))
    v, w1, w2, w3 = 2 * k, 2 * k + 1, 2 * k + 2, 2 * k + 3
    edges = [(u[j], up[j]) for j in range(k)]
    edges += [(w1, x) for x in u]
    edges += [(w2, x) for x in up]
    edges += [(v, x) for x in u + up]
    edges += [(w1, w3), (w2, w3)]
    if n % 2:
        w4 = 2 * k + 4
        edges += [(v, w4), (w3, w4)]
    return Graph.from_edges(n, edges)


def _least_critical_matching(base: Graph) -> Graph:
    """Complete a 2k-regular graph to (2k+1)-regular by a perfect matching.

    Runs a depth-first search over perfect matchings of the complement in
    lexicographic edge order (always matching the least uncovered vertex to
    its least available partner) and returns the first completion that is
    distance critical.  The order makes the result deterministic.
    """
    from .criticality import _is_critical_fast

    n = base.n
    full = (1 << n) - 1
    comp = [~base.adj[v] & full & ~(1 << v) for v in range(n)]
    adj = list(base.adj)

    def extend(uncovered: int) -> bool:
        if uncovered == 0:
            return _is_critical_fast(adj, n)
        v = (uncovered & -uncovered).bit_length() - 1
        vbit = 1 << v
        for u in bits(comp[v] & uncovered & ~vbit):
            ubit = 1 << u
            adj[v] |= ubit
            adj[u] |= vbit
            if extend(uncovered & ~vbit & ~ubit):
                return True
            adj[v] &= ~ubit
            adj[u] &= ~vbit
        return False

    if not extend(full):
        raise ValueError("no distance-critical matching completion exists")
    return Graph(n, tuple(adj), check=False)


def regular_extremal(n: int) -> Graph:
    """Regular distance-critical graph of degree floor((n-1)/4) + floor(n/4).

    Cycle powers C_n^k with k chosen by n mod 4.  When 4 divides n the
    degree target (n-2)/2 is odd, so C_n^{(n-4)/4} is completed with a
    perfect matching.  Antipodal chords i ~ i+n/2 work only for n = 8: for
    larger multiples of 4 the chord at i+k+n/2 sits within distance k of
    i-k, giving the pair {i-k, i+k} a second common neighbor, and in fact
    no circulant of this degree is distance critical at n = 12 or n = 20.
    Those orders instead use the least perfect matching (in lexicographic
    edge order) whose addition leaves the graph distance critical.
    """
    if n < 5:
        raise ValueError("regular family needs n >= 5")
    r = n % 4
    if r != 0:
        return cycle_power(n, (n - r) // 4)
    base = cycle_power(n, (n - 4) // 4)
    antipodal = base
    for i in range(n // 2):
        antipodal = antipodal.add_edge(i, i + n // 2)
    from .criticality import _is_critical_fast

    if _is_critical_fast(antipodal.adj, n):
        return antipodal
    return _least_critical_matching(base)
