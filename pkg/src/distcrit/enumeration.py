"""Isomorph-free enumeration of connected graphs, with criticality tallies.

Connected graphs are generated one per isomorphism class by canonical
augmentation: every graph on k + 1 vertices arises from a parent on k
vertices by attaching a new vertex (numbered k) to a nonempty subset S of
the parent.  A candidate child is kept iff

  (a) S is the numerically least subset in its orbit under the parent's
      automorphism group, and
  (b) the new vertex is, in the child, automorphic to the canonically last
      deletable vertex, where deletable means removal keeps the child
      connected (parents must stay connected).

Each accepted child therefore certifies a unique (parent, extension) pair,
and induction over k yields every connected class exactly once with no
global isomorphism store.

Rule (b) is decided cheaply for almost all candidates: the equitable
partition is refined with an abort hook that rejects as soon as some
deletable vertex is forced after the new vertex in cell order, and when
the last deletable cell of the stable partition is the new vertex alone,
acceptance follows without computing a canonical form at all.  Before any
of that, a vectorized degree filter discards subsets whose size cannot
dominate the deletable degrees.

Work splitting: the nodes at augmentation level max(1, n - 2) form a
frontier; node f (in deterministic generation order) belongs to shard s of
S iff f mod S = s, and within a shard to job j of J iff (f div S) mod
J = j.  The union over any partition layout reproduces the unsharded run.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from multiprocessing import get_context
from typing import Callable, Iterator, Sequence

import numpy as np

from .canon import _search, degree_cells, refine
from .criticality import _is_critical_fast, _is_edge_maximal_fast
from .graph import Graph, _articulation_mask, bits

MAX_ENUM_N = 11

_SUBSET_TABLES: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _tables(k: int) -> tuple[np.ndarray, np.ndarray]:
    """All nonempty subset masks of range(k) plus their popcounts."""
    t = _SUBSET_TABLES.get(k)
    if t is None:
        masks = np.arange(1, 1 << k, dtype=np.int64)
        pc = np.array([m.bit_count() for m in range(1, 1 << k)], dtype=np.int64)
        _SUBSET_TABLES[k] = t = (masks, pc)
    return t


def _subset_reps(k: int, gens: Sequence[tuple[int, ...]]) -> np.ndarray:
    """Boolean array over masks 1..2^k-1: True iff the mask is the least
    member of its orbit under the group generated by gens."""
    size = 1 << k
    rep = np.zeros(size - 1, dtype=bool)
    seen = bytearray(size)
    for m in range(1, size):
        if seen[m]:
            continue
        rep[m - 1] = True
        stack = [m]
        seen[m] = 1
        while stack:
            x = stack.pop()
            for g in gens:
                y = 0
                xx = x
                while xx:
                    low = xx & -xx
                    y |= 1 << g[low.bit_length() - 1]
                    xx ^= low
                if not seen[y]:
                    seen[y] = 1
                    stack.append(y)
    return rep


# A node of the augmentation tree: adjacency rows, stable equitable cells,
# cut-vertex mask, and automorphism generators (None = not yet computed,
# [] = known trivial).
_State = tuple[tuple[int, ...], list[int], int, "list[tuple[int, ...]] | None"]

_ROOT: _State = ((0,), [1], 0, [])


def _child_states(state: _State, k: int) -> Iterator[_State]:
    adj, cells, cut_mask, gens = state
    full = (1 << k) - 1
    noncut = full & ~cut_mask
    d1 = -1
    second = -1
    topmask = 0
    for u in bits(noncut):
        d = adj[u].bit_count()
        if d > d1:
            second = d1
            d1, topmask = d, 1 << u
        elif d == d1:
            topmask |= 1 << u
        elif d > second:
            second = d

    # The new vertex, of degree |S|, stays deletable in every child; a
    # parent vertex u deletable in the parent stays deletable in the
    # child unless S = {u} (the new vertex would end up isolated).  The
    # child can only put the new vertex canonically last among deletable
    # vertices if its degree is at least every such vertex's degree, and
    # u's child degree is its parent degree plus one when u is in S.
    masks, pc = _tables(k)
    ok = (pc >= 2) & ((pc > d1) | ((pc == d1) & ((masks & topmask) == 0)))
    unique_top = topmask.bit_count() == 1
    for u in range(k):
        cap = second if unique_top and topmask >> u & 1 else d1
        if cap <= 1:
            ok[(1 << u) - 1] = True

    if gens is None:
        if all(c & (c - 1) == 0 for c in cells):
            gens = []
        else:
            gens = _search(adj, k)[3]
    if gens:
        # Subset-orbit pruning is exact after the degree filter because
        # automorphisms preserve popcount, degrees and cut vertices.
        ok &= _subset_reps(k, gens)

    newbit = 1 << k
    nch = k + 1
    kn_box = [0]

    def aborted(cs: list[int]) -> bool:
        kn = kn_box[0]
        after = False
        for cell in cs:
            if after and cell & kn:
                return True
            if cell & newbit:
                after = True
        return False

    for s in masks[ok].tolist():
        child_adj = list(adj)
        m = s
        while m:
            low = m & -m
            child_adj[low.bit_length() - 1] |= newbit
            m ^= low
        child_adj.append(s)
        if s & (s - 1):
            kn_box[0] = noncut | newbit
        else:
            kn_box[0] = (noncut & ~s) | newbit

        stable = refine(child_adj, degree_cells(child_adj, nch), aborted)
        if stable is None:
            continue
        ccut = _articulation_mask(child_adj, nch)
        cnon = ((1 << nch) - 1) & ~ccut
        last = 0
        for cell in reversed(stable):
            if cell & cnon:
                last = cell
                break
        if not last & newbit:
            continue
        child_gens: list[tuple[int, ...]] | None
        if last & cnon == newbit:
            # Orbits refine stable cells, and the canonically last
            # deletable vertex lives in the last deletable cell; if that
            # is the new vertex alone, rule (b) holds outright.
            child_gens = [] if all(c & (c - 1) == 0 for c in stable) else None
        else:
            _, lab, orep, child_gens = _search(tuple(child_adj), nch)
            wstar = -1
            for i in range(nch - 1, -1, -1):
                if cnon >> lab[i] & 1:
                    wstar = lab[i]
                    break
            if orep[wstar] != orep[k]:
                continue
        yield tuple(child_adj), stable, ccut, child_gens


def _iter_adj(
    n: int,
    owner: "Callable[[int], bool] | None" = None,
    all_levels: bool = False,
) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Yield (k, adjacency) for accepted nodes, at level n only unless
    all_levels is set.  owner gates the frontier at level max(1, n - 2)."""
    frontier = max(1, n - 2)
    counter = 0

    def rec(state: _State, k: int) -> Iterator[tuple[int, tuple[int, ...]]]:
        nonlocal counter
        if owner is not None and k == frontier:
            idx = counter
            counter += 1
            if not owner(idx):
                return
        if all_levels or k == n:
            yield k, state[0]
        if k == n:
            return
        for child in _child_states(state, k):
            yield from rec(child, k + 1)

    yield from rec(_ROOT, 1)


def _check_args(n: int, shards: int, shard: int, jobs: int = 1) -> None:
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"n must be in 1..{MAX_ENUM_N}")
    if shards < 1 or not 0 <= shard < shards:
        raise ValueError("need shards >= 1 and 0 <= shard < shards")
    if jobs < 1:
        raise ValueError("jobs must be >= 1")


def iter_connected(n: int, *, shards: int = 1, shard: int = 0) -> Iterator[Graph]:
    """All connected graphs on n vertices, one per isomorphism class."""
    _check_args(n, shards, shard)
    owner = None if shards == 1 else (lambda f: f % shards == shard)
    for _, adj in _iter_adj(n, owner):
        yield Graph(n, adj, check=False)


def enumerate_connected(
    n: int,
    visitor: Callable[[Graph], None],
    *,
    shards: int = 1,
    shard: int = 0,
) -> int:
    """Feed every connected class on n vertices to visitor (serially, in
    deterministic order); returns the number of graphs visited."""
    count = 0
    for g in iter_connected(n, shards=shards, shard=shard):
        visitor(g)
        count += 1
    return count


@dataclass(frozen=True)
class EnumerationTally:
    """Census of one enumeration run (possibly one shard of one).

    partition is (shard index, shard total); elapsed is wall time in
    seconds and is deliberately excluded from to_json_dict so identical
    runs serialize identically.
    """

    n: int
    connected_count: int
    critical_count: int
    maximal_count: "int | None"
    partition: tuple[int, int]
    elapsed: float

    def to_json_dict(self) -> dict:
        d: dict = {
            "n": self.n,
            "connected_count": self.connected_count,
            "critical_count": self.critical_count,
        }
        if self.maximal_count is not None:
            d["maximal_count"] = self.maximal_count
        d["partition"] = list(self.partition)
        return d


def _tally_shard(
    n: int,
    shards: int,
    shard: int,
    jobs: int,
    job: int,
    edge_maximal: bool,
    collect: bool,
) -> tuple[int, int, int, list[tuple[int, ...]]]:
    if shards == 1 and jobs == 1:
        owner = None
    else:
        def owner(f: int) -> bool:
            return f % shards == shard and (f // shards) % jobs == job

    connected = critical = maximal = 0
    hits: list[tuple[int, ...]] = []
    for _, adj in _iter_adj(n, owner):
        connected += 1
        if not _is_critical_fast(adj, n):
            continue
        critical += 1
        if edge_maximal:
            if not _is_edge_maximal_fast(adj, n):
                continue
            maximal += 1
        if collect:
            hits.append(adj)
    return connected, critical, maximal, hits


def _pool_worker(args) -> tuple[int, int, int, list[tuple[int, ...]]]:
    return _tally_shard(*args)


def run_enumeration(
    n: int,
    *,
    shards: int = 1,
    shard: int = 0,
    jobs: int = 1,
    edge_maximal: bool = False,
    collect: bool = False,
) -> tuple[EnumerationTally, "list[Graph] | None"]:
    """Count (and optionally collect) distance-critical graphs on n
    vertices; with edge_maximal also count/collect the edge-maximal ones.

    The collected list holds the critical graphs, or just the edge-maximal
    ones when edge_maximal is set, in deterministic order.
    """
    _check_args(n, shards, shard, jobs)
    t0 = time.perf_counter()
    if jobs == 1:
        parts = [_tally_shard(n, shards, shard, 1, 0, edge_maximal, collect)]
    else:
        ctx = get_context("fork")
        argv = [(n, shards, shard, jobs, j, edge_maximal, collect)
                for j in range(jobs)]
        with ctx.Pool(jobs) as pool:
            parts = pool.map(_pool_worker, argv)
    connected = sum(p[0] for p in parts)
    critical = sum(p[1] for p in parts)
    maximal = sum(p[2] for p in parts) if edge_maximal else None
    hits: "list[Graph] | None" = None
    if collect:
        hits = [Graph(n, adj, check=False) for p in parts for adj in p[3]]
    tally = EnumerationTally(
        n=n,
        connected_count=connected,
        critical_count=critical,
        maximal_count=maximal,
        partition=(shard, shards),
        elapsed=time.perf_counter() - t0,
    )
    return tally, hits


def count_distance_critical(
    n: int, *, shards: int = 1, shard: int = 0, jobs: int = 1
) -> EnumerationTally:
    """Tally of connected and distance-critical classes on n vertices."""
    tally, _ = run_enumeration(n, shards=shards, shard=shard, jobs=jobs)
    return tally


def count_edge_maximal(
    n: int, *, shards: int = 1, shard: int = 0, jobs: int = 1
) -> EnumerationTally:
    """Like count_distance_critical, also tallying edge-maximal criticals
    (critical graphs where adding any missing edge breaks criticality)."""
    tally, _ = run_enumeration(
        n, shards=shards, shard=shard, jobs=jobs, edge_maximal=True
    )
    return tally


def tally_levels(n: int, *, edge_maximal: bool = False) -> dict[int, EnumerationTally]:
    """Single unsharded sweep tallying every level 1..n at once."""
    _check_args(n, 1, 0)
    t0 = time.perf_counter()
    counts = {k: [0, 0, 0] for k in range(1, n + 1)}
    for k, adj in _iter_adj(n, None, all_levels=True):
        row = counts[k]
        row[0] += 1
        if _is_critical_fast(adj, k):
            row[1] += 1
            if edge_maximal and _is_edge_maximal_fast(adj, k):
                row[2] += 1
    elapsed = time.perf_counter() - t0
    return {
        k: EnumerationTally(
            n=k,
            connected_count=row[0],
            critical_count=row[1],
            maximal_count=row[2] if edge_maximal else None,
            partition=(0, 1),
            elapsed=elapsed,
        )
        for k, row in counts.items()
    }


def _iter_unions(catalogs: dict[int, list[Graph]], n: int) -> Iterator[Graph]:
    """All multiset disjoint unions of catalog members totalling n vertices.

    Components are drawn with sizes nonincreasing and, within one size,
    catalog indices nondecreasing, so every multiset appears exactly once.
    Catalog members must be pairwise non-isomorphic per size.
    """

    def rec(remaining: int, size_cap: int, idx_min: int,
            acc: list[Graph]) -> Iterator[Graph]:
        if remaining == 0:
            total = sum(g.n for g in acc)
            adj: list[int] = []
            off = 0
            for g in acc:
                adj.extend(row << off for row in g.adj)
                off += g.n
            yield Graph(total, adj, check=False)
            return
        for size in range(min(size_cap, remaining), 0, -1):
            cat = catalogs.get(size, [])
            start = idx_min if size == size_cap else 0
            for i in range(start, len(cat)):
                acc.append(cat[i])
                yield from rec(remaining - size, size, i, acc)
                acc.pop()

    yield from rec(n, n, 0, [])


def iter_all_graphs(n: int) -> Iterator[Graph]:
    """Every graph on n vertices up to isomorphism, connected or not."""
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"n must be in 1..{MAX_ENUM_N}")
    catalogs = {k: list(iter_connected(k)) for k in range(1, n + 1)}
    return _iter_unions(catalogs, n)
