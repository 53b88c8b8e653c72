"""Breadth-first exploration of the exchange graph with deduplication.

Seeds are expanded level by level in discovery order, children generated
in direction order 1..n, so two runs with the same limits produce the
same report no matter how many worker threads expand the frontier.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import permutations

from .laurent import LaurentPoly, render_poly
from .seeds import InvalidSeed, Seed, seed_mutate, validate


@dataclass(frozen=True)
class ExplorationLimits:
    max_depth: int = 6
    max_seeds: int = 10000

    def __post_init__(self):
        if self.max_depth < 0:
            raise ValueError("max_depth must be nonnegative")
        if self.max_seeds < 1:
            raise ValueError("max_seeds must be positive")


@dataclass(frozen=True)
class ExplorationReport:
    """What a bounded walk over the exchange graph found.

    distinct_variables collects mutable cluster entries only, sorted
    structurally; distinct_clusters are the unordered n-subsets they form.
    finite is True exactly when the walk closed before hitting a limit.
    """

    seeds_found: int
    distinct_variables: tuple[LaurentPoly, ...]
    distinct_clusters: tuple[frozenset, ...]
    finite: bool
    frontier_exhausted_reason: str  # "depth" | "budget" | "closure"
    seeds: tuple[Seed, ...]

    def to_json(self) -> dict:
        texts = [render_poly(v) for v in self.distinct_variables]
        index = {v: i for i, v in enumerate(self.distinct_variables)}
        clusters = [sorted(index[v] for v in cl) for cl in self.distinct_clusters]
        return {
            "seeds_found": self.seeds_found,
            "variables": texts,
            "clusters": clusters,
            "finite": self.finite,
            "reason": self.frontier_exhausted_reason,
        }


def _permutation_key(seed: Seed):
    """Canonical representative under simultaneous permutation of mutable indices."""
    n = seed.profile.n
    m = seed.profile.m
    best = None
    for perm in permutations(range(n)):
        rows = []
        for i in range(m):
            src = perm[i] if i < n else i
            row = seed.matrix.entries[src]
            rows.append(tuple(row[perm[j]] for j in range(n)))
        cluster = tuple(
            seed.cluster[perm[i]].sort_key() if i < n else seed.cluster[i].sort_key()
            for i in range(m)
        )
        key = (tuple(rows), cluster)
        if best is None or key < best:
            best = key
    return best


def explore(
    seed: Seed,
    limits: ExplorationLimits | None = None,
    *,
    threads: int = 1,
    quotient_permutations: bool = False,
) -> ExplorationReport:
    """BFS over seed mutation in all n directions, deduplicating seeds.

    Dedup is on structural (matrix, cluster) equality by default; with
    quotient_permutations the key additionally identifies seeds that
    differ by a simultaneous permutation of the mutable indices.
    """
    limits = limits or ExplorationLimits()
    bad = validate(seed.matrix)
    if bad:
        raise InvalidSeed("; ".join(bad))
    key = _permutation_key if quotient_permutations else (lambda s: s)
    n = seed.profile.n

    seen = {key(seed)}
    order = [seed]
    level = [seed]
    depth = 0
    budget_hit = False
    depth_hit = False

    def children(s: Seed) -> list[Seed]:
        return [seed_mutate(s, k) for k in range(1, n + 1)]

    while level:
        if depth == limits.max_depth:
            depth_hit = True
            break
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                batches = list(pool.map(children, level))
        else:
            batches = [children(s) for s in level]
        next_level = []
        for batch in batches:
            for child in batch:
                ck = key(child)
                if ck in seen:
                    continue
                if len(seen) >= limits.max_seeds:
                    budget_hit = True
                    break
                seen.add(ck)
                order.append(child)
                next_level.append(child)
            if budget_hit:
                break
        if budget_hit:
            break
        level = next_level
        depth += 1

    if budget_hit:
        reason = "budget"
    elif depth_hit:
        reason = "depth"
    else:
        reason = "closure"

    clusters = []
    cluster_seen = set()
    for s in order:
        cl = frozenset(s.mutable_entries())
        if cl not in cluster_seen:
            cluster_seen.add(cl)
            clusters.append(cl)
    variables = sorted({v for cl in clusters for v in cl}, key=LaurentPoly.sort_key)
    clusters.sort(key=lambda cl: tuple(sorted(v.sort_key() for v in cl)))
    return ExplorationReport(
        seeds_found=len(order),
        distinct_variables=tuple(variables),
        distinct_clusters=tuple(clusters),
        finite=reason == "closure",
        frontier_exhausted_reason=reason,
        seeds=tuple(order),
    )


def collect_variables(report: ExplorationReport) -> list[str]:
    """Deterministic sorted listing of the found variables in canonical text form."""
    return [render_poly(v) for v in report.distinct_variables]
