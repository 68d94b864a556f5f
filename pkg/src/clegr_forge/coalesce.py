"""Spatial coalescing: merge draft points that sit within a distance threshold.

The merge relation is the transitive closure of "within Euclidean distance
threshold", computed with a k-d tree neighbor query plus union-find. Each
merge class survives as its earliest-created member.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.cluster.hierarchy import DisjointSet
from scipy.spatial import cKDTree


@dataclass(frozen=True)
class MergeMap:
    """Maps every pre-merge id to the id of its surviving representative."""

    representative: dict[str, str]

    def resolve(self, pre_merge_id: str) -> str:
        return self.representative[pre_merge_id]


def merge_classes(points: list[tuple[float, float]], threshold: float) -> list[int]:
    """Return, per input index, the index of its class representative.

    The representative of a class is its smallest member index. threshold=0
    merges only exactly coincident points.
    """
    if threshold < 0:
        raise ValueError("threshold must be >= 0")
    n = len(points)
    ds = DisjointSet(range(n))
    if n >= 2:
        tree = cKDTree(np.asarray(points, dtype=float))
        for i, j in tree.query_pairs(threshold):
            ds.merge(i, j)
    rep_of_root: dict[int, int] = {}
    reps = []
    for i in range(n):
        root = ds[i]
        if root not in rep_of_root:
            rep_of_root[root] = min(ds.subset(root))
        reps.append(rep_of_root[root])
    return reps


def coalesce(items: list, threshold: float) -> tuple[list, MergeMap]:
    """Coalesce id-carrying point items (need .id, .x, .y attributes).

    Returns the surviving items in creation order and the MergeMap covering
    every input id. Survivors keep their own coordinates and attributes.
    """
    reps = merge_classes([(it.x, it.y) for it in items], threshold)
    representative = {it.id: items[r].id for it, r in zip(items, reps)}
    survivors = [items[i] for i in sorted(set(reps))]
    return survivors, MergeMap(representative)
