"""Seeded k-means++ with Lloyd refinement.

All randomness flows through the portable generator, so a (matrix, k, seed)
triple fixes the fit bit-for-bit across platforms.  Assignment ties go to
the lowest centroid index; empty clusters keep their previous centroid.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import BadK
from ..rng import Xoshiro256


@dataclass
class KmeansFit:
    assignments: np.ndarray
    centroids: np.ndarray
    inertia: float
    n_iter: int
    inertia_history: list[float]


def _sq_distances(matrix: np.ndarray, centroids: np.ndarray) -> np.ndarray:
    """Pairwise squared euclidean distances, clipped at zero."""
    x2 = (matrix * matrix).sum(axis=1)[:, None]
    c2 = (centroids * centroids).sum(axis=1)[None, :]
    d = x2 + c2 - 2.0 * (matrix @ centroids.T)
    return np.maximum(d, 0.0)


def _seed_centroids(matrix: np.ndarray, k: int, rng: Xoshiro256) -> np.ndarray:
    n = matrix.shape[0]
    chosen = [rng.randrange(n)]
    d2 = _sq_distances(matrix, matrix[chosen[-1] : chosen[-1] + 1])[:, 0]
    for _ in range(1, k):
        total = float(d2.sum())
        if total <= 0.0:
            idx = rng.randrange(n)
        else:
            r = rng.random() * total
            idx = int(np.searchsorted(np.cumsum(d2), r, side="right"))
            idx = min(idx, n - 1)
        chosen.append(idx)
        d2 = np.minimum(d2, _sq_distances(matrix, matrix[idx : idx + 1])[:, 0])
    return matrix[chosen].astype(np.float64).copy()


def kmeans(
    matrix: np.ndarray,
    k: int,
    seed: int,
    max_iter: int = 100,
    tol: float = 1e-6,
) -> KmeansFit:
    matrix = np.asarray(matrix, dtype=np.float64)
    if matrix.ndim != 2:
        raise ValueError("matrix must be 2-dimensional")
    n = matrix.shape[0]
    if not 1 <= k <= n:
        raise BadK(f"k must satisfy 1 <= k <= {n}, got {k}")
    rng = Xoshiro256(seed)
    centroids = _seed_centroids(matrix, k, rng)
    history: list[float] = []
    assignments = np.zeros(n, dtype=np.int64)
    for _ in range(max_iter):
        dists = _sq_distances(matrix, centroids)
        assignments = np.argmin(dists, axis=1)  # first minimum: lowest index wins ties
        inertia = float(dists[np.arange(n), assignments].sum())
        improved = not history or history[-1] - inertia >= tol
        history.append(inertia)
        new_centroids = centroids.copy()
        for j in range(k):
            members = matrix[assignments == j]
            if len(members):
                new_centroids[j] = members.mean(axis=0)
        centroids = new_centroids
        if not improved:
            break
    return KmeansFit(
        assignments=assignments,
        centroids=centroids,
        inertia=history[-1],
        n_iter=len(history),
        inertia_history=history,
    )
