"""Descriptive statistics and the two nonparametric tests used by the
comparison reports: the two-sample rank-sum test (exact conditional
distribution for small samples, tie-corrected normal approximation with
continuity correction otherwise) and per-row mean ranking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

EXACT_LIMIT = 10  # exact rank-sum distribution up to min(n, m) == 10


def mean_std(values: Sequence[float]) -> tuple[float, float]:
    """Arithmetic mean and sample standard deviation (divisor n-1)."""
    v = np.asarray(values, dtype=float)
    if v.size < 2:
        raise ValueError("need at least two values")
    return float(np.mean(v)), float(np.std(v, ddof=1))


def average_ranks(values: Sequence[float]) -> np.ndarray:
    """Ranks 1..n with ties resolved to the average of their positions."""
    v = np.asarray(values, dtype=float)
    order = np.argsort(v, kind="stable")
    ranks = np.empty(v.size, dtype=float)
    i = 0
    while i < v.size:
        j = i
        while j + 1 < v.size and v[order[j + 1]] == v[order[i]]:
            j += 1
        ranks[order[i : j + 1]] = 0.5 * (i + j) + 1.0
        i = j + 1
    return ranks


def _subset_sum_counts(ranks: np.ndarray, n_a: int) -> tuple[np.ndarray, np.ndarray]:
    """Distribution of the rank sum over all n_a-subsets of the pooled
    (possibly tied) ranks, by dynamic programming over the doubled ranks
    (average ranks are half-integers, so doubling makes them exact ints).

    Returns (counts, doubled_sums): counts[s] subsets reach doubled rank
    sum doubled_sums[s].
    """
    doubled = np.rint(ranks * 2.0).astype(np.int64)
    total = int(doubled.sum())
    # ways[k][s] = number of k-subsets with doubled rank sum s; iterate k
    # downward so each item is used at most once.
    ways = np.zeros((n_a + 1, total + 1), dtype=float)
    ways[0][0] = 1.0
    for r in doubled:
        for k in range(n_a, 0, -1):
            ways[k][r:] += ways[k - 1][: total + 1 - r]
    return ways[n_a], np.arange(total + 1, dtype=float)


def _exact_p(ranks: np.ndarray, n_a: int, w_obs: float, alternative: str) -> float:
    counts, sums = _subset_sum_counts(ranks, n_a)
    if alternative == "two-sided":
        mean2 = n_a * (ranks.size + 1.0)  # doubled null mean
        hit = np.abs(sums - mean2) >= abs(2.0 * w_obs - mean2) - 1e-9
    elif alternative == "less":
        hit = sums <= 2.0 * w_obs + 1e-9
    else:
        hit = sums >= 2.0 * w_obs - 1e-9
    return float(counts[hit].sum() / counts.sum())


def _normal_sf(z: float) -> float:
    return 0.5 * math.erfc(z / math.sqrt(2.0))


def _tie_corrected_sigma(ranks: np.ndarray, n_a: int, n_b: int) -> float:
    n = n_a + n_b
    _, tie_counts = np.unique(ranks, return_counts=True)
    tie_term = float(np.sum(tie_counts.astype(float) ** 3 - tie_counts))
    var = n_a * n_b / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)))
    return math.sqrt(max(var, 0.0))


@dataclass(frozen=True)
class RankSumResult:
    statistic: float  # rank sum of the first sample
    p_value: float
    exact: bool


def wilcoxon_rank_sum(
    a: Sequence[float],
    b: Sequence[float],
    alternative: str = "two-sided",
    method: str = "auto",
) -> RankSumResult:
    """Two-sample rank-sum test on pooled average ranks.

    For min(len(a), len(b)) <= 10 the p-value comes from the exact
    conditional permutation distribution (all subsets of the observed,
    possibly tied, rank multiset); larger samples use the normal
    approximation with tie-corrected variance and continuity correction.
    ``alternative`` is "two-sided", "less" (a tends lower) or "greater";
    ``method`` forces "exact" or "normal" instead of the size-based "auto".
    """
    if alternative not in ("two-sided", "less", "greater"):
        raise ValueError(f"unknown alternative {alternative!r}")
    if method not in ("auto", "exact", "normal"):
        raise ValueError(f"unknown method {method!r}")
    va = np.asarray(a, dtype=float)
    vb = np.asarray(b, dtype=float)
    if va.size < 2 or vb.size < 2:
        raise ValueError("both samples need at least two values")
    pooled = np.concatenate([va, vb])
    ranks = average_ranks(pooled)
    n_a, n_b = va.size, vb.size
    w = float(np.sum(ranks[:n_a]))
    mean = n_a * (n_a + n_b + 1.0) / 2.0

    if np.all(pooled == pooled[0]):
        return RankSumResult(statistic=w, p_value=1.0, exact=True)

    if method == "exact" or (method == "auto" and min(n_a, n_b) <= EXACT_LIMIT):
        p = _exact_p(ranks, n_a, w, alternative)
        return RankSumResult(statistic=w, p_value=min(max(p, 5e-324), 1.0), exact=True)

    sigma = _tie_corrected_sigma(ranks, n_a, n_b)
    if sigma == 0.0:
        return RankSumResult(statistic=w, p_value=1.0, exact=False)
    if alternative == "two-sided":
        z = (abs(w - mean) - 0.5) / sigma
        p = 2.0 * _normal_sf(max(z, 0.0))
    elif alternative == "less":
        z = (w - mean + 0.5) / sigma
        p = 1.0 - _normal_sf(z)
    else:
        z = (w - mean - 0.5) / sigma
        p = _normal_sf(z)
    return RankSumResult(statistic=w, p_value=min(max(p, 5e-324), 1.0), exact=False)


@dataclass(frozen=True)
class FriedmanResult:
    mean_ranks: np.ndarray       # per algorithm, averaged over rows
    final_rank: np.ndarray       # 1 = best (lowest mean rank); ties by column order


def friedman(matrix: Sequence[Sequence[float]]) -> FriedmanResult:
    """Rank each row ascending (1 = lowest value, average ranks on ties)
    and average per column. Rows are rounds, columns are algorithms."""
    rows = [np.asarray(r, dtype=float) for r in matrix]
    if not rows:
        raise ValueError("need at least one row")
    width = rows[0].size
    if width < 2:
        raise ValueError("need at least two algorithms")
    if any(r.size != width for r in rows):
        raise ValueError("ragged matrix")
    rank_sum = np.zeros(width)
    for row in rows:
        rank_sum += average_ranks(row)
    mean_ranks = rank_sum / len(rows)
    return FriedmanResult(mean_ranks=mean_ranks, final_rank=ordinal_ranks(mean_ranks))


def ordinal_ranks(values: Sequence[float]) -> np.ndarray:
    """1-based placement by ascending value, ties broken by position."""
    v = np.asarray(values, dtype=float)
    order = np.argsort(v, kind="stable")
    out = np.empty(v.size, dtype=int)
    out[order] = np.arange(1, v.size + 1)
    return out


def combined_ranking(per_function_mean_ranks: Sequence[Sequence[float]]) -> tuple[np.ndarray, np.ndarray]:
    """Sum per-function mean ranks into the overall 'Mean Rank' row and
    place algorithms by ascending sum. NaN cells (inapplicable results)
    are excluded from the sums."""
    stack = np.asarray(per_function_mean_ranks, dtype=float)
    totals = np.nansum(stack, axis=0)
    return totals, ordinal_ranks(totals)
