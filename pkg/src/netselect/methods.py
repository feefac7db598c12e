"""The five ranking methods behind one interface.

``msaw`` is the rank-income method: instead of aggregating normalized
values it sorts each criterion column, converts the per-criterion rank
positions into weighted incomes, and sums those. Because only positions
enter the score, the method is invariant under any strictly monotone
rescaling of a column and, empirically, far more stable when alternatives
appear or disappear.

``saw``, ``wpm``, ``topsis``, and ``ahp`` are the classic value-based
baselines in their standard textbook forms.

All methods score so that higher is better, and all orders are invariant
under positive rescaling of the weight vector.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import (
    DecisionMatrix,
    Direction,
    MatrixValidationError,
    RankingResult,
    Violation,
    as_weight_array,
    normalize,
    require_valid,
)

METHODS = ("msaw", "saw", "wpm", "topsis", "ahp")


class TiePolicy(Enum):
    """How equal raw values share rank positions inside a criterion column.

    STABLE_INDEX breaks ties by original row order (what a stable sort
    produces); MEAN_RANK gives every tied alternative the mean of the
    positions the group spans, which makes the scores independent of row
    order.
    """

    STABLE_INDEX = "stable"
    MEAN_RANK = "mean"

    @classmethod
    def parse(cls, text: str) -> "TiePolicy":
        token = text.strip().lower()
        for member in cls:
            if token == member.value:
                return member
        raise ValueError(f"unknown tie policy {text!r}; expected 'stable' or 'mean'")


@dataclass(frozen=True)
class MsawIncomeBreakdown:
    """Per-criterion rank positions and incomes behind an msaw ranking.

    ``ranks[i, j]`` is the position (0 = best) of alternative i in
    criterion j's ordering; ``income[i, j] = (alpha - ranks[i, j]) * w_j``.
    """

    alternatives: tuple[str, ...]
    criteria: tuple[str, ...]
    ranks: np.ndarray
    income: np.ndarray
    alpha: int

    def __post_init__(self):
        for name in ("ranks", "income"):
            arr = np.array(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)


def _column_positions(column: np.ndarray, direction: Direction, tie: TiePolicy) -> np.ndarray:
    """Positions (0 = best) of each alternative within one criterion column."""
    key = column if direction is Direction.COST else -column
    order = np.argsort(key, kind="stable")
    positions = np.empty(len(column), dtype=float)
    positions[order] = np.arange(len(column), dtype=float)
    if tie is TiePolicy.MEAN_RANK:
        sorted_key = key[order]
        start = 0
        while start < len(column):
            stop = start
            while stop + 1 < len(column) and sorted_key[stop + 1] == sorted_key[start]:
                stop += 1
            if stop > start:
                positions[order[start : stop + 1]] = (start + stop) / 2.0
            start = stop + 1
    return positions


def rank_msaw(
    matrix: DecisionMatrix,
    weights,
    tie: TiePolicy = TiePolicy.MEAN_RANK,
    alpha: int | None = None,
) -> tuple[RankingResult, MsawIncomeBreakdown]:
    """Rank-income scoring.

    For each criterion, alternatives are ordered best first (descending raw
    value for Benefit criteria, ascending for Cost), each receives the
    income (alpha - position) * weight, and an alternative's total score is
    the sum of its incomes. ``alpha`` defaults to the number of
    alternatives; any larger value only shifts every score by the same
    constant, so the order never depends on it.
    """
    require_valid(matrix)
    w = as_weight_array(weights, matrix.n_criteria)
    n = matrix.n_alternatives
    if alpha is None:
        alpha = n
    elif alpha < n:
        raise ValueError(f"alpha must be >= number of alternatives ({n}), got {alpha}")

    ranks = np.column_stack(
        [
            _column_positions(matrix.values[:, j], spec.direction, tie)
            for j, spec in enumerate(matrix.criteria)
        ]
    )
    income = (alpha - ranks) * w[None, :]
    totals = income.sum(axis=1)
    result = RankingResult.from_scores("msaw", matrix.alternatives, totals)
    breakdown = MsawIncomeBreakdown(
        alternatives=matrix.alternatives,
        criteria=matrix.criterion_names,
        ranks=ranks,
        income=income,
        alpha=int(alpha),
    )
    return result, breakdown


def rank_saw(matrix: DecisionMatrix, weights) -> RankingResult:
    """Simple additive weighting: weighted sum of the normalized matrix."""
    w = as_weight_array(weights, matrix.n_criteria)
    scores = normalize(matrix) @ w
    return RankingResult.from_scores("saw", matrix.alternatives, scores)


def rank_wpm(matrix: DecisionMatrix, weights) -> RankingResult:
    """Weighted product: multiply normalized values raised to their weights.

    Requires every raw value to be strictly positive, including in Benefit
    columns.
    """
    require_valid(matrix)
    w = as_weight_array(weights, matrix.n_criteria)
    nonpositive = np.argwhere(matrix.values <= 0.0)
    if nonpositive.size:
        row, col = (int(x) for x in nonpositive[0])
        raise MatrixValidationError(
            [
                Violation(
                    "nonpositive_value",
                    "weighted product needs strictly positive values",
                    row=row,
                    col=col,
                )
            ]
        )
    scores = np.prod(normalize(matrix) ** w[None, :], axis=1)
    return RankingResult.from_scores("wpm", matrix.alternatives, scores)


def rank_topsis(matrix: DecisionMatrix, weights) -> RankingResult:
    """Closeness to the ideal point over the anti-ideal point.

    Columns are normalized by their Euclidean norm and weighted; the ideal
    takes each column's best weighted entry (max for Benefit, min for
    Cost), the anti-ideal the worst. Scores are d-/(d+ + d-) in [0, 1].
    """
    require_valid(matrix)
    w = as_weight_array(weights, matrix.n_criteria)
    norms = np.linalg.norm(matrix.values, axis=0)
    zero = np.nonzero(norms == 0.0)[0]
    if zero.size:
        raise MatrixValidationError(
            [Violation("zero_norm_column", "column has zero Euclidean norm", col=int(zero[0]))]
        )
    weighted = matrix.values / norms[None, :] * w[None, :]

    benefit = np.array([spec.direction is Direction.BENEFIT for spec in matrix.criteria])
    ideal = np.where(benefit, weighted.max(axis=0), weighted.min(axis=0))
    anti_ideal = np.where(benefit, weighted.min(axis=0), weighted.max(axis=0))

    dist_ideal = np.linalg.norm(weighted - ideal[None, :], axis=1)
    dist_anti = np.linalg.norm(weighted - anti_ideal[None, :], axis=1)
    total = dist_ideal + dist_anti
    # All alternatives identical: every point is both ideal and anti-ideal.
    scores = np.where(total > 0.0, dist_anti / np.where(total > 0.0, total, 1.0), 0.5)
    return RankingResult.from_scores("topsis", matrix.alternatives, scores)


def rank_ahp(matrix: DecisionMatrix, weights) -> RankingResult:
    """Weighted sum of per-criterion local priorities.

    Each column is direction-adjusted (reciprocals for Cost criteria) and
    normalized to sum 1, giving local priorities that play the role of the
    alternative-level eigenvectors in a full pairwise hierarchy.
    """
    require_valid(matrix)
    w = as_weight_array(weights, matrix.n_criteria)
    local = np.empty_like(matrix.values)
    for j, spec in enumerate(matrix.criteria):
        column = matrix.values[:, j]
        adjusted = column if spec.direction is Direction.BENEFIT else 1.0 / column
        local[:, j] = adjusted / adjusted.sum()
    scores = local @ w
    return RankingResult.from_scores("ahp", matrix.alternatives, scores)


def rank(
    matrix: DecisionMatrix,
    weights,
    method: str,
    tie: TiePolicy = TiePolicy.MEAN_RANK,
    alpha: int | None = None,
) -> RankingResult:
    """Run one method by identifier; ``tie`` and ``alpha`` apply to msaw only."""
    if method == "msaw":
        return rank_msaw(matrix, weights, tie=tie, alpha=alpha)[0]
    if method == "saw":
        return rank_saw(matrix, weights)
    if method == "wpm":
        return rank_wpm(matrix, weights)
    if method == "topsis":
        return rank_topsis(matrix, weights)
    if method == "ahp":
        return rank_ahp(matrix, weights)
    raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")
