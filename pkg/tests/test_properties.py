import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from netselect import (
    CriterionSpec,
    DecisionMatrix,
    Direction,
    TiePolicy,
    kendall_tau,
    normalize,
    rank_msaw,
    rank_topsis,
)


@st.composite
def matrices(draw, max_n=6, max_m=4, min_value=0.1, max_value=100.0):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    values = draw(
        st.lists(
            st.lists(
                st.floats(min_value, max_value, allow_nan=False, allow_infinity=False),
                min_size=m,
                max_size=m,
            ),
            min_size=n,
            max_size=n,
        )
    )
    directions = draw(st.lists(st.sampled_from(list(Direction)), min_size=m, max_size=m))
    criteria = tuple(CriterionSpec(f"c{j}", d) for j, d in enumerate(directions))
    return DecisionMatrix([f"a{i}" for i in range(n)], criteria, values)


@st.composite
def permutation_pairs(draw):
    n = draw(st.integers(1, 7))
    labels = [f"x{i}" for i in range(n)]
    a = draw(st.permutations(labels))
    b = draw(st.permutations(labels))
    return tuple(a), tuple(b)


@given(permutation_pairs())
def test_kendall_tau_bounds_and_extremes(pair):
    a, b = pair
    tau = kendall_tau(a, b)
    assert -1.0 <= tau <= 1.0
    assert kendall_tau(a, a) == 1.0
    if len(a) > 1:
        assert kendall_tau(a, tuple(reversed(a))) == -1.0


@given(permutation_pairs())
def test_kendall_tau_symmetric(pair):
    a, b = pair
    assert kendall_tau(a, b) == kendall_tau(b, a)


@given(matrices(), st.floats(0.01, 1000.0, allow_nan=False, allow_infinity=False), st.data())
def test_normalization_scale_invariance(matrix, factor, data):
    col = data.draw(st.integers(0, matrix.n_criteria - 1))
    base = normalize(matrix)
    scaled_values = np.array(matrix.values)
    scaled_values[:, col] *= factor
    scaled = DecisionMatrix(matrix.alternatives, matrix.criteria, scaled_values)
    assert np.allclose(normalize(scaled), base, rtol=1e-9, atol=1e-12)


@given(matrices())
def test_normalized_values_in_unit_interval_with_unit_max(matrix):
    r = normalize(matrix)
    assert np.all(r > 0.0) and np.all(r <= 1.0)
    assert np.allclose(r.max(axis=0), 1.0)


@given(matrices(), st.integers(0, 50), st.data())
def test_msaw_alpha_shift_preserves_order(matrix, shift, data):
    tie = data.draw(st.sampled_from(list(TiePolicy)))
    weights = np.full(matrix.n_criteria, 1.0 / matrix.n_criteria)
    base, _ = rank_msaw(matrix, weights, tie=tie)
    shifted, _ = rank_msaw(matrix, weights, tie=tie, alpha=matrix.n_alternatives + shift)
    assert shifted.order == base.order


@given(matrices())
@settings(max_examples=60)
def test_msaw_scores_within_1_and_n(matrix):
    weights = np.full(matrix.n_criteria, 1.0 / matrix.n_criteria)
    result, _ = rank_msaw(matrix, weights)
    n = matrix.n_alternatives
    for score in result.scores.values():
        assert 1.0 - 1e-9 <= score <= n + 1e-9


@given(matrices())
@settings(max_examples=60)
def test_topsis_closeness_bounded(matrix):
    weights = np.full(matrix.n_criteria, 1.0 / matrix.n_criteria)
    result = rank_topsis(matrix, weights)
    for score in result.scores.values():
        assert -1e-12 <= score <= 1.0 + 1e-12
