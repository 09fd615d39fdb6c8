"""Inner products, norms, distances, cosine similarity, word vectors."""

import math

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from semlink.space import (
    as_vector,
    cosine_similarity,
    distance,
    inner_product,
    norm,
    word_vector,
)

TOL = 1e-9

finite = st.floats(min_value=-100, max_value=100, allow_nan=False,
                   allow_infinity=False)


def vec_pair(min_dim=1, max_dim=8):
    return st.integers(min_dim, max_dim).flatmap(
        lambda d: st.tuples(
            st.lists(finite, min_size=d, max_size=d),
            st.lists(finite, min_size=d, max_size=d)))


def test_inner_product_norm_distance_known_values():
    assert inner_product([3, 4], [3, 4]) == pytest.approx(25.0, abs=TOL)
    assert norm([3, 4]) == pytest.approx(5.0, abs=TOL)
    assert distance([0, 0], [3, 4]) == pytest.approx(5.0, abs=TOL)
    assert inner_product([1, 0], [0, 1]) == pytest.approx(0.0, abs=TOL)


def test_truth_basis_is_orthonormal():
    assert inner_product([1, 0], [0, 1]) == 0.0
    assert norm([1, 0]) == 1.0
    assert norm([0, 1]) == 1.0


def test_cosine_similarity_extremes():
    assert cosine_similarity([2, 0], [5, 0]) == pytest.approx(1.0, abs=TOL)
    assert cosine_similarity([1, 0], [0, 3]) == pytest.approx(0.0, abs=TOL)
    assert cosine_similarity([1, 0], [-2, 0]) == pytest.approx(-1.0, abs=TOL)


def test_zero_vector_similarity_is_an_error():
    with pytest.raises(ValueError):
        cosine_similarity([0, 0], [1, 0])
    with pytest.raises(ValueError):
        cosine_similarity([1, 0], [0, 0])


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError):
        inner_product([1, 2], [1, 2, 3])
    with pytest.raises(ValueError):
        distance([1], [1, 2])


def test_as_vector_validates():
    with pytest.raises(ValueError):
        as_vector([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        as_vector([])


@given(vec_pair())
def test_symmetry(pair):
    u, v = pair
    assert abs(inner_product(u, v) - inner_product(v, u)) <= TOL
    assert abs(distance(u, v) - distance(v, u)) <= TOL


@given(vec_pair())
def test_cauchy_schwarz(pair):
    u, v = pair
    assert abs(inner_product(u, v)) <= norm(u) * norm(v) + TOL


@given(vec_pair())
def test_similarity_range_and_symmetry(pair):
    u, v = pair
    assume(norm(u) > 1e-6 and norm(v) > 1e-6)
    s = cosine_similarity(u, v)
    assert -1 - TOL <= s <= 1 + TOL
    assert abs(s - cosine_similarity(v, u)) <= TOL


@given(vec_pair(), st.floats(min_value=0.01, max_value=50))
def test_similarity_scale_invariant(pair, alpha):
    u, v = pair
    assume(norm(u) > 1e-6 and norm(v) > 1e-6)
    scaled = [alpha * x for x in u]
    assert cosine_similarity(scaled, v) == pytest.approx(
        cosine_similarity(u, v), abs=1e-7)


@given(st.lists(finite, min_size=1, max_size=8))
def test_self_similarity_is_one(u):
    assume(norm(u) > 1e-6)
    assert cosine_similarity(u, u) == pytest.approx(1.0, abs=TOL)
    assert distance(u, u) == 0.0


@given(st.integers(1, 8).flatmap(lambda d: st.tuples(
    st.lists(finite, min_size=d, max_size=d),
    st.lists(finite, min_size=d, max_size=d),
    st.lists(finite, min_size=d, max_size=d))))
def test_triangle_inequality(triple):
    u, v, w = triple
    assert distance(u, w) <= distance(u, v) + distance(v, w) + TOL


def test_nonnegative_components_give_unit_interval_similarity():
    rngs = np.random.Generator(np.random.PCG64(5))
    for _ in range(200):
        d = int(rngs.integers(1, 9))
        u = rngs.uniform(0.01, 10, d)
        v = rngs.uniform(0.01, 10, d)
        s = cosine_similarity(u, v)
        assert -TOL <= s <= 1 + TOL


# ---------------------------------------------------------------------------
# word vectors


def test_word_vector_is_linear_combination():
    b1 = np.array([1.0, 0.0, 0.0])
    b2 = np.array([0.0, 1.0, 0.0])
    wv = word_vector("w", [2.0, -0.5], [b1, b2])
    assert wv.word == "w"
    assert np.allclose(wv.vec, [2.0, -0.5, 0.0], atol=TOL)


def test_word_vector_on_orthonormal_basis_recovers_coefficients():
    basis = [np.eye(4)[i] for i in range(4)]
    coeff = [0.3, -1.2, 4.0, 0.0]
    wv = word_vector("w", coeff, basis)
    for alpha, b in zip(coeff, basis):
        assert inner_product(wv.vec, b) == pytest.approx(alpha, abs=TOL)


def test_word_vector_validation():
    with pytest.raises(ValueError):
        word_vector("w", [1.0], [])
    with pytest.raises(ValueError):
        word_vector("w", [1.0, 2.0], [np.array([1.0, 0.0])])
    with pytest.raises(ValueError):
        word_vector("w", [1.0, 1.0], [np.array([1.0]), np.array([1.0, 0.0])])


def test_norm_is_positive_definite():
    assert norm([0.0, 0.0]) == 0.0
    assert norm([1e-3]) > 0
    assert math.isclose(norm([-3, 4]), 5.0, abs_tol=TOL)
