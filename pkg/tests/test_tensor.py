import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfdouble.exceptions import CapacityError, NonHermitianError, ShapeMismatchError
from hopfdouble.tensor import (
    MAX_ENTRIES,
    Tolerance,
    check_capacity,
    contract,
    default_tolerance,
    hermitian_eig,
    max_abs_diff,
    operator_norm,
    tensor_product,
)


def test_tensor_product_examples():
    out = tensor_product([1, 0], [0, 1])
    assert out.shape == (2, 2) and out[0, 1] == 1 and np.count_nonzero(out) == 1
    x = np.array([1 + 2j, 3])
    assert np.array_equal(tensor_product(x, np.array(1.0)), x)
    assert np.array_equal(tensor_product([1, 1j], [1, -1j]), np.array([[1, -1j], [1j, 1]]))


def test_contract_examples():
    v = np.array([1.0, 2.0, 3.0])
    assert np.allclose(contract(np.eye(3), v, [(1, 0)]), v)
    M, N = np.arange(4).reshape(2, 2), np.arange(4, 8).reshape(2, 2)
    assert np.array_equal(contract(M, N, [(1, 0)]), M @ N)
    assert contract([1, 2], [3, 4], [(0, 0)]) == 11


def test_contract_shape_mismatch():
    with pytest.raises(ShapeMismatchError):
        contract(np.eye(2), np.ones(3), [(1, 0)])


def test_capacity_cap():
    check_capacity((2**13, 2**13))
    with pytest.raises(CapacityError):
        check_capacity((MAX_ENTRIES + 1,))


def test_hermitian_eig_examples():
    assert np.allclose(hermitian_eig(np.eye(3))[0], [1, 1, 1])
    assert np.allclose(hermitian_eig(np.diag([2.0, -1.0]))[0], [-1, 2])
    assert np.allclose(hermitian_eig(np.array([[0, 1], [1, 0]]))[0], [-1, 1])
    with pytest.raises(NonHermitianError):
        hermitian_eig(np.array([[0, 1], [0, 0]]))


def test_operator_norm_examples():
    assert operator_norm(np.zeros((3, 3))) == 0
    q, _ = np.linalg.qr(np.random.default_rng(1).standard_normal((4, 4)))
    assert operator_norm(q) == pytest.approx(1.0, abs=1e-12)
    assert operator_norm(np.array([[0, 2], [0, 0]])) == pytest.approx(2.0)


def test_max_abs_diff_examples():
    x = np.array([1, 2j])
    assert max_abs_diff(x, x) == 0
    assert max_abs_diff([1], [1 + 1e-3]) == pytest.approx(1e-3)
    assert max_abs_diff([1j], [-1j]) == 2


def test_default_tolerance_scales():
    assert default_tolerance(np.ones(2)).abs == pytest.approx(2e-9)
    assert default_tolerance(np.array([10.0])).abs == pytest.approx(1.1e-8)
    assert default_tolerance(np.ones(1)).rel == 1e-8
    with pytest.raises(ValueError):
        Tolerance(abs=-1.0)


def _rand(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), a=st.complex_numbers(max_magnitude=10), b=st.complex_numbers(max_magnitude=10))
def test_contract_bilinear(seed, a, b):
    rng = np.random.default_rng(seed)
    x, x2, y = _rand(rng, (3, 4)), _rand(rng, (3, 4)), _rand(rng, (4, 2))
    lhs = contract(a * x + b * x2, y, [(1, 0)])
    rhs = a * contract(x, y, [(1, 0)]) + b * contract(x2, y, [(1, 0)])
    assert max_abs_diff(lhs, rhs) <= 1e-9 * (1 + abs(a) + abs(b)) * 10


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 64))
def test_hermitian_eig_reconstruction(seed, n):
    rng = np.random.default_rng(seed)
    X = _rand(rng, (n, n))
    M = (X + X.conj().T) / 2
    lam, U = hermitian_eig(M)
    assert np.all(np.diff(lam) >= -1e-12)
    assert max_abs_diff((U * lam) @ U.conj().T, M) <= default_tolerance(M).abs * n


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 12))
def test_spectral_identity(seed, n):
    M = _rand(np.random.default_rng(seed), (n, n))
    assert operator_norm(M.conj().T @ M) == pytest.approx(operator_norm(M) ** 2, rel=1e-10)
