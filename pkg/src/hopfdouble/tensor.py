"""Dense complex multilinear algebra used by every structure map.

Tensors are plain ``numpy`` complex128 arrays (row-major). The helpers here
add the size cap, shape validation and residual metrics that the verifiers
rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .exceptions import CapacityError, NonHermitianError, ShapeMismatchError

MAX_ENTRIES = 2**26


@dataclass(frozen=True)
class Tolerance:
    abs: float = 1e-9
    rel: float = 1e-8

    def __post_init__(self):
        if self.abs < 0 or self.rel < 0:
            raise ValueError("tolerances must be nonnegative")
        if self.abs == 0 and self.rel == 0:
            raise ValueError("at least one of abs/rel must be positive")

    def to_dict(self) -> dict:
        return {"abs": self.abs, "rel": self.rel}


def default_tolerance(*tensors_or_specs) -> Tolerance:
    """Default tolerance scaled by the largest structure constant involved.

    Accepts arrays or anything with a ``structure_arrays()`` method.
    """
    largest = 0.0
    for obj in tensors_or_specs:
        arrays = obj.structure_arrays() if hasattr(obj, "structure_arrays") else [obj]
        for arr in arrays:
            arr = np.asarray(arr)
            if arr.size:
                largest = max(largest, float(np.max(np.abs(arr))))
    return Tolerance(abs=1e-9 * (1.0 + largest), rel=1e-8)


def as_ctensor(x, shape: Sequence[int] | None = None) -> np.ndarray:
    arr = np.asarray(x, dtype=np.complex128)
    if shape is not None and arr.shape != tuple(shape):
        raise ShapeMismatchError(f"expected shape {tuple(shape)}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("tensor has non-finite entries")
    return arr


def check_capacity(shape: Sequence[int], cap: int = MAX_ENTRIES) -> None:
    size = int(np.prod([int(s) for s in shape], dtype=object)) if len(shape) else 1
    if size > cap:
        raise CapacityError(f"tensor of shape {tuple(shape)} has {size} entries (cap {cap})")


def tensor_product(x, y, cap: int = MAX_ENTRIES) -> np.ndarray:
    x = as_ctensor(x)
    y = as_ctensor(y)
    check_capacity(x.shape + y.shape, cap)
    return np.multiply.outer(x, y)


def contract(x, y, axis_pairs: Sequence[tuple[int, int]]) -> np.ndarray:
    """Einstein contraction of ``x`` and ``y`` over the paired axes.

    Free axes of ``x`` come first, then those of ``y``, each in original order.
    """
    x = as_ctensor(x)
    y = as_ctensor(y)
    xa = [p[0] for p in axis_pairs]
    ya = [p[1] for p in axis_pairs]
    for i, j in axis_pairs:
        if not (-x.ndim <= i < x.ndim and -y.ndim <= j < y.ndim):
            raise ShapeMismatchError(f"axis pair ({i}, {j}) out of range")
        if x.shape[i] != y.shape[j]:
            raise ShapeMismatchError(
                f"cannot pair axis {i} (extent {x.shape[i]}) with axis {j} (extent {y.shape[j]})"
            )
    return np.tensordot(x, y, axes=(xa, ya))


def _square(m: np.ndarray) -> np.ndarray:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeMismatchError(f"expected a square matrix, got shape {m.shape}")
    return m


def hermitian_eig(m, tol: Tolerance | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and unitary eigenvectors of a Hermitian matrix."""
    m = _square(as_ctensor(m))
    tol = tol or default_tolerance(m)
    asym = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    if asym > tol.abs:
        raise NonHermitianError(asym)
    vals, vecs = np.linalg.eigh((m + m.conj().T) / 2)
    return vals, vecs


def operator_norm(m) -> float:
    m = as_ctensor(m)
    if m.ndim != 2:
        raise ShapeMismatchError(f"expected a matrix, got shape {m.shape}")
    if m.size == 0:
        return 0.0
    return float(np.linalg.norm(m, ord=2))


def singular_values(m) -> np.ndarray:
    m = as_ctensor(m)
    if m.size == 0:
        return np.zeros(0)
    return np.linalg.svd(m, compute_uv=False)


def max_abs_diff(x, y) -> float:
    x = as_ctensor(x)
    y = as_ctensor(y)
    if x.shape != y.shape:
        raise ShapeMismatchError(f"shape mismatch: {x.shape} vs {y.shape}")
    if x.size == 0:
        return 0.0
    return float(np.max(np.abs(x - y)))
