"""Finite-dimensional Hopf *-algebras as dense structure-constant tensors.

Coordinate conventions, on a basis ``e_0..e_{n-1}``:

* ``e_i e_j = sum_k mult[i, j, k] e_k``
* ``Delta(e_i) = sum_{j,k} comult[i, j, k] e_j (x) e_k``
* ``S(x) = antipode @ x`` (column ``i`` holds the coordinates of ``S(e_i)``)
* ``x* = star @ conj(x)``; the star is stored as a matrix composed with
  entrywise conjugation.
* ``phi(x) = integral @ x``
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

import numpy as np

from .exceptions import (
    AmbiguousIntegralError,
    NoIntegralError,
    NormalizationFailure,
    ShapeMismatchError,
)
from .groups import GroupTable
from .tensor import as_ctensor, singular_values

_FIELDS = ("mult", "unit", "comult", "counit", "antipode", "star")


def _frozen(arr) -> np.ndarray:
    arr = np.array(arr, dtype=np.complex128)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class HopfSpec:
    mult: np.ndarray
    unit: np.ndarray
    comult: np.ndarray
    counit: np.ndarray
    antipode: np.ndarray
    star: np.ndarray
    integral: np.ndarray | None = None
    label: str | None = None

    def __post_init__(self):
        n = np.asarray(self.unit).shape[0]
        shapes = {
            "mult": (n, n, n),
            "unit": (n,),
            "comult": (n, n, n),
            "counit": (n,),
            "antipode": (n, n),
            "star": (n, n),
        }
        for name, shape in shapes.items():
            object.__setattr__(self, name, _frozen(as_ctensor(getattr(self, name), shape)))
        if self.integral is not None:
            object.__setattr__(self, "integral", _frozen(as_ctensor(self.integral, (n,))))

    @property
    def dim(self) -> int:
        return self.unit.shape[0]

    def structure_arrays(self) -> list[np.ndarray]:
        arrays = [getattr(self, f) for f in _FIELDS]
        if self.integral is not None:
            arrays.append(self.integral)
        return arrays

    def replace(self, **changes) -> "HopfSpec":
        return dataclasses.replace(self, **changes)

    def with_integral(self, integral) -> "HopfSpec":
        return self.replace(integral=integral)

    def __repr__(self) -> str:
        return f"HopfSpec(dim={self.dim}, label={self.label!r}, integral={'yes' if self.integral is not None else 'no'})"


def _check_vec(H: HopfSpec, x) -> np.ndarray:
    x = as_ctensor(x)
    if x.shape != (H.dim,):
        raise ShapeMismatchError(f"expected a coordinate vector of length {H.dim}, got shape {x.shape}")
    return x


def basis(H: HopfSpec, i: int) -> np.ndarray:
    v = np.zeros(H.dim, dtype=np.complex128)
    v[i] = 1.0
    return v


# ---------------------------------------------------------------------------
# constructors

def group_algebra(G: GroupTable) -> HopfSpec:
    """The group algebra C[G] with g* = g^-1 and phi = delta at the identity."""
    n = G.order
    mult = np.zeros((n, n, n))
    comult = np.zeros((n, n, n))
    inv_perm = np.zeros((n, n))
    for g in range(n):
        comult[g, g, g] = 1
        inv_perm[G.inv(g), g] = 1
        for h in range(n):
            mult[g, h, G.mul(g, h)] = 1
    unit = np.zeros(n)
    unit[G.identity] = 1
    return HopfSpec(
        mult=mult,
        unit=unit,
        comult=comult,
        counit=np.ones(n),
        antipode=inv_perm,
        star=inv_perm,
        integral=unit.copy(),
        label=f"C[{G.label}]" if G.label else None,
    )


def function_algebra(G: GroupTable) -> HopfSpec:
    """Functions on G in the basis of point indicators ``delta_g``.

    The integral is the normalized counting measure, phi(delta_g) = 1/|G|.
    """
    n = G.order
    mult = np.zeros((n, n, n))
    comult = np.zeros((n, n, n))
    inv_perm = np.zeros((n, n))
    for g in range(n):
        mult[g, g, g] = 1
        inv_perm[G.inv(g), g] = 1
        for h in range(n):
            comult[G.mul(g, h), g, h] = 1
    counit = np.zeros(n)
    counit[G.identity] = 1
    return HopfSpec(
        mult=mult,
        unit=np.ones(n),
        comult=comult,
        counit=counit,
        antipode=inv_perm,
        star=np.eye(n),
        integral=np.full(n, 1.0 / n),
        label=f"F({G.label})" if G.label else None,
    )


def dualize(H: HopfSpec, solve_integral: bool = True) -> HopfSpec:
    """The dual Hopf *-algebra on the dual basis ``f_i(e_j) = delta_ij``.

    Products and coproducts swap roles by transposition; the star is
    ``f*(a) = conj(f(S(a)*))``.
    """
    mult = np.transpose(H.comult, (1, 2, 0))
    comult = np.transpose(H.mult, (2, 0, 1))
    antipode = H.antipode.T
    star = (H.star.conj() @ H.antipode).T
    dual = HopfSpec(
        mult=mult,
        unit=H.counit,
        comult=comult,
        counit=H.unit,
        antipode=antipode,
        star=star,
        label=f"dual({H.label})" if H.label else None,
    )
    if solve_integral:
        dual = dual.with_integral(find_invariant_integral(dual))
    return dual


# ---------------------------------------------------------------------------
# element-level maps

def multiply(H: HopfSpec, x, y) -> np.ndarray:
    x = _check_vec(H, x)
    y = _check_vec(H, y)
    return np.einsum("i,j,ijk->k", x, y, H.mult)


def star(H: HopfSpec, x) -> np.ndarray:
    return H.star @ _check_vec(H, x).conj()


def antipode(H: HopfSpec, x) -> np.ndarray:
    return H.antipode @ _check_vec(H, x)


def counit(H: HopfSpec, x) -> complex:
    return complex(H.counit @ _check_vec(H, x))


def left_mult_matrices(H: HopfSpec) -> np.ndarray:
    """``L[i]`` is the matrix of y -> e_i y, i.e. ``L[i][k, j] = mult[i, j, k]``."""
    return np.transpose(H.mult, (0, 2, 1))


def coproduct_tensor(H: HopfSpec, legs: int, expand: str = "left") -> np.ndarray:
    """Iterated coproduct of every basis element: shape ``(n,) + (n,) * legs``."""
    if legs < 1 or legs > 4:
        raise ValueError("legs must be between 1 and 4")
    n = H.dim
    out = np.eye(n, dtype=np.complex128)
    for k in range(1, legs):
        if expand == "left":
            # replace leg 0 by its two coproduct legs
            out = np.tensordot(out, H.comult, axes=([1], [0]))
            out = np.moveaxis(out, (-2, -1), (1, 2))
        elif expand == "right":
            out = np.tensordot(out, H.comult, axes=([k], [0]))
        else:
            raise ValueError("expand must be 'left' or 'right'")
    return out


def iterated_coproduct(H: HopfSpec, x, legs: int, expand: str = "left") -> np.ndarray:
    """Delta applied ``legs - 1`` times; the result is a rank-``legs`` tensor."""
    x = _check_vec(H, x)
    return np.tensordot(x, coproduct_tensor(H, legs, expand), axes=([0], [0]))


# ---------------------------------------------------------------------------
# invariant integral

def integral_constraints(H: HopfSpec) -> np.ndarray:
    """Rows are linear constraints on phi: left/right invariance and phi o S = phi."""
    n = H.dim
    eye = np.eye(n)
    # (phi (x) id) Delta(e_i) - phi(e_i) 1, coefficient of e_k, as a functional of phi_j
    left = np.einsum("ijk->ikj", H.comult) - np.einsum("ij,k->ikj", eye, H.unit)
    right = H.comult - np.einsum("ij,k->ikj", eye, H.unit)
    s_inv = H.antipode.T - eye
    return np.concatenate([left.reshape(n * n, n), right.reshape(n * n, n), s_inv], axis=0)


def integral_residuals(H: HopfSpec, phi) -> tuple[float, float, float]:
    """(left invariance, right invariance, S-invariance) max residuals."""
    phi = _check_vec(H, phi)
    n = H.dim
    left = np.einsum("j,ijk->ik", phi, H.comult) - np.outer(phi, H.unit)
    right = np.einsum("k,ijk->ij", phi, H.comult) - np.outer(phi, H.unit)
    s = H.antipode.T @ phi - phi
    m = lambda a: float(np.max(np.abs(a))) if a.size else 0.0  # noqa: E731
    return m(left), m(right), m(s)


def find_invariant_integral(H: HopfSpec, rel: float = 1e-8) -> np.ndarray:
    """Solve for the normalized (phi(1) = 1) two-sided invariant integral.

    The null space of the stacked constraint matrix is found by singular-value
    thresholding at ``rel`` times the largest singular value.
    """
    C = integral_constraints(H)
    _, s, vh = np.linalg.svd(C, full_matrices=True)
    n = H.dim
    s_full = np.zeros(n)
    s_full[: len(s)] = s
    smax = s_full.max() if s_full.size else 0.0
    thresh = rel * smax if smax > 0 else rel
    null = vh[s_full <= thresh].conj()
    if null.shape[0] == 0:
        raise NoIntegralError(
            f"no invariant functional: smallest constraint singular value {s_full.min():.3e} "
            f"exceeds threshold {thresh:.3e}"
        )
    if null.shape[0] > 1:
        raise AmbiguousIntegralError(f"invariant functionals form a {null.shape[0]}-dimensional space")
    phi = null[0]
    norm = phi @ H.unit
    if abs(norm) <= rel * float(np.linalg.norm(phi)):
        raise NormalizationFailure("every invariant functional vanishes on the unit")
    return phi / norm


def constraint_singular_values(H: HopfSpec) -> np.ndarray:
    return singular_values(integral_constraints(H))
