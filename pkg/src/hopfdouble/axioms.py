"""Residual-based verification of Hopf *-algebra and finite Hopf C*-algebra axioms.

Every check is evaluated exhaustively on basis elements (or basis pairs)
and reported as its maximum absolute residual.
"""

from __future__ import annotations

import numpy as np

from .exceptions import HopfError, MissingIntegralError
from .hopf import HopfSpec, find_invariant_integral, integral_residuals
from .report import AxiomReport, ReportBuilder
from .tensor import Tolerance, default_tolerance


def _mx(a) -> float:
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def _star_legs(H: HopfSpec, t: np.ndarray, legs: int) -> np.ndarray:
    """Apply * to each of the trailing ``legs`` axes of ``t`` (one overall conjugation)."""
    out = t.conj()
    for k in range(legs):
        axis = out.ndim - legs + k
        out = np.moveaxis(np.tensordot(out, H.star, axes=([axis], [1])), -1, axis)
    return out


def gram_matrix(H: HopfSpec, phi=None) -> np.ndarray:
    """``gram[i, j] = phi(e_j* e_i)``."""
    phi = H.integral if phi is None else np.asarray(phi, dtype=np.complex128)
    # e_j* = star[:, j]; e_j* e_i = sum_m star[m, j] mult[m, i, :]
    return np.einsum("mj,mik,k->ij", H.star, H.mult, phi, optimize=True)


def verify_hopf_star(H: HopfSpec, tol: Tolerance | None = None) -> AxiomReport:
    tol = tol or default_tolerance(H)
    t = tol.abs
    n = H.dim
    m, c, S, J = H.mult, H.comult, H.antipode, H.star
    eye = np.eye(n)
    r = ReportBuilder()

    # unit: 1 e_i = e_i 1 = e_i
    r.add("unit", max(_mx(np.einsum("a,aik->ik", H.unit, m) - eye), _mx(np.einsum("a,iak->ik", H.unit, m) - eye)), t)

    # (e_i e_j) e_k == e_i (e_j e_k)
    lhs = np.tensordot(m, m, axes=([2], [0]))
    rhs = np.tensordot(m, m, axes=([2], [1])).transpose(2, 0, 1, 3)
    r.add("associativity", _mx(lhs - rhs), t)

    # (Delta (x) id) Delta == (id (x) Delta) Delta
    lhs = np.tensordot(c, c, axes=([1], [0])).transpose(0, 2, 3, 1)
    rhs = np.tensordot(c, c, axes=([2], [0]))
    r.add("coassociativity", _mx(lhs - rhs), t)

    # (eps (x) id) Delta == (id (x) eps) Delta == id
    r.add(
        "counit",
        max(_mx(np.einsum("iab,a->ib", c, H.counit) - eye), _mx(np.einsum("iab,b->ia", c, H.counit) - eye)),
        t,
    )

    # m(S (x) id) Delta == m(id (x) S) Delta == eps(.) 1
    target = np.outer(H.counit, H.unit)
    left = np.einsum("iab,xa,xbk->ik", c, S, m, optimize=True)
    right = np.einsum("iab,xb,axk->ik", c, S, m, optimize=True)
    r.add("antipode", max(_mx(left - target), _mx(right - target)), t)

    # x** == x and (xy)* == y* x*
    invol = _mx(J @ J.conj() - eye)
    star_prod = np.einsum("kx,ijx->ijk", J, m.conj())  # (e_i e_j)*
    reversed_prod = np.einsum("aj,bi,abk->ijk", J, J, m, optimize=True)  # e_j* e_i*
    r.add("star_involution", max(invol, _mx(star_prod - reversed_prod)), t)

    # Delta multiplicative and unital
    mult_res = 0.0
    for i in range(n):
        lhs = np.tensordot(m[i], c, axes=([1], [0]))  # Delta(e_i e_j), axes (j, x, y)
        # Delta(e_i) Delta(e_j) = c[i,a,b] c[j,c,d] (e_a e_c) (x) (e_b e_d), contracted stepwise
        t1 = np.tensordot(c[i], m, axes=([0], [0]))  # (b, c, x)
        t2 = np.tensordot(t1, c, axes=([1], [1]))  # (b, x, j, d)
        rhs = np.tensordot(t2, m, axes=([0, 3], [0, 1])).transpose(1, 0, 2)
        mult_res = max(mult_res, _mx(lhs - rhs))
    unital = _mx(np.einsum("i,iab->ab", H.unit, c) - np.outer(H.unit, H.unit))
    r.add("comult_multiplicative", max(mult_res, unital), t)

    # Delta(x*) == Delta(x)* legwise
    lhs = np.einsum("mi,mab->iab", J, c)
    rhs = _star_legs(H, c, 2)
    r.add("comult_star", _mx(lhs - rhs), t)

    # eps multiplicative, unital and eps(x*) = conj(eps(x))
    eps_mult = _mx(np.einsum("ijk,k->ij", m, H.counit) - np.outer(H.counit, H.counit))
    eps_unit = abs(H.counit @ H.unit - 1)
    eps_star = _mx(H.counit @ J - H.counit.conj())
    r.add("counit_star_homomorphism", max(eps_mult, eps_unit, eps_star), t)

    # S(S(a)*)* == a; as a matrix J conj(S) conj(J) S
    r.add("antipode_star", _mx(J @ S.conj() @ J.conj() @ S - eye), t)

    # S(xy) == S(y) S(x)
    lhs = np.einsum("ijx,kx->ijk", m, S)
    rhs = np.einsum("aj,bi,abk->ijk", S, S, m, optimize=True)
    r.add("antipode_antimultiplicative", _mx(lhs - rhs), t)
    return r.build()


def resolve_integral(H: HopfSpec) -> np.ndarray:
    if H.integral is not None:
        return H.integral
    try:
        return find_invariant_integral(H)
    except HopfError as exc:
        raise MissingIntegralError(f"no integral available: {exc}") from exc


def verify_cstar(H: HopfSpec, tol: Tolerance | None = None) -> AxiomReport:
    """C*-side checks: S^2 = id, invariance and faithful positivity of phi."""
    tol = tol or default_tolerance(H)
    phi = resolve_integral(H)
    t = tol.abs
    r = ReportBuilder()
    S = H.antipode
    r.add("antipode_square", _mx(S @ S - np.eye(H.dim)), t)
    left, right, s_inv = integral_residuals(H, phi)
    r.add("integral_invariance", max(left, right), t)
    r.add("integral_antipode", s_inv, t)
    gram = gram_matrix(H, phi)
    asym = _mx(gram - gram.conj().T)
    r.add("gram_hermitian", asym, t)
    lam_min = float(np.linalg.eigvalsh((gram + gram.conj().T) / 2)[0])
    # residual: how far the smallest eigenvalue falls short of the threshold
    r.add_result("gram_positive", max(0.0, t - lam_min), lam_min > t)
    r.add("integral_normalized", abs(phi @ H.unit - 1), t)
    return r.build()


def gram_min_eigenvalue(H: HopfSpec, phi=None) -> float:
    g = gram_matrix(H, phi)
    return float(np.linalg.eigvalsh((g + g.conj().T) / 2)[0])
