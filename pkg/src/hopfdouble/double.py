"""The quantum double D(A, B) of a non-degenerate pairing.

D(A, B) lives on ``A (x) B`` with basis ``(a_i, b_j)`` at index ``i * n_B + j``.
All structure maps are materialized as a plain :class:`HopfSpec`, so the
generic verifiers apply unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .axioms import gram_matrix, verify_cstar, verify_hopf_star
from .exceptions import (
    DegeneratePairingError,
    IndexAlignmentError,
    MissingIntegralError,
    PairingVerificationError,
)
from .groups import GroupTable
from .hopf import HopfSpec, coproduct_tensor, function_algebra, group_algebra, integral_residuals
from .pairing import PairingSpec, nondegeneracy, verify_actions, verify_pairing
from .report import AxiomReport, ReportBuilder
from .tensor import MAX_ENTRIES, Tolerance, check_capacity, default_tolerance, max_abs_diff


@dataclass(frozen=True, eq=False)
class DoubleSpec:
    H: HopfSpec
    index_map: np.ndarray  # index_map[i, j] = i * n_B + j
    embed_A: np.ndarray  # row i: coordinates of (a_i, 1_B)
    embed_B: np.ndarray  # row j: coordinates of (1_A, b_j)
    theta: np.ndarray
    source: PairingSpec

    @property
    def n_A(self) -> int:
        return self.source.A.dim

    @property
    def n_B(self) -> int:
        return self.source.B.dim

    def element(self, a, b) -> np.ndarray:
        """Coordinates of the elementary tensor (a, b)."""
        return np.kron(np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128))

    def include_A(self, a) -> np.ndarray:
        return np.asarray(a, dtype=np.complex128) @ self.embed_A

    def include_B(self, b) -> np.ndarray:
        return np.asarray(b, dtype=np.complex128) @ self.embed_B


def double_multiplication(Pr: PairingSpec) -> np.ndarray:
    """Structure constants of

        (a, b)(a', b') = sum (a a'_(2), b_(2) b') <a'_(1), S_B b_(3)> <a'_(3), b_(1)>

    with S_B standing in for its inverse (S_B^2 = id).
    """
    A, B, P = Pr.A, Pr.B, Pr.P
    nA, nB = A.dim, B.dim
    C3A = coproduct_tensor(A, 3)
    C3B = coproduct_tensor(B, 3)
    Q = P @ B.antipode  # <a_x, S_B b_r>
    m = np.einsum("iyk,Ixyz,jpqr,qJl,xr,zp->ijIJkl", A.mult, C3A, C3B, B.mult, Q, P, optimize=True)
    n = nA * nB
    return m.reshape(n, n, n)


def double_star(Pr: PairingSpec) -> np.ndarray:
    """Matrix part of the star on D: column (i, j) holds (a_i, b_j)*.

        (a, b)* = sum (a*_(2), b*_(2)) <a*_(3), (b_(1))*> <a*_(1), (S_B b_(3))*>
    """
    A, B, P = Pr.A, Pr.B, Pr.P
    C3A = coproduct_tensor(A, 3)
    C3B = coproduct_tensor(B, 3)
    # legs of Delta^2(a_i*)
    a_star = np.einsum("mi,mxyz->ixyz", A.star, C3A)
    # (b_(1))*, (b_(2))*, (S_B b_(3))* with one overall conjugation
    leg3 = B.star @ B.antipode.conj()
    b_star = np.einsum("jPQR,pP,qQ,rR->jpqr", C3B.conj(), B.star, B.star, leg3, optimize=True)
    J = np.einsum("ixkz,jplr,zp,xr->klij", a_star, b_star, P, P, optimize=True)
    n = A.dim * B.dim
    return J.reshape(n, n)


def double_antipode(Pr: PairingSpec) -> np.ndarray:
    """Matrix of S_D(a, b) = (1, S_B b)(S_A a, 1), expanded as

        sum (S_A a_(2), S_B b_(2)) <a_(3), S_B b_(1)> <a_(1), b_(3)>
    """
    A, B, P = Pr.A, Pr.B, Pr.P
    C3A = coproduct_tensor(A, 3)
    C3B = coproduct_tensor(B, 3)
    Q = P @ B.antipode
    S = np.einsum("ky,ixyz,lq,jpqr,zp,xr->klij", A.antipode, C3A, B.antipode, C3B, Q, P, optimize=True)
    n = A.dim * B.dim
    return S.reshape(n, n)


def build_double(Pr: PairingSpec, tol: Tolerance | None = None, force: bool = False) -> DoubleSpec:
    """Construct D(A, B) from a verified non-degenerate pairing.

    ``force`` skips the pairing/action axiom checks (non-degeneracy and the
    integrals are still required).
    """
    tol = tol or default_tolerance(Pr)
    A, B = Pr.A, Pr.B
    rank, smin, ok = nondegeneracy(Pr, tol)
    if not ok:
        raise DegeneratePairingError(f"pairing has rank {rank} (min singular value {smin:.3e})")
    if not force:
        failing = verify_pairing(Pr, tol).failing() + verify_actions(Pr, tol).failing()
        if failing:
            raise PairingVerificationError(failing)
    if A.integral is None or B.integral is None:
        raise MissingIntegralError("both factors must carry an invariant integral")
    nA, nB = A.dim, B.dim
    n = nA * nB
    check_capacity((n, n, n), MAX_ENTRIES)

    comult = np.einsum("iab,jcd->ijacbd", A.comult, B.comult).reshape(n, n, n)
    theta = np.kron(A.integral, B.integral)
    H = HopfSpec(
        mult=double_multiplication(Pr),
        unit=np.kron(A.unit, B.unit),
        comult=comult,
        counit=np.kron(A.counit, B.counit),
        antipode=double_antipode(Pr),
        star=double_star(Pr),
        integral=theta,
        label=f"D({A.label},{B.label})" if A.label and B.label else None,
    )
    return DoubleSpec(
        H=H,
        index_map=np.arange(n).reshape(nA, nB),
        embed_A=np.kron(np.eye(nA), B.unit[None, :]),
        embed_B=np.kron(A.unit[None, :], np.eye(nB)),
        theta=H.integral,
        source=Pr,
    )


def _mx(a) -> float:
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def _products(mult: np.ndarray, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """out[p, q] = X[p] * Y[q] for row-stacked coordinate vectors."""
    return np.einsum("pa,qb,abk->pqk", X, Y, mult, optimize=True)


def _stars(J: np.ndarray, X: np.ndarray) -> np.ndarray:
    return X.conj() @ J.T


def verify_double(D: DoubleSpec, tol: Tolerance | None = None) -> AxiomReport:
    tol = tol or default_tolerance(D.H)
    t = tol.abs
    H = D.H
    A, B = D.source.A, D.source.B
    n = H.dim
    m, J = H.mult, H.star
    eye = np.eye(n)

    report = verify_hopf_star(H, tol).merged(verify_cstar(H, tol))
    r = ReportBuilder()

    r.add("star_involutive", _mx(J @ J.conj() - eye), t)
    star_of_prod = np.einsum("kx,ijx->ijk", J, m.conj())
    prod_of_stars = np.einsum("aj,bi,abk->ijk", J, J, m)
    r.add("star_antimultiplicative", _mx(star_of_prod - prod_of_stars), t)

    # common kernel of all left (resp. right) multiplications
    left_stack = np.transpose(m, (0, 2, 1)).reshape(n * n, n)
    right_stack = np.transpose(m, (1, 2, 0)).reshape(n * n, n)
    smin = 1.0
    for M in (left_stack, right_stack):
        s = np.linalg.svd(M, compute_uv=False)
        smin = min(smin, float(s[-1] / s[0]) if s[0] > 0 else 0.0)
    r.add_result("mult_nondegenerate", max(0.0, tol.rel - smin), smin > tol.rel)

    res = 0.0
    for E, F in ((D.embed_A, A), (D.embed_B, B)):
        res = max(res, _mx(_products(m, E, E) - np.einsum("ijk,kx->ijx", F.mult, E)))
        res = max(res, _mx(F.unit @ E - H.unit))
        res = max(res, _mx(_stars(J, E) - F.star.T @ E))
        s = np.linalg.svd(E, compute_uv=False)
        res = max(res, 0.0 if s[-1] > tol.rel * s[0] else 1.0)
    r.add("embeddings_star_homomorphisms", res, t)

    # (a, 1)(a', b) = (a a', b) and (a, b)(1, b') = (a, b b')
    basis = np.eye(n)
    lhs = _products(m, D.embed_A, basis)
    rhs = np.einsum("iak,bl->iabkl", A.mult, np.eye(B.dim)).reshape(A.dim, n, n)
    res = _mx(lhs - rhs)
    lhs = _products(m, basis, D.embed_B)
    rhs = np.einsum("ak,bjl->abjkl", np.eye(A.dim), B.mult).reshape(n, B.dim, n)
    res = max(res, _mx(lhs - rhs))
    r.add("mixed_products", res, t)

    S = H.antipode
    res = max(_mx((S @ D.embed_A.T).T - A.antipode.T @ D.embed_A), _mx((S @ D.embed_B.T).T - B.antipode.T @ D.embed_B))
    r.add("antipode_on_factors", res, t)
    return report.merged(r.build())


def verify_theta(D: DoubleSpec, tol: Tolerance | None = None, samples: int = 100, seed: int = 0) -> AxiomReport:
    tol = tol or default_tolerance(D.H)
    t = tol.abs
    H = D.H
    A, B = D.source.A, D.source.B
    theta = D.theta
    r = ReportBuilder()

    def norm_sq(spec: HopfSpec, phi, x):
        xs = spec.star @ x.conj()
        return np.einsum("a,b,abk,k->", x, xs, spec.mult, phi)

    # theta((a,b)(a,b)*) = phi_A(a a*) phi_B(b b*)
    rng = np.random.default_rng(seed)
    pairs = [(np.eye(A.dim)[i], np.eye(B.dim)[j]) for i in range(A.dim) for j in range(B.dim)]
    for _ in range(samples):
        a = rng.standard_normal(A.dim) + 1j * rng.standard_normal(A.dim)
        b = rng.standard_normal(B.dim) + 1j * rng.standard_normal(B.dim)
        pairs.append((a, b))
    res = 0.0
    for a, b in pairs:
        x = D.element(a, b)
        lhs = norm_sq(H, theta, x)
        rhs = norm_sq(A, A.integral, a) * norm_sq(B, B.integral, b)
        res = max(res, abs(lhs - rhs) / max(1.0, abs(rhs)))
    r.add("theta_norm_factorizes", res, t)

    left, right, s_inv = integral_residuals(H, theta)
    r.add("theta_invariance", max(left, right), t)
    r.add("theta_antipode", s_inv, t)

    gram = gram_matrix(H, theta)
    r.add("theta_gram_hermitian", _mx(gram - gram.conj().T), t)
    lam = float(np.linalg.eigvalsh((gram + gram.conj().T) / 2)[0])
    r.add_result("theta_gram_positive", max(0.0, t - lam), lam > t)

    res = _mx(theta - np.kron(A.integral, B.integral))
    if H.integral is not None:
        res = max(res, _mx(H.integral - theta))
    r.add("theta_is_product", res, t)
    r.add("theta_unit", abs(theta @ H.unit - 1), t)

    # theta(e_i e_j) = theta(e_j e_i)
    tr = np.einsum("ijk,k->ij", H.mult, theta)
    r.add("theta_trace", _mx(tr - tr.T), t)
    return r.build()


def group_double_oracle(G: GroupTable) -> np.ndarray:
    """Brute-force structure constants of the group double on basis (delta_g, h):

        (delta_g, h)(delta_g', h') = [g = h g' h^-1] (delta_g, h h')
    """
    n = G.order
    N = n * n
    out = np.zeros((N, N, N), dtype=np.complex128)
    for g in range(n):
        for h in range(n):
            for g2 in range(n):
                if g != G.conjugate(h, g2):
                    continue
                for h2 in range(n):
                    out[g * n + h, g2 * n + h2, g * n + G.mul(h, h2)] = 1.0
    return out


def _same_structure(X: HopfSpec, Y: HopfSpec) -> bool:
    return X.dim == Y.dim and max_abs_diff(X.mult, Y.mult) == 0 and max_abs_diff(X.comult, Y.comult) == 0


def oracle_alignment(D: DoubleSpec, G: GroupTable) -> np.ndarray:
    """Permutation ``perm`` with D basis index ``k`` sent to oracle index ``perm[k]``.

    A = F(G), B = C[G]: (delta_g, h) is the oracle element itself.
    A = C[G], B = F(G): (g, delta_h) = (1, g)(delta_h, 1) = (delta_{g h g^-1}, g).
    """
    n = G.order
    if D.H.dim != n * n:
        raise IndexAlignmentError(f"double has dimension {D.H.dim}, group double has {n * n}")
    A, B = D.source.A, D.source.B
    eye = np.eye(n)
    if _same_structure(A, function_algebra(G)) and _same_structure(B, group_algebra(G)):
        if max_abs_diff(D.source.P, eye) != 0:
            raise IndexAlignmentError("pairing is not the evaluation pairing")
        return np.arange(n * n)
    if _same_structure(A, group_algebra(G)) and _same_structure(B, function_algebra(G)):
        if max_abs_diff(D.source.P, eye) != 0:
            raise IndexAlignmentError("pairing is not the evaluation pairing")
        perm = np.empty(n * n, dtype=np.int64)
        for g in range(n):
            for h in range(n):
                perm[g * n + h] = G.conjugate(g, h) * n + g
        return perm
    raise IndexAlignmentError("factors are not C[G] and F(G) for the given group")


def compare_with_oracle(D: DoubleSpec, G: GroupTable, tol: Tolerance | None = None) -> float:
    """Max deviation between D's multiplication and the brute-force group double."""
    perm = oracle_alignment(D, G)
    oracle = group_double_oracle(G)
    aligned = np.zeros_like(oracle)
    aligned[np.ix_(perm, perm, perm)] = D.H.mult
    return max_abs_diff(aligned, oracle)
