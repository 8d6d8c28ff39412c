"""GNS representation of a finite Hopf *-algebra with a faithful positive integral.

The GNS space is the algebra itself with inner product ``<x, y> = phi(y* x)``.
Coordinates are whitened through the Hermitian eigendecomposition of the
Gram form so that representation matrices act on an orthonormal basis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .axioms import gram_matrix, resolve_integral
from .double import DoubleSpec
from .exceptions import GramNotPositiveError
from .hopf import HopfSpec, left_mult_matrices
from .report import AxiomReport, ReportBuilder
from .tensor import Tolerance, as_ctensor, default_tolerance, hermitian_eig, operator_norm


@dataclass(frozen=True, eq=False)
class GNSData:
    spec: HopfSpec
    phi: np.ndarray
    gram: np.ndarray  # gram[i, j] = phi(e_j* e_i)
    eigenvalues: np.ndarray
    transform: np.ndarray  # coordinates -> orthonormal GNS coordinates
    inverse_transform: np.ndarray
    rep: np.ndarray  # rep[i] = matrix of pi(e_i) in the orthonormal basis

    @property
    def dim(self) -> int:
        return self.spec.dim

    def pi(self, x) -> np.ndarray:
        return np.tensordot(as_ctensor(x, (self.dim,)), self.rep, axes=([0], [0]))


def gns_build(H: HopfSpec, tol: Tolerance | None = None) -> GNSData:
    tol = tol or default_tolerance(H)
    phi = resolve_integral(H)
    gram = gram_matrix(H, phi)
    # <x, y> = y^H M x with M = conj(gram)
    M = gram.conj()
    lam, U = hermitian_eig(M, tol)
    if lam[0] <= tol.abs:
        raise GramNotPositiveError(float(lam[0]))
    root = np.sqrt(lam)
    W = U.conj().T * root[:, None]  # diag(sqrt lam) U^H
    W_inv = U / root[None, :]
    L = left_mult_matrices(H)
    rep = np.einsum("ab,ibc,cd->iad", W, L, W_inv, optimize=True)
    return GNSData(spec=H, phi=phi, gram=gram, eigenvalues=lam, transform=W, inverse_transform=W_inv, rep=rep)


def hilbert_norms(G: GNSData, x) -> tuple[float, float]:
    """(phi(x* x)^1/2, phi(x x*)^1/2)."""
    H = G.spec
    x = as_ctensor(x, (G.dim,))
    xs = H.star @ x.conj()
    mult = H.mult
    a = np.einsum("a,b,abk,k->", xs, x, mult, G.phi, optimize=True)
    b = np.einsum("a,b,abk,k->", x, xs, mult, G.phi, optimize=True)
    return float(np.sqrt(max(a.real, 0.0))), float(np.sqrt(max(b.real, 0.0)))


def vector_norm(G: GNSData, x) -> float:
    """phi(x x*)^1/2, the norm displayed for the double."""
    return hilbert_norms(G, x)[1]


def norm_discrepancy(G: GNSData, x) -> float:
    """|phi(x* x) - phi(x x*)|."""
    p, q = hilbert_norms(G, x)
    return abs(p * p - q * q)


def element_operator_norm(G: GNSData, x) -> float:
    return operator_norm(G.pi(x))


def _random_elements(n: int, samples: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.standard_normal((samples, n)) + 1j * rng.standard_normal((samples, n))


def _mx(a) -> float:
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def verify_cstar_identity(
    G: GNSData, samples: int = 100, seed: int = 0, tol: Tolerance | None = None
) -> AxiomReport:
    tol = tol or default_tolerance(G.spec)
    H = G.spec
    n = G.dim
    r = ReportBuilder()

    worst = 0.0
    ok = True
    for x in _random_elements(n, samples, seed):
        px = G.pi(x)
        norm = operator_norm(px)
        dev = abs(operator_norm(px.conj().T @ px) - norm**2)
        worst = max(worst, dev / norm**2 if norm > 0 else dev)
        ok &= dev <= tol.rel * norm**2
    r.add_result("cstar_identity", worst, ok)

    # pi(e_i e_j) == pi(e_i) pi(e_j)
    lhs = np.tensordot(H.mult, G.rep, axes=([2], [0]))
    rhs = np.einsum("iab,jbc->ijac", G.rep, G.rep, optimize=True)
    r.add("pi_multiplicative", _mx(lhs - rhs), tol.abs)
    r.add("pi_unital", _mx(G.pi(H.unit) - np.eye(n)), tol.abs)
    # pi(e_i*) == pi(e_i)^H
    lhs = np.tensordot(H.star, G.rep, axes=([0], [0]))
    r.add("pi_star", _mx(lhs - np.conj(np.transpose(G.rep, (0, 2, 1)))), tol.abs)
    # W^-H M W^-1 == I
    ortho = G.inverse_transform.conj().T @ G.gram.conj() @ G.inverse_transform
    r.add("orthonormality", _mx(ortho - np.eye(n)), tol.abs)
    s = np.linalg.svd(G.rep.reshape(n, n * n), compute_uv=False)
    r.add_result("faithful", max(0.0, tol.rel - s[-1] / s[0]), s[-1] > tol.rel * s[0])
    return r.build()


def verify_isometry(
    D: DoubleSpec,
    gA: GNSData,
    gB: GNSData,
    gD: GNSData,
    tol: Tolerance | None = None,
    samples: int = 100,
    seed: int = 0,
) -> AxiomReport:
    """Norm identities for the canonical embeddings and elementary tensors.

    All three entries use the vector norm phi(x x*)^1/2 and relative
    deviations.
    """
    tol = tol or default_tolerance(D.H)
    nA, nB = D.n_A, D.n_B
    a_samples = list(np.eye(nA, dtype=np.complex128)) + list(_random_elements(nA, samples, seed))
    b_samples = list(np.eye(nB, dtype=np.complex128)) + list(_random_elements(nB, samples, seed + 1))

    def rel(x, y):
        return abs(x - y) / max(abs(y), 1e-300) if y != 0 else abs(x)

    r = ReportBuilder()
    dev_a = max(rel(vector_norm(gD, D.include_A(a)), vector_norm(gA, a)) for a in a_samples)
    r.add("embed_A_isometric", dev_a, tol.rel)
    dev_b = max(rel(vector_norm(gD, D.include_B(b)), vector_norm(gB, b)) for b in b_samples)
    r.add("embed_B_isometric", dev_b, tol.rel)
    pairs = [(np.eye(nA)[i], np.eye(nB)[j]) for i in range(nA) for j in range(nB)]
    pairs += list(zip(a_samples[nA:], b_samples[nB:]))
    dev = max(rel(vector_norm(gD, D.element(a, b)), vector_norm(gA, a) * vector_norm(gB, b)) for a, b in pairs)
    r.add("elementary_norm_multiplicative", dev, tol.rel)
    return r.build()


def gns_report(G: GNSData, samples: int, seed: int, tol: Tolerance, norms=()) -> dict:
    """JSON-ready summary used by the CLI."""
    cstar = verify_cstar_identity(G, samples, seed, tol)
    table = []
    for x in norms:
        x = as_ctensor(x, (G.dim,))
        p, q = hilbert_norms(G, x)
        table.append(
            {
                "element": [[float(v.real), float(v.imag)] for v in x],
                "vector_norm": q,
                "norm_star_x_x": p,
                "discrepancy": abs(p * p - q * q),
                "operator_norm": element_operator_norm(G, x),
            }
        )
    return {
        "gram_eigenvalues": {"min": float(G.eigenvalues[0]), "max": float(G.eigenvalues[-1])},
        "cstar": cstar.to_dict(),
        "norms": table,
    }
