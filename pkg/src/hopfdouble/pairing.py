"""Bilinear pairings between two finite Hopf *-algebras and the induced actions.

A pairing is stored as the matrix ``P[i, j] = <a_i, b_j>``; on coordinate
vectors ``<a, b> = a @ P @ b``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ShapeMismatchError, SingularGaloisMapError
from .groups import GroupTable
from .hopf import HopfSpec, dualize, function_algebra, group_algebra
from .report import AxiomReport, ReportBuilder
from .tensor import Tolerance, as_ctensor, default_tolerance

ACTIONS = ("A-on-B-left", "A-on-B-right", "B-on-A-left", "B-on-A-right")


@dataclass(frozen=True, eq=False)
class PairingSpec:
    A: HopfSpec
    B: HopfSpec
    P: np.ndarray

    def __post_init__(self):
        P = np.array(as_ctensor(self.P, (self.A.dim, self.B.dim)))
        P.setflags(write=False)
        object.__setattr__(self, "P", P)

    def pair(self, a, b) -> complex:
        return complex(np.asarray(a) @ self.P @ np.asarray(b))

    def structure_arrays(self) -> list[np.ndarray]:
        return self.A.structure_arrays() + self.B.structure_arrays() + [self.P]

    def flipped(self) -> "PairingSpec":
        return flip(self)


def canonical_pairing(G: GroupTable) -> PairingSpec:
    """Evaluation pairing <g, f> = f(g) between C[G] and F(G)."""
    return PairingSpec(group_algebra(G), function_algebra(G), np.eye(G.order))


def flip(Pr: PairingSpec) -> PairingSpec:
    """The same bilinear form read as a pairing of B with A."""
    return PairingSpec(Pr.B, Pr.A, Pr.P.T)


def dual_pairing(H: HopfSpec) -> PairingSpec:
    return PairingSpec(H, dualize(H), np.eye(H.dim))


def _mx(a) -> float:
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def verify_pairing(Pr: PairingSpec, tol: Tolerance | None = None) -> AxiomReport:
    tol = tol or default_tolerance(Pr)
    t = tol.abs
    A, B, P = Pr.A, Pr.B, Pr.P
    r = ReportBuilder()
    # <Delta(a_i), b_j (x) b_k> vs <a_i, b_j b_k>
    lhs = np.einsum("ixy,xj,yk->ijk", A.comult, P, P)
    rhs = np.einsum("jkl,il->ijk", B.mult, P)
    r.add("coproduct_product", _mx(lhs - rhs), t)
    # <a_i (x) a_j, Delta(b_k)> vs <a_i a_j, b_k>
    lhs = np.einsum("kxy,ix,jy->ijk", B.comult, P, P)
    rhs = np.einsum("ijl,lk->ijk", A.mult, P)
    r.add("product_coproduct", _mx(lhs - rhs), t)
    # <a*, b> = conj(<a, S_B(b)*>)
    r.add("star", _mx(A.star.T @ P - (P @ B.star @ B.antipode.conj()).conj()), t)
    r.add("unit_B", _mx(P @ B.unit - A.counit), t)
    r.add("unit_A", _mx(A.unit @ P - B.counit), t)
    r.add("antipode", _mx(A.antipode.T @ P - P @ B.antipode), t)
    # mirror: <a, b*> = conj(<S_A(a)*, b>)
    r.add("star_mirror", _mx(P @ B.star - ((A.star @ A.antipode.conj()).T @ P).conj()), t)
    return r.build()


def nondegeneracy(Pr: PairingSpec, tol: Tolerance | None = None) -> tuple[int, float, bool]:
    """(rank, smallest singular value, nondegenerate) of the pairing matrix."""
    tol = tol or default_tolerance(Pr)
    P = Pr.P
    if P.size == 0:
        return 0, 0.0, False
    s = np.linalg.svd(P, compute_uv=False)
    smax = float(s[0])
    rank = int(np.sum(s > tol.rel * smax)) if smax > 0 else 0
    smin = float(s[-1]) if P.shape[0] == P.shape[1] else 0.0
    square = P.shape[0] == P.shape[1]
    return rank, smin, bool(square and rank == P.shape[0])


def action_tensors(Pr: PairingSpec) -> dict[str, np.ndarray]:
    """``T[which][actor, target, out]`` for each of the four actions."""
    A, B, P = Pr.A, Pr.B, Pr.P
    return {
        # a |> b = b_(1) <a, b_(2)>
        "A-on-B-left": np.einsum("jky,iy->ijk", B.comult, P),
        # b <| a = <a, b_(1)> b_(2)
        "A-on-B-right": np.einsum("jyk,iy->ijk", B.comult, P),
        # b |> a = a_(1) <a_(2), b>
        "B-on-A-left": np.einsum("iky,yj->jik", A.comult, P),
        # a <| b = <a_(1), b> a_(2)
        "B-on-A-right": np.einsum("iyk,yj->jik", A.comult, P),
    }


def act(Pr: PairingSpec, which: str, actor, target) -> np.ndarray:
    if which not in ACTIONS:
        raise ValueError(f"unknown action {which!r}; expected one of {ACTIONS}")
    actor_dim, target_dim = (Pr.A.dim, Pr.B.dim) if which.startswith("A-on-B") else (Pr.B.dim, Pr.A.dim)
    actor = as_ctensor(actor)
    target = as_ctensor(target)
    if actor.shape != (actor_dim,) or target.shape != (target_dim,):
        raise ShapeMismatchError(
            f"{which}: expected actor of length {actor_dim} and target of length {target_dim}, "
            f"got {actor.shape} and {target.shape}"
        )
    return np.einsum("a,t,atk->k", actor, target, action_tensors(Pr)[which])


def verify_actions(
    Pr: PairingSpec, tol: Tolerance | None = None, actions: dict[str, np.ndarray] | None = None
) -> AxiomReport:
    """Module laws, adjointness with the pairing, and bimodule compatibility.

    ``actions`` overrides the action tensors (used to test that the checks
    can fail).
    """
    tol = tol or default_tolerance(Pr)
    t = tol.abs
    A, B, P = Pr.A, Pr.B, Pr.P
    T = actions if actions is not None else action_tensors(Pr)
    AB_l, AB_r, BA_l, BA_r = (T[k] for k in ACTIONS)
    r = ReportBuilder()

    # (a a') |> b == a |> (a' |> b)
    res = _mx(np.einsum("ijx,xtk->ijtk", A.mult, AB_l) - np.einsum("jty,iyk->ijtk", AB_l, AB_l))
    # b <| (a a') == (b <| a) <| a'
    res = max(res, _mx(np.einsum("ijx,xtk->ijtk", A.mult, AB_r) - np.einsum("ity,jyk->ijtk", AB_r, AB_r)))
    # (b b') |> a == b |> (b' |> a)
    res = max(res, _mx(np.einsum("ijx,xtk->ijtk", B.mult, BA_l) - np.einsum("jty,iyk->ijtk", BA_l, BA_l)))
    # a <| (b b') == (a <| b) <| b'
    res = max(res, _mx(np.einsum("ijx,xtk->ijtk", B.mult, BA_r) - np.einsum("ity,jyk->ijtk", BA_r, BA_r)))
    r.add("module_laws", res, t)

    # unit acts trivially
    res = 0.0
    for tensor, unit in ((AB_l, A.unit), (AB_r, A.unit), (BA_l, B.unit), (BA_r, B.unit)):
        res = max(res, _mx(np.einsum("a,atk->tk", unit, tensor) - np.eye(tensor.shape[1])))
    r.add("unitality", res, t)

    # <b |> a, b'> == <a, b' b>      indices: b=j, a=i, b'=k
    res = _mx(np.einsum("jix,xk->jik", BA_l, P) - np.einsum("kjy,iy->jik", B.mult, P))
    # <a <| b, b'> == <a, b b'>
    res = max(res, _mx(np.einsum("jix,xk->jik", BA_r, P) - np.einsum("jky,iy->jik", B.mult, P)))
    # <a, a' |> b> == <a a', b>      indices: a=i, a'=j, b=k
    res = max(res, _mx(np.einsum("jky,iy->ijk", AB_l, P) - np.einsum("ijx,xk->ijk", A.mult, P)))
    # <a, b <| a'> == <a' a, b>
    res = max(res, _mx(np.einsum("jky,iy->ijk", AB_r, P) - np.einsum("jix,xk->ijk", A.mult, P)))
    r.add("adjointness", res, t)

    # (b1 |> a) <| b2 == b1 |> (a <| b2)    indices: b1=p, a=i, b2=q
    res = _mx(np.einsum("pix,qxk->piqk", BA_l, BA_r) - np.einsum("qix,pxk->piqk", BA_r, BA_l))
    # (a1 |> b) <| a2 == a1 |> (b <| a2)
    res = max(res, _mx(np.einsum("pix,qxk->piqk", AB_l, AB_r) - np.einsum("qix,pxk->piqk", AB_r, AB_l)))
    r.add("bimodule", res, t)
    return r.build()


def galois_maps(H: HopfSpec) -> tuple[np.ndarray, np.ndarray]:
    """Matrices of T2(x (x) y) = (x (x) 1) Delta(y) and T1(x (x) y) = Delta(x)(1 (x) y).

    Both act on coordinates of ``H (x) H`` flattened as ``i * n + j``.
    """
    n = H.dim
    m, c = H.mult, H.comult
    # T2[(p, q), (i, j)] = sum_a c[j, a, q] m[i, a, p]
    T2 = np.einsum("jaq,iap->pqij", c, m).reshape(n * n, n * n)
    # T1[(p, q), (i, j)] = sum_b c[i, p, b] m[b, j, q]
    T1 = np.einsum("ipb,bjq->pqij", c, m).reshape(n * n, n * n)
    return T2, T1


def _inverse(T: np.ndarray, name: str, rel: float) -> np.ndarray:
    s = np.linalg.svd(T, compute_uv=False)
    if s.size == 0 or s[-1] <= rel * s[0]:
        raise SingularGaloisMapError(f"{name} is not invertible (singular values {s[0]:.3e}..{s[-1]:.3e})")
    return np.linalg.inv(T)


def verify_galois(Pr: PairingSpec, tol: Tolerance | None = None) -> AxiomReport:
    """Duality of T2 on A (x) A with T1 on B (x) B, and of their inverses."""
    tol = tol or default_tolerance(Pr)
    T2, _ = galois_maps(Pr.A)
    _, T1 = galois_maps(Pr.B)
    PP = np.kron(Pr.P, Pr.P)
    r = ReportBuilder()
    r.add("galois_duality", _mx(T2.T @ PP - PP @ T1), tol.abs)
    T2i = _inverse(T2, "T2 on A", tol.rel)
    T1i = _inverse(T1, "T1 on B", tol.rel)
    r.add("galois_inverse_duality", _mx(T2i.T @ PP - PP @ T1i), tol.abs)
    return r.build()
