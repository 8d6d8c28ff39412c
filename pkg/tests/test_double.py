import dataclasses

import numpy as np
import pytest

from hopfdouble.axioms import gram_min_eigenvalue
from hopfdouble.double import (
    build_double,
    compare_with_oracle,
    group_double_oracle,
    verify_double,
    verify_theta,
)
from hopfdouble.exceptions import (
    CapacityError,
    DegeneratePairingError,
    IndexAlignmentError,
    MissingIntegralError,
    PairingVerificationError,
)
from hopfdouble.groups import cyclic, symmetric
from hopfdouble.hopf import basis, multiply, star
from hopfdouble.pairing import PairingSpec, canonical_pairing, flip
from hopfdouble.tensor import default_tolerance, max_abs_diff

DOUBLE_ENTRIES = [
    "star_involutive",
    "star_antimultiplicative",
    "mult_nondegenerate",
    "embeddings_star_homomorphisms",
    "mixed_products",
    "antipode_on_factors",
]


@pytest.fixture(scope="module")
def s3_double():
    return build_double(canonical_pairing(symmetric(3)))


@pytest.fixture(scope="module")
def z2_double():
    # A = F(Z2), B = C[Z2]
    return build_double(flip(canonical_pairing(cyclic(2))))


def test_double_shape(z2_double):
    D = z2_double
    assert D.H.dim == 4 and D.n_A == 2 and D.n_B == 2
    assert np.array_equal(D.index_map, [[0, 1], [2, 3]])
    assert np.array_equal(D.H.integral, D.theta)


def test_z2_componentwise(z2_double):
    """Abelian case: delta-orthogonality in A, group law in B."""
    D = z2_double
    for g in range(2):
        for h in range(2):
            for g2 in range(2):
                for h2 in range(2):
                    prod = multiply(D.H, D.element(basis(D.source.A, g), basis(D.source.B, h)),
                                    D.element(basis(D.source.A, g2), basis(D.source.B, h2)))
                    expected = D.element(basis(D.source.A, g), basis(D.source.B, (h + h2) % 2)) * (g == g2)
                    assert np.array_equal(prod, expected)


def test_theta_values(z2_double):
    D = z2_double
    assert D.theta[D.index_map[0, 0]] == pytest.approx(0.5)
    assert D.theta @ D.H.unit == pytest.approx(1.0)


def test_unit_identities_after_definition(s3_double):
    D = s3_double
    A, B = D.source.A, D.source.B
    tol = default_tolerance(D.H)
    for i in range(A.dim):
        for i2 in range(A.dim):
            for j in range(B.dim):
                a, a2, b = basis(A, i), basis(A, i2), basis(B, j)
                lhs = multiply(D.H, D.element(a, B.unit), D.element(a2, b))
                assert max_abs_diff(lhs, D.element(multiply(A, a, a2), b)) <= tol.abs
                b2 = basis(B, i2)
                lhs = multiply(D.H, D.element(a, b), D.element(A.unit, b2))
                assert max_abs_diff(lhs, D.element(a, multiply(B, b, b2))) <= tol.abs


def test_verify_double_examples(z2_double, s3_double):
    rep = verify_double(z2_double)
    assert rep.overall and rep.max_residual() <= 1e-12
    assert rep.names()[-len(DOUBLE_ENTRIES):] == DOUBLE_ENTRIES
    assert verify_double(s3_double).overall
    assert verify_theta(s3_double).overall


def test_star_on_factors(s3_double):
    D = s3_double
    A, B = D.source.A, D.source.B
    rng = np.random.default_rng(0)
    a = rng.standard_normal(6) + 1j * rng.standard_normal(6)
    b = rng.standard_normal(6) + 1j * rng.standard_normal(6)
    assert max_abs_diff(star(D.H, D.include_A(a)), D.include_A(star(A, a))) <= 1e-12
    assert max_abs_diff(star(D.H, D.include_B(b)), D.include_B(star(B, b))) <= 1e-12


def test_antipode_factorization(s3_double):
    """S_D(a, b) = (1, S_B b)(S_A a, 1)."""
    D = s3_double
    A, B = D.source.A, D.source.B
    for i in range(A.dim):
        for j in range(B.dim):
            a, b = basis(A, i), basis(B, j)
            lhs = D.H.antipode @ D.element(a, b)
            rhs = multiply(D.H, D.include_B(B.antipode @ b), D.include_A(A.antipode @ a))
            assert max_abs_diff(lhs, rhs) <= 1e-12


def test_twisted_pairing_breaks_star_antimultiplicativity():
    G = symmetric(3)
    Pr = canonical_pairing(G)
    P = np.zeros((6, 6))
    P[np.arange(6), [G.inv(g) for g in range(6)]] = 1
    bad = PairingSpec(Pr.A, Pr.B, P)
    with pytest.raises(PairingVerificationError):
        build_double(bad)
    rep = verify_double(build_double(bad, force=True))
    assert not rep["star_antimultiplicative"].passed


def test_build_errors():
    Pr = canonical_pairing(cyclic(3))
    P = np.array(Pr.P)
    P[2] = 0
    with pytest.raises(DegeneratePairingError):
        build_double(PairingSpec(Pr.A, Pr.B, P))
    with pytest.raises(MissingIntegralError):
        build_double(PairingSpec(Pr.A.replace(integral=None), Pr.B, Pr.P))


def test_capacity_error():
    G = cyclic(41)  # (41^2)^3 > 2^26 entries
    with pytest.raises(CapacityError):
        build_double(canonical_pairing(G), force=True)


def test_verify_theta_examples(z2_double):
    rep = verify_theta(z2_double)
    assert rep.overall
    assert gram_min_eigenvalue(z2_double.H) > 0


def test_theta_not_positive_on_basis():
    D = build_double(canonical_pairing(cyclic(2)))  # A = C[Z2]
    A, B = D.source.A, D.source.B
    u, d = basis(A, 1), basis(B, 0)
    x = D.element(u, d)
    assert D.theta @ x == 0
    xx = multiply(D.H, x, star(D.H, x))
    expected = (A.integral @ multiply(A, u, star(A, u))) * (B.integral @ multiply(B, d, star(B, d)))
    assert D.theta @ xx == pytest.approx(expected) and expected.real > 0


def test_oracle_examples():
    Z2 = cyclic(2)
    O = group_double_oracle(Z2)
    # (delta_u, u)(delta_u, u) = (delta_u, e)
    assert O[3, 3, 2] == 1 and np.count_nonzero(O[3, 3]) == 1
    G = symmetric(3)
    O = group_double_oracle(G)
    assert np.count_nonzero(O) == 6**3
    unit = np.zeros(36)
    unit[[g * 6 + G.identity for g in range(6)]] = 1
    prod = np.einsum("i,ijk->jk", unit, O)
    assert np.array_equal(prod, np.eye(36))


@pytest.mark.parametrize("name", ["Z2", "Z3", "Z4", "Z2xZ2", "S3", "Z5"])
def test_oracle_equivalence_both_orientations(groups, name):
    G = groups[name]
    for Pr in (flip(canonical_pairing(G)), canonical_pairing(G)):
        assert compare_with_oracle(build_double(Pr), G) <= 1e-12


def test_oracle_alignment_errors(groups):
    D = build_double(canonical_pairing(groups["Z2"]))
    with pytest.raises(IndexAlignmentError):
        compare_with_oracle(D, groups["Z3"])
    with pytest.raises(IndexAlignmentError):
        compare_with_oracle(D, groups["Z2xZ2"])


def test_mutated_theta_detected(z2_double):
    theta = np.array(z2_double.theta)
    theta[1] += 1e-3
    rep = verify_theta(dataclasses.replace(z2_double, theta=theta))
    assert not rep["theta_is_product"].passed


def test_theta_trace_property(s3_double):
    assert verify_theta(s3_double)["theta_trace"].residual <= 1e-12


def test_antipode_matches_group_double():
    """S(delta_g, h) = (delta_{h^-1 g^-1 h}, h^-1) on the classical double."""
    G = symmetric(3)
    n = G.order
    D = build_double(flip(canonical_pairing(G)))
    S = np.zeros((n * n, n * n))
    for g in range(n):
        for h in range(n):
            hi = G.inv(h)
            S[G.mul(G.mul(hi, G.inv(g)), h) * n + hi, g * n + h] = 1
    assert max_abs_diff(D.H.antipode, S) == 0
