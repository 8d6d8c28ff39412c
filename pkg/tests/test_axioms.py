import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfdouble.axioms import gram_matrix, gram_min_eigenvalue, verify_cstar, verify_hopf_star
from hopfdouble.exceptions import MissingIntegralError
from hopfdouble.groups import corpus, cyclic
from hopfdouble.hopf import dualize, function_algebra, group_algebra
from hopfdouble.tensor import default_tolerance

HOPF_ENTRIES = [
    "unit",
    "associativity",
    "coassociativity",
    "counit",
    "antipode",
    "star_involution",
    "comult_multiplicative",
    "comult_star",
    "counit_star_homomorphism",
    "antipode_star",
    "antipode_antimultiplicative",
]
CSTAR_ENTRIES = [
    "antipode_square",
    "integral_invariance",
    "integral_antipode",
    "gram_hermitian",
    "gram_positive",
    "integral_normalized",
]


def test_entry_names():
    H = group_algebra(cyclic(2))
    assert verify_hopf_star(H).names() == HOPF_ENTRIES
    assert verify_cstar(H).names() == CSTAR_ENTRIES


def test_corpus_exact_zero(groups):
    for G in groups.values():
        for H in (group_algebra(G), function_algebra(G)):
            rep = verify_hopf_star(H)
            assert rep.overall and rep.max_residual() == 0.0, (G.label, rep.failing())
            assert verify_cstar(H).overall


def test_dual_specs_pass(groups):
    for G in groups.values():
        H = dualize(group_algebra(G))
        assert verify_hopf_star(H).overall and verify_cstar(H).overall


def test_zero_antipode_z2():
    H = group_algebra(cyclic(2))
    rep = verify_hopf_star(H.replace(antipode=np.zeros((2, 2))))
    assert not rep["antipode"].passed and rep["antipode"].residual >= 1
    assert not rep["antipode_star"].passed and rep["antipode_star"].residual >= 1


def test_gram_examples():
    H = group_algebra(cyclic(3))
    assert np.array_equal(gram_matrix(H), np.eye(3))
    assert gram_min_eigenvalue(H) == pytest.approx(1.0)
    F = function_algebra(cyclic(2))
    assert np.allclose(gram_matrix(F), np.diag([0.5, 0.5]))
    assert gram_min_eigenvalue(F) == pytest.approx(0.5)


def test_identity_star_breaks_positivity():
    H = group_algebra(cyclic(3)).replace(star=np.eye(3))
    rep = verify_cstar(H)
    assert not rep["gram_positive"].passed
    assert gram_min_eigenvalue(H) < 0


def test_missing_integral():
    H = group_algebra(cyclic(3))
    rng = np.random.default_rng(0)
    bad = H.replace(comult=np.array(H.comult) + 0.1 * rng.standard_normal(H.comult.shape), integral=None)
    with pytest.raises(MissingIntegralError):
        verify_cstar(bad)


def test_solved_integral_used_when_absent(groups):
    H = group_algebra(groups["S3"]).replace(integral=None)
    assert verify_cstar(H).overall


_SPECS = [group_algebra(G) for G in corpus().values() if G.order <= 6] + [
    function_algebra(G) for G in corpus().values() if G.order <= 6
]
_FIELDS = ["mult", "unit", "comult", "counit", "antipode", "star", "integral"]


@settings(max_examples=150, deadline=None)
@given(
    spec=st.sampled_from(_SPECS),
    field=st.sampled_from(_FIELDS),
    pos=st.integers(0, 10**6),
    scale=st.floats(100, 1e6),
    phase=st.sampled_from([1, -1, 1j, -1j]),
)
def test_single_perturbation_detected(spec, field, pos, scale, phase):
    tol = default_tolerance(spec)
    arr = np.array(getattr(spec, field))
    idx = np.unravel_index(pos % arr.size, arr.shape)
    arr[idx] += phase * scale * tol.abs
    mutated = spec.replace(**{field: arr})
    hopf, cstar = verify_hopf_star(mutated, tol), verify_cstar(mutated, tol)
    assert not (hopf.overall and cstar.overall), (spec.label, field, idx)
