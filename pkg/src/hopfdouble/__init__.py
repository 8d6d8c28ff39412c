"""Structure-constant workbench for finite Hopf C*-algebras and their quantum doubles."""

from .axioms import verify_cstar, verify_hopf_star
from .double import (
    DoubleSpec,
    build_double,
    compare_with_oracle,
    group_double_oracle,
    verify_double,
    verify_theta,
)
from .gns import (
    GNSData,
    element_operator_norm,
    gns_build,
    hilbert_norms,
    vector_norm,
    verify_cstar_identity,
    verify_isometry,
)
from .groups import GroupTable, cyclic, dihedral, direct_product, klein_four, quaternion, symmetric
from .hopf import (
    HopfSpec,
    dualize,
    find_invariant_integral,
    function_algebra,
    group_algebra,
    iterated_coproduct,
    multiply,
    star,
)
from .pairing import (
    PairingSpec,
    act,
    canonical_pairing,
    dual_pairing,
    flip,
    nondegeneracy,
    verify_actions,
    verify_galois,
    verify_pairing,
)
from .report import AxiomReport, CheckResult
from .tensor import Tolerance, default_tolerance

__version__ = "0.1.0"
