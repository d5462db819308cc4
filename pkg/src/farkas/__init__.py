"""Exact rounding classification of integer vector families.

The package decides, in exact arithmetic, when rational representability
of a target inside an integer coefficient box upgrades to integer
representability: the almost-Farkas-related class (any box, shifted-span
side condition) and the weakly-Farkas-related class (strict boxes, full
integer span).  It ships the matching box decision procedures with dual
certificates, the odd-cycle graph criteria, and definitional brute-force
oracles for every characterization it uses.
"""

from .boxes import (
    Box,
    Certificate,
    Decision,
    Reason,
    certificate_rhs,
    decide_afr,
    decide_wfr,
    integer_solve,
    rational_feasible,
    verify_certificate,
)
from .classify import (
    AfrVerdict,
    SignPattern,
    WfrVerdict,
    afr_implies_wfr_check,
    is_afr,
    is_afr_oracle,
    is_afr_oracle_boxed,
    is_wfr,
    is_wfr_oracle,
)
from .errors import (
    ClassCheckError,
    DimensionMismatch,
    DisconnectedGraphError,
    FarkasError,
    InternalInconsistency,
    KernelRankError,
    LimitExceeded,
    ParseError,
)
from .graphs import (
    Graph,
    GraphVerdict,
    OddCycle,
    cross_validate,
    edge_vectors,
    enumerate_odd_cycles,
    is_almost_farkas_graph,
    is_weakly_farkas_graph,
    proof_fixture,
)
from .kernels import active_backend, compiled_available
from .lattice import (
    VectorFamily,
    lattice_basis,
    lattice_member,
    primitive_kernel,
    shifted_member,
)
from .limits import DEFAULT_LIMITS, Limits
from .relations import Circuit, circuit_stats, enumerate_circuits

__version__ = "0.1.0"

__all__ = [
    "AfrVerdict",
    "Box",
    "Certificate",
    "Circuit",
    "ClassCheckError",
    "DEFAULT_LIMITS",
    "Decision",
    "DimensionMismatch",
    "DisconnectedGraphError",
    "FarkasError",
    "Graph",
    "GraphVerdict",
    "InternalInconsistency",
    "KernelRankError",
    "Limits",
    "LimitExceeded",
    "OddCycle",
    "ParseError",
    "Reason",
    "SignPattern",
    "VectorFamily",
    "WfrVerdict",
    "active_backend",
    "afr_implies_wfr_check",
    "certificate_rhs",
    "circuit_stats",
    "compiled_available",
    "cross_validate",
    "decide_afr",
    "decide_wfr",
    "edge_vectors",
    "enumerate_circuits",
    "enumerate_odd_cycles",
    "integer_solve",
    "is_afr",
    "is_afr_oracle",
    "is_afr_oracle_boxed",
    "is_almost_farkas_graph",
    "is_weakly_farkas_graph",
    "is_wfr",
    "is_wfr_oracle",
    "lattice_basis",
    "lattice_member",
    "primitive_kernel",
    "proof_fixture",
    "rational_feasible",
    "shifted_member",
    "verify_certificate",
]
