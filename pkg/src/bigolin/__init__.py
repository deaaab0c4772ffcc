"""Window (Bigolin) cohomology of double complexes of invariant forms.

Typical use::

    from bigolin import iwasawa, bigolin
    c = iwasawa.preset_complex("i")
    bigolin(c, 1, 1, 1)   # 6
"""

from . import iwasawa, zigzag
from .cohomology import (
    AuditReport,
    CohomologyProfile,
    CompositeNotZeroError,
    EulerData,
    aeppli,
    betti,
    bigolin,
    bott_chern,
    dolbeault,
    enumerate_invariants,
    euler_data,
    h1_B,
    h_top_B,
    induced_map_rank,
    invariant_count,
    partial_cohom,
    profile,
    quotient_dim,
    relation_audit,
)
from .double_complex import AxiomReport, DoubleComplex, Violation, direct_sum, zero_complex
from .field import GaussianRational, gq
from .forms import (
    AxiomError,
    LieAlgebraSpec,
    ParseError,
    SpecError,
    build_complex,
    parse_structure_equations,
    spec_from_terms,
    torus,
)
from .linalg import LabeledMatrix
from .windows import BigolinWindow, build_window, window_blocks, window_space_identity_check

__version__ = "0.1.0"
