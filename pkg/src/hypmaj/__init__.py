"""Exact computation with real-rooted polynomials and the majorization order."""

__version__ = "0.1.0"

from .errors import (
    ContractViolation,
    HypmajError,
    InvalidArgument,
    InvalidMove,
    PreconditionViolation,
    WrongBranch,
)
from .exact_poly import (
    IsolatingInterval,
    Poly,
    SignPattern,
    is_hyperbolic,
    is_sign_constant,
    isolate_roots,
    squarefree_decomposition,
    sturm_count,
    sturm_sequence,
)
from .hyperbolic_order import (
    MajorizationVerdict,
    Relation,
    RootVector,
    center_polynomial,
    interlaces,
    majorizes,
    root_vector,
    vec_majorizes,
)
from .pinch_chain import PinchChain, PinchMove, apply_move, decompose, is_pinch, random_pinch_pair
from .operator_lab import (
    Budget,
    Certificate,
    ClassificationReport,
    LinOp,
    Verdict,
    apply,
    classify,
    falsify_preservation,
    falsify_stability,
    symbol,
    verify_certificate,
)
from .eigen_path import (
    PathReport,
    PathSample,
    check_convex_even,
    check_majorization_monotone,
    path_samples,
    run_path_checks,
    uniform_grid,
)

import types as _types

__all__ = sorted(n for n, v in globals().items() if not n.startswith("_") and not isinstance(v, _types.ModuleType))
