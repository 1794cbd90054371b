"""Exact-arithmetic strong-linkage combinatorics for split root systems.

Core objects: root systems in fundamental-weight coordinates, weights and
locally analytic characters spread over an embedding set, standard
parabolic subsets, and the linkage search producing Verma factor sets,
parabolic candidate sets and non-criticality obstruction lists.

The hot search loops run in a compiled extension when available; a pure
Python twin with identical semantics is selected automatically otherwise
(see linkage_kit.kernel_implementation).
"""

from ._kernel import IMPLEMENTATION as kernel_implementation
from .errors import (
    ContextMismatch,
    GroupTooLarge,
    IndexOutOfRange,
    InvalidCartan,
    LinkageKitError,
    NotIntegral,
    NotParabolicDominant,
    OrbitGuardExceeded,
    RankMismatch,
)
from .linkage import (
    DEFAULT_ORBIT_GUARD,
    LinkageChain,
    LinkageResult,
    noncritical_obstruction_set,
    strongly_linked_set,
    up_link_candidates,
    verma_factor_candidates,
    verma_factors_borel,
)
from .oracle import OracleConfig, dot_orbit, linkage_by_chains, stabilized_chain_set
from .parabolic import ParabolicSubset, central_class_key, equal_on_center, in_lambda_p_plus
from .rootsys import (
    CartanSpec,
    RootSystem,
    WeylElement,
    build_root_system,
    positive_root_count,
    weyl_apply,
    weyl_generate,
)
from .weights_chars import (
    CONVENTIONS,
    EmbeddingContext,
    GlobalRoot,
    LocAnChar,
    WeightL,
    dot_action,
    dot_reflect,
    dot_reflect_char,
    global_pairing,
    is_alpha_dominant,
    is_alpha_integral,
)

__version__ = "0.1.0"

__all__ = [
    "CONVENTIONS",
    "CartanSpec",
    "ContextMismatch",
    "DEFAULT_ORBIT_GUARD",
    "EmbeddingContext",
    "GlobalRoot",
    "GroupTooLarge",
    "IndexOutOfRange",
    "InvalidCartan",
    "LinkageChain",
    "LinkageKitError",
    "LinkageResult",
    "LocAnChar",
    "NotIntegral",
    "NotParabolicDominant",
    "OracleConfig",
    "OrbitGuardExceeded",
    "ParabolicSubset",
    "RankMismatch",
    "RootSystem",
    "WeightL",
    "WeylElement",
    "build_root_system",
    "central_class_key",
    "dot_action",
    "dot_orbit",
    "dot_reflect",
    "dot_reflect_char",
    "equal_on_center",
    "global_pairing",
    "in_lambda_p_plus",
    "is_alpha_dominant",
    "is_alpha_integral",
    "kernel_implementation",
    "linkage_by_chains",
    "noncritical_obstruction_set",
    "positive_root_count",
    "stabilized_chain_set",
    "strongly_linked_set",
    "up_link_candidates",
    "verma_factor_candidates",
    "verma_factors_borel",
    "weyl_apply",
    "weyl_generate",
]
