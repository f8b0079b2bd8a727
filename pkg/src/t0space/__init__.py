"""t0space: exact workbench for finite T0 spaces and their power-space,
Rudin, and reflection constructions, with certified infinite counterexamples."""

__version__ = "0.1.0"

from .core import (  # noqa: F401
    FinitePoset,
    FiniteSpace,
    SetFamily,
    closure,
    directed_subsets,
    generate_topology,
    interior,
    irreducible_sets,
    is_directed,
    is_irreducible,
    is_omega_compact,
    is_omega_noetherian,
    poset_topology,
    saturation,
    sober_check,
    specialization_order,
)
from .maps import ContinuousMap, find_homeomorphism, is_homeomorphic  # noqa: F401
from .power import (  # noqa: F401
    IndexedSpace,
    check_intersection_closure,
    check_sup_is_intersection,
    compact_saturated,
    hoare_space,
    product_space,
    product_checks,
    smyth_space,
    union_map_check,
)
from .classify import PropertyReport, classify, omega_d_equivalences, smyth_transfer  # noqa: F401
from .rudin import (  # noqa: F401
    M_family,
    RudinProblem,
    RudinSolution,
    m_family,
    rd_omega,
    rudin_search,
    wd_omega,
)
from .reflect import (  # noqa: F401
    Reflection,
    extend_map,
    functor_map,
    preservation_checks,
    product_reflection_check,
    reflect_omega,
    retract_check,
    sobrify,
)
from .ordinals import OMEGA1, Ordinal, ord_cofinality, ord_compare, ord_is_limit, ord_succ  # noqa: F401
from .streams import CountableDirectedStream, extract_chain  # noqa: F401
