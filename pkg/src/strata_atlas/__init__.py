"""Combinatorics of EKOR, KR and Newton strata for Siegel modular varieties."""

from .admissible import (
    AdmissibleSet,
    StratumRecord,
    admissible_set,
    admissible_set_by_ball,
    decorate,
    ekor_set,
    ekor_set_from_double_cosets,
    ekor_to_kr,
    kr_fiber,
    kr_records,
    kr_set,
    ordinary_section,
    superspecial_section,
)
from .affweyl import Elt, GroupCtx, Word, tau_element
from .errors import (
    CapExceededError,
    ConsistencyError,
    ContextMismatchError,
    DomainError,
    InvalidRepresentativeError,
    LatticeError,
    MembershipError,
    StrataError,
)
from .newton import (
    BClass,
    NewtonPoint,
    b_leq,
    b_set,
    fully_hn_decomposable,
    is_sigma_straight,
    leaf_dimension,
    newton_point,
)
from .orders import (
    Poset,
    bruhat_poset,
    ekor_poset,
    ksigma_leq,
    maximal_elements,
    minimal_elements,
    to_dot,
    to_json,
    zip_order,
)
from .parabolic import (
    Parahoric,
    jw_min_reps,
    length_lemma_check,
    max_section_rep,
    min_double_rep,
    min_in_left_coset,
    min_in_right_coset,
    type_Jw,
)
from .siegel import (
    NAMED_LEVELS_G2,
    SiegelLevel,
    SiegelModel,
    component_count,
    gsp_context,
    level_to_parahoric,
)
from .zipdata import ZipDatum, eo_poset_in_fiber, ordinary_and_superspecial, zip_datum

__version__ = "0.1.0"
