"""Hook-shaped tableaux for sl(m,n): semistandard and quasistandard tableaux,
push and pull, super jeu de taquin, and an exact tensor oracle for the
straightening and relation checks."""

from .errors import (
    BudgetExceeded,
    CovarianceViolation,
    InconsistentSystem,
    IndexOutOfRange,
    LengthMismatch,
    NotComparable,
    NotOuterCorner,
    NotQuasistandard,
    PreconditionViolation,
    ShapeMismatch,
    SignatureMismatch,
    TableauError,
)
from .extraction import (
    TrivialPair,
    extractable_pairs,
    is_extractable,
    is_quasistandard,
    largest_extractable_pair,
    pull,
    push,
    quasistandard,
    strip_trivial,
    verify_bijection,
)
from .hookshapes import (
    HookShape,
    Signature,
    dual_shape,
    enumerate_shapes,
    eta,
    is_typical,
    shape_leq,
    shapes_below,
    validate_shape,
    zero_shape,
)
from .superspace import (
    SuperTensor,
    basis_rank,
    eij_action,
    eij_on_tableau,
    garnir_apply,
    hplucker_check,
    plucker_check,
    star_product,
    straighten,
    young_vector,
)
from .tableaux import (
    FormalCombination,
    HookTableau,
    concat,
    enumerate_semistandard,
    is_semistandard,
    trivial_tableau,
)
from .taquin import SkewTableau, maxjdt, outer_corners, sjdt_slide, sjdt_trace

__version__ = "0.1.0"
