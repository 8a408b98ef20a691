"""Exact invariants, degeneration order and singularity types for quiver
representations, specialized to nilpotent classes of cyclic quivers."""

from .errors import (
    BadArity,
    BadResidue,
    BadWindow,
    Error,
    Inconsistent,
    LengthMismatch,
    NoEmbedding,
    NotADegeneration,
    NotAMorphism,
    NotCyclic,
    NotInjective,
    NotInvariant,
    NotNilpotent,
    OutOfScope,
    ParseError,
    QuiverMismatch,
    RankMismatch,
    ShapeMismatch,
    SocleNotEmbeddable,
    TopNotLiftable,
)
from .linalg import RatMatrix, Rational, format_rational, parse_rational, quotient_matrices
from .reps import (
    Arrow,
    HomElement,
    Quiver,
    Representation,
    cokernel_rep,
    direct_sum,
    dual,
    ext1_dim,
    euler_form,
    generic_quotient,
    hom_basis,
    hom_dim,
    orbit_dim,
)
from .windows import (
    SimpleMultiset,
    Window,
    WindowMultiset,
    canonicalize,
    cyclic_quiver,
    decompose_nilpotent,
    is_cyclic_quiver,
    is_nilpotent,
    multiset_hom_dim,
    realize,
    reconstruct_from_socle_quotient,
    window_hom_dim,
)
from .degeneration import (
    HasseDiagram,
    HasseEdge,
    TestSet,
    codim,
    cover_witness,
    degenerates,
    enumerate_nilpotent,
    hasse,
    hom_profile,
    to_dot,
    to_json_obj,
)
from .singularity import (
    ReductionStep,
    ReductionTrace,
    SingularityType,
    cancel_common,
    classify,
    model_variety_membership,
    socle_reduce,
    terminal_classify,
    top_reduce,
)

__version__ = "0.1.0"
