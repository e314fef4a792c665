"""Cube/DNF toolkit around proposition families that are jointly exclusive
without any smaller exclusion.

For any n >= 2 the package builds n non-zero propositions over variables
A_1..A_n whose n-way conjunction is identically false although every
conjunction of fewer of them is satisfiable.  It verifies that structure
both by exhaustive truth-table enumeration and by a symbolic argument over
the propositions' e-terms, reproduces the associated coin-toss experiment,
and exposes everything through a small formula language and a CLI.
"""

from .boolcore import (
    BOTTOM,
    DEFAULT_MAX_VARS,
    TOP,
    ZERO,
    Assignment,
    CapacityError,
    Cube,
    Dnf,
    Literal,
    TruthTable,
    VarId,
    count_sat,
    cube_and,
    dnf_and,
    equivalent,
    evaluate,
    is_zero,
    truth_table,
    witness,
)
from .cointoss import (
    CoinEvent,
    ProbReport,
    SimReport,
    coin_events,
    exact_probs,
    simulate,
)
from .construction import (
    ETermSet,
    ExclusionSet,
    Family,
    eterm,
    eterms,
    exclusion_set,
    family,
    proposition,
)
from .parser import FormulaFile, ParseError, ParseResult, parse, read_formulas, render
from .verify import (
    ComponentCheck,
    ExclusionReport,
    LeaveOneOutDetail,
    ObservationFailure,
    ObservationReport,
    SubsetResult,
    Tableau,
    TheoremReport,
    VerificationError,
    check_observations,
    k_way_report,
    leave_one_out,
    tableau,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "BOTTOM",
    "CapacityError",
    "CoinEvent",
    "ComponentCheck",
    "Cube",
    "DEFAULT_MAX_VARS",
    "Dnf",
    "ETermSet",
    "ExclusionReport",
    "ExclusionSet",
    "Family",
    "FormulaFile",
    "LeaveOneOutDetail",
    "Literal",
    "ObservationFailure",
    "ObservationReport",
    "ParseError",
    "ParseResult",
    "ProbReport",
    "SimReport",
    "SubsetResult",
    "TOP",
    "Tableau",
    "TheoremReport",
    "TruthTable",
    "VarId",
    "VerificationError",
    "ZERO",
    "check_observations",
    "coin_events",
    "count_sat",
    "cube_and",
    "dnf_and",
    "equivalent",
    "eterm",
    "eterms",
    "evaluate",
    "exact_probs",
    "exclusion_set",
    "family",
    "is_zero",
    "k_way_report",
    "leave_one_out",
    "parse",
    "proposition",
    "read_formulas",
    "render",
    "simulate",
    "tableau",
    "truth_table",
    "verify_theorem",
    "witness",
]
