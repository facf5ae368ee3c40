"""Belief revision by interval orders and biorders over finite propositional languages."""
from .errors import (
    BiorevError,
    FormulaSyntaxError,
    InvariantError,
    ProblemFileError,
    SizeGuardError,
    UnknownAtomError,
)
from .logic import AtomTable, canonical_formula, format_formula, mod, models, parse_formula
from .orders import (
    RankedInterpretation,
    Relation,
    SphereRanking,
    interpretation_of,
    opt,
    random_interpretation,
    relation_of,
)
from .revision import BeliefState, revise, revise_models
from .npr import CLStructure, NprState, cl_revise, cl_structure_of, credible_set, npr_revise
from .postulates import OperatorUnderTest, Postulate, SUITES, check, check_suite
from .canonical import classify_black_box, extract_canonical, roundtrip_verify

__version__ = "0.1.0"
