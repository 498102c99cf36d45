"""Weighted context-free grammar analysis over commutative semirings.

The package models grammars whose rules carry weights from a commutative
semiring, computes the letter-count (commutative-image) power series they
generate, rewrites nonexpansive grammars into regular grammars with the
same series, and — over the rationals — decides whether the series of a
grammar equals that of some regular grammar, producing either a witness
grammar or a nonlinear annihilating polynomial.
"""

from .analysis import (
    CycleWitness,
    ExpansiveWitness,
    degree,
    dimension_bound,
    is_cycle_free,
    is_nonexpansive,
    nullable_variables,
)
from .decide import (
    DecisionReport,
    LinearForm,
    clear_denominators,
    decide_parikh,
    discriminate_factor,
    eliminate_to_univariate,
    rational_reconstruct,
    render_report,
)
from .errors import (
    DegenerateLeadingTerm,
    DivisionByZeroPolynomial,
    EnumerationBudgetExceeded,
    ExpansiveGrammar,
    GrammarFormatError,
    IterationCapExceeded,
    KTooSmall,
    MissingRules,
    NoUnivariateElement,
    NonConvergent,
    NonRegularSystem,
    NonUnitDenominatorAtOrigin,
    NotCycleFree,
    NotDivisible,
    WcfgError,
    WrongSemiring,
    ZeroDenominator,
)
from .grammar import Grammar, Rule, load_grammar, parse_grammar, render_grammar
from .groebner import (
    MonomialOrder,
    SystemPolynomial,
    groebner_basis,
    monomial_cmp,
    poly_reduce,
    reduce_basis,
    render_system_polynomial,
    system_polynomials,
    univar_build,
    univar_coefficients,
    univar_gcd_squarefree,
)
from .polynomials import Polynomial, RationalFunction, render_polynomial, render_ratfun
from .regularize import (
    AnnotatedVariable,
    RegularState,
    at_most_k_grammar,
    ldf_derivation,
    ldf_sort,
    project_tree,
    regularize,
)
from .semirings import NATURALS, RATIONALS, SEMIRINGS, TROPICAL, Semiring
from .series import (
    AlgebraicSystem,
    TruncatedSeries,
    algebraic_system,
    approximate,
    grammar_series,
    grammar_from_linear,
    regular_system_to_grammar,
    render_series,
    series_expand,
)
from .trees import (
    DerivationSequence,
    ParseTree,
    derivation_from_tree,
    derivation_index,
    enumerate_trees,
    parikh_series_bruteforce,
    replay_derivation,
    tree_dimension,
    tree_weight,
    tree_yield,
    word_weight_map,
)

__all__ = [
    "AlgebraicSystem",
    "AnnotatedVariable",
    "CycleWitness",
    "DecisionReport",
    "DegenerateLeadingTerm",
    "DerivationSequence",
    "DivisionByZeroPolynomial",
    "EnumerationBudgetExceeded",
    "ExpansiveGrammar",
    "ExpansiveWitness",
    "Grammar",
    "GrammarFormatError",
    "IterationCapExceeded",
    "KTooSmall",
    "LinearForm",
    "MissingRules",
    "MonomialOrder",
    "NATURALS",
    "NoUnivariateElement",
    "NonConvergent",
    "NonRegularSystem",
    "NonUnitDenominatorAtOrigin",
    "NotCycleFree",
    "NotDivisible",
    "ParseTree",
    "Polynomial",
    "RATIONALS",
    "RationalFunction",
    "RegularState",
    "Rule",
    "SEMIRINGS",
    "Semiring",
    "SystemPolynomial",
    "TROPICAL",
    "TruncatedSeries",
    "WcfgError",
    "WrongSemiring",
    "ZeroDenominator",
    "algebraic_system",
    "approximate",
    "at_most_k_grammar",
    "clear_denominators",
    "decide_parikh",
    "degree",
    "derivation_from_tree",
    "derivation_index",
    "dimension_bound",
    "discriminate_factor",
    "eliminate_to_univariate",
    "enumerate_trees",
    "grammar_from_linear",
    "grammar_series",
    "groebner_basis",
    "is_cycle_free",
    "is_nonexpansive",
    "ldf_derivation",
    "ldf_sort",
    "load_grammar",
    "monomial_cmp",
    "nullable_variables",
    "parikh_series_bruteforce",
    "parse_grammar",
    "poly_reduce",
    "project_tree",
    "rational_reconstruct",
    "reduce_basis",
    "regular_system_to_grammar",
    "regularize",
    "render_grammar",
    "render_polynomial",
    "render_ratfun",
    "render_report",
    "render_series",
    "render_system_polynomial",
    "replay_derivation",
    "series_expand",
    "system_polynomials",
    "tree_dimension",
    "tree_weight",
    "tree_yield",
    "univar_build",
    "univar_coefficients",
    "univar_gcd_squarefree",
    "word_weight_map",
]
