"""
Semantics of ADFs, attacking ADFs and normal logic programs.
"""

from .adf import (
    Adf,
    CSetFamily,
    LinkClass,
    Part1Semantics,
    classify_link,
    classify_links,
    complete_models,
    cset_to_formula,
    formula_to_cset,
    gamma,
    gamma_kleene,
    grounded_model,
    is_model_adf,
    part1_reduct,
    part1_semantics,
    preferred_models,
    reduct_brewka,
    stable_models,
)
from .adfplus import (
    AdfPlus,
    AdfPlusViolation,
    check_adfplus,
    cmax,
    ensure_adfplus,
    gamma_plus,
    l_stable_models,
    prune_redundant,
    redundant_links_by_count,
    simplified_formula,
    stable_models_plus,
)
from .nlp import (
    UNDEFINED_ATOM,
    LpSemantics,
    Program,
    Rule,
    is_model_lp,
    lp_semantics,
    omega,
    partial_stable_models,
    psi,
    reduct_lp,
    well_founded_model,
)

__all__ = [
    "Adf",
    "CSetFamily",
    "LinkClass",
    "Part1Semantics",
    "classify_link",
    "classify_links",
    "complete_models",
    "cset_to_formula",
    "formula_to_cset",
    "gamma",
    "gamma_kleene",
    "grounded_model",
    "is_model_adf",
    "part1_reduct",
    "part1_semantics",
    "preferred_models",
    "reduct_brewka",
    "stable_models",
    "AdfPlus",
    "AdfPlusViolation",
    "check_adfplus",
    "cmax",
    "ensure_adfplus",
    "gamma_plus",
    "l_stable_models",
    "prune_redundant",
    "redundant_links_by_count",
    "simplified_formula",
    "stable_models_plus",
    "UNDEFINED_ATOM",
    "LpSemantics",
    "Program",
    "Rule",
    "is_model_lp",
    "lp_semantics",
    "omega",
    "partial_stable_models",
    "psi",
    "reduct_lp",
    "well_founded_model",
]
