"""
adfnlp - Abstract Dialectical Frameworks and Normal Logic Programs

Computes the three-valued semantics of ADFs, of their attacking fragment
ADF+, and of normal logic programs, and translates between them so that the
correspondences can be checked mechanically on small inputs.

Example:
    from adfnlp import parse_program, xi, lp_semantics, complete_models

    program = parse_program('''
        b :- c, not a.
        a :- not b.
        c :- d.
        p :- c, d, not p.
        p :- not a.
        d.
    ''')

    # Partial stable models of the program
    models = lp_semantics(program, "psm")

    # ...are the complete models of its support-based ADF+
    framework = xi(program)
    assert complete_models(framework.adf) == models
"""

__version__ = "0.1.0"

from .config import (
    Settings,
    create_settings,
    get_env_config,
    load_settings_from_env,
    validate_env_config,
)
from .exceptions import (
    AdfnlpError,
    CapacityError,
    NotAdfPlusError,
    ParseError,
    UnknownAtomError,
    UnknownCheckError,
)
from .logic import Interpretation3, TruthValue, eval_kleene
from .parsers import (
    parse_adf,
    parse_formula,
    parse_program,
    parse_setaf,
    render_adf,
    render_interpretation,
    render_program,
)
from .semantics import (
    Adf,
    AdfPlus,
    Program,
    check_adfplus,
    complete_models,
    grounded_model,
    lp_semantics,
    part1_semantics,
    preferred_models,
    stable_models,
)
from .translate import Setaf, p_of_xi, setaf_to_adf, xi, xi2
from .verify import GenConfig, run_check

__all__ = [
    "Settings",
    "create_settings",
    "get_env_config",
    "load_settings_from_env",
    "validate_env_config",
    "AdfnlpError",
    "CapacityError",
    "NotAdfPlusError",
    "ParseError",
    "UnknownAtomError",
    "UnknownCheckError",
    "Interpretation3",
    "TruthValue",
    "eval_kleene",
    "parse_adf",
    "parse_formula",
    "parse_program",
    "parse_setaf",
    "render_adf",
    "render_interpretation",
    "render_program",
    "Adf",
    "AdfPlus",
    "Program",
    "check_adfplus",
    "complete_models",
    "grounded_model",
    "lp_semantics",
    "part1_semantics",
    "preferred_models",
    "stable_models",
    "Setaf",
    "p_of_xi",
    "setaf_to_adf",
    "xi",
    "xi2",
    "GenConfig",
    "run_check",
]
