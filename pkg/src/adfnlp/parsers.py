"""
Text formats for formulas, ADFs, logic programs and SETAFs.

Formula syntax: ``c(v)``, ``c(f)``, ``neg(F)``, ``and(F,...)``, ``or(F,...)``
or a bare atom. File formats:

- ADF: ``s(a).`` declares a statement, ``ac(a, F).`` gives its condition
- NLP: ``h :- a, not b.`` or ``h.``
- SETAF: ``arg(a).`` and ``att([a,b],c).``

``%`` starts a comment running to the end of the line. Statement, atom and
argument order is the order of first appearance in the input.
"""

import json
import sys
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import pyparsing as pp

from .exceptions import ParseError
from .logic import (
    ATOM_PATTERN,
    And,
    Atom,
    Falsum,
    Formula,
    Interpretation3,
    Neg,
    Or,
    TruthValue,
    Verum,
)
from .semantics.adf import Adf
from .semantics.nlp import Program, Rule
from .translate import Setaf

pp.ParserElement.enable_packrat()

NEGATION_ASCII = "~"
NEGATION_UNICODE = "¬"


@dataclass(frozen=True)
class _Declaration:
    kind: str
    name: str
    loc: int
    payload: Any = None


@dataclass(frozen=True)
class _Literal:
    atom: str
    positive: bool


@dataclass(frozen=True)
class _ParsedRule:
    rule: Rule
    atoms: Tuple[str, ...]


def _reject_variable(s: str, loc: int, toks: pp.ParseResults) -> None:
    raise pp.ParseFatalException(
        s, loc, f"'{toks[0]}' looks like a variable; only ground programs are supported"
    )


LPAR, RPAR, COMMA, DOT, LBRACK, RBRACK = map(pp.Suppress, "(),.[]")
COMMENT = pp.Suppress(pp.Regex(r"%.*"))
NAME = pp.Regex(ATOM_PATTERN)
VARIABLE = pp.Regex(r"[A-Z_][A-Za-z0-9_]*").set_parse_action(_reject_variable)

# --- formulas ---
FORMULA = pp.Forward()
VERUM = pp.Regex(r"c\s*\(\s*v\s*\)").set_parse_action(lambda: Verum())
FALSUM = pp.Regex(r"c\s*\(\s*f\s*\)").set_parse_action(lambda: Falsum())
NEG = (pp.Suppress(pp.Keyword("neg")) + LPAR + FORMULA + RPAR).set_parse_action(
    lambda t: Neg(t[0])
)
FORMULA_LIST = FORMULA + pp.ZeroOrMore(COMMA + FORMULA)
AND = (pp.Suppress(pp.Keyword("and")) + LPAR + FORMULA_LIST + RPAR).set_parse_action(
    lambda t: And(tuple(t))
)
OR = (pp.Suppress(pp.Keyword("or")) + LPAR + FORMULA_LIST + RPAR).set_parse_action(
    lambda t: Or(tuple(t))
)
ATOM = NAME.copy().set_parse_action(lambda t: Atom(t[0]))
FORMULA <<= VERUM | FALSUM | NEG | AND | OR | ATOM
FORMULA_TEXT = FORMULA + pp.StringEnd()

# --- ADF files ---
STATEMENT_DECL = (
    pp.Suppress(pp.Keyword("s")) + LPAR + NAME + RPAR + DOT
).set_parse_action(lambda s, loc, t: _Declaration("s", t[0], loc))
ACCEPTANCE_DECL = (
    pp.Suppress(pp.Keyword("ac")) + LPAR + NAME + COMMA + FORMULA + RPAR + DOT
).set_parse_action(lambda s, loc, t: _Declaration("ac", t[0], loc, t[1]))
ADF_FILE = pp.ZeroOrMore(STATEMENT_DECL | ACCEPTANCE_DECL) + pp.StringEnd()

# --- NLP files ---
NEGATIVE_LITERAL = (
    pp.Suppress(pp.Keyword("not")) + (VARIABLE | NAME)
).set_parse_action(lambda t: _Literal(t[0], False))
POSITIVE_LITERAL = (VARIABLE | NAME).copy().set_parse_action(
    lambda t: _Literal(t[0], True)
)
BODY_LITERAL = NEGATIVE_LITERAL | POSITIVE_LITERAL
RULE = (
    (VARIABLE | NAME)
    + pp.Optional(
        pp.Suppress(":-") + BODY_LITERAL + pp.ZeroOrMore(COMMA + BODY_LITERAL)
    )
    + DOT
)


def _build_rule(toks: pp.ParseResults) -> _ParsedRule:
    head, body = toks[0], list(toks[1:])
    rule = Rule(
        head,
        tuple(item.atom for item in body if item.positive),
        tuple(item.atom for item in body if not item.positive),
    )
    return _ParsedRule(rule, (head,) + tuple(item.atom for item in body))


RULE.set_parse_action(_build_rule)
NLP_FILE = pp.ZeroOrMore(RULE) + pp.StringEnd()

# --- SETAF files ---
ARGUMENT_DECL = (
    pp.Suppress(pp.Keyword("arg")) + LPAR + NAME + RPAR + DOT
).set_parse_action(lambda s, loc, t: _Declaration("arg", t[0], loc))
ATTACK_DECL = (
    pp.Suppress(pp.Keyword("att"))
    + LPAR
    + LBRACK
    + pp.Group(NAME + pp.ZeroOrMore(COMMA + NAME))
    + RBRACK
    + COMMA
    + NAME
    + RPAR
    + DOT
).set_parse_action(lambda s, loc, t: _Declaration("att", t[1], loc, tuple(t[0])))
SETAF_FILE = pp.ZeroOrMore(ARGUMENT_DECL | ATTACK_DECL) + pp.StringEnd()

for _grammar in (FORMULA_TEXT, ADF_FILE, NLP_FILE, SETAF_FILE):
    _grammar.ignore(COMMENT)


def _run(grammar: pp.ParserElement, text: str) -> pp.ParseResults:
    try:
        return grammar.parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise ParseError(e.msg, e.lineno, e.col) from None


def _error_at(text: str, item: _Declaration, message: str) -> ParseError:
    return ParseError(message, pp.lineno(item.loc, text), pp.col(item.loc, text))


# === PARSERS ===


def parse_formula(text: str) -> Formula:
    """
    Parse a formula in constructor syntax.

    Raises:
        ParseError: On malformed input
    """
    return _run(FORMULA_TEXT, text)[0]


def parse_adf(text: str) -> Adf:
    """
    Parse an ADF file.

    Every declared statement needs exactly one ``ac`` and every atom inside
    an acceptance formula must be declared.

    Raises:
        ParseError: With line and column of the offending item
    """
    statements: Dict[str, _Declaration] = {}
    conditions: Dict[str, _Declaration] = {}
    items: List[_Declaration] = list(_run(ADF_FILE, text))
    for item in items:
        if item.kind == "s":
            if item.name in statements:
                raise _error_at(text, item, f"statement '{item.name}' declared twice")
            statements[item.name] = item
        else:
            if item.name in conditions:
                raise _error_at(
                    text, item, f"second acceptance condition for '{item.name}'"
                )
            conditions[item.name] = item

    for name, item in conditions.items():
        if name not in statements:
            raise _error_at(text, item, f"acceptance condition for undeclared '{name}'")
        for atom in item.payload.atoms():
            if atom not in statements:
                raise _error_at(
                    text, item, f"'{atom}' in the condition of '{name}' is not declared"
                )
    for name, item in statements.items():
        if name not in conditions:
            raise _error_at(text, item, f"statement '{name}' has no condition")

    return Adf(
        tuple(statements), {name: item.payload for name, item in conditions.items()}
    )


def parse_program(text: str) -> Program:
    """
    Parse a ground normal logic program.

    Raises:
        ParseError: On malformed input or variable-like (uppercase) tokens
    """
    parsed: List[_ParsedRule] = list(_run(NLP_FILE, text))
    base = tuple(dict.fromkeys(atom for item in parsed for atom in item.atoms))
    return Program(tuple(item.rule for item in parsed), base)


def parse_setaf(text: str) -> Setaf:
    """
    Parse a SETAF file.

    Raises:
        ParseError: On malformed input or attacks naming undeclared arguments
    """
    arguments: Dict[str, _Declaration] = {}
    attacks = []
    for item in _run(SETAF_FILE, text):
        if item.kind == "arg":
            if item.name in arguments:
                raise _error_at(text, item, f"argument '{item.name}' declared twice")
            arguments[item.name] = item
        else:
            attacks.append(item)
    for item in attacks:
        for name in item.payload + (item.name,):
            if name not in arguments:
                raise _error_at(text, item, f"argument '{name}' is not declared")
    return Setaf(
        tuple(arguments), tuple((item.payload, item.name) for item in attacks)
    )


# === RENDERERS ===


def render_formula(phi: Formula) -> str:
    """Constructor syntax accepted by :func:`parse_formula`."""
    if isinstance(phi, Verum):
        return "c(v)"
    if isinstance(phi, Falsum):
        return "c(f)"
    if isinstance(phi, Atom):
        return phi.name
    if isinstance(phi, Neg):
        return f"neg({render_formula(phi.arg)})"
    if isinstance(phi, And):
        return "and(" + ",".join(render_formula(arg) for arg in phi.args) + ")"
    if isinstance(phi, Or):
        return "or(" + ",".join(render_formula(arg) for arg in phi.args) + ")"
    raise TypeError(f"Cannot render {type(phi).__name__}")


def render_adf(D: Adf) -> str:
    lines = [f"s({s})." for s in D.statements]
    lines += [f"ac({s},{render_formula(D.formula(s))})." for s in D.statements]
    return "\n".join(lines) + "\n"


def render_rule(rule: Rule) -> str:
    body = list(rule.pos) + [f"not {b}" for b in rule.neg]
    if not body:
        return f"{rule.head}."
    return f"{rule.head} :- {', '.join(body)}."


def render_program(P: Program) -> str:
    return "".join(render_rule(rule) + "\n" for rule in P.rules)


def render_setaf(SF: Setaf) -> str:
    lines = [f"arg({a})." for a in SF.arguments]
    lines += [
        f"att([{','.join(attackers)}],{target})." for attackers, target in SF.attacks
    ]
    return "\n".join(lines) + "\n"


def render_interpretation(v: Interpretation3, unicode: bool = False) -> str:
    """``{a, b, ~c}``: true atoms, then false atoms, each in universe order."""
    negation = NEGATION_UNICODE if unicode else NEGATION_ASCII
    parts = list(v.true_atoms) + [f"{negation}{atom}" for atom in v.false_atoms]
    return "{" + ", ".join(parts) + "}"


def parse_interpretation(text: str, universe: Sequence[str]) -> Interpretation3:
    """
    Inverse of :func:`render_interpretation` over a known universe.

    Raises:
        ParseError: If the text is not a brace-delimited literal list
    """
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ParseError(f"expected '{{...}}', got {text!r}")
    inner = body[1:-1].strip()
    literals = [item for item in (part.strip() for part in inner.split(",")) if item]
    return Interpretation3.from_literals(universe, literals)


def interpretation_to_json(v: Interpretation3) -> Dict[str, str]:
    return {atom: value.value for atom, value in v.items()}


def interpretation_from_json(data: Dict[str, str]) -> Interpretation3:
    """Keys give the universe in order; values are ``t``, ``f`` or ``u``."""
    try:
        return Interpretation3(
            tuple(data), tuple(TruthValue(value) for value in data.values())
        )
    except ValueError as e:
        raise ParseError(f"invalid interpretation JSON: {e}") from None


def render_models_json(models: Iterable[Interpretation3], **extra: Any) -> str:
    payload: Dict[str, Any] = dict(extra)
    payload["models"] = [interpretation_to_json(v) for v in models]
    return json.dumps(payload, ensure_ascii=False)


def models_from_json(text: str) -> List[Interpretation3]:
    return [interpretation_from_json(item) for item in json.loads(text)["models"]]


def render_models_text(models: Iterable[Interpretation3], unicode: bool = False) -> str:
    return "".join(render_interpretation(v, unicode) + "\n" for v in models)


def read_source(path: str, stdin: Optional[Any] = None) -> str:
    """Read ``path``, or standard input when ``path`` is ``-``."""
    if path == "-":
        return (stdin or sys.stdin).read()
    with open(path, encoding="utf-8") as handle:
        return handle.read()
