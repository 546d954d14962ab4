"""
Translations between logic programs, ADFs and SETAFs.

- ``xi``: the support-based translation of a program into an ADF⁺
- ``xi2``: the naive rule-body translation
- ``p_of_xi``: one rule per accepted parent subset, ADF back to program
- ``setaf_to_adf``: collective attacks as an ADF⁺
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .config import DEFAULT_MAX_SUBSTATEMENTS
from .exceptions import CapacityError, UnknownAtomError
from .logic import (
    Atom,
    Falsum,
    Formula,
    Neg,
    conjunction,
    disjunction,
    encode_subset,
    literal,
)
from .semantics.adf import Adf, acceptance_family
from .semantics.adfplus import AdfPlus, ensure_adfplus
from .semantics.nlp import Program, Rule

logger = logging.getLogger(__name__)

# A support B ∈ Sup_P(a) is stored as the atoms b with ¬b ∈ B.
Support = FrozenSet[str]


@dataclass(frozen=True, eq=False)
class Substatement:
    """
    A loop-free derivation of ``conc``.

    Attributes:
        conc: Conc_P(r), the derived atom
        rule: The rule applied last
        children: One substatement per positive body atom of ``rule``
        rules: Rules_P(r), every rule used anywhere in the derivation
        sup: Sup_P(r), the atoms b whose default literal ¬b was collected
    """

    conc: str
    rule: Rule
    children: Tuple["Substatement", ...]
    rules: FrozenSet[Rule]
    sup: Support
    key: Tuple[object, ...] = field(repr=False)

    @classmethod
    def build(
        cls, rule: Rule, children: Sequence["Substatement"] = ()
    ) -> "Substatement":
        children = tuple(children)
        rules = frozenset([rule]).union(*(child.rules for child in children))
        sup = frozenset(rule.neg).union(*(child.sup for child in children))
        key = (rule,) + tuple(id(child) for child in children)
        return cls(rule.head, rule, children, rules, sup, key)

    def literals(self) -> FrozenSet[str]:
        """Sup_P(r) written as ``~b`` literals."""
        return frozenset(f"~{b}" for b in self.sup)


def substatements(P: Program, bound: Optional[int] = None) -> List[Substatement]:
    """
    Saturate the substatements of ``P``.

    Rules without positive body start the derivations; a rule with positive
    body atoms a_1..a_m combines one substatement per a_i, provided the rule
    itself is not among the rules of any of them. Each round only combines
    tuples containing at least one substatement found in the previous round.

    Args:
        P: The program
        bound: Maximum number of substatements (default 10000)

    Returns:
        Substatements in discovery order

    Raises:
        CapacityError: If saturation produces more than ``bound`` substatements
    """
    limit = DEFAULT_MAX_SUBSTATEMENTS if bound is None else bound
    rules = list(dict.fromkeys(P.rules))
    found: List[Substatement] = []
    seen: Set[Tuple[object, ...]] = set()

    def admit(sub: Substatement, pool: Dict[str, List[Substatement]]) -> None:
        if sub.key in seen:
            return
        if len(found) >= limit:
            raise CapacityError(
                f"Substatement saturation exploded while deriving '{sub.conc}'",
                required=len(found) + 1,
                bound=limit,
            )
        seen.add(sub.key)
        found.append(sub)
        pool.setdefault(sub.conc, []).append(sub)

    old: Dict[str, List[Substatement]] = {}
    delta: Dict[str, List[Substatement]] = {}
    for rule in rules:
        if not rule.pos:
            admit(Substatement.build(rule), delta)

    rounds = 0
    while delta:
        rounds += 1
        fresh: Dict[str, List[Substatement]] = {}
        for rule in rules:
            if not rule.pos:
                continue
            for position, atom in enumerate(rule.pos):
                if atom not in delta:
                    continue
                pools = (
                    [old.get(a, []) for a in rule.pos[:position]]
                    + [delta[atom]]
                    + [
                        old.get(a, []) + delta.get(a, [])
                        for a in rule.pos[position + 1 :]
                    ]
                )
                for children in itertools.product(*pools):
                    if any(rule in child.rules for child in children):
                        continue
                    admit(Substatement.build(rule, children), fresh)
        for atom, subs in delta.items():
            old.setdefault(atom, []).extend(subs)
        delta = fresh

    logger.debug("Saturated %d substatements in %d rounds", len(found), rounds)
    return found


def compute_supports(
    P: Program, bound: Optional[int] = None
) -> Dict[str, FrozenSet[Support]]:
    """Sup_P(a) for every atom of HB_P; atoms without derivations get {}."""
    supports: Dict[str, Set[Support]] = {atom: set() for atom in P.herbrand_base}
    for sub in substatements(P, bound):
        supports[sub.conc].add(sub.sup)
    return {atom: frozenset(family) for atom, family in supports.items()}


def support(P: Program, a: str, bound: Optional[int] = None) -> FrozenSet[Support]:
    """
    Sup_P(a), duplicates collapsed.

    Raises:
        UnknownAtomError: If ``a`` is not in HB_P
    """
    if a not in P.herbrand_base:
        raise UnknownAtomError(a, "Herbrand base")
    return compute_supports(P, bound)[a]


def minimal_sets(family: Iterable[Support]) -> FrozenSet[Support]:
    """The ⊆-minimal members of ``family``."""
    members = set(family)
    return frozenset(b for b in members if not any(other < b for other in members))


def _ordered(family: Iterable[Support], universe: Sequence[str]) -> List[Support]:
    return sorted(family, key=lambda b: (len(b), encode_subset(universe, b)))


def support_formula(family: Iterable[Support], universe: Sequence[str]) -> Formula:
    """⋁_{B} ⋀_{¬b ∈ B} ¬b, Falsum for the empty family."""
    return disjunction(
        conjunction(Neg(Atom(b)) for b in universe if b in members)
        for members in _ordered(family, universe)
    )


def xi(
    P: Program,
    bound: Optional[int] = None,
    minimize: bool = True,
    max_parents: Optional[int] = None,
) -> AdfPlus:
    """
    The support-based ADF⁺ of a program.

    Args:
        P: The program
        bound: Substatement saturation bound
        minimize: Keep only ⊆-minimal supports, which preserves the
            acceptance condition up to classical equivalence
        max_parents: Widest par(s) whose C^t_s is materialized

    Returns:
        Ξ(P) over HB_P
    """
    supports = compute_supports(P, bound)
    acceptance = {}
    for atom in P.herbrand_base:
        family = minimal_sets(supports[atom]) if minimize else supports[atom]
        acceptance[atom] = support_formula(family, P.herbrand_base)
    return ensure_adfplus(Adf(P.herbrand_base, acceptance), max_parents)


def rule_body_formula(rule: Rule) -> Formula:
    """a_1 ∧ ⋯ ∧ a_m ∧ ¬b_1 ∧ ⋯ ∧ ¬b_n; Verum for a fact."""
    return conjunction(
        [literal(a, True) for a in rule.pos] + [literal(b, False) for b in rule.neg]
    )


def xi2(P: Program) -> Adf:
    """Naive translation: φ_a is the disjunction of the bodies of a's rules."""
    acceptance = {
        atom: disjunction(
            rule_body_formula(rule) for rule in dict.fromkeys(P.rules_for(atom))
        )
        for atom in P.herbrand_base
    }
    return Adf(P.herbrand_base, acceptance)


def p_of_xi(D: Adf, max_parents: Optional[int] = None) -> Program:
    """
    One rule ``s ← R, not (par(s) − R)`` per R ∈ C^t_s.

    Rules are sorted by head (statement order) and then by the bitmask of R.

    Raises:
        CapacityError: If some par(s) is too wide to materialize C^t_s
    """
    rules = []
    for s in D.statements:
        fam = acceptance_family(D, s, max_parents)
        for accepted in fam.ordered():
            rules.append(
                Rule(
                    s,
                    tuple(p for p in fam.parents if p in accepted),
                    tuple(p for p in fam.parents if p not in accepted),
                )
            )
    occurring = {atom for rule in rules for atom in rule.atoms()}
    return Program(
        tuple(rules), tuple(s for s in D.statements if s in occurring)
    )


def round_trip_adf(D: Adf, max_parents: Optional[int] = None) -> Adf:
    """
    Ξ(P(D)), re-expressed over the statements of ``D``.

    Statements that vanished from P(D) because they occur in no rule are
    put back with acceptance Falsum.
    """
    translated = xi(p_of_xi(D, max_parents), max_parents=max_parents).adf
    return Adf(
        D.statements,
        {
            s: translated.formula(s) if s in translated.statements else Falsum()
            for s in D.statements
        },
    )


def round_trip_program(P: Program, max_parents: Optional[int] = None) -> Program:
    """P(Ξ(P))."""
    return p_of_xi(xi(P, max_parents=max_parents).adf, max_parents)


# === SETAF ===


Attack = Tuple[Tuple[str, ...], str]


@dataclass(frozen=True)
class Setaf:
    """
    Arguments with collective attacks (X, a), X a nonempty set of arguments.

    Attributes:
        arguments: Argument names in canonical order
        attacks: Attacks in input order, attackers listed in argument order
    """

    arguments: Tuple[str, ...]
    attacks: Tuple[Attack, ...] = ()

    def __post_init__(self) -> None:
        arguments = tuple(self.arguments)
        if len(set(arguments)) != len(arguments):
            raise ValueError("Duplicate argument names")
        order = {a: position for position, a in enumerate(arguments)}
        attacks = []
        for attackers, target in self.attacks:
            members = set(attackers)
            if not members:
                raise ValueError(f"Attack on '{target}' has no attackers")
            for argument in list(members) + [target]:
                if argument not in order:
                    raise UnknownAtomError(argument, "argument set")
            attacks.append((tuple(sorted(members, key=order.__getitem__)), target))
        object.__setattr__(self, "arguments", arguments)
        object.__setattr__(self, "attacks", tuple(dict.fromkeys(attacks)))

    def attackers_of(self, a: str) -> List[Tuple[str, ...]]:
        return [attackers for attackers, target in self.attacks if target == a]


def setaf_to_adf(SF: Setaf, max_parents: Optional[int] = None) -> AdfPlus:
    """
    DF^SF: φ_a = ⋀_{(X,a)} ⋁_{x ∈ X} ¬x, Verum for unattacked arguments.

    C_a(B) = f exactly when some attacking set X is contained in B.
    """
    acceptance = {
        a: conjunction(
            disjunction(Neg(Atom(x)) for x in attackers)
            for attackers in SF.attackers_of(a)
        )
        for a in SF.arguments
    }
    return ensure_adfplus(Adf(SF.arguments, acceptance), max_parents)
