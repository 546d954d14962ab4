"""
Propositional normal logic programs and their three-valued semantics.

A program is a list of rules ``a ← a_1, …, a_m, not b_1, …, not b_n``.
Partial stable models are the fixpoints of Ω_P, where Ω_P(I) is the least
fixpoint of the immediate-consequence operator Ψ of the reduct P/I.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..exceptions import UniverseMismatchError, UnknownAtomError
from ..logic import (
    F,
    T,
    U,
    Interpretation3,
    TruthValue,
    check_enumeration_bound,
    enumerate_interpretations,
    info_least,
    info_maximal,
    minimal_unknown,
    sort_models,
    truth_min,
    two_valued_only,
)

logger = logging.getLogger(__name__)

# u̇: evaluates to u under every interpretation and never belongs to HB_P.
UNDEFINED_ATOM = "@u"


def _unique(atoms: Iterable[str]) -> Tuple[str, ...]:
    return tuple(dict.fromkeys(atoms))


@dataclass(frozen=True)
class Rule:
    """
    A normal rule ``head ← pos, not neg``.

    Duplicates inside ``pos`` and ``neg`` are dropped, keeping the first
    occurrence.
    """

    head: str
    pos: Tuple[str, ...] = ()
    neg: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "pos", _unique(self.pos))
        object.__setattr__(self, "neg", _unique(self.neg))

    def atoms(self) -> Tuple[str, ...]:
        return _unique((self.head,) + self.pos + self.neg)

    @property
    def is_fact(self) -> bool:
        return not self.pos and not self.neg


@dataclass(frozen=True)
class Program:
    """
    A finite propositional program.

    Attributes:
        rules: Rules in file order; duplicate rules are kept
        herbrand_base: HB_P in first-appearance order; computed when omitted
    """

    rules: Tuple[Rule, ...]
    herbrand_base: Tuple[str, ...] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        rules = tuple(self.rules)
        object.__setattr__(self, "rules", rules)
        derived = _unique(atom for rule in rules for atom in rule.atoms())
        if self.herbrand_base is None:
            object.__setattr__(self, "herbrand_base", derived)
            return
        base = tuple(self.herbrand_base)
        if len(set(base)) != len(base) or set(base) != set(derived):
            raise ValueError(
                "herbrand_base must list exactly the atoms occurring in the rules"
            )
        object.__setattr__(self, "herbrand_base", base)

    def rules_for(self, head: str) -> Tuple[Rule, ...]:
        return tuple(rule for rule in self.rules if rule.head == head)

    def negated_atoms(self) -> Tuple[str, ...]:
        """Atoms occurring under ``not``, in HB order."""
        negated = {b for rule in self.rules for b in rule.neg}
        return tuple(atom for atom in self.herbrand_base if atom in negated)

    @property
    def is_negative_body(self) -> bool:
        """No rule has a positive body atom."""
        return all(not rule.pos for rule in self.rules)


@dataclass(frozen=True)
class ReducedRule:
    """A positive rule; ``body`` may contain :data:`UNDEFINED_ATOM`."""

    head: str
    body: Tuple[str, ...] = ()


@dataclass(frozen=True)
class ReducedProgram:
    """The reduct P/I over the Herbrand base of P."""

    rules: Tuple[ReducedRule, ...]
    herbrand_base: Tuple[str, ...]


class LpSemantics(Enum):
    PSM = "psm"
    WELL_FOUNDED = "well_founded"
    REGULAR = "regular"
    STABLE = "stable"
    L_STABLE = "l_stable"


def _check_base(P: Program, I: Interpretation3) -> None:
    if I.universe != P.herbrand_base:
        raise UniverseMismatchError(
            f"Interpretation over {list(I.universe)} does not match "
            f"HB {list(P.herbrand_base)}"
        )


def is_model_lp(P: Program, I: Interpretation3) -> bool:
    """
    Three-valued model condition.

    Every rule satisfies min{I(a_1), …, I(a_m), ¬I(b_1), …, ¬I(b_n)} ≤_t I(a),
    with an empty body counting as t.
    """
    _check_base(P, I)
    for rule in P.rules:
        body = truth_min(
            [I[a] for a in rule.pos] + [~I[b] for b in rule.neg]
        )
        if not body.leq_truth(I[rule.head]):
            return False
    return True


def reduct_lp(P: Program, I: Interpretation3) -> ReducedProgram:
    """
    The reduct P/I.

    Rules with a negated atom that is true in I are deleted, negated atoms
    that are false are dropped, and every remaining ``not b`` becomes u̇.
    """
    _check_base(P, I)
    reduced = []
    for rule in P.rules:
        if any(I[b] is T for b in rule.neg):
            continue
        body = rule.pos
        if any(I[b] is U for b in rule.neg):
            body = body + (UNDEFINED_ATOM,)
        reduced.append(ReducedRule(rule.head, body))
    return ReducedProgram(tuple(reduced), P.herbrand_base)


def _body_value(body: Sequence[str], J: Interpretation3) -> TruthValue:
    return truth_min(U if atom == UNDEFINED_ATOM else J[atom] for atom in body)


def psi(R: ReducedProgram, J: Interpretation3) -> Interpretation3:
    """
    One application of Ψ_{P/I}.

    An atom is t if some rule for it has an all-true body, f if every rule
    for it has a false body atom (vacuously so without rules), and u
    otherwise. u̇ is u at every step.
    """
    for atom in R.herbrand_base:
        if atom not in J:
            raise UnknownAtomError(atom, "Ψ argument")
    bodies: Dict[str, List[TruthValue]] = {atom: [] for atom in R.herbrand_base}
    for rule in R.rules:
        bodies[rule.head].append(_body_value(rule.body, J))

    values = []
    for atom in R.herbrand_base:
        found = bodies[atom]
        if T in found:
            values.append(T)
        elif all(value is F for value in found):
            values.append(F)
        else:
            values.append(U)
    return Interpretation3(R.herbrand_base, tuple(values))


def omega_iterations(P: Program, I: Interpretation3) -> Tuple[Interpretation3, int]:
    """
    Ω_P(I) together with the number of Ψ applications it took.

    Iterates Ψ_{P/I} from the interpretation mapping every atom to f until
    two consecutive iterates coincide.
    """
    reduct = reduct_lp(P, I)
    J = Interpretation3.all_false(P.herbrand_base)
    steps = 0
    while True:
        steps += 1
        following = psi(reduct, J)
        if following == J:
            return J, steps
        J = following


def omega(P: Program, I: Interpretation3) -> Interpretation3:
    result, steps = omega_iterations(P, I)
    logger.debug("Ω reached its fixpoint after %d Ψ applications", steps)
    return result


# === SEMANTICS ===


def partial_stable_models(
    P: Program, bound: Optional[int] = None
) -> List[Interpretation3]:
    """
    All fixpoints of Ω_P, in canonical order.

    P/I depends only on I restricted to the atoms occurring under ``not``,
    so candidates are enumerated over those atoms and the rest is read off
    Ω_P.

    Raises:
        CapacityError: If |HB_P| exceeds ``bound``
    """
    check_enumeration_bound(P.herbrand_base, bound)
    negated = P.negated_atoms()
    base = Interpretation3.all_unknown(P.herbrand_base)
    models = []
    for partial in enumerate_interpretations(negated, bound):
        candidate = omega(P, base.updated(partial.as_dict()))
        if all(candidate[b] is partial[b] for b in negated):
            models.append(candidate)
    return sort_models(models)


def well_founded_model(P: Program, bound: Optional[int] = None) -> Interpretation3:
    """
    The ≤_i-least partial stable model.

    Computed by iterating Ω_P from all-unknown. If that has not settled
    after 2|HB_P| + 2 rounds, the model is taken from the enumerated
    partial stable models instead.
    """
    limit = 2 * len(P.herbrand_base) + 2
    I = Interpretation3.all_unknown(P.herbrand_base)
    for round_number in range(1, limit + 1):
        following = omega(P, I)
        if following == I:
            logger.debug("Well-founded model reached after %d Ω rounds", round_number)
            return I
        I = following

    logger.warning(
        "Ω iteration did not settle within %d rounds; enumerating instead",
        limit,
    )
    least = info_least(partial_stable_models(P, bound))
    if least is None:
        raise RuntimeError("No ≤_i-least partial stable model found")
    return least


def regular_models(P: Program, bound: Optional[int] = None) -> List[Interpretation3]:
    return info_maximal(partial_stable_models(P, bound))


def stable_models_lp(P: Program, bound: Optional[int] = None) -> List[Interpretation3]:
    return two_valued_only(partial_stable_models(P, bound))


def l_stable_models_lp(
    P: Program, bound: Optional[int] = None
) -> List[Interpretation3]:
    return minimal_unknown(partial_stable_models(P, bound))


def lp_semantics(
    P: Program, kind: LpSemantics, bound: Optional[int] = None
) -> List[Interpretation3]:
    """
    Models of ``P`` under one of the five partial-stable-based semantics.

    Args:
        P: The program
        kind: Which semantics to compute
        bound: Enumeration bound on |HB_P|; unused for the well-founded model

    Returns:
        Models in canonical order

    Raises:
        CapacityError: If an enumerating semantics exceeds ``bound``
    """
    kind = LpSemantics(kind)
    if kind is LpSemantics.WELL_FOUNDED:
        return [well_founded_model(P, bound)]
    if kind is LpSemantics.PSM:
        return partial_stable_models(P, bound)
    if kind is LpSemantics.REGULAR:
        return sort_models(regular_models(P, bound))
    if kind is LpSemantics.STABLE:
        return sort_models(stable_models_lp(P, bound))
    return sort_models(l_stable_models_lp(P, bound))
