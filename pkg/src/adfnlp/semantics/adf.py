"""
Abstract dialectical frameworks: representation, the consensus operator and
the semantics built on it, plus the Kleene-operator family of semantics that
rests on the labelling reduct.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

from ..config import DEFAULT_MAX_CSET_PARENTS
from ..exceptions import (
    CapacityError,
    LinkError,
    ReductError,
    UniverseMismatchError,
    UnknownAtomError,
)
from ..logic import (
    F,
    T,
    U,
    Falsum,
    Formula,
    Interpretation3,
    TruthValue,
    check_enumeration_bound,
    consensus,
    conjunction,
    disjunction,
    encode_subset,
    enumerate_interpretations,
    enumerate_two_valued,
    info_least,
    info_maximal,
    iter_completions,
    iter_subsets,
    leq_info,
    literal,
    minimal_unknown,
    sort_models,
    two_valued_only,
)

logger = logging.getLogger(__name__)

Link = Tuple[str, str]


@dataclass(frozen=True)
class Adf:
    """
    An ADF given by its statements and one acceptance formula per statement.

    Links are derived: (t, s) is a link iff t occurs in φ_s.

    Attributes:
        statements: Statement names in canonical order
        acceptance: Acceptance formula φ_s for every statement
    """

    statements: Tuple[str, ...]
    acceptance: Mapping[str, Formula]
    _parents: Dict[str, Tuple[str, ...]] = field(
        init=False, repr=False, compare=False, default_factory=dict
    )

    def __post_init__(self) -> None:
        statements = tuple(self.statements)
        object.__setattr__(self, "statements", statements)
        object.__setattr__(self, "acceptance", dict(self.acceptance))
        if len(set(statements)) != len(statements):
            raise ValueError("Duplicate statement names")
        missing = [s for s in statements if s not in self.acceptance]
        if missing:
            raise ValueError(f"No acceptance condition for statement '{missing[0]}'")
        extra = [s for s in self.acceptance if s not in set(statements)]
        if extra:
            raise UnknownAtomError(extra[0], "statement set")

        order = {s: position for position, s in enumerate(statements)}
        parents = {}
        for s in statements:
            mentioned = self.acceptance[s].atoms()
            for atom in mentioned:
                if atom not in order:
                    raise UnknownAtomError(atom, f"acceptance condition of '{s}'")
            parents[s] = tuple(sorted(mentioned, key=order.__getitem__))
        object.__setattr__(self, "_parents", parents)

    def __hash__(self) -> int:
        return hash((self.statements, tuple(self.acceptance.items())))

    def formula(self, s: str) -> Formula:
        try:
            return self.acceptance[s]
        except KeyError:
            raise UnknownAtomError(s, "statement set") from None

    def parents(self, s: str) -> Tuple[str, ...]:
        """par(s) in statement order."""
        try:
            return self._parents[s]
        except KeyError:
            raise UnknownAtomError(s, "statement set") from None

    def links(self) -> Tuple[Link, ...]:
        return tuple((r, s) for s in self.statements for r in self._parents[s])

    def with_acceptance(self, updates: Mapping[str, Formula]) -> "Adf":
        return Adf(self.statements, {**self.acceptance, **updates})


@dataclass(frozen=True)
class CSetFamily:
    """
    Subset-family representation C^t_s of an acceptance condition.

    Attributes:
        parents: par(s) in canonical order
        accepted: The subsets R ⊆ par(s) with C_s(R) = t
    """

    parents: Tuple[str, ...]
    accepted: FrozenSet[FrozenSet[str]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parents", tuple(self.parents))
        object.__setattr__(
            self, "accepted", frozenset(frozenset(r) for r in self.accepted)
        )
        parent_set = set(self.parents)
        for member in self.accepted:
            if not member <= parent_set:
                raise ValueError(
                    f"Accepted set {sorted(member)} is not a subset of the parents"
                )

    def accepts(self, subset: Iterable[str]) -> bool:
        """C_s(R) = t."""
        return frozenset(subset) in self.accepted

    def ordered(self) -> List[FrozenSet[str]]:
        """Members sorted by their bitmask over ``parents``."""
        return sorted(self.accepted, key=lambda r: encode_subset(self.parents, r))


class LinkClass(Enum):
    SUPPORTING = "supporting"
    ATTACKING = "attacking"
    REDUNDANT = "redundant"
    DEPENDENT = "dependent"


# === ACCEPTANCE REPRESENTATIONS ===


def full_dnf_disjunct(parents: Sequence[str], accepted: FrozenSet[str]) -> Formula:
    """⋀_{a∈R} a ∧ ⋀_{b∈par(s)−R} ¬b."""
    return conjunction(literal(p, p in accepted) for p in parents)


def cset_to_formula(fam: CSetFamily) -> Formula:
    """
    Full DNF of an acceptance family.

    Returns:
        Falsum for an empty family, Verum for {∅} over no parents,
        otherwise the disjunction of one full conjunction per member
    """
    return disjunction(full_dnf_disjunct(fam.parents, r) for r in fam.ordered())


def formula_to_cset(
    phi: Formula,
    parents: Optional[Sequence[str]] = None,
    max_parents: Optional[int] = None,
) -> CSetFamily:
    """
    Materialize C^t for ``phi`` over ``parents`` (default: atoms of ``phi``).

    Raises:
        CapacityError: If there are more parents than ``max_parents``
    """
    parents = phi.atoms() if parents is None else tuple(parents)
    bound = DEFAULT_MAX_CSET_PARENTS if max_parents is None else max_parents
    if len(parents) > bound:
        raise CapacityError(
            f"Acceptance family over {len(parents)} parents is too large",
            required=2 ** len(parents),
            bound=2**bound,
        )
    return CSetFamily(
        parents, frozenset(r for r in iter_subsets(parents) if phi.holds(r))
    )


def acceptance_family(
    D: Adf, s: str, max_parents: Optional[int] = None
) -> CSetFamily:
    return formula_to_cset(D.formula(s), D.parents(s), max_parents)


# === OPERATORS ===


def gamma_at(D: Adf, v: Interpretation3, s: str) -> TruthValue:
    """Consensus value of φ_s over the completions of ``v`` on par(s)."""
    phi = D.formula(s)
    unknown = [p for p in D.parents(s) if v[p] is U]
    if not unknown:
        return phi.evaluate(v)
    assignment = v.as_dict()

    def completed() -> Iterator[TruthValue]:
        for choice in iter_completions(len(unknown)):
            assignment.update(zip(unknown, choice))
            yield phi.evaluate(assignment)

    return consensus(completed())


def _check_universe(D: Adf, v: Interpretation3) -> None:
    if v.universe != D.statements:
        raise UniverseMismatchError(
            f"Interpretation over {list(v.universe)} does not match "
            f"statements {list(D.statements)}"
        )


def gamma(D: Adf, v: Interpretation3) -> Interpretation3:
    """
    Consensus operator Γ_D.

    result(s) is the meet of w(φ_s) over every two-valued completion w of
    ``v`` on par(s).
    """
    _check_universe(D, v)
    return Interpretation3(D.statements, tuple(gamma_at(D, v, s) for s in D.statements))


def gamma_kleene(D: Adf, v: Interpretation3) -> Interpretation3:
    """Pointwise Kleene operator: result(s) = v(φ_s)."""
    _check_universe(D, v)
    return Interpretation3(
        D.statements, tuple(D.formula(s).evaluate(v) for s in D.statements)
    )


def is_model_adf(D: Adf, v: Interpretation3) -> bool:
    """Every decided statement agrees with the consensus value of its condition."""
    _check_universe(D, v)
    return all(
        value is U or gamma_at(D, v, s) is value for s, value in v.items()
    )


def is_model_part1(D: Adf, v: Interpretation3) -> bool:
    """Pre-fixpoint of the Kleene operator: Γ_D(v) ≤_i v."""
    return leq_info(gamma_kleene(D, v), v)


def _is_fixpoint(D: Adf, v: Interpretation3) -> bool:
    return all(gamma_at(D, v, s) is value for s, value in v.items())


def _parent_statements(D: Adf) -> Tuple[str, ...]:
    used = {r for r, _ in D.links()}
    return tuple(s for s in D.statements if s in used)


# === SEMANTICS ===


def complete_models(D: Adf, bound: Optional[int] = None) -> List[Interpretation3]:
    """
    All fixpoints of Γ_D, in canonical order.

    Γ_D(v) only depends on v restricted to statements that are parents of
    something, so candidates are enumerated over those and the rest is read
    off Γ_D.

    Raises:
        CapacityError: If there are more statements than ``bound``
    """
    check_enumeration_bound(D.statements, bound)
    parent_statements = _parent_statements(D)
    base = Interpretation3.all_unknown(D.statements)
    models = []
    for partial in enumerate_interpretations(parent_statements, bound):
        candidate = gamma(D, base.updated(partial.as_dict()))
        if all(candidate[s] is partial[s] for s in parent_statements):
            models.append(candidate)
    return sort_models(models)


def grounded_model(D: Adf) -> Interpretation3:
    """
    The ≤_i-least complete model, by iterating Γ_D from all-unknown.

    Γ_D is ≤_i-monotone, so every step only adds information and the
    iteration ends after at most |S| + 1 applications.
    """
    v = Interpretation3.all_unknown(D.statements)
    steps = 0
    while True:
        steps += 1
        following = gamma(D, v)
        if following == v:
            logger.debug("Grounded model reached after %d Γ applications", steps)
            return v
        v = following


def preferred_models(D: Adf, bound: Optional[int] = None) -> List[Interpretation3]:
    """≤_i-maximal complete models."""
    return info_maximal(complete_models(D, bound))


def reduct_brewka(D: Adf, v: Interpretation3) -> Adf:
    """
    Reduct D^v of a two-valued model.

    Keeps E_v = {s | v(s) = t} and replaces every false statement by Falsum
    inside the remaining acceptance formulas.

    Raises:
        ReductError: If ``v`` is not two-valued or not a model of ``D``
    """
    _check_universe(D, v)
    if not v.is_two_valued:
        raise ReductError("The reduct D^v needs a two-valued interpretation")
    if not is_model_adf(D, v):
        raise ReductError("The reduct D^v needs a model of D")
    falsified = {b: Falsum() for b in v.false_atoms}
    accepted = v.true_atoms
    return Adf(accepted, {s: D.formula(s).substitute(falsified) for s in accepted})


def is_stable_adf(D: Adf, v: Interpretation3) -> bool:
    if not v.is_two_valued or not is_model_adf(D, v):
        return False
    grounded = grounded_model(reduct_brewka(D, v))
    return grounded.lift(D.statements, default=F) == v


def stable_models(D: Adf, bound: Optional[int] = None) -> List[Interpretation3]:
    """
    Two-valued models v whose reduct D^v has v's true statements as grounded model.

    The reduct's grounded model is lifted back to S with every statement
    outside E_v set to f before comparing.
    """
    return sort_models(
        v for v in enumerate_two_valued(D.statements, bound) if is_stable_adf(D, v)
    )


# === LINKS ===


def _witness(fam: CSetFamily, r: str, before: bool) -> Optional[FrozenSet[str]]:
    """First R ⊆ par(s)−{r} with C_s(R) = before and C_s(R ∪ {r}) = not before."""
    others = tuple(p for p in fam.parents if p != r)
    for subset in iter_subsets(others):
        if fam.accepts(subset) is before and fam.accepts(subset | {r}) is not before:
            return subset
    return None


def attack_witness(fam: CSetFamily, r: str) -> Optional[FrozenSet[str]]:
    """An R refuting that the link from r is attacking, or None."""
    return _witness(fam, r, before=False)


def support_witness(fam: CSetFamily, r: str) -> Optional[FrozenSet[str]]:
    """An R refuting that the link from r is supporting, or None."""
    return _witness(fam, r, before=True)


def classify_link(
    D: Adf, link: Link, max_parents: Optional[int] = None
) -> LinkClass:
    """
    Classify a link (r, s) by the monotonicity tests on C_s.

    Raises:
        LinkError: If r is not a parent of s
    """
    r, s = link
    if r not in D.parents(s):
        raise LinkError(f"({r},{s}) is not a link: '{r}' does not occur in φ_{s}")
    fam = acceptance_family(D, s, max_parents)
    supporting = support_witness(fam, r) is None
    attacking = attack_witness(fam, r) is None
    if supporting and attacking:
        return LinkClass.REDUNDANT
    if supporting:
        return LinkClass.SUPPORTING
    if attacking:
        return LinkClass.ATTACKING
    return LinkClass.DEPENDENT


def classify_links(D: Adf) -> Dict[Link, LinkClass]:
    return {link: classify_link(D, link) for link in D.links()}


# === LABELLING REDUCT FAMILY (Kleene operator) ===


class Part1Semantics(Enum):
    ADMISSIBLE = "admissible"
    PARTIAL_STABLE = "partial_stable"
    REGULAR = "regular"
    SEMI_STABLE = "semi_stable"
    L_STABLE_PART1 = "l_stable_part1"
    STABLE_PART1 = "stable_part1"
    PREFERRED_PART1 = "preferred_part1"


def _disjunct_not_false(
    parents: Sequence[str], accepted: FrozenSet[str], v: Interpretation3
) -> bool:
    # A full conjunction is f exactly when one of its literals is contradicted.
    for p in parents:
        value = v[p]
        if p in accepted and value is F:
            return False
        if p not in accepted and value is T:
            return False
    return True


def part1_reduct(
    D: Adf, v: Interpretation3, max_parents: Optional[int] = None
) -> Adf:
    """
    Labelling reduct D_v.

    φ_s is kept when some disjunct of its full DNF is not false under ``v``,
    and replaced by Falsum otherwise.
    """
    _check_universe(D, v)
    updates: Dict[str, Formula] = {}
    for s in D.statements:
        fam = acceptance_family(D, s, max_parents)
        if not any(_disjunct_not_false(fam.parents, r, v) for r in fam.accepted):
            updates[s] = Falsum()
    return D.with_acceptance(updates)


def kleene_grounded_model(D: Adf) -> Interpretation3:
    """Least fixpoint of the Kleene operator, iterated from all-unknown."""
    v = Interpretation3.all_unknown(D.statements)
    while True:
        following = gamma_kleene(D, v)
        if following == v:
            return v
        v = following


def kleene_complete_models(
    D: Adf, bound: Optional[int] = None
) -> List[Interpretation3]:
    """Fixpoints of the Kleene operator."""
    return [
        v
        for v in enumerate_interpretations(D.statements, bound)
        if gamma_kleene(D, v) == v
    ]


def admissible_models(D: Adf, bound: Optional[int] = None) -> List[Interpretation3]:
    """Post-fixpoints of the Kleene operator: v ≤_i Γ_D(v)."""
    return [
        v
        for v in enumerate_interpretations(D.statements, bound)
        if leq_info(v, gamma_kleene(D, v))
    ]


def is_partial_stable_part1(D: Adf, v: Interpretation3) -> bool:
    return kleene_grounded_model(part1_reduct(D, v)) == v


def partial_stable_models_part1(
    D: Adf, bound: Optional[int] = None
) -> List[Interpretation3]:
    return [
        v
        for v in enumerate_interpretations(D.statements, bound)
        if is_partial_stable_part1(D, v)
    ]


def part1_semantics(
    D: Adf, kind: Part1Semantics, bound: Optional[int] = None
) -> List[Interpretation3]:
    """
    Semantics defined through the Kleene operator and the labelling reduct.

    Args:
        D: The framework
        kind: Which semantics to compute
        bound: Enumeration bound on |S|

    Returns:
        Models in canonical order

    Raises:
        CapacityError: If there are more statements than ``bound``
    """
    kind = Part1Semantics(kind)
    if kind is Part1Semantics.ADMISSIBLE:
        models = admissible_models(D, bound)
    elif kind is Part1Semantics.PREFERRED_PART1:
        models = info_maximal(admissible_models(D, bound))
    elif kind is Part1Semantics.SEMI_STABLE:
        models = minimal_unknown(kleene_complete_models(D, bound))
    else:
        partial = partial_stable_models_part1(D, bound)
        if kind is Part1Semantics.PARTIAL_STABLE:
            models = partial
        elif kind is Part1Semantics.REGULAR:
            models = info_maximal(partial)
        elif kind is Part1Semantics.L_STABLE_PART1:
            models = minimal_unknown(partial)
        else:
            models = two_valued_only(partial)
    return sort_models(models)


def least_model_part1(D: Adf, bound: Optional[int] = None) -> Optional[Interpretation3]:
    """≤_i-least pre-fixpoint of the Kleene operator, by enumeration."""
    candidates = enumerate_interpretations(D.statements, bound)
    return info_least([v for v in candidates if is_model_part1(D, v)])
