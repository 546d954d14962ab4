"""
The attacking fragment ADF⁺.

Recognition, C^max and the negative-DNF form of acceptance conditions,
redundancy detection by counting, the pointwise operator and the semantics
that become simpler on attacking-only frameworks.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set, Tuple, Union

from ..config import DEFAULT_MAX_CSET_PARENTS
from ..exceptions import (
    CapacityError,
    NotAdfPlusError,
    NotDownwardClosedError,
    UniverseMismatchError,
    UnknownAtomError,
)
from ..logic import (
    Atom,
    Formula,
    Interpretation3,
    Neg,
    conjunction,
    disjunction,
    encode_subset,
    enumerate_two_valued,
    iter_subsets,
    minimal_unknown,
    sort_models,
)
from .adf import (
    Adf,
    CSetFamily,
    Link,
    acceptance_family,
    attack_witness,
    complete_models,
    gamma_at,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AdfPlusViolation:
    """A link that is not attacking, with the subset R witnessing it."""

    link: Link
    witness: FrozenSet[str]

    def __str__(self) -> str:
        r, s = self.link
        witness = "{" + ", ".join(sorted(self.witness)) + "}"
        return (
            f"link ({r},{s}) is not attacking: C_{s}(R) = f and "
            f"C_{s}(R ∪ {{{r}}}) = t for R = {witness}"
        )


@dataclass(frozen=True)
class AdfPlus:
    """
    An ADF whose every link is attacking.

    Attributes:
        adf: The underlying framework
        families: C^t_s per statement; None for statements too wide to materialize
        maximal: C^max_s per statement, same availability as ``families``
        simplified: Negative-DNF acceptance formula per statement
        max_parents: Widest par(s) for which C^t_s was materialized
    """

    adf: Adf
    families: Dict[str, Optional[CSetFamily]]
    maximal: Dict[str, Optional[CSetFamily]]
    simplified: Dict[str, Optional[Formula]]
    max_parents: int = DEFAULT_MAX_CSET_PARENTS

    def __hash__(self) -> int:
        return hash(self.adf)

    @property
    def statements(self) -> Tuple[str, ...]:
        return self.adf.statements

    def parents(self, s: str) -> Tuple[str, ...]:
        return self.adf.parents(s)

    def formula(self, s: str) -> Formula:
        return self.adf.formula(s)


def cmax(fam: CSetFamily) -> CSetFamily:
    """
    The ⊆-maximal members of a downward-closed family.

    Raises:
        NotDownwardClosedError: If some member has a missing subset
    """
    for member in fam.accepted:
        for element in member:
            if member - {element} not in fam.accepted:
                raise NotDownwardClosedError(
                    f"{sorted(member)} is accepted but {sorted(member - {element})} "
                    f"is not"
                )
    return CSetFamily(
        fam.parents,
        frozenset(
            member
            for member in fam.accepted
            if not any(member < other for other in fam.accepted)
        ),
    )


def negative_dnf(maximal: CSetFamily) -> Formula:
    """⋁_{R ∈ C^max} ⋀_{b ∈ par − R} ¬b."""
    return disjunction(
        conjunction(Neg(Atom(b)) for b in maximal.parents if b not in member)
        for member in sorted(
            maximal.accepted, key=lambda r: encode_subset(maximal.parents, r)
        )
    )


def _antitone_witness(adf: Adf, s: str) -> Optional[AdfPlusViolation]:
    # Streaming check for wide parent sets: no family is kept in memory.
    phi = adf.formula(s)
    parents = adf.parents(s)
    for r in parents:
        others = tuple(p for p in parents if p != r)
        for subset in iter_subsets(others):
            if not phi.holds(subset) and phi.holds(subset | {r}):
                return AdfPlusViolation((r, s), subset)
    return None


def check_adfplus(
    D: Adf, max_parents: Optional[int] = None
) -> Union[AdfPlus, AdfPlusViolation]:
    """
    Recognize an ADF⁺.

    Args:
        D: Framework to check
        max_parents: Widest par(s) whose C^t_s is materialized; wider
            statements are checked formula-by-formula instead

    Returns:
        The AdfPlus view on success, otherwise the first violating link
        together with its witness R
    """
    bound = DEFAULT_MAX_CSET_PARENTS if max_parents is None else max_parents
    families: Dict[str, Optional[CSetFamily]] = {}
    maximal: Dict[str, Optional[CSetFamily]] = {}
    simplified: Dict[str, Optional[Formula]] = {}

    for s in D.statements:
        if len(D.parents(s)) > bound:
            logger.info(
                "par(%s) has %d members; checking antitonicity without C^t",
                s,
                len(D.parents(s)),
            )
            violation = _antitone_witness(D, s)
            if violation is not None:
                return violation
            families[s] = maximal[s] = simplified[s] = None
            continue

        fam = acceptance_family(D, s, bound)
        for r in fam.parents:
            witness = attack_witness(fam, r)
            if witness is not None:
                return AdfPlusViolation((r, s), witness)
        families[s] = fam
        maximal[s] = cmax(fam)
        simplified[s] = negative_dnf(maximal[s])

    return AdfPlus(D, families, maximal, simplified, bound)


def ensure_adfplus(D: Adf, max_parents: Optional[int] = None) -> AdfPlus:
    """
    Raises:
        NotAdfPlusError: If ``D`` has a non-attacking link
    """
    result = check_adfplus(D, max_parents)
    if isinstance(result, AdfPlusViolation):
        raise NotAdfPlusError(result)
    return result


def _not_materialized(Dp: AdfPlus, s: str) -> CapacityError:
    width = len(Dp.parents(s))
    return CapacityError(
        f"C^t of '{s}' over {width} parents was not materialized",
        required=2**width,
        bound=2 ** Dp.max_parents,
    )


def _require(Dp: AdfPlus, value: Optional[CSetFamily], s: str) -> CSetFamily:
    if value is None:
        raise _not_materialized(Dp, s)
    return value


def simplified_formula(Dp: AdfPlus, s: str) -> Formula:
    """
    Negative-DNF acceptance formula of ``s`` built from C^max_s.

    Raises:
        CapacityError: If par(s) was too wide to materialize C^t_s
    """
    if s not in Dp.simplified:
        raise UnknownAtomError(s, "statement set")
    formula = Dp.simplified[s]
    if formula is None:
        raise _not_materialized(Dp, s)
    return formula


def redundant_links_by_count(Dp: AdfPlus) -> Set[Link]:
    """
    Redundant links by counting: (r, s) is redundant iff exactly half of
    the members of C^t_s contain r.
    """
    redundant = set()
    for s in Dp.statements:
        fam = _require(Dp, Dp.families[s], s)
        total = len(fam.accepted)
        if total % 2:
            continue
        for r in fam.parents:
            containing = sum(1 for member in fam.accepted if r in member)
            if 2 * containing == total:
                redundant.add((r, s))
    return redundant


def redundant_links_by_cmax(Dp: AdfPlus) -> Set[Link]:
    """Redundant links as the parents contained in every member of C^max_s."""
    redundant = set()
    for s in Dp.statements:
        top = _require(Dp, Dp.maximal[s], s)
        for r in top.parents:
            if all(r in member for member in top.accepted):
                redundant.add((r, s))
    return redundant


def gamma_plus(Dp: AdfPlus, v: Interpretation3) -> Interpretation3:
    """Pointwise Kleene evaluation of the negative-DNF acceptance formulas."""
    if v.universe != Dp.statements:
        raise UniverseMismatchError(
            f"Interpretation over {list(v.universe)} does not match "
            f"statements {list(Dp.statements)}"
        )
    values = []
    for s in Dp.statements:
        formula = Dp.simplified[s]
        if formula is None:
            values.append(gamma_at(Dp.adf, v, s))
        else:
            values.append(formula.evaluate(v))
    return Interpretation3(Dp.statements, tuple(values))


def stable_models_plus(
    Dp: AdfPlus, bound: Optional[int] = None
) -> List[Interpretation3]:
    """Two-valued fixpoints of the pointwise operator."""
    return sort_models(
        v for v in enumerate_two_valued(Dp.statements, bound) if gamma_plus(Dp, v) == v
    )


def l_stable_models(
    D: Union[Adf, AdfPlus], bound: Optional[int] = None
) -> List[Interpretation3]:
    """
    Complete models whose set of unknown statements is ⊆-minimal.

    Accepts any ADF; on ADF⁺ this coincides with the stable models whenever
    at least one exists.
    """
    adf = D.adf if isinstance(D, AdfPlus) else D
    return minimal_unknown(complete_models(adf, bound))


def prune_redundant(Dp: AdfPlus) -> Adf:
    """Rewrite every acceptance condition to its negative-DNF form."""
    return Adf(
        Dp.statements,
        {
            s: Dp.formula(s) if Dp.simplified[s] is None else Dp.simplified[s]
            for s in Dp.statements
        },
    )
