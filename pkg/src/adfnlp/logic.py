"""
Three-valued truth kernel shared by every adfnlp module.

Truth values, the information and truth orderings, interpretations over a
finite ordered universe, the propositional formula AST with Kleene's strong
three-valued evaluation, and enumeration helpers.
"""

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import (
    AbstractSet,
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

from .config import DEFAULT_MAX_STATEMENTS
from .exceptions import CapacityError, UniverseMismatchError, UnknownAtomError

logger = logging.getLogger(__name__)

ATOM_PATTERN = r"[a-z][A-Za-z0-9_]*"


class TruthValue(Enum):
    """One of t, f, u."""

    TRUE = "t"
    FALSE = "f"
    UNKNOWN = "u"

    def __invert__(self) -> "TruthValue":
        if self is TruthValue.TRUE:
            return TruthValue.FALSE
        if self is TruthValue.FALSE:
            return TruthValue.TRUE
        return self

    def leq_info(self, other: "TruthValue") -> bool:
        """u <_i t, u <_i f; t and f are incomparable."""
        return self is TruthValue.UNKNOWN or self is other

    def leq_truth(self, other: "TruthValue") -> bool:
        """f <_t u <_t t."""
        return _TRUTH_RANK[self] <= _TRUTH_RANK[other]

    @property
    def is_decided(self) -> bool:
        return self is not TruthValue.UNKNOWN

    @classmethod
    def from_bool(cls, value: bool) -> "TruthValue":
        return cls.TRUE if value else cls.FALSE


T = TruthValue.TRUE
F = TruthValue.FALSE
U = TruthValue.UNKNOWN

_TRUTH_RANK = {F: 0, U: 1, T: 2}
# Digit of each value in the ternary encoding; also the enumeration order.
_TERNARY_DIGIT = {U: 0, F: 1, T: 2}
TERNARY_ORDER = (U, F, T)
BINARY_ORDER = (F, T)


def truth_min(values: Iterable[TruthValue]) -> TruthValue:
    """≤_t-minimum; t for an empty collection."""
    result = T
    for value in values:
        if value is F:
            return F
        if value is U:
            result = U
    return result


def consensus(values: Iterable[TruthValue]) -> TruthValue:
    """≤_i-meet of a nonempty collection of truth values."""
    result: Optional[TruthValue] = None
    for value in values:
        if result is None:
            result = value
        elif value is not result:
            return U
    if result is None:
        raise ValueError("consensus of an empty collection")
    return result


@lru_cache(maxsize=None)
def _index_for(universe: Tuple[str, ...]) -> Dict[str, int]:
    return {atom: position for position, atom in enumerate(universe)}


@dataclass(frozen=True)
class Interpretation3:
    """
    Total three-valued assignment over an ordered finite universe.

    Attributes:
        universe: Atom names in canonical order
        values: One truth value per atom, aligned with ``universe``
    """

    universe: Tuple[str, ...]
    values: Tuple[TruthValue, ...]
    _index: Dict[str, int] = field(
        init=False, repr=False, compare=False, hash=False, default_factory=dict
    )

    def __post_init__(self) -> None:
        object.__setattr__(self, "universe", tuple(self.universe))
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.universe) != len(self.values):
            raise ValueError("universe and values must have the same length")
        index = _index_for(self.universe)
        if len(index) != len(self.universe):
            raise ValueError("universe contains duplicate atoms")
        object.__setattr__(self, "_index", index)

    @classmethod
    def all_unknown(cls, universe: Sequence[str]) -> "Interpretation3":
        universe = tuple(universe)
        return cls(universe, (U,) * len(universe))

    @classmethod
    def all_false(cls, universe: Sequence[str]) -> "Interpretation3":
        universe = tuple(universe)
        return cls(universe, (F,) * len(universe))

    @classmethod
    def from_mapping(
        cls, universe: Sequence[str], mapping: Mapping[str, TruthValue]
    ) -> "Interpretation3":
        """Atoms of ``universe`` missing from ``mapping`` are unknown."""
        for atom in mapping:
            if atom not in universe:
                raise UnknownAtomError(atom, "interpretation universe")
        universe = tuple(universe)
        return cls(universe, tuple(mapping.get(atom, U) for atom in universe))

    @classmethod
    def from_literals(
        cls, universe: Sequence[str], literals: Iterable[str]
    ) -> "Interpretation3":
        """
        Build from the set rendering V = {s | v(s)=t} ∪ {¬s | v(s)=f}.

        Negative literals are written ``~s`` or ``¬s``.
        """
        mapping: Dict[str, TruthValue] = {}
        for literal in literals:
            literal = literal.strip()
            if literal[:1] in ("~", "¬"):
                atom, value = literal[1:].strip(), F
            else:
                atom, value = literal, T
            if mapping.get(atom, value) is not value:
                raise ValueError(f"Inconsistent literals for atom '{atom}'")
            mapping[atom] = value
        return cls.from_mapping(universe, mapping)

    def __getitem__(self, atom: str) -> TruthValue:
        try:
            return self.values[self._index[atom]]
        except KeyError:
            raise UnknownAtomError(atom, "interpretation universe") from None

    def __contains__(self, atom: object) -> bool:
        return atom in self._index

    def __len__(self) -> int:
        return len(self.universe)

    def get(self, atom: str, default: TruthValue = U) -> TruthValue:
        position = self._index.get(atom)
        return default if position is None else self.values[position]

    def items(self) -> Iterator[Tuple[str, TruthValue]]:
        return zip(self.universe, self.values)

    def as_dict(self) -> Dict[str, TruthValue]:
        return dict(self.items())

    def atoms_with(self, value: TruthValue) -> Tuple[str, ...]:
        return tuple(atom for atom, v in self.items() if v is value)

    @property
    def true_atoms(self) -> Tuple[str, ...]:
        return self.atoms_with(T)

    @property
    def false_atoms(self) -> Tuple[str, ...]:
        return self.atoms_with(F)

    @property
    def unknown_atoms(self) -> FrozenSet[str]:
        """unk(v) / undec(v)."""
        return frozenset(self.atoms_with(U))

    @property
    def is_two_valued(self) -> bool:
        return U not in self.values

    def to_literals(self) -> FrozenSet[str]:
        """Set rendering with ``~`` marking false atoms."""
        return frozenset(self.true_atoms) | frozenset(
            f"~{atom}" for atom in self.false_atoms
        )

    def encode(self) -> int:
        """Ternary encoding, first universe atom most significant, u<f<t."""
        code = 0
        for value in self.values:
            code = code * 3 + _TERNARY_DIGIT[value]
        return code

    def updated(self, mapping: Mapping[str, TruthValue]) -> "Interpretation3":
        values = list(self.values)
        for atom, value in mapping.items():
            try:
                values[self._index[atom]] = value
            except KeyError:
                raise UnknownAtomError(atom, "interpretation universe") from None
        return Interpretation3(self.universe, tuple(values))

    def restrict(self, atoms: Iterable[str]) -> "Interpretation3":
        keep = set(atoms)
        universe = tuple(atom for atom in self.universe if atom in keep)
        return Interpretation3(universe, tuple(self[atom] for atom in universe))

    def lift(
        self, universe: Sequence[str], default: TruthValue = F
    ) -> "Interpretation3":
        """Re-express over ``universe``; atoms new to ``self`` get ``default``."""
        universe = tuple(universe)
        return Interpretation3(
            universe, tuple(self.get(atom, default) for atom in universe)
        )


# === FORMULAS ===


class Formula:
    """Propositional formula AST node."""

    __slots__ = ()

    def atoms(self) -> Tuple[str, ...]:
        """Atoms in first-appearance order."""
        seen: Dict[str, None] = {}
        self._collect(seen)
        return tuple(seen)

    def _collect(self, seen: Dict[str, None]) -> None:
        raise NotImplementedError

    def evaluate(self, assignment: Mapping[str, TruthValue]) -> TruthValue:
        """Kleene strong three-valued evaluation."""
        raise NotImplementedError

    def holds(self, true_atoms: AbstractSet[str]) -> bool:
        """Classical evaluation: atoms in ``true_atoms`` are true, all others false."""
        raise NotImplementedError

    def substitute(self, mapping: Mapping[str, "Formula"]) -> "Formula":
        raise NotImplementedError


@dataclass(frozen=True)
class Atom(Formula):
    name: str

    def _collect(self, seen: Dict[str, None]) -> None:
        seen.setdefault(self.name, None)

    def evaluate(self, assignment: Mapping[str, TruthValue]) -> TruthValue:
        try:
            return assignment[self.name]
        except KeyError:
            raise UnknownAtomError(self.name, "formula evaluation") from None

    def holds(self, true_atoms: AbstractSet[str]) -> bool:
        return self.name in true_atoms

    def substitute(self, mapping: Mapping[str, Formula]) -> Formula:
        return mapping.get(self.name, self)


@dataclass(frozen=True)
class Verum(Formula):
    def _collect(self, seen: Dict[str, None]) -> None:
        pass

    def evaluate(self, assignment: Mapping[str, TruthValue]) -> TruthValue:
        return T

    def holds(self, true_atoms: AbstractSet[str]) -> bool:
        return True

    def substitute(self, mapping: Mapping[str, Formula]) -> Formula:
        return self


@dataclass(frozen=True)
class Falsum(Formula):
    def _collect(self, seen: Dict[str, None]) -> None:
        pass

    def evaluate(self, assignment: Mapping[str, TruthValue]) -> TruthValue:
        return F

    def holds(self, true_atoms: AbstractSet[str]) -> bool:
        return False

    def substitute(self, mapping: Mapping[str, Formula]) -> Formula:
        return self


@dataclass(frozen=True)
class Neg(Formula):
    arg: Formula

    def _collect(self, seen: Dict[str, None]) -> None:
        self.arg._collect(seen)

    def evaluate(self, assignment: Mapping[str, TruthValue]) -> TruthValue:
        return ~self.arg.evaluate(assignment)

    def holds(self, true_atoms: AbstractSet[str]) -> bool:
        return not self.arg.holds(true_atoms)

    def substitute(self, mapping: Mapping[str, Formula]) -> Formula:
        return Neg(self.arg.substitute(mapping))


@dataclass(frozen=True)
class And(Formula):
    args: Tuple[Formula, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "args", tuple(self.args))
        if not self.args:
            raise ValueError("And needs at least one conjunct; use Verum instead")

    def _collect(self, seen: Dict[str, None]) -> None:
        for arg in self.args:
            arg._collect(seen)

    def evaluate(self, assignment: Mapping[str, TruthValue]) -> TruthValue:
        return truth_min(arg.evaluate(assignment) for arg in self.args)

    def holds(self, true_atoms: AbstractSet[str]) -> bool:
        return all(arg.holds(true_atoms) for arg in self.args)

    def substitute(self, mapping: Mapping[str, Formula]) -> Formula:
        return And(tuple(arg.substitute(mapping) for arg in self.args))


@dataclass(frozen=True)
class Or(Formula):
    args: Tuple[Formula, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "args", tuple(self.args))
        if not self.args:
            raise ValueError("Or needs at least one disjunct; use Falsum instead")

    def _collect(self, seen: Dict[str, None]) -> None:
        for arg in self.args:
            arg._collect(seen)

    def evaluate(self, assignment: Mapping[str, TruthValue]) -> TruthValue:
        result = F
        for arg in self.args:
            value = arg.evaluate(assignment)
            if value is T:
                return T
            if value is U:
                result = U
        return result

    def holds(self, true_atoms: AbstractSet[str]) -> bool:
        return any(arg.holds(true_atoms) for arg in self.args)

    def substitute(self, mapping: Mapping[str, Formula]) -> Formula:
        return Or(tuple(arg.substitute(mapping) for arg in self.args))


def conjunction(items: Iterable[Formula]) -> Formula:
    """n-ary conjunction; Verum when empty, the item itself when single."""
    items = tuple(items)
    if not items:
        return Verum()
    if len(items) == 1:
        return items[0]
    return And(items)


def disjunction(items: Iterable[Formula]) -> Formula:
    """n-ary disjunction; Falsum when empty, the item itself when single."""
    items = tuple(items)
    if not items:
        return Falsum()
    if len(items) == 1:
        return items[0]
    return Or(items)


def literal(atom: str, positive: bool) -> Formula:
    return Atom(atom) if positive else Neg(Atom(atom))


def equivalent(left: Formula, right: Formula) -> bool:
    """Classical equivalence by truth table over the union of their atoms."""
    atoms = tuple(dict.fromkeys(left.atoms() + right.atoms()))
    return all(
        left.holds(chosen) == right.holds(chosen) for chosen in iter_subsets(atoms)
    )


# === OPERATIONS ===


def eval_kleene(formula: Formula, v: Interpretation3) -> TruthValue:
    """
    Evaluate ``formula`` under Kleene's strong three-valued logic.

    Raises:
        UnknownAtomError: If the formula mentions an atom outside ``v``'s universe
    """
    return formula.evaluate(v)


def _same_universe(v1: Interpretation3, v2: Interpretation3) -> None:
    if v1.universe != v2.universe:
        raise UniverseMismatchError(
            f"Universes differ: {list(v1.universe)} vs {list(v2.universe)}"
        )


def leq_info(v1: Interpretation3, v2: Interpretation3) -> bool:
    """Pointwise information ordering v1 ≤_i v2."""
    _same_universe(v1, v2)
    return all(a.leq_info(b) for a, b in zip(v1.values, v2.values))


def leq_truth(v1: Interpretation3, v2: Interpretation3) -> bool:
    """Pointwise truth ordering v1 ≤_t v2."""
    _same_universe(v1, v2)
    return all(a.leq_truth(b) for a, b in zip(v1.values, v2.values))


def meet(v1: Interpretation3, v2: Interpretation3) -> Interpretation3:
    """Pointwise consensus; the ≤_i-greatest lower bound."""
    _same_universe(v1, v2)
    return Interpretation3(
        v1.universe,
        tuple(a if a is b else U for a, b in zip(v1.values, v2.values)),
    )


def iter_completions(count: int) -> Iterator[Tuple[TruthValue, ...]]:
    """Binary counting over ``count`` positions, f before t, last position fastest."""
    return itertools.product(BINARY_ORDER, repeat=count)


def two_valued_extensions(
    v: Interpretation3, relevant: AbstractSet[str]
) -> List[Interpretation3]:
    """
    All completions [v]_2 of ``v`` restricted to the ``relevant`` atoms.

    Atoms outside ``relevant`` keep their value, so the result has
    2^k members where k counts the unknown relevant atoms.
    """
    for atom in relevant:
        if atom not in v:
            raise UnknownAtomError(atom, "interpretation universe")
    positions = [
        position
        for position, (atom, value) in enumerate(v.items())
        if value is U and atom in relevant
    ]
    extensions = []
    for choice in iter_completions(len(positions)):
        values = list(v.values)
        for position, value in zip(positions, choice):
            values[position] = value
        extensions.append(Interpretation3(v.universe, tuple(values)))
    return extensions


def check_enumeration_bound(
    universe: Sequence[str], bound: Optional[int] = None, base: int = 3
) -> None:
    """
    Raises:
        CapacityError: If ``universe`` has more atoms than ``bound`` (default 14)
    """
    bound = DEFAULT_MAX_STATEMENTS if bound is None else bound
    if len(universe) > bound:
        raise CapacityError(
            f"Enumerating {len(universe)} atoms needs {base ** len(universe)} "
            f"interpretations",
            required=base ** len(universe),
            bound=base**bound,
        )


def enumerate_interpretations(
    universe: Sequence[str], bound: Optional[int] = None
) -> Iterator[Interpretation3]:
    """
    Yield all 3^n interpretations over ``universe`` in ternary counting order.

    Raises:
        CapacityError: If ``universe`` has more atoms than ``bound``
    """
    universe = tuple(universe)
    check_enumeration_bound(universe, bound, 3)
    for values in itertools.product(TERNARY_ORDER, repeat=len(universe)):
        yield Interpretation3(universe, values)


def enumerate_two_valued(
    universe: Sequence[str], bound: Optional[int] = None
) -> Iterator[Interpretation3]:
    """Yield all 2^n two-valued interpretations, f before t per atom."""
    universe = tuple(universe)
    check_enumeration_bound(universe, bound, 2)
    for values in iter_completions(len(universe)):
        yield Interpretation3(universe, values)


def iter_subsets(items: Sequence[str]) -> Iterator[FrozenSet[str]]:
    """All subsets of ``items`` by bitmask, first item most significant."""
    items = tuple(items)
    for mask in range(1 << len(items)):
        yield frozenset(
            item
            for position, item in enumerate(items)
            if mask >> (len(items) - 1 - position) & 1
        )


def encode_subset(items: Sequence[str], subset: AbstractSet[str]) -> int:
    """Bitmask of ``subset`` with the first item most significant."""
    code = 0
    for item in items:
        code = code * 2 + (1 if item in subset else 0)
    return code


# === MODEL SELECTION ===


def sort_models(models: Iterable[Interpretation3]) -> List[Interpretation3]:
    """Canonical order: by ternary encoding, duplicates removed."""
    unique = {model.encode(): model for model in models}
    return [unique[code] for code in sorted(unique)]


def info_maximal(models: Sequence[Interpretation3]) -> List[Interpretation3]:
    """The ≤_i-maximal members of ``models``."""
    return [
        v
        for v in models
        if not any(w != v and leq_info(v, w) for w in models)
    ]


def info_least(models: Sequence[Interpretation3]) -> Optional[Interpretation3]:
    """The ≤_i-least member of ``models``, or None if there is none."""
    for v in models:
        if all(leq_info(v, w) for w in models):
            return v
    return None


def minimal_unknown(models: Sequence[Interpretation3]) -> List[Interpretation3]:
    """Members whose unknown-atom set is ⊆-minimal among ``models``."""
    return [
        v
        for v in models
        if not any(w.unknown_atoms < v.unknown_atoms for w in models)
    ]


def two_valued_only(models: Iterable[Interpretation3]) -> List[Interpretation3]:
    return [v for v in models if v.is_two_valued]
