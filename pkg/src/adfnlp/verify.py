"""
Differential verification harness.

Seeded random generators for programs, frameworks, families and SETAFs,
brute-force oracles, and a registry of executable checks that compare two
independent computations of the same semantics over a stream of random
instances. Failing trials are shrunk by bisecting their size bound.
"""

import logging
from dataclasses import dataclass, field
from typing import (
    Any,
    Callable,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Set,
    Tuple,
    Union,
)

from pydantic import BaseModel, ConfigDict, Field

from .config import DEFAULT_SEED, DEFAULT_TRIALS
from .exceptions import UnknownCheckError
from .logic import (
    F,
    T,
    U,
    And,
    Atom,
    Falsum,
    Formula,
    Interpretation3,
    Neg,
    Or,
    TruthValue,
    Verum,
    conjunction,
    enumerate_interpretations,
    enumerate_two_valued,
    equivalent,
    info_maximal,
    iter_subsets,
    leq_info,
    minimal_unknown,
    sort_models,
    two_valued_only,
)
from .parsers import (
    parse_adf,
    parse_program,
    render_adf,
    render_formula,
    render_interpretation,
    render_program,
    render_setaf,
)
from .semantics.adf import (
    Adf,
    CSetFamily,
    LinkClass,
    Part1Semantics,
    classify_link,
    complete_models,
    cset_to_formula,
    formula_to_cset,
    gamma,
    grounded_model,
    kleene_complete_models,
    kleene_grounded_model,
    least_model_part1,
    part1_semantics,
    partial_stable_models_part1,
    preferred_models,
    stable_models,
)
from .semantics.adfplus import (
    AdfPlus,
    AdfPlusViolation,
    check_adfplus,
    cmax,
    ensure_adfplus,
    gamma_plus,
    negative_dnf,
    redundant_links_by_cmax,
    redundant_links_by_count,
    stable_models_plus,
)
from .semantics.nlp import (
    Program,
    Rule,
    is_model_lp,
    omega,
    partial_stable_models,
    well_founded_model,
)
from .translate import (
    Setaf,
    compute_supports,
    p_of_xi,
    round_trip_adf,
    setaf_to_adf,
    xi,
    xi2,
)

logger = logging.getLogger(__name__)

# SplitMix64 update constants
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_MULTIPLIER_1 = 0xBF58476D1CE4E5B9
MIX_MULTIPLIER_2 = 0x94D049BB133111EB
MASK64 = (1 << 64) - 1


class SplitMix64:
    """
    Splittable 64-bit generator.

    state += 0x9E3779B97F4A7C15, then the output is mixed with
    z = (z ^ z>>30) * 0xBF58476D1CE4E5B9, z = (z ^ z>>27) * 0x94D049BB133111EB,
    z ^ z>>31, all modulo 2^64. Identical seeds give identical streams on
    every platform.
    """

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * MIX_MULTIPLIER_1) & MASK64
        z = ((z ^ (z >> 27)) * MIX_MULTIPLIER_2) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform-ish integer in [0, n)."""
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next_u64() % n

    def chance(self, numerator: int = 1, denominator: int = 2) -> bool:
        return self.below(denominator) < numerator

    def choice(self, items: Sequence[Any]) -> Any:
        return items[self.below(len(items))]

    def shuffled(self, items: Iterable[Any]) -> List[Any]:
        """Fisher-Yates shuffle into a new list."""
        result = list(items)
        for i in range(len(result) - 1, 0, -1):
            j = self.below(i + 1)
            result[i], result[j] = result[j], result[i]
        return result

    def split(self) -> "SplitMix64":
        """An independent generator seeded from this one."""
        return SplitMix64(self.next_u64())


class GenConfig(BaseModel):
    """Seed and size bounds of a generated instance stream."""

    model_config = ConfigDict(frozen=True)

    seed: int = Field(default=DEFAULT_SEED, ge=0, lt=2**64)
    max_atoms: int = Field(default=6, ge=0)
    max_rules: int = Field(default=8, ge=0)
    max_body: int = Field(default=3, ge=0)
    max_statements: int = Field(default=6, ge=0)
    max_parents: int = Field(default=5, ge=0)
    trials: int = Field(default=DEFAULT_TRIALS, ge=0)


def trial_seeds(cfg: GenConfig) -> List[int]:
    """The first seed is ``cfg.seed`` itself, the rest come from its stream."""
    if cfg.trials == 0:
        return []
    rng = SplitMix64(cfg.seed)
    return [cfg.seed] + [rng.next_u64() for _ in range(cfg.trials - 1)]


# === GENERATORS ===


def atom_names(count: int) -> Tuple[str, ...]:
    """a, b, …, z, then x26, x27, …"""
    return tuple(chr(ord("a") + i) if i < 26 else f"x{i}" for i in range(count))


def random_program(
    rng: SplitMix64, cfg: GenConfig, negative_body: bool = False
) -> Program:
    """
    A random ground program.

    Heads and body atoms are drawn from the first ``max_atoms`` names; each
    rule has up to ``max_body`` body literals, all negated when
    ``negative_body`` is set.
    """
    if cfg.max_atoms == 0 or cfg.max_rules == 0:
        return Program(())
    atoms = atom_names(rng.below(cfg.max_atoms) + 1)
    rules = []
    for _ in range(rng.below(cfg.max_rules) + 1):
        head = rng.choice(atoms)
        pos: List[str] = []
        neg: List[str] = []
        for _ in range(rng.below(cfg.max_body + 1)):
            atom = rng.choice(atoms)
            if negative_body or rng.chance():
                neg.append(atom)
            else:
                pos.append(atom)
        rules.append(Rule(head, tuple(pos), tuple(neg)))
    return Program(tuple(rules))


def gen_program(cfg: GenConfig) -> Iterator[Program]:
    """One random program per trial seed."""
    for seed in trial_seeds(cfg):
        yield random_program(SplitMix64(seed), cfg)


def random_formula(rng: SplitMix64, atoms: Sequence[str], depth: int = 2) -> Formula:
    if not atoms:
        return Verum() if rng.chance() else Falsum()
    if depth == 0 or rng.below(3) == 0:
        roll = rng.below(10)
        if roll == 0:
            return Verum()
        if roll == 1:
            return Falsum()
        return Atom(rng.choice(atoms))
    kind = rng.below(3)
    if kind == 0:
        return Neg(random_formula(rng, atoms, depth - 1))
    args = tuple(random_formula(rng, atoms, depth - 1) for _ in range(2 + rng.below(2)))
    return And(args) if kind == 1 else Or(args)


def _random_parents(
    rng: SplitMix64, statements: Sequence[str], limit: int
) -> Tuple[str, ...]:
    chosen = [s for s in statements if rng.chance()]
    if len(chosen) > limit:
        keep = set(rng.shuffled(chosen)[:limit])
        chosen = [s for s in chosen if s in keep]
    return tuple(chosen)


def random_family(
    rng: SplitMix64, parents: Sequence[str], downward_closed: bool = False
) -> CSetFamily:
    """
    A random C^t family over ``parents``.

    Downward-closed families are the closure of zero to three random
    generator sets; the others include every subset with probability 1/2.
    """
    parents = tuple(parents)
    if not downward_closed:
        return CSetFamily(
            parents, frozenset(r for r in iter_subsets(parents) if rng.chance())
        )
    accepted: Set[FrozenSet[str]] = set()
    for _ in range(rng.below(4)):
        generator = [p for p in parents if rng.chance()]
        accepted.update(iter_subsets(generator))
    return CSetFamily(parents, frozenset(accepted))


def _statement_count(rng: SplitMix64, cfg: GenConfig) -> int:
    return rng.below(cfg.max_statements) + 1 if cfg.max_statements else 0


def random_adf(rng: SplitMix64, cfg: GenConfig, full_dnf: bool = False) -> Adf:
    """
    A random ADF with arbitrary acceptance formulas.

    With ``full_dnf`` every condition is the full DNF of a random family,
    the representation the labelling reduct is defined on.
    """
    statements = atom_names(_statement_count(rng, cfg))
    acceptance = {}
    for s in statements:
        parents = _random_parents(rng, statements, cfg.max_parents)
        if full_dnf:
            acceptance[s] = cset_to_formula(random_family(rng, parents))
        else:
            acceptance[s] = random_formula(rng, parents)
    return Adf(statements, acceptance)


def random_adfplus(rng: SplitMix64, cfg: GenConfig) -> AdfPlus:
    """
    A random ADF⁺: each condition comes from a downward-closed family,
    written either as its full DNF or in negative DNF over C^max.
    """
    statements = atom_names(_statement_count(rng, cfg))
    acceptance = {}
    for s in statements:
        fam = random_family(
            rng, _random_parents(rng, statements, cfg.max_parents), downward_closed=True
        )
        if rng.chance():
            acceptance[s] = cset_to_formula(fam)
        else:
            acceptance[s] = negative_dnf(cmax(fam))
    return ensure_adfplus(Adf(statements, acceptance))


def gen_adfplus(cfg: GenConfig) -> Iterator[AdfPlus]:
    """One random ADF⁺ per trial seed."""
    for seed in trial_seeds(cfg):
        yield random_adfplus(SplitMix64(seed), cfg)


def random_attack_adf(rng: SplitMix64, cfg: GenConfig) -> Adf:
    """An ADF in which every φ_s is a conjunction of negated parents."""
    statements = atom_names(_statement_count(rng, cfg))
    acceptance = {
        s: conjunction(
            Neg(Atom(p)) for p in _random_parents(rng, statements, cfg.max_parents)
        )
        for s in statements
    }
    return Adf(statements, acceptance)


def random_setaf(rng: SplitMix64, cfg: GenConfig) -> Setaf:
    arguments = atom_names(_statement_count(rng, cfg))
    attacks = []
    if arguments:
        for _ in range(rng.below(len(arguments) + 2)):
            size = rng.below(min(3, len(arguments))) + 1
            attackers = tuple(rng.shuffled(arguments)[:size])
            attacks.append((attackers, rng.choice(arguments)))
    return Setaf(arguments, tuple(attacks))


def random_interpretation(
    rng: SplitMix64, universe: Sequence[str]
) -> Interpretation3:
    return Interpretation3(
        tuple(universe), tuple(rng.choice((U, F, T)) for _ in universe)
    )


# === ORACLES ===


def derivation_supports(P: Program) -> Dict[str, FrozenSet[FrozenSet[str]]]:
    """
    Supports of every atom, by top-down search over derivation trees.

    A rule may not be reused below itself on any branch, which is the same
    restriction as requiring it to be absent from the rules of every child
    derivation.
    """
    memo: Dict[Tuple[str, FrozenSet[Rule]], Set[FrozenSet[str]]] = {}

    def derive(atom: str, ancestors: FrozenSet[Rule]) -> Set[FrozenSet[str]]:
        key = (atom, ancestors)
        if key in memo:
            return memo[key]
        found: Set[FrozenSet[str]] = set()
        for rule in dict.fromkeys(P.rules_for(atom)):
            if rule in ancestors:
                continue
            below = ancestors | {rule}
            partial: Set[FrozenSet[str]] = {frozenset(rule.neg)}
            for child in rule.pos:
                options = derive(child, below)
                partial = {left | right for left in partial for right in options}
                if not partial:
                    break
            found.update(partial)
        memo[key] = found
        return found

    return {
        atom: frozenset(derive(atom, frozenset())) for atom in P.herbrand_base
    }


# === REPORTS ===


class Failure(BaseModel):
    """A failing trial; ``seed`` is None for a fixed worked example."""

    seed: Optional[int] = None
    instance: str
    expected: str
    actual: str
    bound: Optional[int] = None


class CheckReport(BaseModel):
    check: str
    trials: int
    fixed: int = 0
    failures: List[Failure] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


class NegativeSearchReport(BaseModel):
    """Witness frameworks found for each separation, None when none was found."""

    trials: int
    witnesses: Dict[str, Optional[str]]

    @property
    def complete(self) -> bool:
        return all(witness is not None for witness in self.witnesses.values())


# === CHECK REGISTRY ===

Outcome = Optional[Tuple[str, str]]


@dataclass(frozen=True)
class Check:
    """
    A registered check.

    ``compare`` returns None on agreement, or the expected and actual
    renderings of the first disagreement.
    """

    name: str
    description: str
    generate: Callable[[SplitMix64, GenConfig], Any]
    compare: Callable[[Any], Outcome]
    render: Callable[[Any], str]
    fixed: Callable[[], List[Any]] = field(default=lambda: [])
    size_field: Optional[str] = None
    in_default: bool = True


CHECKS: Dict[str, Check] = {}
ALIASES = {"pstable↔complete": "pstable-complete"}


def register(
    name: str,
    description: str,
    generate: Callable[[SplitMix64, GenConfig], Any],
    render: Callable[[Any], str],
    fixed: Optional[Callable[[], List[Any]]] = None,
    size_field: Optional[str] = None,
    in_default: bool = True,
) -> Callable[[Callable[[Any], Outcome]], Callable[[Any], Outcome]]:
    def decorator(compare: Callable[[Any], Outcome]) -> Callable[[Any], Outcome]:
        CHECKS[name] = Check(
            name,
            description,
            generate,
            compare,
            render,
            fixed or (lambda: []),
            size_field,
            in_default,
        )
        return compare

    return decorator


def check_names(include_optional: bool = False) -> List[str]:
    return [
        name for name, check in CHECKS.items() if check.in_default or include_optional
    ]


def resolve_check(name: str) -> Check:
    """
    Raises:
        UnknownCheckError: If ``name`` is not registered
    """
    check = CHECKS.get(ALIASES.get(name, name))
    if check is None:
        raise UnknownCheckError(
            f"Unknown check '{name}'. Available: {', '.join(sorted(CHECKS))}"
        )
    return check


# === RENDERING ===


def render_models(models: Iterable[Interpretation3]) -> str:
    return "[" + "; ".join(render_interpretation(v) for v in sort_models(models)) + "]"


def _first_difference(
    pairs: Sequence[Tuple[str, Iterable[Interpretation3], Iterable[Interpretation3]]]
) -> Outcome:
    for label, expected, actual in pairs:
        left, right = render_models(expected), render_models(actual)
        if left != right:
            return f"{label}: {left}", f"{label}: {right}"
    return None


def _render_any(instance: Any) -> str:
    if isinstance(instance, Program):
        return render_program(instance)
    if isinstance(instance, AdfPlus):
        return render_adf(instance.adf)
    if isinstance(instance, Adf):
        return render_adf(instance)
    if isinstance(instance, Setaf):
        return render_setaf(instance)
    if isinstance(instance, CSetFamily):
        members = ", ".join(
            "{" + ",".join(p for p in instance.parents if p in member) + "}"
            for member in instance.ordered()
        )
        return f"parents=({','.join(instance.parents)}) accepted=[{members}]\n"
    if isinstance(instance, Formula):
        return render_formula(instance) + "\n"
    if isinstance(instance, Interpretation3):
        return render_interpretation(instance) + "\n"
    if isinstance(instance, tuple):
        return "".join(_render_any(item) for item in instance)
    return repr(instance) + "\n"


# === WORKED EXAMPLES ===

SAMPLE_PROGRAM = """\
b :- c, not a.
a :- not b.
c :- d.
p :- c, d, not p.
p :- not a.
d.
"""

# Two programs with the same naive translation but different partial stable models.
SAMPLE_PROGRAM_CHAINED = """\
c.
b :- not b.
a :- b.
a :- c.
"""

SAMPLE_PROGRAM_GUARDED = """\
c.
b :- not b.
a :- b, not c.
a :- c, not b.
a :- b, c.
"""

SAMPLE_ADF = """\
s(a). s(b). s(c). s(d). s(e).
ac(a,neg(b)).
ac(b,neg(a)).
ac(c,and(neg(b),e)).
ac(d,neg(c)).
ac(e,neg(d)).
"""

SAMPLE_ADFPLUS = """\
s(a). s(b). s(c). s(d). s(e).
ac(a,neg(b)).
ac(b,neg(a)).
ac(c,or(and(neg(c),neg(a)),and(neg(c),neg(d)))).
ac(d,neg(d)).
ac(e,and(neg(e),neg(b))).
"""

SAMPLE_KLEENE_ADF = """\
s(a). s(b). s(c).
ac(a,c(v)).
ac(b,or(neg(a),c)).
ac(c,b).
"""

SAMPLE_REDUNDANT_ADF = """\
s(a). s(b). s(c).
ac(a,or(and(b,neg(c)),and(neg(b),neg(c)))).
ac(b,c(v)).
ac(c,c(v)).
"""

SELF_ATTACK_ADF = """\
s(a).
ac(a,neg(a)).
"""


def _full_dnf(D: Adf) -> Adf:
    return Adf(
        D.statements,
        {
            s: cset_to_formula(formula_to_cset(D.formula(s), D.parents(s)))
            for s in D.statements
        },
    )


# === CHECKS: programs and their translation ===


def _programs(*texts: str) -> Callable[[], List[Any]]:
    return lambda: [parse_program(text) for text in texts]


def _adfs(*texts: str) -> Callable[[], List[Any]]:
    return lambda: [parse_adf(text) for text in texts]


def _adfpluses(*texts: str) -> Callable[[], List[Any]]:
    return lambda: [ensure_adfplus(parse_adf(text)) for text in texts]


@register(
    "pstable-complete",
    "Partial stable models of P are the complete models of Ξ(P)",
    random_program,
    _render_any,
    _programs(SAMPLE_PROGRAM, SAMPLE_PROGRAM_CHAINED, SAMPLE_PROGRAM_GUARDED),
    "max_atoms",
)
def _check_pstable_complete(P: Program) -> Outcome:
    return _first_difference(
        [("complete", partial_stable_models(P), complete_models(xi(P).adf))]
    )


@register(
    "lp-adf-equivalence",
    "Well-founded, regular, stable and L-stable models of P match grounded, "
    "preferred, stable and L-stable models of Ξ(P)",
    random_program,
    _render_any,
    _programs(SAMPLE_PROGRAM, SAMPLE_PROGRAM_CHAINED, SAMPLE_PROGRAM_GUARDED),
    "max_atoms",
)
def _check_lp_adf_equivalence(P: Program) -> Outcome:
    psm = partial_stable_models(P)
    D = xi(P).adf
    complete = complete_models(D)
    return _first_difference(
        [
            ("grounded", [well_founded_model(P)], [grounded_model(D)]),
            ("preferred", info_maximal(psm), info_maximal(complete)),
            ("stable", two_valued_only(psm), stable_models(D)),
            ("l-stable", minimal_unknown(psm), minimal_unknown(complete)),
        ]
    )


def _negative_program(rng: SplitMix64, cfg: GenConfig) -> Program:
    return random_program(rng, cfg, negative_body=True)


@register(
    "xi-eq-xi2-negbody",
    "Ξ(P) and Ξ₂(P) coincide on programs without positive body atoms",
    _negative_program,
    _render_any,
    _programs("a :- not b.\nb :- not a.\nc :- not c, not a.\nd.\n"),
    "max_atoms",
)
def _check_xi_eq_xi2(P: Program) -> Outcome:
    support_based = xi(P).adf
    naive = xi2(P)
    for s in P.herbrand_base:
        if not equivalent(support_based.formula(s), naive.formula(s)):
            return (
                f"{s}: {render_formula(support_based.formula(s))}",
                f"{s}: {render_formula(naive.formula(s))}",
            )
    return None


@register(
    "psm-model",
    "Every partial stable model is a three-valued model of the program",
    random_program,
    _render_any,
    _programs(SAMPLE_PROGRAM),
    "max_atoms",
)
def _check_psm_model(P: Program) -> Outcome:
    for v in partial_stable_models(P):
        if not is_model_lp(P, v):
            return "model", f"not a model: {render_interpretation(v)}"
    return None


@register(
    "lp-chain",
    "stable ⊆ L-stable ⊆ regular ⊆ partial stable, with the well-founded "
    "model below every partial stable model",
    random_program,
    _render_any,
    _programs(SAMPLE_PROGRAM),
    "max_atoms",
)
def _check_lp_chain(P: Program) -> Outcome:
    psm = partial_stable_models(P)
    regular = info_maximal(psm)
    l_stable = minimal_unknown(psm)
    stable = two_valued_only(psm)
    chain = [
        ("stable ⊆ l-stable", stable, l_stable),
        ("l-stable ⊆ regular", l_stable, regular),
        ("regular ⊆ psm", regular, psm),
    ]
    for label, smaller, larger in chain:
        codes = {v.encode() for v in larger}
        if any(v.encode() not in codes for v in smaller):
            return (
                f"{label}: {render_models(larger)}",
                f"{label}: {render_models(smaller)}",
            )
    wf = well_founded_model(P)
    if not all(leq_info(wf, v) for v in psm) or wf not in psm:
        return (
            f"least: {render_models(psm)}",
            f"well-founded: {render_interpretation(wf)}",
        )
    return None


PermutedProgram = Tuple[Program, Program, Tuple[Interpretation3, ...]]


def _permuted_program(rng: SplitMix64, cfg: GenConfig) -> PermutedProgram:
    P = random_program(rng, cfg)
    Q = Program(
        tuple(
            Rule(rule.head, tuple(reversed(rule.pos)), rule.neg)
            for rule in rng.shuffled(P.rules)
        ),
        P.herbrand_base,
    )
    samples = tuple(random_interpretation(rng, P.herbrand_base) for _ in range(8))
    return P, Q, samples


@register(
    "omega-permutation",
    "Ω is independent of rule order and positive body order",
    _permuted_program,
    _render_any,
    None,
    "max_atoms",
)
def _check_omega_permutation(
    instance: PermutedProgram,
) -> Outcome:
    P, Q, samples = instance
    for I in samples:
        left, right = omega(P, I), omega(Q, I)
        if left != right:
            return (
                f"Ω({render_interpretation(I)}) = {render_interpretation(left)}",
                f"Ω({render_interpretation(I)}) = {render_interpretation(right)}",
            )
    return _first_difference(
        [("psm", partial_stable_models(P), partial_stable_models(Q))]
    )


@register(
    "support-oracle",
    "Saturated supports match a top-down search over derivation trees",
    random_program,
    _render_any,
    _programs(SAMPLE_PROGRAM, SAMPLE_PROGRAM_CHAINED),
    "max_atoms",
)
def _check_support_oracle(P: Program) -> Outcome:
    saturated = compute_supports(P)
    searched = derivation_supports(P)
    for atom in P.herbrand_base:
        if saturated[atom] != searched[atom]:
            return (
                f"Sup({atom}) = {_render_supports(searched[atom])}",
                f"Sup({atom}) = {_render_supports(saturated[atom])}",
            )
    return None


def _render_supports(family: FrozenSet[FrozenSet[str]]) -> str:
    members = sorted("{" + ",".join(f"~{b}" for b in sorted(B)) + "}" for B in family)
    return "{" + ", ".join(members) + "}"


@register(
    "pxi-complete",
    "Partial stable models of P(D) are the complete models of D, and the "
    "round trip Ξ(P(D)) keeps the complete models, for attack-only conditions",
    random_attack_adf,
    _render_any,
    _adfs(SAMPLE_ADF),
    "max_statements",
)
def _check_pxi_complete(D: Adf) -> Outcome:
    """
    Only attack-only conditions qualify. A positive cycle such as a[a] gives
    P(D) fewer partial stable models. So does any ADF⁺ statement with more
    than one accepted set: one rule per set evaluates under Kleene logic,
    which is weaker than the consensus over completions. A redundant link
    always produces such a statement.
    """
    complete = complete_models(D)
    program = p_of_xi(D)
    lifted = [v.lift(D.statements, default=F) for v in partial_stable_models(program)]
    return _first_difference(
        [
            ("psm(P(D))", complete, lifted),
            ("complete(Ξ(P(D)))", complete, complete_models(round_trip_adf(D))),
        ]
    )


# === CHECKS: ADF⁺ ===


@register(
    "gammaomega",
    "On ADF⁺ the consensus operator equals pointwise evaluation of the "
    "negative-DNF conditions",
    random_adfplus,
    _render_any,
    _adfpluses(SAMPLE_ADFPLUS),
    "max_statements",
)
def _check_gammaomega(Dp: AdfPlus) -> Outcome:
    for v in enumerate_interpretations(Dp.statements):
        consensus, pointwise = gamma(Dp.adf, v), gamma_plus(Dp, v)
        if consensus != pointwise:
            return (
                f"Γ({render_interpretation(v)}) = {render_interpretation(consensus)}",
                f"Γ⁺({render_interpretation(v)}) = "
                f"{render_interpretation(pointwise)}",
            )
    return None


@register(
    "stable2valued",
    "On ADF⁺ the stable models are the two-valued complete models",
    random_adfplus,
    _render_any,
    _adfpluses(SELF_ATTACK_ADF, SAMPLE_ADFPLUS),
    "max_statements",
)
def _check_stable_two_valued(Dp: AdfPlus) -> Outcome:
    two_valued = two_valued_only(complete_models(Dp.adf))
    return _first_difference(
        [
            ("stable", two_valued, stable_models(Dp.adf)),
            ("pointwise stable", two_valued, stable_models_plus(Dp)),
        ]
    )


def _downward_family(rng: SplitMix64, cfg: GenConfig) -> CSetFamily:
    parents = atom_names(rng.below(cfg.max_parents + 1))
    return random_family(rng, parents, downward_closed=True)


def _family_adf(fam: CSetFamily) -> Adf:
    acceptance: Dict[str, Formula] = {p: Verum() for p in fam.parents}
    acceptance["target"] = cset_to_formula(fam)
    return Adf(("target",) + fam.parents, acceptance)


def _render_links(links: Iterable[Tuple[str, str]]) -> str:
    return "{" + ", ".join(f"({r},{s})" for r, s in sorted(links)) + "}"


@register(
    "redundancy-count",
    "Counting, C^max membership and the definition classify the same links "
    "as redundant",
    _downward_family,
    _render_any,
    lambda: [formula_to_cset(parse_adf(SAMPLE_REDUNDANT_ADF).formula("a"))],
    "max_parents",
)
def _check_redundancy_count(fam: CSetFamily) -> Outcome:
    D = _family_adf(fam)
    Dp = ensure_adfplus(D)
    by_definition = {
        link for link in D.links() if classify_link(D, link) is LinkClass.REDUNDANT
    }
    for label, found in (
        ("count", redundant_links_by_count(Dp)),
        ("cmax", redundant_links_by_cmax(Dp)),
    ):
        if found != by_definition:
            return (
                f"definition: {_render_links(by_definition)}",
                f"{label}: {_render_links(found)}",
            )
    return None


@register(
    "setaf-is-adfplus",
    "SETAF translations are ADF⁺ and reject exactly the supersets of an "
    "attacking set",
    random_setaf,
    _render_any,
    None,
    "max_statements",
)
def _check_setaf_is_adfplus(SF: Setaf) -> Outcome:
    Dp = setaf_to_adf(SF)
    result = check_adfplus(Dp.adf)
    if isinstance(result, AdfPlusViolation):
        return "ADF⁺", str(result)
    for a in SF.arguments:
        fam = formula_to_cset(result.formula(a), result.parents(a))
        attackers = [frozenset(X) for X in SF.attackers_of(a)]
        for B in iter_subsets(fam.parents):
            rejected = any(X <= B for X in attackers)
            if fam.accepts(B) == rejected:
                members = "{" + ",".join(sorted(B)) + "}"
                return (
                    f"C_{a}({members}) = {'f' if rejected else 't'}",
                    f"C_{a}({members}) = {'t' if rejected else 'f'}",
                )
    return None


# === CHECKS: general ADFs ===


def _small_adf(rng: SplitMix64, cfg: GenConfig) -> Adf:
    narrowed = cfg.model_copy(update={"max_statements": min(cfg.max_statements, 4)})
    return random_adf(rng, narrowed)


@register(
    "gamma-monotone",
    "Γ_D is ≤_i-monotone",
    _small_adf,
    _render_any,
    _adfs(SAMPLE_ADF),
    "max_statements",
)
def _check_gamma_monotone(D: Adf) -> Outcome:
    table = {v: gamma(D, v) for v in enumerate_interpretations(D.statements)}
    # Covering pairs suffice: ≤_i is generated by single u → t/f steps.
    for v, image in table.items():
        for atom in v.unknown_atoms:
            for value in (T, F):
                w = v.updated({atom: value})
                if not leq_info(image, table[w]):
                    return (
                        f"Γ({render_interpretation(v)}) ≤_i "
                        f"Γ({render_interpretation(w)})",
                        f"{render_interpretation(image)} vs "
                        f"{render_interpretation(table[w])}",
                    )
    return None


@register(
    "adf-stable-complete",
    "Stable and preferred models are complete; the grounded model is the "
    "least complete model",
    random_adf,
    _render_any,
    _adfs(SAMPLE_ADF, SAMPLE_ADFPLUS, SAMPLE_KLEENE_ADF),
    "max_statements",
)
def _check_adf_stable_complete(D: Adf) -> Outcome:
    complete = complete_models(D)
    codes = {v.encode() for v in complete}
    for label, models in (
        ("stable", stable_models(D)),
        ("preferred", preferred_models(D)),
    ):
        if any(v.encode() not in codes for v in models):
            return (
                f"{label} ⊆ {render_models(complete)}",
                f"{label}: {render_models(models)}",
            )
    grounded = grounded_model(D)
    least = all(leq_info(grounded, v) for v in complete)
    if grounded.encode() not in codes or not least:
        return (
            f"least of {render_models(complete)}",
            f"grounded: {render_interpretation(grounded)}",
        )
    return None


def _full_dnf_adf(rng: SplitMix64, cfg: GenConfig) -> Adf:
    return random_adf(rng, cfg, full_dnf=True)


@register(
    "psm-is-complete",
    "Every partial stable labelling is a fixpoint of the Kleene operator",
    _full_dnf_adf,
    _render_any,
    lambda: [_full_dnf(parse_adf(SAMPLE_KLEENE_ADF))],
    "max_statements",
)
def _check_psm_is_complete(D: Adf) -> Outcome:
    complete = kleene_complete_models(D)
    codes = {v.encode() for v in complete}
    for v in partial_stable_models_part1(D):
        if v.encode() not in codes:
            return (
                f"⊆ {render_models(complete)}",
                f"partial stable: {render_interpretation(v)}",
            )
    return None


@register(
    "grounded-least",
    "The Kleene grounded model is the ≤_i-least model",
    _full_dnf_adf,
    _render_any,
    lambda: [_full_dnf(parse_adf(SAMPLE_KLEENE_ADF))],
    "max_statements",
)
def _check_grounded_least(D: Adf) -> Outcome:
    least = least_model_part1(D)
    grounded = kleene_grounded_model(D)
    if least != grounded:
        rendered = "none" if least is None else render_interpretation(least)
        return (
            f"least model: {render_interpretation(grounded)}",
            f"least model: {rendered}",
        )
    return None


# === CHECKS: formulas ===


def _small_formula(rng: SplitMix64, cfg: GenConfig) -> Formula:
    return random_formula(rng, atom_names(min(cfg.max_atoms, 4)), depth=3)


@register(
    "kleene-classical",
    "Kleene evaluation agrees with classical evaluation on two-valued inputs",
    _small_formula,
    _render_any,
    None,
    "max_atoms",
)
def _check_kleene_classical(phi: Formula) -> Outcome:
    for v in enumerate_two_valued(atom_names(4)):
        kleene = phi.evaluate(v)
        classical = TruthValue.from_bool(phi.holds(set(v.true_atoms)))
        if kleene is not classical:
            return (
                f"{render_interpretation(v)}: {classical.value}",
                f"{render_interpretation(v)}: {kleene.value}",
            )
    return None


def _formula_and_family(rng: SplitMix64, cfg: GenConfig) -> Tuple[Formula, CSetFamily]:
    atoms = atom_names(min(cfg.max_atoms, 4))
    return random_formula(rng, atoms, depth=3), random_family(rng, atoms)


@register(
    "cset-roundtrip",
    "Formulas survive the trip through C^t and back up to equivalence, and "
    "families survive the trip through their full DNF exactly",
    _formula_and_family,
    _render_any,
    None,
    "max_atoms",
)
def _check_cset_roundtrip(instance: Tuple[Formula, CSetFamily]) -> Outcome:
    phi, fam = instance
    back = cset_to_formula(formula_to_cset(phi))
    if not equivalent(back, phi):
        return render_formula(phi), render_formula(back)
    again = formula_to_cset(cset_to_formula(fam), fam.parents)
    if again != fam:
        return _render_any(fam).strip(), _render_any(again).strip()
    return None


# === RUNNER ===


def _outcome(check: Check, instance: Any) -> Outcome:
    try:
        return check.compare(instance)
    except Exception as e:
        logger.debug("Check %s raised on %r", check.name, instance, exc_info=True)
        return "no error", f"{type(e).__name__}: {e}"


def _trial(check: Check, seed: int, cfg: GenConfig) -> Tuple[Any, Outcome]:
    instance = check.generate(SplitMix64(seed), cfg)
    return instance, _outcome(check, instance)


def _shrink(
    check: Check, seed: int, cfg: GenConfig, instance: Any, outcome: Tuple[str, str]
) -> Failure:
    """Bisect the size bound down to the smallest one at which ``seed`` still fails."""
    bound: Optional[int] = None
    if check.size_field is not None:
        high = getattr(cfg, check.size_field)
        low = 0
        while low < high:
            middle = (low + high) // 2
            smaller = cfg.model_copy(update={check.size_field: middle})
            candidate, result = _trial(check, seed, smaller)
            if result is None:
                low = middle + 1
            else:
                high, instance, outcome = middle, candidate, result
        bound = high
    return Failure(
        seed=seed,
        instance=check.render(instance),
        expected=outcome[0],
        actual=outcome[1],
        bound=bound,
    )


def run_check(name: str, cfg: Optional[GenConfig] = None) -> CheckReport:
    """
    Run one registered check.

    The worked examples attached to the check run first, then one random
    instance per trial seed. Every failing seed is shrunk before it is
    reported.

    Args:
        name: Registered check name
        cfg: Seed and size bounds (defaults to ``GenConfig()``)

    Returns:
        Report with failures sorted by seed

    Raises:
        UnknownCheckError: If ``name`` is not registered
    """
    check = resolve_check(name)
    cfg = cfg or GenConfig()
    failures: List[Failure] = []

    fixed = check.fixed()
    for instance in fixed:
        outcome = _outcome(check, instance)
        if outcome is not None:
            failures.append(
                Failure(
                    instance=check.render(instance),
                    expected=outcome[0],
                    actual=outcome[1],
                )
            )

    seeds = trial_seeds(cfg)
    for seed in seeds:
        instance, outcome = _trial(check, seed, cfg)
        if outcome is not None:
            logger.info("Check %s failed for seed %d; shrinking", check.name, seed)
            failures.append(_shrink(check, seed, cfg, instance, outcome))

    failures.sort(key=lambda failure: (failure.seed is not None, failure.seed or 0))
    logger.info(
        "Check %s: %d fixed, %d trials, %d failures",
        check.name,
        len(fixed),
        len(seeds),
        len(failures),
    )
    return CheckReport(
        check=check.name, trials=len(seeds), fixed=len(fixed), failures=failures
    )


def run_checks(
    names: Union[str, Sequence[str]] = "all", cfg: Optional[GenConfig] = None
) -> List[CheckReport]:
    """Run several checks; ``"all"`` means every check included by default."""
    if isinstance(names, str):
        names = check_names() if names == "all" else [names]
    return [run_check(name, cfg) for name in names]


# === SEPARATING EXAMPLES ===

SEPARATIONS: Dict[str, Tuple[Part1Semantics, Part1Semantics]] = {
    "preferred-not-regular": (Part1Semantics.PREFERRED_PART1, Part1Semantics.REGULAR),
    "regular-not-preferred": (Part1Semantics.REGULAR, Part1Semantics.PREFERRED_PART1),
    "lstable-not-semistable": (
        Part1Semantics.L_STABLE_PART1,
        Part1Semantics.SEMI_STABLE,
    ),
    "semistable-not-lstable": (
        Part1Semantics.SEMI_STABLE,
        Part1Semantics.L_STABLE_PART1,
    ),
}


def separates(D: Adf, left: Part1Semantics, right: Part1Semantics) -> bool:
    """Some ``left`` model of ``D`` is not a ``right`` model."""
    codes = {v.encode() for v in part1_semantics(D, right)}
    return any(v.encode() not in codes for v in part1_semantics(D, left))


def search_negatives(cfg: Optional[GenConfig] = None) -> NegativeSearchReport:
    """
    Look for frameworks separating labelling semantics that are not
    contained in one another.

    The worked three-statement example is tried first, then one random
    full-DNF framework per trial seed until every separation has a witness.
    """
    cfg = cfg or GenConfig()
    witnesses: Dict[str, Optional[str]] = {name: None for name in SEPARATIONS}

    def record(D: Adf) -> None:
        for name, (left, right) in SEPARATIONS.items():
            if witnesses[name] is None and separates(D, left, right):
                witnesses[name] = render_adf(D)

    record(_full_dnf(parse_adf(SAMPLE_KLEENE_ADF)))
    trials = 0
    for seed in trial_seeds(cfg):
        if all(witness is not None for witness in witnesses.values()):
            break
        trials += 1
        record(random_adf(SplitMix64(seed), cfg, full_dnf=True))

    for name, witness in witnesses.items():
        if witness is None:
            logger.warning("No witness found for %s after %d trials", name, trials)
    return NegativeSearchReport(trials=trials, witnesses=witnesses)
