"""Property-based tests over small random formulas, frameworks and programs."""

from hypothesis import given, settings
from hypothesis import strategies as st

from adfnlp.logic import (
    TERNARY_ORDER,
    U,
    And,
    Atom,
    Falsum,
    Interpretation3,
    Neg,
    Or,
    Verum,
    consensus,
    eval_kleene,
    leq_info,
    two_valued_extensions,
)
from adfnlp.semantics.adf import Adf, complete_models, gamma, grounded_model
from adfnlp.semantics.nlp import (
    Program,
    Rule,
    omega_iterations,
    partial_stable_models,
    well_founded_model,
)
from adfnlp.translate import xi
from adfnlp.verify import GenConfig, SplitMix64, gen_program

ATOMS = ("a", "b", "c")

truth_values = st.sampled_from(TERNARY_ORDER)

interpretations = st.tuples(*[truth_values] * len(ATOMS)).map(
    lambda values: Interpretation3(ATOMS, values)
)

formulas = st.recursive(
    st.one_of(st.sampled_from(ATOMS).map(Atom), st.just(Verum()), st.just(Falsum())),
    lambda children: st.one_of(
        children.map(Neg),
        st.lists(children, min_size=2, max_size=3).map(lambda xs: And(tuple(xs))),
        st.lists(children, min_size=2, max_size=3).map(lambda xs: Or(tuple(xs))),
    ),
    max_leaves=8,
)

frameworks = st.tuples(*[formulas] * len(ATOMS)).map(
    lambda phis: Adf(ATOMS, dict(zip(ATOMS, phis)))
)

rules = st.builds(
    Rule,
    st.sampled_from(ATOMS),
    st.lists(st.sampled_from(ATOMS), max_size=2).map(tuple),
    st.lists(st.sampled_from(ATOMS), max_size=2).map(tuple),
)

programs = st.lists(rules, min_size=1, max_size=5).map(lambda rs: Program(tuple(rs)))


@st.composite
def refinements(draw):
    """A pair v ≤_i w: w decides some of the atoms v leaves unknown."""
    v = draw(interpretations)
    values = [draw(truth_values) if value is U else value for value in v.values]
    return v, Interpretation3(ATOMS, tuple(values))


@given(formulas, refinements())
def test_kleene_is_information_monotone(phi, pair):
    v, w = pair
    assert eval_kleene(phi, v).leq_info(eval_kleene(phi, w))


@given(formulas, interpretations)
def test_kleene_approximates_completions(phi, v):
    completions = two_valued_extensions(v, frozenset(ATOMS))
    exact = consensus(eval_kleene(phi, c) for c in completions)
    assert eval_kleene(phi, v).leq_info(exact)


@given(formulas, st.sets(st.sampled_from(ATOMS)))
def test_kleene_is_classical_on_two_valued(phi, true_atoms):
    v = Interpretation3.from_literals(
        ATOMS, [a if a in true_atoms else f"~{a}" for a in ATOMS]
    )
    assert eval_kleene(phi, v).value == ("t" if phi.holds(true_atoms) else "f")


@given(frameworks, refinements())
def test_gamma_is_information_monotone(D, pair):
    v, w = pair
    assert leq_info(gamma(D, v), gamma(D, w))


@settings(max_examples=50)
@given(frameworks)
def test_grounded_is_least_complete(D):
    models = complete_models(D)
    grounded = grounded_model(D)
    assert grounded in models
    assert all(leq_info(grounded, v) for v in models)


@settings(max_examples=50)
@given(programs)
def test_well_founded_is_least_partial_stable(P):
    models = partial_stable_models(P)
    wf = well_founded_model(P)
    assert wf in models
    assert all(leq_info(wf, I) for I in models)


@settings(max_examples=50)
@given(programs)
def test_support_translation_preserves_partial_stable_models(P):
    assert complete_models(xi(P).adf) == partial_stable_models(P)


@settings(max_examples=50)
@given(st.integers(min_value=0, max_value=2**64 - 1), st.data())
def test_psi_iterations_stay_within_base_size(seed, data):
    [P] = gen_program(GenConfig(seed=seed, trials=1))
    size = len(P.herbrand_base)
    values = data.draw(st.lists(truth_values, min_size=size, max_size=size))
    I = Interpretation3(P.herbrand_base, tuple(values))
    _, steps = omega_iterations(P, I)
    assert steps <= size + 2


@given(st.integers(min_value=0, max_value=2**64 - 1), st.integers(1, 100))
def test_splitmix_is_reproducible(seed, n):
    left, right = SplitMix64(seed), SplitMix64(seed)
    draws = [left.below(n) for _ in range(10)]
    assert draws == [right.below(n) for _ in range(10)]
    assert all(0 <= x < n for x in draws)
