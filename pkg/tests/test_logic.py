"""Tests for the three-valued logic kernel."""

import pytest

from adfnlp.exceptions import CapacityError, UniverseMismatchError, UnknownAtomError
from adfnlp.logic import (
    F,
    T,
    U,
    And,
    Atom,
    Falsum,
    Interpretation3,
    Neg,
    Or,
    TruthValue,
    Verum,
    consensus,
    enumerate_interpretations,
    enumerate_two_valued,
    equivalent,
    eval_kleene,
    info_least,
    info_maximal,
    iter_subsets,
    leq_info,
    leq_truth,
    meet,
    minimal_unknown,
    sort_models,
    truth_min,
    two_valued_extensions,
)

from .conftest import interp


class TestTruthValues:
    """Test suite for truth values and their orderings."""

    def test_negation(self):
        """Negation swaps t and f and keeps u."""
        assert ~T is F
        assert ~F is T
        assert ~U is U

    def test_information_order(self):
        """u is below t and f, which are incomparable."""
        assert U.leq_info(T) and U.leq_info(F) and U.leq_info(U)
        assert not T.leq_info(F)
        assert not T.leq_info(U)

    def test_truth_order(self):
        """f < u < t."""
        assert F.leq_truth(U) and U.leq_truth(T) and F.leq_truth(T)
        assert not T.leq_truth(U)

    def test_truth_min(self):
        assert truth_min([T, U]) is U
        assert truth_min([T, F, U]) is F
        assert truth_min([]) is T

    def test_consensus(self):
        assert consensus([T, T]) is T
        assert consensus([T, F]) is U
        with pytest.raises(ValueError):
            consensus([])


class TestInterpretation:
    """Test suite for Interpretation3."""

    def test_from_literals(self):
        v = Interpretation3.from_literals(("a", "b", "c"), ["a", "~b"])
        assert v["a"] is T
        assert v["b"] is F
        assert v["c"] is U

    def test_unicode_negation_literal(self):
        v = Interpretation3.from_literals(("a",), ["¬a"])
        assert v["a"] is F

    def test_inconsistent_literals(self):
        with pytest.raises(ValueError, match="Inconsistent"):
            Interpretation3.from_literals(("a",), ["a", "~a"])

    def test_unknown_atom_lookup(self):
        v = Interpretation3.all_unknown(("a",))
        with pytest.raises(UnknownAtomError) as excinfo:
            v["z"]
        assert excinfo.value.atom == "z"

    def test_literal_rendering(self):
        v = interp(("a", "b", "c"), "{a, ~c}")
        assert v.to_literals() == frozenset({"a", "~c"})
        assert v.unknown_atoms == frozenset({"b"})
        assert not v.is_two_valued

    def test_encoding_orders_u_before_f_before_t(self):
        universe = ("a",)
        codes = [interp(universe, text).encode() for text in ("{}", "{~a}", "{a}")]
        assert codes == [0, 1, 2]

    def test_lift_sets_new_atoms_false(self):
        v = interp(("a",), "{a}")
        lifted = v.lift(("a", "b"))
        assert lifted == interp(("a", "b"), "{a, ~b}")

    def test_two_valued_extensions(self):
        v = interp(("a", "b", "c"), "{a}")
        extensions = two_valued_extensions(v, {"a", "b"})
        assert len(extensions) == 2
        assert all(e["c"] is U for e in extensions)
        assert {e["b"] for e in extensions} == {T, F}


class TestOrderings:
    """Test suite for pointwise orderings and model selection."""

    def test_leq_info(self):
        universe = ("a", "b")
        assert leq_info(interp(universe, "{a}"), interp(universe, "{a, ~b}"))
        assert not leq_info(interp(universe, "{a}"), interp(universe, "{~a}"))

    def test_leq_truth(self):
        universe = ("a", "b")
        assert leq_truth(interp(universe, "{~a}"), interp(universe, "{}"))
        assert not leq_truth(interp(universe, "{a}"), interp(universe, "{}"))

    def test_universe_mismatch(self):
        with pytest.raises(UniverseMismatchError):
            leq_info(
                Interpretation3.all_unknown(("a",)),
                Interpretation3.all_unknown(("b",)),
            )

    def test_meet(self):
        universe = ("a", "b")
        result = meet(interp(universe, "{a, b}"), interp(universe, "{a, ~b}"))
        assert result == interp(universe, "{a}")

    def test_model_selection(self):
        universe = ("a", "b")
        models = [interp(universe, text) for text in ("{}", "{a}", "{a, ~b}", "{~a}")]
        assert info_least(models) == interp(universe, "{}")
        assert {v.to_literals() for v in info_maximal(models)} == {
            frozenset({"a", "~b"}),
            frozenset({"~a"}),
        }
        assert minimal_unknown(models) == [interp(universe, "{a, ~b}")]

    def test_sort_models_removes_duplicates(self):
        universe = ("a",)
        models = [interp(universe, text) for text in ("{a}", "{}", "{a}")]
        assert sort_models(models) == [interp(universe, "{}"), interp(universe, "{a}")]


class TestFormulas:
    """Test suite for Kleene evaluation of formulas."""

    def test_kleene_truth_tables(self):
        v = interp(("a", "b"), "{a}")
        assert eval_kleene(And((Atom("a"), Atom("b"))), v) is U
        assert eval_kleene(Or((Atom("a"), Atom("b"))), v) is T
        assert eval_kleene(Neg(Atom("b")), v) is U
        assert eval_kleene(Or((Neg(Atom("a")), Atom("b"))), v) is U

    def test_excluded_middle_is_unknown_under_u(self):
        """Kleene evaluation is not classical: b ∨ ¬b is u when b is u."""
        v = Interpretation3.all_unknown(("b",))
        assert eval_kleene(Or((Atom("b"), Neg(Atom("b")))), v) is U

    def test_constants(self):
        v = Interpretation3.all_unknown(())
        assert eval_kleene(Verum(), v) is T
        assert eval_kleene(Falsum(), v) is F

    def test_unknown_atom(self):
        with pytest.raises(UnknownAtomError):
            eval_kleene(Atom("z"), Interpretation3.all_unknown(("a",)))

    def test_atoms_in_first_appearance_order(self):
        phi = Or((And((Atom("c"), Neg(Atom("a")))), Atom("c"), Atom("b")))
        assert phi.atoms() == ("c", "a", "b")

    def test_substitute(self):
        phi = And((Neg(Atom("b")), Atom("e")))
        assert phi.substitute({"e": Falsum()}) == And((Neg(Atom("b")), Falsum()))

    def test_equivalent(self):
        assert equivalent(Or((Atom("b"), Neg(Atom("b")))), Verum())
        assert not equivalent(Atom("a"), Atom("b"))

    def test_empty_connectives_rejected(self):
        with pytest.raises(ValueError):
            And(())
        with pytest.raises(ValueError):
            Or(())


class TestEnumeration:
    """Test suite for enumeration helpers."""

    def test_counts(self):
        assert len(list(enumerate_interpretations(("a", "b")))) == 9
        assert len(list(enumerate_two_valued(("a", "b")))) == 4
        assert len(list(iter_subsets(("a", "b", "c")))) == 8

    def test_bound(self):
        with pytest.raises(CapacityError) as excinfo:
            list(enumerate_interpretations(("a", "b", "c"), bound=2))
        assert excinfo.value.required == 27
        assert excinfo.value.bound == 9

    def test_subset_order(self):
        assert list(iter_subsets(("a", "b"))) == [
            frozenset(),
            frozenset({"b"}),
            frozenset({"a"}),
            frozenset({"a", "b"}),
        ]

    def test_from_bool(self):
        assert TruthValue.from_bool(True) is T
        assert TruthValue.from_bool(False) is F
