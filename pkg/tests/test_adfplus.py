"""Tests for the attacking fragment ADF⁺."""

import pytest

from adfnlp.exceptions import (
    CapacityError,
    NotAdfPlusError,
    NotDownwardClosedError,
    UniverseMismatchError,
)
from adfnlp.logic import And, Atom, Neg, Or, enumerate_interpretations, equivalent
from adfnlp.semantics.adf import (
    CSetFamily,
    complete_models,
    gamma,
    grounded_model,
    preferred_models,
    stable_models,
)
from adfnlp.semantics.adfplus import (
    AdfPlus,
    AdfPlusViolation,
    check_adfplus,
    cmax,
    ensure_adfplus,
    gamma_plus,
    l_stable_models,
    negative_dnf,
    prune_redundant,
    redundant_links_by_cmax,
    redundant_links_by_count,
    simplified_formula,
    stable_models_plus,
)

from .conftest import as_set, interp, literal_sets


class TestRecognition:
    """Test suite for recognizing attacking-only frameworks."""

    def test_accepts_adfplus(self, sample_adfplus):
        result = check_adfplus(sample_adfplus)
        assert isinstance(result, AdfPlus)
        assert result.statements == sample_adfplus.statements

    def test_reports_first_violation(self, sample_adf):
        result = check_adfplus(sample_adf)
        assert isinstance(result, AdfPlusViolation)
        assert result.link == ("e", "c")
        assert result.witness == frozenset()
        assert "link (e,c) is not attacking" in str(result)

    def test_ensure_raises(self, sample_adf):
        with pytest.raises(NotAdfPlusError) as excinfo:
            ensure_adfplus(sample_adf)
        assert excinfo.value.violation.link == ("e", "c")

    def test_wide_statements_are_streamed(self, sample_adfplus, sample_adf):
        Dp = ensure_adfplus(sample_adfplus, max_parents=1)
        assert Dp.families["c"] is None
        assert Dp.families["a"] is not None
        assert isinstance(check_adfplus(sample_adf, max_parents=0), AdfPlusViolation)


class TestMaximalFamilies:
    """Test suite for C^max and the negative DNF."""

    def test_cmax(self, sample_adfplus):
        Dp = ensure_adfplus(sample_adfplus)
        assert Dp.maximal["c"].accepted == {frozenset({"a"}), frozenset({"d"})}

    def test_cmax_requires_downward_closure(self):
        with pytest.raises(NotDownwardClosedError):
            cmax(CSetFamily(("a",), {frozenset({"a"})}))

    def test_negative_dnf_order(self, sample_adfplus):
        Dp = ensure_adfplus(sample_adfplus)
        assert simplified_formula(Dp, "c") == Or(
            (
                And((Neg(Atom("a")), Neg(Atom("c")))),
                And((Neg(Atom("c")), Neg(Atom("d")))),
            )
        )

    def test_negative_dnf_is_equivalent(self, sample_adfplus):
        Dp = ensure_adfplus(sample_adfplus)
        for s in Dp.statements:
            assert equivalent(simplified_formula(Dp, s), sample_adfplus.formula(s))

    def test_negative_dnf_of_full_family(self):
        fam = CSetFamily(("a",), {frozenset(), frozenset({"a"})})
        assert equivalent(negative_dnf(cmax(fam)), Or((Atom("a"), Neg(Atom("a")))))

    def test_simplified_formula_capacity(self, sample_adfplus):
        Dp = ensure_adfplus(sample_adfplus, max_parents=1)
        with pytest.raises(CapacityError):
            simplified_formula(Dp, "c")


class TestRedundancy:
    """Test suite for redundant-link detection."""

    def test_counting(self, redundant_adf):
        Dp = ensure_adfplus(redundant_adf)
        assert redundant_links_by_count(Dp) == {("b", "a")}
        assert redundant_links_by_cmax(Dp) == {("b", "a")}

    def test_no_redundancy_in_sample(self, sample_adfplus):
        Dp = ensure_adfplus(sample_adfplus)
        assert redundant_links_by_count(Dp) == set()

    def test_prune(self, redundant_adf):
        pruned = prune_redundant(ensure_adfplus(redundant_adf))
        assert pruned.formula("a") == Neg(Atom("c"))
        assert pruned.parents("a") == ("c",)
        assert pruned.links() == (("c", "a"),)

    def test_counting_needs_families(self, sample_adfplus):
        with pytest.raises(CapacityError):
            redundant_links_by_count(ensure_adfplus(sample_adfplus, max_parents=1))


class TestAdfPlusSemantics:
    """Test suite for semantics on attacking-only frameworks."""

    def test_complete(self, sample_adfplus):
        assert as_set(complete_models(sample_adfplus)) == literal_sets(
            "{}", "{a, ~b}", "{b, ~a, ~e}"
        )
        assert grounded_model(sample_adfplus) == interp(sample_adfplus.statements, "{}")
        assert as_set(preferred_models(sample_adfplus)) == literal_sets(
            "{a, ~b}", "{b, ~a, ~e}"
        )

    def test_no_stable_models(self, sample_adfplus):
        assert stable_models(sample_adfplus) == []
        assert stable_models_plus(ensure_adfplus(sample_adfplus)) == []

    def test_l_stable(self, sample_adfplus):
        expected = literal_sets("{b, ~a, ~e}")
        assert as_set(l_stable_models(sample_adfplus)) == expected
        assert as_set(l_stable_models(ensure_adfplus(sample_adfplus))) == expected

    def test_l_stable_equals_stable_when_stable_exists(self, redundant_adf):
        Dp = ensure_adfplus(redundant_adf)
        stable = as_set(stable_models_plus(Dp))
        assert stable == literal_sets("{b, c, ~a}")
        assert as_set(l_stable_models(Dp)) == stable
        assert as_set(stable_models(redundant_adf)) == stable

    def test_gamma_plus_agrees_with_gamma(self, sample_adfplus):
        Dp = ensure_adfplus(sample_adfplus)
        for v in enumerate_interpretations(sample_adfplus.statements):
            assert gamma_plus(Dp, v) == gamma(sample_adfplus, v)

    def test_gamma_plus_falls_back_for_wide_statements(self, sample_adfplus):
        Dp = ensure_adfplus(sample_adfplus, max_parents=1)
        for v in enumerate_interpretations(sample_adfplus.statements):
            assert gamma_plus(Dp, v) == gamma(sample_adfplus, v)

    def test_gamma_plus_universe(self, sample_adfplus):
        with pytest.raises(UniverseMismatchError):
            gamma_plus(ensure_adfplus(sample_adfplus), interp(("a",), "{}"))
