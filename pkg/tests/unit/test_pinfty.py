"""Unit tests for double P∞ families and their pre-Calabi-Yau encoding."""

import itertools
from collections import Counter

import pytest

from precy_bench.ainfty.cyclic import check_cyclic, check_ultracyclic
from precy_bench.ainfty.stasheff import check_stasheff, default_n_max
from precy_bench.correspondence.bracket import precy_from_bracket
from precy_bench.graded.maps import MultiMap
from precy_bench.graded.signs import parity
from precy_bench.models.algebra import DoubleBracket
from precy_bench.models.pinfty import PInfinityFamily
from precy_bench.models.report import AxiomReport
from precy_bench.pinfty.axioms import (
    antisymmetry_result,
    check_p_infinity,
    jacobi_defect,
    leibniz_defect,
)
from precy_bench.pinfty.correspondence import (
    interleaved_key,
    pinfty_from_precy,
    pinfty_report,
    precy_from_pinfty,
)
from precy_bench.pinfty.sign import sign_s
from precy_bench.utils.exceptions import (
    DimensionError,
    HomogeneityError,
    PreconditionError,
    ValidationError,
)
from tests.fixtures import corpus

DEGREES = range(-2, 3)


class TestSign:
    """Tests for the closed-form sign s."""

    def test_single_pair(self) -> None:
        """Test s = (-1)^{|a||f|} for p = 1."""
        for a, f in itertools.product(DEGREES, repeat=2):
            assert sign_s([a], [f]) == parity(a * f)

    def test_two_pairs_on_shell(self) -> None:
        """Test s = (-1)^{|a_2||f_1|} when the total degree vanishes."""
        for a1, a2, f1, f2 in itertools.product(DEGREES, repeat=4):
            if f1 + f2 != -(a1 + a2):
                continue
            assert sign_s([a1, a2], [f1, f2]) == parity(a2 * f1)

    def test_all_even(self) -> None:
        """Test even degrees never produce a sign."""
        assert sign_s([0, 2, 0], [0, 0, -2]) == 1

    def test_length_mismatch(self) -> None:
        """Test element and functional degrees must pair up."""
        with pytest.raises(DimensionError):
            sign_s([0, 1], [0])
        with pytest.raises(DimensionError):
            sign_s([], [])


class TestFamily:
    """Tests for the P∞ data model."""

    def test_from_double_poisson(self, nilpotent_pair) -> None:
        """Test ⟨…⟩_2 is the bracket and the zero differential is dropped."""
        P = corpus.family_of(nilpotent_pair)

        assert sorted(P.brackets) == [2]
        assert P.p_max == 2
        assert P.bracket(2).entries == nilpotent_pair.bracket.table.entries
        assert P.bracket(1).is_zero()

    def test_differential_moves_to_arity_one(self) -> None:
        """Test ∂ becomes ⟨…⟩_1 and the base keeps no differential."""
        A = corpus.acyclic_pair()
        P = PInfinityFamily.from_double_poisson(A, corpus.poisson(A, 0).bracket)

        assert P.base.differential.is_zero()
        assert P.bracket(1).entries == A.differential.entries

    def test_needs_degree_zero(self, odd_pair) -> None:
        """Test only d = 0 brackets give families."""
        with pytest.raises(ValidationError):
            corpus.family_of(odd_pair)

    def test_base_differential_rejected(self) -> None:
        """Test the base algebra may not carry a differential."""
        with pytest.raises(ValidationError):
            PInfinityFamily(corpus.acyclic_pair())

    def test_bracket_degree(self) -> None:
        """Test ⟨…⟩_p has degree 2 - p."""
        A = corpus.line()
        degree_zero = corpus.table(A.space, 1, 1, 0, {("x",): {("x",): 1}})

        with pytest.raises(HomogeneityError):
            PInfinityFamily(A, {1: degree_zero})

    def test_zero_brackets_dropped(self) -> None:
        """Test a zero bracket of any arity is not stored."""
        A = corpus.line()
        zero = MultiMap.zero((A.space,) * 3, (A.space,) * 3, -1)

        assert PInfinityFamily(A, {3: zero}).p_max == 0


class TestAxioms:
    """Tests for antisymmetry, DLeib∞ and DJac∞."""

    def test_nilpotent_pair_family(self, nilpotent_pair) -> None:
        """Test the family of a double Poisson algebra passes."""
        report = check_p_infinity(corpus.family_of(nilpotent_pair))

        assert report.passed
        assert [r.name for r in report.sorted_results()] == [
            "DJac(p=1)",
            "DJac(p=2)",
            "DJac(p=3)",
            "DLeib(p=2)",
            "antisymmetry(p=2)",
        ]

    @pytest.mark.parametrize("mode", ["generators", "full"])
    def test_modes_agree(self, nilpotent_pair, mode: str) -> None:
        """Test both permutation modes accept an antisymmetric bracket."""
        P = corpus.family_of(nilpotent_pair)

        assert antisymmetry_result(P, 2, mode).passed

    def test_broken_jacobi(self, broken_jacobi) -> None:
        """Test the Jacobi failure shows up as DJac(p=3)."""
        report = check_p_infinity(corpus.family_of(broken_jacobi))

        assert report.get("antisymmetry(p=2)").passed
        assert report.get("DLeib(p=2)").passed
        assert not report.get("DJac(p=3)").passed
        assert not jacobi_defect(corpus.family_of(broken_jacobi), 3).is_zero()

    def test_self_bracket_antisymmetry(self) -> None:
        """Test ⟨x,x⟩ = x⊗x is not antisymmetric as a P∞ bracket."""
        result = antisymmetry_result(corpus.family_of(corpus.self_bracket()), 2)

        assert not result.passed
        assert result.witness.args == ("x", "x")

    def test_leibniz_on_unital_algebra(self) -> None:
        """Test ⟨e,e⟩ = e⊗e is not a derivation in the last slot."""
        P = corpus.poisson(corpus.ground_field(), 0, {("e", "e"): {("e", "e"): 1}})

        assert not leibniz_defect(corpus.family_of(P), 2).is_zero()

    def test_invalid_mode(self, nilpotent_pair) -> None:
        """Test unknown permutation modes are rejected."""
        with pytest.raises(ValidationError):
            check_p_infinity(corpus.family_of(nilpotent_pair), mode="all")


class TestPInfinityCorrespondence:
    """Tests for P∞ families ↔ special boundary structures."""

    def test_interleaved_key(self) -> None:
        """Test (a_1, a_2, a_3), (k_1, k_2, k_3) ↦ (a_3, tk_3, a_2, tk_2, a_1)."""
        assert interleaved_key(10, (1, 2, 3), (4, 5, 6)) == (3, 16, 2, 15, 1)

    def test_round_trip(self, nilpotent_pair) -> None:
        """Test extracting the family back from the structure."""
        P = corpus.family_of(nilpotent_pair)

        S = precy_from_pinfty(P)

        assert pinfty_from_precy(S).brackets[2].entries == P.brackets[2].entries

    def test_agrees_with_bracket_construction(self, nilpotent_pair) -> None:
        """Test the P∞ and the double Poisson routes build the same m_3."""
        from_family = precy_from_pinfty(corpus.family_of(nilpotent_pair))
        from_bracket = precy_from_bracket(
            nilpotent_pair.algebra, nilpotent_pair.bracket
        )

        assert from_family.total.op(3).entries == from_bracket.total.op(3).entries
        assert from_family.space == from_bracket.space

    def test_report_predicates(self, nilpotent_pair) -> None:
        """Test the built structure is good, manageable and special."""
        S = precy_from_pinfty(corpus.family_of(nilpotent_pair))

        report, classification = pinfty_report(S)

        assert report.passed
        assert classification.require("good", "manageable", "special") == []

    def test_refuses_failing_family(self, broken_jacobi) -> None:
        """Test DJac failures block the construction unless forced."""
        P = corpus.family_of(broken_jacobi)

        with pytest.raises(PreconditionError):
            precy_from_pinfty(P)
        assert 3 in precy_from_pinfty(P, force=True).total.ops

    def test_extraction_needs_degree_zero(self, odd_pair) -> None:
        """Test structures over d ≠ 0 do not encode P∞ families."""
        S = precy_from_bracket(odd_pair.algebra, odd_pair.bracket)

        report, _ = pinfty_report(S)

        assert not report.get("degree").passed
        with pytest.raises(ValidationError):
            pinfty_from_precy(S)


def _verdicts(report: AxiomReport) -> list[tuple[str, bool]]:
    return [(r.name, r.passed) for r in report.sorted_results()]


def _assert_family_dictionary(P: PInfinityFamily) -> AxiomReport:
    """Check each P∞ identity against its Stasheff identity after a forced build."""
    axioms = check_p_infinity(P)
    assert _verdicts(axioms) == _verdicts(check_p_infinity(P, mode="full"))

    S = precy_from_pinfty(P, force=True)
    n_max = default_n_max(S.total)
    stasheff = check_stasheff(S.total)
    verdicts = dict(_verdicts(axioms))
    for p in range(1, n_max // 2 + 1):
        expected = verdicts.get(f"DLeib(p={p})", True)
        assert stasheff.get(f"SI({2 * p})").passed == expected, p
    for p in range(1, (n_max + 1) // 2 + 1):
        expected = verdicts.get(f"DJac(p={p})", True)
        assert stasheff.get(f"SI({2 * p - 1})").passed == expected, p

    assert check_cyclic(S.total).passed
    assert check_ultracyclic(S.total, "full").passed
    back = pinfty_from_precy(S, force=True)
    assert {p: b.entries for p, b in back.brackets.items()} == {
        p: b.entries for p, b in P.brackets.items()
    }
    return axioms


class TestPInfinityDictionary:
    """Tests matching DLeib and DJac with the even and odd Stasheff identities."""

    @pytest.mark.parametrize(
        "build, failing",
        [
            pytest.param(corpus.odd_pair_algebra, "DJac(p=5)", id="zero-product"),
            pytest.param(corpus.exterior_algebra, "DLeib(p=3)", id="exterior"),
        ],
    )
    def test_grid(self, build, failing: str) -> None:
        """Test every family ⟨…⟩_2 + ⟨…⟩_3 with coefficients in {-1, 0, 1}."""
        A = build()
        failures: Counter[str] = Counter()
        passing = 0

        for P in corpus.grid_families(A):
            axioms = _assert_family_dictionary(P)
            failures.update(r.name for r in axioms.results if not r.passed)
            passing += axioms.passed
            if set(P.brackets) == {2}:
                S = precy_from_pinfty(P, force=True)
                from_bracket = precy_from_bracket(
                    A, DoubleBracket(0, P.bracket(2)), force=True
                )
                assert S.total.op(3).entries == from_bracket.total.op(3).entries

        assert passing >= 1
        assert failures[failing] >= 1

    def test_zero_product_never_breaks_leibniz(self) -> None:
        """Test DLeib holds for every family on a zero-product algebra."""
        for P in corpus.grid_families(corpus.odd_pair_algebra()):
            report = check_p_infinity(P)

            assert all(
                r.passed for r in report.results if r.name.startswith("DLeib")
            )

    def test_arity_three_family(self) -> None:
        """Test a family with a nonzero ⟨…⟩_3 builds and extracts unforced."""
        P = corpus.separated_family()
        assert P.p_max == 3

        S = precy_from_pinfty(P)
        report, classification = pinfty_report(S)

        assert report.passed
        assert classification.require("good", "manageable", "special") == []
        assert check_stasheff(S.total, 9).passed
        assert 5 in S.total.ops
        assert pinfty_from_precy(S).brackets[3].entries == P.brackets[3].entries
        _assert_family_dictionary(P)

    def test_unit_breaks_leibniz(self) -> None:
        """Test ⟨…⟩_3 on Λ(y) fails DLeib(p=3) and first breaks SI(6)."""
        P = corpus.exterior_family()

        report = check_p_infinity(P)
        S = precy_from_pinfty(P, force=True)

        assert not report.get("DLeib(p=3)").passed
        assert report.get("antisymmetry(p=3)").passed
        assert check_stasheff(S.total).first_failure().name == "SI(6)"

    def test_nested_brackets_break_jacobi(self) -> None:
        """Test a ⟨…⟩_3 feeding into itself fails DJac(p=5) and SI(9) only."""
        P = corpus.jacobi_breaking_family()

        report = check_p_infinity(P)
        S = precy_from_pinfty(P, force=True)

        assert [r.name for r in report.results if not r.passed] == ["DJac(p=5)"]
        assert not jacobi_defect(P, 5).is_zero()
        assert check_stasheff(S.total).first_failure().name == "SI(9)"

    @pytest.mark.parametrize("mode", ["generators", "full"])
    def test_non_antisymmetric_family(self, mode: str) -> None:
        """Test one extra slot breaks antisymmetry(p=3) and the symmetries of m_5."""
        P = corpus.separated_family()
        space = P.space
        slot = corpus.unit_map(
            (space,) * 3,
            tuple(space.index(s) for s in ("x", "y", "y")),
            tuple(space.index(s) for s in ("w", "z", "z")),
        )
        mutated = PInfinityFamily(P.base, {3: P.bracket(3) + slot})

        S = precy_from_pinfty(mutated, force=True)

        assert not antisymmetry_result(mutated, 3, mode).passed
        assert not (
            check_cyclic(S.total).passed
            and check_ultracyclic(S.total, "full").passed
        )
        assert pinfty_from_precy(S, force=True).brackets[3].entries == (
            mutated.brackets[3].entries
        )
