"""Unit tests for double Poisson axioms and the induced quotient bracket."""

from collections import defaultdict
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from precy_bench.dpa.axioms import (
    antisymmetrize,
    check_antisymmetry,
    check_closed,
    check_dg_algebra,
    check_double_jacobi,
    check_double_poisson,
    check_leibniz,
    check_leibniz_uform,
    jacobi_defect,
)
from precy_bench.dpa.quotient import induced_quotient_lie
from precy_bench.graded.maps import MultiMap
from precy_bench.graded.space import GradedSpace
from precy_bench.models.algebra import DoubleBracket, PoissonAlgebra
from precy_bench.utils.exceptions import PreconditionError, SpaceMismatchError
from tests.fixtures import corpus


SLOT_ALGEBRAS = [
    (corpus.nilpotent_pair_algebra, 0),
    (corpus.dual_numbers, 0),
    (corpus.left_ideal, 0),
    (corpus.odd_pair_algebra, 0),
    (corpus.odd_pair_algebra, 1),
]


@st.composite
def raw_brackets(draw, build, d: int) -> PoissonAlgebra:
    """A bracket with a few GRID coefficients on unit slots, no symmetry imposed."""
    A = build()
    slots = list(corpus.bracket_slots(A.space, d))
    chosen = draw(
        st.dictionaries(
            st.sampled_from(slots), st.sampled_from(corpus.GRID), max_size=5
        )
    )
    entries: dict = defaultdict(dict)
    for (args, outs), c in chosen.items():
        entries[args][outs] = Fraction(c)
    table = MultiMap((A.space,) * 2, (A.space,) * 2, -d, dict(entries))
    return PoissonAlgebra(A, DoubleBracket(d, table))


def _oracle(P: PoissonAlgebra) -> dict[str, bool]:
    """Degree-0 axioms with d = 0 and ∂ = 0, written out on plain dicts."""
    A, br = P.algebra, P.bracket
    n = A.space.dim
    pairs = [(i, j) for i in range(n) for j in range(n)]
    mul = {(i, j): {k: c for (k,), c in A.mul(i, j).items()} for i, j in pairs}
    bra = {(p, q): dict(br.value(p, q)) for p, q in pairs}

    def is_zero(values: dict) -> bool:
        return all(v == 0 for v in values.values())

    antisymmetry = True
    for p in range(n):
        for q in range(n):
            total: dict = defaultdict(Fraction)
            for (i, j), c in bra[(p, q)].items():
                total[(i, j)] += c
            for (i, j), c in bra[(q, p)].items():
                total[(j, i)] += c
            antisymmetry = antisymmetry and is_zero(total)

    leibniz = True
    for c in range(n):
        for a in range(n):
            for b in range(n):
                total = defaultdict(Fraction)
                for k, v in mul[(a, b)].items():
                    for key, w in bra[(c, k)].items():
                        total[key] += v * w
                for (i, j), v in bra[(c, a)].items():
                    for k, w in mul[(j, b)].items():
                        total[(i, k)] -= v * w
                for (i, j), v in bra[(c, b)].items():
                    for k, w in mul[(a, i)].items():
                        total[(k, j)] -= v * w
                leibniz = leibniz and is_zero(total)

    def nested(x: int, y: int, z: int) -> dict:
        out: dict = defaultdict(Fraction)
        for (i, j), v in bra[(y, z)].items():
            for (k, m), w in bra[(x, i)].items():
                out[(k, m, j)] += v * w
        return out

    jacobi = True
    for a in range(n):
        for b in range(n):
            for c in range(n):
                total = defaultdict(Fraction)
                for key, coeff in nested(c, b, a).items():
                    total[key] += coeff
                for (u, v, w), coeff in nested(b, a, c).items():
                    total[(w, u, v)] += coeff
                for (u, v, w), coeff in nested(a, c, b).items():
                    total[(v, w, u)] += coeff
                jacobi = jacobi and is_zero(total)

    return {
        "antisymmetry": antisymmetry,
        "leibniz": leibniz,
        "double_jacobi": jacobi,
        "closed": True,
    }


class TestDgAlgebra:
    """Tests for check_dg_algebra."""

    @pytest.mark.parametrize(
        "build",
        [corpus.line, corpus.ground_field, corpus.dual_numbers, corpus.acyclic_pair],
    )
    def test_corpus_algebras_pass(self, build) -> None:
        """Test every corpus algebra is a dg algebra."""
        assert check_dg_algebra(build()).passed

    def test_non_associative_product(self) -> None:
        """Test x·x = y, x·y = x fails associativity."""
        space = GradedSpace.from_pairs([("x", 0), ("y", 0)])
        A = corpus.algebra(space, {("x", "x"): {("y",): 1}, ("x", "y"): {("x",): 1}})

        report = check_dg_algebra(A)

        assert not report.get("associativity").passed
        assert report.get("differential_squared").passed

    def test_differential_breaking_leibniz(self) -> None:
        """Test a differential on k[e] that is not a derivation."""
        space = GradedSpace.from_pairs([("e", 0), ("f", 1)])
        A = corpus.algebra(space, {("e", "e"): {("e",): 1}}, {("e",): {("f",): 1}})

        result = check_dg_algebra(A).get("differential_leibniz")

        assert not result.passed
        assert result.witness.args == ("e", "e")


class TestDoublePoisson:
    """Tests for the double Poisson axioms."""

    def test_zero_bracket_passes(self) -> None:
        """Test the zero bracket is double Poisson in any degree."""
        for d in (-1, 0, 1, 2):
            P: PoissonAlgebra = corpus.zero_bracket(d)
            assert check_double_poisson(P.algebra, P.bracket).passed

    def test_nilpotent_pair_passes(self, nilpotent_pair) -> None:
        """Test ⟨x,x⟩ = x⊗y - y⊗x on the zero-product pair."""
        report = check_double_poisson(nilpotent_pair.algebra, nilpotent_pair.bracket)

        assert report.passed
        assert [r.name for r in report.sorted_results()] == [
            "antisymmetry",
            "closed",
            "double_jacobi",
            "leibniz",
        ]

    def test_odd_pair_passes(self, odd_pair) -> None:
        """Test the degree -1 bracket on an odd generator."""
        assert check_double_poisson(odd_pair.algebra, odd_pair.bracket).passed

    def test_self_bracket_breaks_antisymmetry(self) -> None:
        """Test ⟨x,x⟩ = x⊗x: defect 2·x⊗x at (x, x)."""
        P = corpus.self_bracket()

        result = check_antisymmetry(P.algebra, P.bracket).get("antisymmetry")

        assert not result.passed
        assert result.witness.args == ("x", "x")
        assert result.witness.defect.coords == {(0, 0): Fraction(2)}

    def test_self_bracket_jacobi_defect(self) -> None:
        """Test the Jacobi defect of ⟨x,x⟩ = x⊗x is 3·x⊗x⊗x."""
        P = corpus.self_bracket()

        defect = jacobi_defect(P.algebra, P.bracket)

        assert defect.value((0, 0, 0)) == {(0, 0, 0): Fraction(3)}

    def test_broken_jacobi(self, broken_jacobi) -> None:
        """Test Jacobi fails first at (x, x, y) with defect -y⊗x⊗x."""
        A, br = broken_jacobi.algebra, broken_jacobi.bracket

        assert check_antisymmetry(A, br).passed
        assert check_leibniz(A, br).passed
        result = check_double_jacobi(A, br).get("double_jacobi")
        assert not result.passed
        assert result.witness.args == ("x", "x", "y")
        assert result.witness.defect.coords == {(1, 0, 0): Fraction(-1)}

    def test_leibniz_forms_agree(self, nilpotent_pair, broken_jacobi) -> None:
        """Test the u-form and the direct form give the same verdict."""
        for P in (nilpotent_pair, broken_jacobi, corpus.self_bracket()):
            direct = check_leibniz(P.algebra, P.bracket).passed
            uform = check_leibniz_uform(P.algebra, P.bracket).passed
            assert direct == uform

    def test_leibniz_failure_on_unital_algebra(self) -> None:
        """Test ⟨e,e⟩ = e⊗e is not a double derivation on k·e."""
        P = corpus.poisson(corpus.ground_field(), 0, {("e", "e"): {("e", "e"): 1}})

        assert not check_leibniz(P.algebra, P.bracket).passed
        assert not check_leibniz_uform(P.algebra, P.bracket).passed

    def test_closed_with_differential(self) -> None:
        """Test a bracket incompatible with ∂x = y fails closedness."""
        A = corpus.acyclic_pair()
        P = corpus.poisson(A, 0, {("x", "x"): {("x", "x"): 1}})

        assert not check_closed(P.algebra, P.bracket).passed

    def test_space_mismatch(self, nilpotent_pair) -> None:
        """Test a bracket over another space is refused."""
        other: DoubleBracket = corpus.zero_bracket().bracket

        with pytest.raises(SpaceMismatchError):
            check_antisymmetry(nilpotent_pair.algebra, other)

    def test_antisymmetrize_repairs(self) -> None:
        """Test the antisymmetrized self bracket passes antisymmetry."""
        P = corpus.self_bracket()

        repaired = antisymmetrize(P.algebra, P.bracket)

        assert check_antisymmetry(P.algebra, repaired).passed
        assert repaired.table.is_zero()

    def test_antisymmetrize_fixes_antisymmetric(self, nilpotent_pair) -> None:
        """Test the projector leaves antisymmetric brackets alone."""
        A, br = nilpotent_pair.algebra, nilpotent_pair.bracket

        assert antisymmetrize(A, br).table.entries == br.table.entries

    @pytest.mark.parametrize("build,d", SLOT_ALGEBRAS)
    @settings(max_examples=30, deadline=None)
    @given(data=st.data())
    def test_antisymmetrize_is_idempotent(self, build, d, data) -> None:
        """Test the projector is idempotent and lands in antisymmetric brackets."""
        P = data.draw(raw_brackets(build, d))
        A = P.algebra

        once = antisymmetrize(A, P.bracket)
        twice = antisymmetrize(A, once)

        assert twice.table.entries == once.table.entries
        assert check_antisymmetry(A, once).passed
        if check_antisymmetry(A, P.bracket).passed:
            assert once.table.entries == P.bracket.table.entries


class TestQuotient:
    """Tests for the Lie bracket induced on A/[A,A]."""

    def test_nilpotent_pair_quotient(self, nilpotent_pair) -> None:
        """Test the quotient keeps both classes with a zero bracket."""
        data, report = induced_quotient_lie(
            nilpotent_pair.algebra, nilpotent_pair.bracket
        )

        assert data.space.symbols == ("[x]", "[y]")
        assert data.space.degrees == (0, 0)
        assert data.bracket.is_zero()
        assert report.passed

    def test_quotient_degrees_shift_by_d(self, odd_pair) -> None:
        """Test [a] sits in degree |a| - d."""
        data, report = induced_quotient_lie(odd_pair.algebra, odd_pair.bracket)

        assert data.space.degrees == (-1, 0)
        assert report.passed

    def test_every_quotient_check_reported(self, nilpotent_pair) -> None:
        """Test the report names each identity."""
        _, report = induced_quotient_lie(nilpotent_pair.algebra, nilpotent_pair.bracket)

        assert {r.name for r in report.results} == {
            "well_defined_right",
            "well_defined_left",
            "differential_preserves_commutators",
            "lie_antisymmetry",
            "lie_jacobi",
            "lie_derivation",
            "lie_differential_squared",
        }
        assert report.notes

    def test_commutative_quotient_of_dual_numbers(self) -> None:
        """Test a commutative algebra has [A,A] = 0."""
        P = corpus.poisson(corpus.dual_numbers(), 0)

        data, _ = induced_quotient_lie(P.algebra, P.bracket)

        assert data.space.dim == 2
        assert data.commutators == []

    def test_refuses_non_poisson(self, broken_jacobi) -> None:
        """Test the quotient needs a double Poisson bracket."""
        with pytest.raises(PreconditionError):
            induced_quotient_lie(broken_jacobi.algebra, broken_jacobi.bracket)

    def test_upper_triangular_quotient(self) -> None:
        """Test [A,A] = span{e12} under a nonzero bracket on a noncommutative A."""
        P = corpus.upper_triangular_bracket()
        assert check_double_poisson(P.algebra, P.bracket).passed
        assert not P.bracket.table.is_zero()

        data, report = induced_quotient_lie(P.algebra, P.bracket)

        assert report.passed
        assert data.commutators == [[0, 1, 0]]
        assert data.representatives == [0, 2]
        assert data.space.symbols == ("[e11]", "[e22]")
        assert data.bracket.is_zero()
        assert data.differential.is_zero()


class TestIndependentAxioms:
    """Test the axiom checks against formulas written out on plain dicts."""

    @pytest.mark.parametrize(
        "build", [corpus.nilpotent_pair_algebra, corpus.dual_numbers, corpus.left_ideal]
    )
    def test_grid(self, build) -> None:
        """Test every GRID bracket gets the same verdicts from both."""
        A = build()
        count = 0
        for P in corpus.grid_brackets(A, 0):
            report = check_double_poisson(P.algebra, P.bracket)
            verdicts = {r.name: r.passed for r in report.results}
            assert verdicts == _oracle(P), P.bracket.table.entries
            count += 1

        assert count == 3 ** len(corpus.double_bracket_basis(A, 0)) > 1

    @pytest.mark.parametrize(
        "build", [corpus.nilpotent_pair_algebra, corpus.dual_numbers, corpus.left_ideal]
    )
    @settings(max_examples=40, deadline=None)
    @given(data=st.data())
    def test_raw_brackets(self, build, data) -> None:
        """Test brackets without imposed symmetry get the same verdicts."""
        P = data.draw(raw_brackets(build, 0))

        report = check_double_poisson(P.algebra, P.bracket)

        assert {r.name: r.passed for r in report.results} == _oracle(P)

    def test_oracle_sees_every_failure(self) -> None:
        """Test the corpus failures are failures for the plain formulas too."""
        assert not _oracle(corpus.self_bracket())["antisymmetry"]
        assert not _oracle(corpus.broken_jacobi())["double_jacobi"]
        assert _oracle(corpus.nilpotent_pair()) == {
            "antisymmetry": True,
            "leibniz": True,
            "double_jacobi": True,
            "closed": True,
        }
