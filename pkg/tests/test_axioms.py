"""
Unit tests for the Lie bialgebra law checkers.
"""

import os
import sys
from fractions import Fraction

import pytest

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import bialgebra
import linked_pairs
from axioms import (
    ALL_LAWS,
    BIALGEBRA_LAWS,
    LawReport,
    LawSummary,
    StructureConstants,
    borel_b,
    check_algebra,
    check_antisymmetry,
    check_coalgebra,
    check_compatibility,
    check_coskew,
    check_involutive,
    check_structure_constants,
    exhaustive_words,
    perturbed_sl2,
    run_law_suite,
    sl2,
    sl2_dual,
)
from bialgebra import FormalSum, Tensor2, surface_operations
from errors import IncompleteTable
from orientation import parse_surface_symbol
from words import CyclicWord, Occurrence


@pytest.fixture(scope='module')
def torus():
    return parse_surface_symbol('a1a2A1A2')


def cyc(text, surface):
    return CyclicWord.parse(text, surface.alphabet)


@pytest.fixture
def always_positive(monkeypatch):
    """Report every linked pair with sign +1."""
    original = linked_pairs.is_linked

    def forced(p, q, surface):
        linked = original(p, q, surface)
        return None if linked is None else (linked[0], 1)

    monkeypatch.setattr(linked_pairs, 'is_linked', forced)


@pytest.fixture
def shifted_cut(monkeypatch):
    """Start the second cut piece one letter late."""
    original = bialgebra.cut_segments

    def shifted(w, pair):
        first, second = original(w, pair)
        return first, Occurrence((second.start + 1) % len(w), second.length)

    monkeypatch.setattr(bialgebra, 'cut_segments', shifted)


class TestStructureConstants:
    """Finite-dimensional fixtures over exact rationals."""

    @pytest.mark.parametrize('fixture', [sl2, borel_b, sl2_dual])
    def test_bialgebras(self, fixture):
        reports = check_structure_constants(fixture())
        assert [report.law for report in reports] == list(BIALGEBRA_LAWS)
        assert all(report.holds for report in reports), [r.describe() for r in reports if not r.holds]

    def test_perturbed_control_fails(self):
        reports = {report.law: report for report in check_structure_constants(perturbed_sl2())}
        assert reports['antisymmetry'].holds
        assert reports['jacobi'].holds
        assert not reports['coskew'].holds
        assert not reports['compatibility'].holds
        assert reports['coskew'].witness == ('H',)

    def test_sl2_is_not_involutive(self):
        (report,) = check_structure_constants(sl2(), laws=('involutivity',))
        assert not report.holds
        assert report.witness == ('X+',)
        assert report.residual == FormalSum({'X+': Fraction(-2)})

    def test_sl2_dual_is_not_involutive(self):
        (report,) = check_structure_constants(sl2_dual(), laws=('involutivity',))
        assert not report.holds

    def test_incomplete_bracket_table(self):
        with pytest.raises(IncompleteTable):
            StructureConstants(
                name='partial',
                basis=('H', 'X'),
                bracket_table={('H', 'X'): {'X': Fraction(2)}},
                cobracket_table={'H': {}, 'X': {}},
            )

    def test_incomplete_cobracket_table(self):
        base = borel_b()
        with pytest.raises(IncompleteTable):
            StructureConstants(
                name='partial',
                basis=base.basis,
                bracket_table=base.bracket_table,
                cobracket_table={'H': {}},
            )

    def test_values_must_stay_in_basis(self):
        base = borel_b()
        with pytest.raises(IncompleteTable):
            StructureConstants(
                name='leaky',
                basis=base.basis,
                bracket_table=base.bracket_table,
                cobracket_table={'H': {}, 'X': {('X', 'Y'): Fraction(1)}},
            )

    def test_unknown_law(self):
        with pytest.raises(ValueError):
            check_structure_constants(sl2(), laws=('associativity',))


SURFACES = ['a1a2A1A2', 'a2a1A2A1', 'a1a2a3A1A2A3']


@pytest.fixture(scope='module', params=SURFACES)
def surface(request):
    return parse_surface_symbol(request.param)


def triple_words(surface):
    """Every word up to length 2 on two generators; generators and a few pairs on three."""
    if surface.n == 2:
        return exhaustive_words(surface.alphabet, 2)
    extra = [cyc(text, surface) for text in ('a1a2', 'a1A3', 'a2a2', 'a3A2')]
    return exhaustive_words(surface.alphabet, 1) + extra


class TestWordLaws:
    """Law checks on cyclic words over several surface symbols."""

    def test_coalgebra_on_small_words(self, surface):
        for w in exhaustive_words(surface.alphabet, 4):
            report = check_coalgebra(w, surface)
            assert report.holds, report.describe()

    def test_involutive_on_small_words(self, surface):
        for w in exhaustive_words(surface.alphabet, 4):
            assert check_involutive(w, surface).holds, str(w)

    def test_algebra_on_short_triples(self, surface):
        words = triple_words(surface)
        ops = surface_operations(surface)
        for u in words:
            for v in words:
                assert check_antisymmetry(u, v, surface, ops).holds
                for w in words:
                    assert check_algebra(u, v, w, surface, ops).holds, f"({u}, {v}, {w})"

    def test_compatibility_on_short_pairs(self, surface):
        words = exhaustive_words(surface.alphabet, 2)
        ops = surface_operations(surface)
        for v in words:
            for w in words:
                report = check_compatibility(v, w, surface, ops)
                assert report.holds, report.describe()

    def test_report_description(self, torus):
        report = check_coskew(cyc('a1a1a2a2', torus), torus)
        assert report.describe() == 'law=coskew holds witness=a1a1a2a2'
        assert report.residual == Tensor2()


class TestThreeGenerators:
    """Words whose linkage needs letters that do not form a reduced word."""

    @pytest.fixture
    def genus_three(self):
        return parse_surface_symbol('a1a2a3A1A2A3')

    @pytest.mark.parametrize('text', ['a1a1a2a3', 'a1a2a1a3', 'a1a2a3A1A2A3', 'a1a1a2a2a3a3'])
    def test_coalgebra_and_involutivity(self, genus_three, text):
        w = cyc(text, genus_three)
        assert check_coalgebra(w, genus_three).holds, text
        assert check_involutive(w, genus_three).holds, text

    def test_compatibility_with_the_symbol_word(self, genus_three):
        w = cyc('a1a2a3A1A2A3', genus_three)
        ops = surface_operations(genus_three)
        for v in exhaustive_words(genus_three.alphabet, 1):
            assert check_compatibility(v, w, genus_three, ops).holds, str(v)

    def test_suite_holds(self, genus_three):
        summaries = run_law_suite(genus_three, max_len=3, samples=10, seed=3, laws='coalgebra')
        assert all(summary.holds for summary in summaries)


class TestFaultInjection:
    """A broken sign or cut must be caught."""

    def test_forced_signs_break_coskew(self, torus, always_positive):
        report = check_coskew(cyc('a1a1a2a2', torus), torus)
        assert not report.holds
        assert report.residual[(cyc('a1a2', torus), cyc('a1a2', torus))] == 4

    def test_forced_signs_break_antisymmetry(self, torus, always_positive):
        a1, a2 = cyc('a1', torus), cyc('a2', torus)
        report = check_antisymmetry(a1, a2, torus)
        assert not report.holds
        assert report.residual == FormalSum.of(cyc('a1a2', torus), 2)

    def test_forced_signs_break_jacobi_or_antisymmetry(self, torus, always_positive):
        a1, a2 = cyc('a1', torus), cyc('a2', torus)
        assert not check_algebra(a1, a2, a1, torus).holds

    def test_shifted_cut_breaks_coskew(self, torus, shifted_cut):
        w = cyc('a1a1a2a2', torus)
        report = check_coskew(w, torus)
        assert not report.holds
        delta = bialgebra.cobracket(w, torus)
        ab = cyc('a1a2', torus)
        assert delta == Tensor2({(ab, cyc('a1a1', torus)): 1, (ab, cyc('a2a2', torus)): -1})

    def test_forced_signs_fail_the_suite(self, torus, always_positive):
        summaries = {summary.law: summary for summary in run_law_suite(torus, max_len=4, samples=0)}
        assert not summaries['coskew'].holds
        assert summaries['coskew'].first_failure.law == 'coskew'


class TestLawSuite:
    """Corpus runs."""

    def test_small_run_holds(self, torus):
        summaries = run_law_suite(torus, max_len=3, samples=10, seed=5)
        assert [summary.law for summary in summaries] == list(ALL_LAWS)
        for summary in summaries:
            assert summary.holds, summary.format_line()
            assert summary.checked > 0

    def test_law_group_selection(self, torus):
        summaries = run_law_suite(torus, max_len=2, samples=3, laws='coalgebra')
        assert [summary.law for summary in summaries] == ['coskew', 'co_jacobi']
        assert summaries[0].checked == len(exhaustive_words(torus.alphabet, 2))

    def test_unknown_group(self, torus):
        with pytest.raises(ValueError):
            run_law_suite(torus, max_len=2, samples=1, laws='everything')

    def test_other_surface(self):
        surface = parse_surface_symbol('a1A2A1a2')
        summaries = run_law_suite(surface, max_len=3, samples=5, seed=2, laws='coalgebra')
        assert all(summary.holds for summary in summaries)

    def test_summary_tally(self):
        summary = LawSummary('coskew')
        failing = LawReport.from_residual('coskew', FormalSum.of('x'), ('w',))
        summary.record(LawReport.from_residual('coskew', FormalSum(), ('v',)))
        summary.record(failing)
        summary.record(failing)
        assert summary.format_line() == 'law=coskew checked=3 failures=2'
        assert summary.first_failure is failing
        assert not summary.holds


if __name__ == '__main__':
    pytest.main([__file__])


class TestFaultControlScript:
    """The acceptance script's broken-operation controls."""

    @pytest.fixture
    def verify_axioms(self):
        sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'scripts'))
        import verify_axioms
        return verify_axioms

    def test_every_fault_is_detected(self, verify_axioms):
        assert [name for name, *_ in verify_axioms.FAULTS] == [
            'signs forced to +1',
            'second cut piece shifted by one',
        ]
        assert verify_axioms.verify_fault_controls('a1a2A1A2')

    def test_harmless_fault_is_reported(self, verify_axioms, monkeypatch):
        unchanged = [('unchanged signs', linked_pairs, 'is_linked', lambda original: original)]
        monkeypatch.setattr(verify_axioms, 'FAULTS', unchanged)
        assert not verify_axioms.verify_fault_controls('a1a2A1A2')

    def test_controls_restore_the_operations(self, verify_axioms, torus):
        verify_axioms.verify_fault_controls('a1a2A1A2')
        a1, a2 = cyc('a1', torus), cyc('a2', torus)
        assert check_antisymmetry(a1, a2, torus).holds
        assert check_coskew(cyc('a1a1a2a2', torus), torus).holds
