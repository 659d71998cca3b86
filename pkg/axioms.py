"""
Law checkers for Lie bialgebras.

Each law is evaluated as a residual that must vanish exactly:

    coskew          s(delta(x)) + delta(x)
    co_jacobi       (id + e + e^2)(id (x) delta)(delta(x))
    antisymmetry    [x, y] + [y, x]
    jacobi          [x, [y, z]] + [y, [z, x]] + [z, [x, y]]
    compatibility   delta([x, y]) - x.delta(y) + y.delta(x)
    involutivity    [ , ](delta(x))

The same residuals are computed for cyclic words over a surface symbol
(integer coefficients) and for finite-dimensional algebras given by
structure constants (Fraction coefficients). By multilinearity it is enough
to check basis tuples.
"""

import itertools
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

from bialgebra import FormalSum, LieOperations, LinearCombination, Tensor2, Tensor3, surface_operations
from errors import IncompleteTable
from orientation import SurfaceSymbol
from words import (
    Alphabet,
    CyclicWord,
    Letter,
    cyclic_reduce_canonicalize,
    is_cyclically_reduced,
    least_rotation,
)

logger = logging.getLogger(__name__)

COALGEBRA_LAWS = ('coskew', 'co_jacobi')
ALGEBRA_LAWS = ('antisymmetry', 'jacobi')
BIALGEBRA_LAWS = COALGEBRA_LAWS + ALGEBRA_LAWS + ('compatibility',)
ALL_LAWS = BIALGEBRA_LAWS + ('involutivity',)

LAW_GROUPS = {
    'all': ALL_LAWS,
    'algebra': ALGEBRA_LAWS,
    'coalgebra': COALGEBRA_LAWS,
    'compat': ('compatibility',),
    'involutive': ('involutivity',),
}


@dataclass(frozen=True)
class LawReport:
    """Outcome of one law on one input tuple. ``holds`` iff ``residual`` is zero."""

    law: str
    holds: bool
    residual: LinearCombination
    witness: Tuple[Hashable, ...] = ()

    @classmethod
    def from_residual(cls, law: str, residual: LinearCombination, witness=()) -> 'LawReport':
        return cls(law=law, holds=not residual, residual=residual, witness=tuple(witness))

    def describe(self) -> str:
        inputs = ','.join(str(item) for item in self.witness)
        status = 'holds' if self.holds else 'FAILS'
        return f"law={self.law} {status} witness={inputs}"


# Residuals


def coskew_residual(ops: LieOperations, x: LinearCombination) -> Tensor2:
    delta = ops.cobracket_of_sum(x)
    return delta.swap() + delta


def co_jacobi_residual(ops: LieOperations, x: LinearCombination) -> Tensor3:
    iterated = ops.id_tensor_delta(ops.cobracket_of_sum(x))
    once = iterated.rotate()
    return iterated + once + once.rotate()


def antisymmetry_residual(ops: LieOperations, x: LinearCombination, y: LinearCombination) -> FormalSum:
    return ops.bracket_of_sums(x, y) + ops.bracket_of_sums(y, x)


def jacobi_residual(
    ops: LieOperations, x: LinearCombination, y: LinearCombination, z: LinearCombination
) -> FormalSum:
    return (
        ops.bracket_of_sums(x, ops.bracket_of_sums(y, z))
        + ops.bracket_of_sums(y, ops.bracket_of_sums(z, x))
        + ops.bracket_of_sums(z, ops.bracket_of_sums(x, y))
    )


def compatibility_residual(ops: LieOperations, x: LinearCombination, y: LinearCombination) -> Tensor2:
    left = ops.cobracket_of_sum(ops.bracket_of_sums(x, y))
    return left - ops.act(x, ops.cobracket_of_sum(y)) + ops.act(y, ops.cobracket_of_sum(x))


def involutivity_residual(ops: LieOperations, x: LinearCombination) -> FormalSum:
    return ops.bracket_tensor(ops.cobracket_of_sum(x))


def _combined(name: str, reports: Sequence[LawReport]) -> LawReport:
    for report in reports:
        if not report.holds:
            return report
    return LawReport(law=name, holds=True, residual=FormalSum(), witness=reports[0].witness)


# Cyclic words over a surface symbol


def check_coskew(w: CyclicWord, surface: SurfaceSymbol, ops: Optional[LieOperations] = None) -> LawReport:
    ops = ops or surface_operations(surface)
    return LawReport.from_residual('coskew', coskew_residual(ops, FormalSum.of(w)), (w,))


def check_co_jacobi(w: CyclicWord, surface: SurfaceSymbol, ops: Optional[LieOperations] = None) -> LawReport:
    ops = ops or surface_operations(surface)
    return LawReport.from_residual('co_jacobi', co_jacobi_residual(ops, FormalSum.of(w)), (w,))


def check_antisymmetry(
    v: CyclicWord, w: CyclicWord, surface: SurfaceSymbol, ops: Optional[LieOperations] = None
) -> LawReport:
    ops = ops or surface_operations(surface)
    residual = antisymmetry_residual(ops, FormalSum.of(v), FormalSum.of(w))
    return LawReport.from_residual('antisymmetry', residual, (v, w))


def check_jacobi(
    u: CyclicWord,
    v: CyclicWord,
    w: CyclicWord,
    surface: SurfaceSymbol,
    ops: Optional[LieOperations] = None,
) -> LawReport:
    ops = ops or surface_operations(surface)
    residual = jacobi_residual(ops, FormalSum.of(u), FormalSum.of(v), FormalSum.of(w))
    return LawReport.from_residual('jacobi', residual, (u, v, w))


def check_coalgebra(w: CyclicWord, surface: SurfaceSymbol, ops: Optional[LieOperations] = None) -> LawReport:
    """
    Coskew symmetry and co-Jacobi for delta(W).

    Returns:
        The first failing report, or a passing report named ``coalgebra``
    """
    ops = ops or surface_operations(surface)
    return _combined('coalgebra', [check_coskew(w, surface, ops), check_co_jacobi(w, surface, ops)])


def check_algebra(
    u: CyclicWord,
    v: CyclicWord,
    w: CyclicWord,
    surface: SurfaceSymbol,
    ops: Optional[LieOperations] = None,
) -> LawReport:
    """Antisymmetry of [U, V] and the Jacobi sum of (U, V, W)."""
    ops = ops or surface_operations(surface)
    return _combined(
        'algebra',
        [check_antisymmetry(u, v, surface, ops), check_jacobi(u, v, w, surface, ops)],
    )


def check_compatibility(
    v: CyclicWord, w: CyclicWord, surface: SurfaceSymbol, ops: Optional[LieOperations] = None
) -> LawReport:
    """delta([V, W]) == V.delta(W) - W.delta(V)"""
    ops = ops or surface_operations(surface)
    residual = compatibility_residual(ops, FormalSum.of(v), FormalSum.of(w))
    return LawReport.from_residual('compatibility', residual, (v, w))


def check_involutive(w: CyclicWord, surface: SurfaceSymbol, ops: Optional[LieOperations] = None) -> LawReport:
    """The bracket of delta(W) vanishes."""
    ops = ops or surface_operations(surface)
    return LawReport.from_residual('involutivity', involutivity_residual(ops, FormalSum.of(w)), (w,))


# Finite-dimensional structure constants


Vector = Mapping[str, Fraction]


@dataclass(frozen=True)
class StructureConstants:
    """
    A finite-dimensional algebra with bracket and cobracket tables.

    ``bracket_table[(a, b)]`` is [a, b] as a map label -> coefficient and
    ``cobracket_table[a]`` is delta(a) as a map (label, label) -> coefficient.
    Both tables must list every basis element (pair), zero results included.
    """

    name: str
    basis: Tuple[str, ...]
    bracket_table: Mapping[Tuple[str, str], Vector]
    cobracket_table: Mapping[str, Mapping[Tuple[str, str], Fraction]]

    def __post_init__(self):
        labels = set(self.basis)
        missing_pairs = [pair for pair in itertools.product(self.basis, repeat=2) if pair not in self.bracket_table]
        if missing_pairs:
            raise IncompleteTable(f"{self.name}: bracket table misses {missing_pairs}")
        missing = [label for label in self.basis if label not in self.cobracket_table]
        if missing:
            raise IncompleteTable(f"{self.name}: cobracket table misses {missing}")
        for value in self.bracket_table.values():
            if not set(value) <= labels:
                raise IncompleteTable(f"{self.name}: bracket value {dict(value)} leaves the basis")
        for value in self.cobracket_table.values():
            if not {label for pair in value for label in pair} <= labels:
                raise IncompleteTable(f"{self.name}: cobracket value {dict(value)} leaves the basis")

    def operations(self) -> LieOperations:
        return LieOperations(
            lambda a, b: FormalSum(self.bracket_table[(a, b)]),
            lambda a: Tensor2(self.cobracket_table[a]),
        )

    def element(self, label: str) -> FormalSum:
        return FormalSum.of(label, Fraction(1))


def _law_residuals(sc: StructureConstants, law: str, ops: LieOperations):
    """Yield (witness, residual) for ``law`` over all basis tuples."""
    e = sc.element
    if law == 'coskew':
        for a in sc.basis:
            yield (a,), coskew_residual(ops, e(a))
    elif law == 'co_jacobi':
        for a in sc.basis:
            yield (a,), co_jacobi_residual(ops, e(a))
    elif law == 'involutivity':
        for a in sc.basis:
            yield (a,), involutivity_residual(ops, e(a))
    elif law == 'antisymmetry':
        for a, b in itertools.product(sc.basis, repeat=2):
            yield (a, b), antisymmetry_residual(ops, e(a), e(b))
    elif law == 'compatibility':
        for a, b in itertools.product(sc.basis, repeat=2):
            yield (a, b), compatibility_residual(ops, e(a), e(b))
    elif law == 'jacobi':
        for a, b, c in itertools.product(sc.basis, repeat=3):
            yield (a, b, c), jacobi_residual(ops, e(a), e(b), e(c))
    else:
        raise ValueError(f"Unknown law {law!r}")


def check_structure_constants(
    sc: StructureConstants, laws: Sequence[str] = BIALGEBRA_LAWS
) -> List[LawReport]:
    """
    Verify ``laws`` on every basis tuple of ``sc`` over exact rationals.

    Returns:
        One report per law: the first failing tuple, or a passing report
    """
    ops = sc.operations()
    reports = []
    for law in laws:
        report = LawReport(law=law, holds=True, residual=FormalSum())
        for witness, residual in _law_residuals(sc, law, ops):
            if residual:
                report = LawReport.from_residual(law, residual, witness)
                logger.warning(f"{sc.name}: {report.describe()}")
                break
        reports.append(report)
    return reports


def _full_bracket_table(basis: Sequence[str], nonzero: Dict[Tuple[str, str], Vector]):
    """Complete an antisymmetric bracket table from its nonzero entries [a, b] with a < b in listing order."""
    table = {pair: {} for pair in itertools.product(basis, repeat=2)}
    for (a, b), value in nonzero.items():
        table[(a, b)] = dict(value)
        table[(b, a)] = {label: -coeff for label, coeff in value.items()}
    return table


HALF = Fraction(1, 2)


def borel_b() -> StructureConstants:
    """The 2-dimensional bialgebra B: [H, X] = 2X, delta(X) = (X(x)H - H(x)X)/2."""
    basis = ('H', 'X')
    return StructureConstants(
        name='B',
        basis=basis,
        bracket_table=_full_bracket_table(basis, {('H', 'X'): {'X': Fraction(2)}}),
        cobracket_table={
            'H': {},
            'X': {('X', 'H'): HALF, ('H', 'X'): -HALF},
        },
    )


def sl2() -> StructureConstants:
    basis = ('H', 'X+', 'X-')
    return StructureConstants(
        name='sl2',
        basis=basis,
        bracket_table=_full_bracket_table(
            basis,
            {
                ('X+', 'X-'): {'H': Fraction(1)},
                ('H', 'X+'): {'X+': Fraction(2)},
                ('H', 'X-'): {'X-': Fraction(-2)},
            },
        ),
        cobracket_table={
            'H': {},
            'X+': {('X+', 'H'): HALF, ('H', 'X+'): -HALF},
            'X-': {('X-', 'H'): HALF, ('H', 'X-'): -HALF},
        },
    )


def sl2_dual() -> StructureConstants:
    """The dual bialgebra of sl2 on the dual basis Phi, Psi+, Psi-."""
    basis = ('Phi', 'Psi+', 'Psi-')
    return StructureConstants(
        name='sl2*',
        basis=basis,
        bracket_table=_full_bracket_table(
            basis,
            {
                ('Psi+', 'Phi'): {'Psi+': HALF},
                ('Psi-', 'Phi'): {'Psi-': HALF},
            },
        ),
        cobracket_table={
            'Phi': {('Psi+', 'Psi-'): Fraction(1), ('Psi-', 'Psi+'): Fraction(-1)},
            'Psi+': {('Phi', 'Psi+'): Fraction(2), ('Psi+', 'Phi'): Fraction(-2)},
            'Psi-': {('Phi', 'Psi-'): Fraction(-2), ('Psi-', 'Phi'): Fraction(2)},
        },
    )


def perturbed_sl2() -> StructureConstants:
    """sl2 with delta(H) replaced by X+ (x) X-; not a Lie bialgebra."""
    base = sl2()
    cobracket_table = dict(base.cobracket_table)
    cobracket_table['H'] = {('X+', 'X-'): Fraction(1)}
    return StructureConstants(
        name='perturbed sl2',
        basis=base.basis,
        bracket_table=base.bracket_table,
        cobracket_table=cobracket_table,
    )


# Word corpora


def exhaustive_words(alphabet: Alphabet, max_len: int) -> List[CyclicWord]:
    """Every reduced cyclic word of length 1..max_len, ordered by length then canonical form."""
    letters = alphabet.letters()
    words = []
    for length in range(1, max_len + 1):
        for candidate in itertools.product(letters, repeat=length):
            if is_cyclically_reduced(candidate) and least_rotation(candidate) == 0:
                words.append(CyclicWord(candidate))
    return words


def _random_reduced(rng: random.Random, letters: Sequence[Letter], length: int) -> Optional[CyclicWord]:
    chosen: List[Letter] = [rng.choice(letters)]
    while len(chosen) < length:
        forbidden = {chosen[-1].bar()}
        if len(chosen) == length - 1:
            forbidden.add(chosen[0].bar())
        options = [letter for letter in letters if letter not in forbidden]
        if not options:
            return None
        chosen.append(rng.choice(options))
    result = cyclic_reduce_canonicalize(chosen)
    return result or None


def corpus(alphabet: Alphabet, max_len: int, count: int = 0, seed: int = 0) -> List[CyclicWord]:
    """
    A deterministic collection of reduced cyclic words.

    Args:
        alphabet: Alphabet the words are drawn from
        max_len: Longest word length
        count: Number of seeded random draws of length 5..max_len added to
            the exhaustive part (ignored when max_len <= 4)
        seed: Seed for the random draws

    Returns:
        Every word of length <= min(max_len, 4), followed by the distinct
        random draws in the order they were drawn
    """
    if max_len < 1:
        raise ValueError(f"max_len must be at least 1, got {max_len}")
    words = exhaustive_words(alphabet, min(max_len, 4))
    if max_len <= 4:
        return words
    seen = set(words)
    rng = random.Random(seed)
    letters = alphabet.letters()
    for _ in range(count):
        word = _random_reduced(rng, letters, rng.randint(5, max_len))
        if word is not None and word not in seen:
            seen.add(word)
            words.append(word)
    logger.debug(f"Corpus over {alphabet.n} generators up to length {max_len}: {len(words)} words")
    return words


@dataclass
class LawSummary:
    """Tally of one law over a corpus run."""

    law: str
    checked: int = 0
    failures: int = 0
    first_failure: Optional[LawReport] = field(default=None, repr=False)

    @property
    def holds(self) -> bool:
        return self.failures == 0

    def record(self, report: LawReport):
        self.checked += 1
        if not report.holds:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = report
                logger.warning(report.describe())

    def format_line(self) -> str:
        return f"law={self.law} checked={self.checked} failures={self.failures}"


def run_law_suite(
    surface: SurfaceSymbol,
    max_len: int,
    samples: int,
    seed: int = 0,
    laws: str = 'all',
    extended_windows: bool = False,
) -> List[LawSummary]:
    """
    Check the laws of ``laws`` on a corpus of words over ``surface``.

    The single-word laws (coskew, co_jacobi, involutivity) run on every
    corpus word. Compatibility runs on ``samples`` seeded pairs; antisymmetry
    and Jacobi run on ``samples`` seeded triples.

    Args:
        surface: Surface symbol
        max_len: Longest corpus word
        samples: Random corpus draws, and the number of pairs and triples
        seed: Seed for both the corpus and the tuple draws
        laws: One of ``all``, ``algebra``, ``coalgebra``, ``compat``, ``involutive``
        extended_windows: Window switch passed to the cobracket

    Returns:
        One summary per law, in the order of ``ALL_LAWS``
    """
    if laws not in LAW_GROUPS:
        raise ValueError(f"Unknown law group {laws!r}; expected one of {', '.join(LAW_GROUPS)}")
    selected = LAW_GROUPS[laws]
    words = corpus(surface.alphabet, max_len, count=samples, seed=seed)
    ops = surface_operations(surface, extended_windows=extended_windows)
    summaries = {law: LawSummary(law) for law in selected}
    rng = random.Random(seed)

    for w in words:
        if 'coskew' in summaries:
            summaries['coskew'].record(check_coskew(w, surface, ops))
        if 'co_jacobi' in summaries:
            summaries['co_jacobi'].record(check_co_jacobi(w, surface, ops))
        if 'involutivity' in summaries:
            summaries['involutivity'].record(check_involutive(w, surface, ops))

    if 'compatibility' in summaries:
        for _ in range(samples):
            v, w = rng.choice(words), rng.choice(words)
            summaries['compatibility'].record(check_compatibility(v, w, surface, ops))

    if 'antisymmetry' in summaries:
        for _ in range(samples):
            u, v, w = rng.choice(words), rng.choice(words), rng.choice(words)
            summaries['antisymmetry'].record(check_antisymmetry(u, v, surface, ops))
            summaries['jacobi'].record(check_jacobi(u, v, w, surface, ops))

    logger.info(
        f"Law suite over {surface}: {len(words)} words, "
        f"{sum(summary.failures for summary in summaries.values())} failures"
    )
    return [summaries[law] for law in selected]
