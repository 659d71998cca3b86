"""
Cuts, the cobracket and the bracket on formal sums of cyclic words.

A linked pair of LP1(W) cuts W into two cyclic words (delta_cut); a linked
pair of LP2(V, W) joins V and W into one cyclic word (gamma). Summing these
with the pair signs gives

    cobracket(W) = sum sign(P, Q) * delta1(P, Q) (x) delta2(P, Q)
    bracket(V, W) = sum sign(P, Q) * gamma(P, Q)

Linear combinations are dictionaries from terms to nonzero coefficients. The
same classes carry integer coefficients for cyclic words and Fraction
coefficients for finite-dimensional structure constants.
"""

import logging
from typing import Callable, Dict, Hashable, Optional, Tuple

from errors import InvalidOccurrence, InvalidPair
from linked_pairs import (
    LinkedPair,
    enumerate_lp1,
    enumerate_lp2,
    is_linked,
    pair_shape,
    power_for,
)
from orientation import PairType, SurfaceSymbol
from words import (
    EMPTY,
    CyclicWord,
    LinearWord,
    Occurrence,
    cyclic_reduce_canonicalize,
    window,
)

logger = logging.getLogger(__name__)


def format_coefficient(value) -> str:
    """``+1``, ``-2``, ``+1/2``: explicit sign on every nonzero coefficient."""
    return f"+{value}" if value > 0 else str(value)


class LinearCombination(dict):
    """
    A finitely supported linear combination: term -> coefficient.

    Zero coefficients are never stored, so two combinations are equal exactly
    when their stored terms are equal. Missing terms read as 0.
    """

    record_keys: Tuple[str, ...] = ('term',)

    def __init__(self, data=()):
        super().__init__()
        self.__iadd__(data)

    @classmethod
    def of(cls, term: Hashable, coefficient=1) -> 'LinearCombination':
        return cls({term: coefficient})

    def __getitem__(self, key):
        return self.get(key, 0)

    def add_term(self, term: Hashable, coefficient) -> 'LinearCombination':
        if coefficient == 0:
            return self
        total = self.get(term, 0) + coefficient
        if total == 0:
            del self[term]
        else:
            dict.__setitem__(self, term, total)
        return self

    def iadd_coef(self, coef, other) -> 'LinearCombination':
        """self += coef * other"""
        if coef == 0:
            return self
        items = other.items() if isinstance(other, dict) else other
        for term, value in items:
            self.add_term(term, coef * value)
        return self

    def __iadd__(self, other):
        return self.iadd_coef(1, other)

    def __isub__(self, other):
        return self.iadd_coef(-1, other)

    def __add__(self, other):
        return type(self)(self).__iadd__(other)

    def __sub__(self, other):
        return type(self)(self).__isub__(other)

    def __neg__(self):
        return type(self)((term, -value) for term, value in self.items())

    def __mul__(self, scalar):
        if scalar == 0:
            return type(self)()
        return type(self)((term, scalar * value) for term, value in self.items())

    def __rmul__(self, scalar):
        return self.__mul__(scalar)

    def map_terms(self, fn: Callable[[Hashable], Hashable]) -> 'LinearCombination':
        """Apply ``fn`` to every term, merging terms that collide."""
        return type(self)((fn(term), value) for term, value in self.items())

    @staticmethod
    def _components(term) -> Tuple[str, ...]:
        if isinstance(term, tuple):
            return tuple(str(component) for component in term)
        return (str(term),)

    def sorted_terms(self):
        """Terms ordered lexicographically on their component text."""
        return sorted(self.items(), key=lambda item: self._components(item[0]))

    def format_text(self) -> str:
        """One ``<coeff> <term>`` line per term, tensor factors joined by `` | ``; ``0`` if empty."""
        if not self:
            return '0'
        return '\n'.join(
            f"{format_coefficient(value)} {' | '.join(self._components(term))}"
            for term, value in self.sorted_terms()
        )

    def format_records(self) -> str:
        if not self:
            return 'count=0'
        lines = []
        for term, value in self.sorted_terms():
            fields = [f"coeff={format_coefficient(value)}"]
            fields.extend(
                f"{key}={text}" for key, text in zip(self.record_keys, self._components(term))
            )
            lines.append(' '.join(fields))
        return '\n'.join(lines)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({dict(self)!r})"


class FormalSum(LinearCombination):
    """An element of the vector space spanned by cyclic words."""

    record_keys = ('word',)


class Tensor2(LinearCombination):
    """An element of V (x) V; terms are ordered pairs."""

    record_keys = ('left', 'right')

    def swap(self) -> 'Tensor2':
        """s(x (x) y) = y (x) x"""
        return self.map_terms(lambda term: (term[1], term[0]))


class Tensor3(LinearCombination):
    """An element of V (x) V (x) V; terms are ordered triples."""

    record_keys = ('first', 'second', 'third')

    def rotate(self) -> 'Tensor3':
        """epsilon(x (x) y (x) z) = z (x) x (x) y"""
        return self.map_terms(lambda term: (term[2], term[0], term[1]))


def tensor(left: LinearCombination, right: LinearCombination) -> Tensor2:
    """Tensor product of two elements of V."""
    result = Tensor2()
    for a, x in left.items():
        for b, y in right.items():
            result.add_term((a, b), x * y)
    return result


# Linked pairs applied to words


def _check_occurrence(word: CyclicWord, occ: Occurrence, expected: LinearWord, label: str):
    try:
        found = window(word, occ)
    except InvalidOccurrence as e:
        raise InvalidPair(f"{label} occurrence {occ} does not fit {word}: {e}") from e
    if found != tuple(expected):
        raise InvalidPair(f"{label} occurrence {occ} of {word} does not carry the stored word")


def _check_shape(pair: LinkedPair, surface: Optional[SurfaceSymbol]):
    if pair_shape(pair.p_word, pair.q_word) != pair.kind:
        raise InvalidPair(f"Pair {pair.format_line()} does not have the shape of type {int(pair.kind)}")
    if surface is not None:
        linked = is_linked(pair.p_word, pair.q_word, surface)
        if linked != (pair.kind, pair.sign):
            raise InvalidPair(f"Pair {pair.format_line()} is not linked over {surface}")


def validate_lp1_pair(w: CyclicWord, pair: LinkedPair, surface: Optional[SurfaceSymbol] = None):
    """
    Check that ``pair`` is a pair of windows of ``w`` with a consistent shape.

    The orientation conditions are only re-checked when ``surface`` is given.

    Raises:
        InvalidPair: The pair does not belong to ``w``
    """
    if pair.p_occ == pair.q_occ:
        raise InvalidPair(f"Pair {pair.format_line()} uses the same occurrence twice")
    _check_occurrence(w, pair.p_occ, pair.p_word, 'P')
    _check_occurrence(w, pair.q_occ, pair.q_word, 'Q')
    _check_shape(pair, surface)


def validate_lp2_pair(
    v: CyclicWord, w: CyclicWord, pair: LinkedPair, surface: Optional[SurfaceSymbol] = None
):
    """Like ``validate_lp1_pair`` for a pair of windows of powers of ``v`` and ``w``."""
    length = pair.p_occ.length
    if pair.exponents != (power_for(length, len(v)), power_for(length, len(w))):
        raise InvalidPair(f"Pair {pair.format_line()} has exponents {pair.exponents} that do not match its length")
    _check_occurrence(v, pair.p_occ, pair.p_word, 'P')
    _check_occurrence(w, pair.q_occ, pair.q_word, 'Q')
    _check_shape(pair, surface)


def cut_segments(w: CyclicWord, pair: LinkedPair) -> Tuple[Occurrence, Occurrence]:
    """
    The two intervals of W that become delta1 and delta2.

    For types 1 and 2 the cuts sit immediately before p2 and before q2, so the
    intervals run from p2 up to q2 and from q2 up to p2. For type 3 the
    stretches Y and bar(Y) are removed: the intervals run from p2 through q1
    and from q2 through p1.
    """
    size = len(w)
    p1 = pair.p_occ.start
    q1 = pair.q_occ.start
    p2 = pair.p_occ.last(size)
    q2 = pair.q_occ.last(size)
    if pair.kind == PairType.TYPE3:
        return (
            Occurrence(p2, (q1 - p2) % size + 1),
            Occurrence(q2, (p1 - q2) % size + 1),
        )
    return Occurrence(p2, (q2 - p2) % size), Occurrence(q2, (p2 - q2) % size)


def _as_cyclic(letters: LinearWord, context: str) -> CyclicWord:
    result = cyclic_reduce_canonicalize(letters)
    if result is EMPTY:
        raise InvalidPair(f"{context} reduces to the empty word")
    return result


def delta_cut(
    w: CyclicWord, pair: LinkedPair, surface: Optional[SurfaceSymbol] = None
) -> Tuple[CyclicWord, CyclicWord]:
    """
    Cut W at a linked pair of LP1(W).

    Args:
        w: The cyclic word
        pair: A pair from ``enumerate_lp1(w, ...)``
        surface: When given, the pair's linkage and sign are re-checked

    Returns:
        (delta1, delta2) as canonical cyclic words

    Raises:
        InvalidPair: The pair does not belong to ``w``
    """
    validate_lp1_pair(w, pair, surface)
    first, second = cut_segments(w, pair)
    try:
        pieces = window(w, first), window(w, second)
    except InvalidOccurrence as e:
        raise InvalidPair(f"Cut of {w} at {pair.format_line()} is degenerate: {e}") from e
    return (
        _as_cyclic(pieces[0], f"delta1 of {pair.format_line()}"),
        _as_cyclic(pieces[1], f"delta2 of {pair.format_line()}"),
    )


def cobracket(
    w: CyclicWord, surface: SurfaceSymbol, extended_windows: bool = False
) -> Tensor2:
    """delta(W): the signed sum of delta1 (x) delta2 over LP1(W)."""
    result = Tensor2()
    for pair in enumerate_lp1(w, surface, extended_windows=extended_windows):
        if pair.sign == 0:
            continue
        d1, d2 = delta_cut(w, pair)
        result.add_term((d1, d2), pair.sign)
    return result


def cobracket_grouped(
    w: CyclicWord, surface: SurfaceSymbol, extended_windows: bool = False
) -> Tensor2:
    """
    delta(W) summed once per unordered pair {(P, Q), (Q, P)}.

    Each pair with p_occ < q_occ contributes sign * (delta1 (x) delta2 - delta2 (x) delta1).
    """
    result = Tensor2()
    for pair in enumerate_lp1(w, surface, extended_windows=extended_windows):
        if pair.sign == 0 or not pair.p_occ < pair.q_occ:
            continue
        d1, d2 = delta_cut(w, pair)
        result.add_term((d1, d2), pair.sign)
        result.add_term((d2, d1), -pair.sign)
    return result


def gamma(
    v: CyclicWord, w: CyclicWord, pair: LinkedPair, surface: Optional[SurfaceSymbol] = None
) -> CyclicWord:
    """
    Join V and W at a linked pair of LP2(V, W).

    Types 1 and 2 read V from p2 and then W from q2, each once around. For
    type 3, V is read from p2 once around and W from the first letter of
    bar(Y) once around; the shared stretch then cancels in the cyclic
    reduction.

    Raises:
        InvalidPair: The pair does not belong to (``v``, ``w``)
    """
    validate_lp2_pair(v, w, pair, surface)
    p2 = pair.p_occ.last(len(v))
    if pair.kind == PairType.TYPE3:
        w_start = (pair.q_occ.start + 1) % len(w)
    else:
        w_start = pair.q_occ.last(len(w))
    return _as_cyclic(v.rotation(p2) + w.rotation(w_start), f"gamma of {pair.format_line()}")


def bracket(v: CyclicWord, w: CyclicWord, surface: SurfaceSymbol) -> FormalSum:
    """[V, W]: the signed sum of gamma over LP2(V, W)."""
    result = FormalSum()
    for pair in enumerate_lp2(v, w, surface):
        if pair.sign == 0:
            continue
        result.add_term(gamma(v, w, pair), pair.sign)
    return result


def iterated_cut(
    w: CyclicWord,
    outer: LinkedPair,
    i: int,
    inner: LinkedPair,
    surface: Optional[SurfaceSymbol] = None,
) -> Tuple[CyclicWord, CyclicWord]:
    """
    Cut delta_i(outer) again at ``inner``.

    Args:
        w: The cyclic word
        outer: A pair of LP1(W)
        i: 1 or 2, which piece of the outer cut to cut again
        inner: A pair of LP1(delta_i(outer))
        surface: When given, both pairs are re-checked for linkage

    Returns:
        (delta1, delta2) of ``inner`` inside delta_i(outer)

    Raises:
        InvalidPair: ``i`` is not 1 or 2, or a pair does not chain
    """
    if i not in (1, 2):
        raise InvalidPair(f"Piece index must be 1 or 2, got {i}")
    piece = delta_cut(w, outer, surface)[i - 1]
    return delta_cut(piece, inner, surface)


# Linear extensions


BracketFn = Callable[[Hashable, Hashable], LinearCombination]
CobracketFn = Callable[[Hashable], Tensor2]


class LieOperations:
    """
    Bracket and cobracket on basis elements, extended linearly.

    Basis results are memoized; callers receive fresh combinations.
    """

    def __init__(self, bracket_fn: BracketFn, cobracket_fn: CobracketFn):
        self._bracket_fn = bracket_fn
        self._cobracket_fn = cobracket_fn
        self._bracket_cache: Dict[Tuple[Hashable, Hashable], LinearCombination] = {}
        self._cobracket_cache: Dict[Hashable, Tensor2] = {}

    def basis_bracket(self, a: Hashable, b: Hashable) -> LinearCombination:
        key = (a, b)
        if key not in self._bracket_cache:
            self._bracket_cache[key] = self._bracket_fn(a, b)
        return self._bracket_cache[key]

    def basis_cobracket(self, a: Hashable) -> Tensor2:
        if a not in self._cobracket_cache:
            self._cobracket_cache[a] = self._cobracket_fn(a)
        return self._cobracket_cache[a]

    def bracket_of_sums(self, x: LinearCombination, y: LinearCombination) -> FormalSum:
        result = FormalSum()
        for a, s in x.items():
            for b, t in y.items():
                result.iadd_coef(s * t, self.basis_bracket(a, b))
        return result

    def cobracket_of_sum(self, x: LinearCombination) -> Tensor2:
        result = Tensor2()
        for a, s in x.items():
            result.iadd_coef(s, self.basis_cobracket(a))
        return result

    def act(self, x: LinearCombination, t: Tensor2) -> Tensor2:
        """x . (y (x) z) = [x, y] (x) z + y (x) [x, z], extended linearly."""
        result = Tensor2()
        for a, s in x.items():
            for (y, z), c in t.items():
                result.iadd_coef(s * c, tensor(self.basis_bracket(a, y), FormalSum.of(z)))
                result.iadd_coef(s * c, tensor(FormalSum.of(y), self.basis_bracket(a, z)))
        return result

    def bracket_tensor(self, t: Tensor2) -> FormalSum:
        """The bracket applied to each tensor factor pair."""
        result = FormalSum()
        for (y, z), c in t.items():
            result.iadd_coef(c, self.basis_bracket(y, z))
        return result

    def id_tensor_delta(self, t: Tensor2) -> Tensor3:
        """(id (x) delta)(t)"""
        result = Tensor3()
        for (y, z), c in t.items():
            for (a, b), d in self.basis_cobracket(z).items():
                result.add_term((y, a, b), c * d)
        return result


def surface_operations(surface: SurfaceSymbol, extended_windows: bool = False) -> LieOperations:
    """LieOperations for cyclic words over ``surface``."""
    return LieOperations(
        lambda v, w: bracket(v, w, surface),
        lambda w: cobracket(w, surface, extended_windows=extended_windows),
    )


def bracket_of_sums(x: LinearCombination, y: LinearCombination, surface: SurfaceSymbol) -> FormalSum:
    """Bilinear extension of the bracket to formal sums."""
    return surface_operations(surface).bracket_of_sums(x, y)


def cobracket_of_sum(x: LinearCombination, surface: SurfaceSymbol) -> Tensor2:
    return surface_operations(surface).cobracket_of_sum(x)


def act(x: LinearCombination, t: Tensor2, surface: SurfaceSymbol) -> Tensor2:
    return surface_operations(surface).act(x, t)


def bracket_tensor(t: Tensor2, surface: SurfaceSymbol) -> FormalSum:
    return surface_operations(surface).bracket_tensor(t)


def id_tensor_delta(t: Tensor2, surface: SurfaceSymbol) -> Tensor3:
    return surface_operations(surface).id_tensor_delta(t)

