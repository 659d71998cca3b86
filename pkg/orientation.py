"""
Surface symbols and the orientation map o(.).

A surface symbol is a reduced cyclic word that uses every letter of the
n-alphabet exactly once. It fixes a cyclic order on the 2n letters; the
orientation of a short cyclic word is read off by comparing its letters'
positions in that order.
"""

import logging
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Dict, Sequence

from errors import InvalidLetter, NotASurfaceSymbol, ParseError, UnsupportedLength
from words import (
    Alphabet,
    CyclicWord,
    Letter,
    LinearWord,
    cyclic_reduce_canonicalize,
    format_word,
    is_cyclically_reduced,
    parse_letters,
)

logger = logging.getLogger(__name__)


class PairType(IntEnum):
    """The three shapes of a linked pair."""

    TYPE1 = 1
    TYPE2 = 2
    TYPE3 = 3


@dataclass(frozen=True)
class SurfaceSymbol:
    """A validated surface symbol with its letter position table."""

    word: CyclicWord
    alphabet: Alphabet
    positions: Dict[Letter, int] = field(compare=False, hash=False, repr=False)

    @property
    def n(self) -> int:
        return self.alphabet.n

    def __str__(self) -> str:
        return self.word.text


def validate_surface_symbol(w: CyclicWord, alphabet: Alphabet) -> SurfaceSymbol:
    """
    Check that ``w`` uses each letter of ``alphabet`` exactly once.

    Args:
        w: Candidate symbol (already reduced as a cyclic word)
        alphabet: The n-alphabet

    Returns:
        SurfaceSymbol with the cyclic position of each letter

    Raises:
        NotASurfaceSymbol: Wrong length, or a letter missing or repeated
    """
    letters = w.canonical
    if len(letters) != 2 * alphabet.n:
        raise NotASurfaceSymbol(
            f"{w} has length {len(letters)}, a surface symbol over "
            f"{alphabet.n} generators has length {2 * alphabet.n}"
        )
    positions: Dict[Letter, int] = {}
    for position, letter in enumerate(letters):
        if not alphabet.contains(letter):
            raise NotASurfaceSymbol(f"{w} uses letter {letter} outside the alphabet")
        if letter in positions:
            raise NotASurfaceSymbol(f"{w} repeats letter {letter}")
        positions[letter] = position
    missing = [str(letter) for letter in alphabet.letters() if letter not in positions]
    if missing:
        raise NotASurfaceSymbol(f"{w} is missing letters {', '.join(missing)}")
    return SurfaceSymbol(word=w, alphabet=alphabet, positions=positions)


def parse_surface_symbol(text: str) -> SurfaceSymbol:
    """
    Parse the ASCII form of a surface symbol, e.g. ``a1a2A1A2``.

    The alphabet size is inferred from the largest index. The raw word must
    already be cyclically reduced; a symbol such as ``a1A1a2A2`` is rejected
    rather than being reduced to something shorter.
    """
    try:
        raw = parse_letters(text)
    except (ParseError, InvalidLetter) as e:
        raise NotASurfaceSymbol(f"Cannot parse surface symbol {text!r}: {e}") from e
    if not raw:
        raise NotASurfaceSymbol("Surface symbol is empty")
    alphabet = Alphabet.for_word(raw)
    if not is_cyclically_reduced(raw):
        raise NotASurfaceSymbol(f"{text!r} is not reduced as a cyclic word")
    symbol = validate_surface_symbol(cyclic_reduce_canonicalize(raw), alphabet)
    logger.debug(f"Surface symbol {symbol} over {alphabet.n} generators")
    return symbol


def cyclic_order(letters: Sequence[Letter], surface: SurfaceSymbol) -> int:
    """
    Compare the cyclic order of pairwise distinct letters with the symbol's.

    Returns +1 when the letters occur in the symbol's cyclic order, -1 when
    they occur in the reversed order, and 0 when a letter repeats, a letter
    is foreign to the symbol, or neither order fits. Three distinct letters
    always give +1 or -1. No reducedness is asked of ``letters``.
    """
    if len(set(letters)) != len(letters):
        return 0
    try:
        sequence = [surface.positions[letter] for letter in letters]
    except KeyError:
        return 0
    size = len(sequence)
    descents = sum(1 for i in range(size) if sequence[i] > sequence[(i + 1) % size])
    if descents == 1:
        return 1
    if descents == size - 1:
        return -1
    return 0


def orientation_o(w: Sequence[Letter], surface: SurfaceSymbol) -> int:
    """
    Orientation of the cyclic word c(w) relative to the surface symbol.

    Returns 0 when ``w`` is not cyclically reduced, otherwise its
    ``cyclic_order``.

    Raises:
        UnsupportedLength: ``w`` has fewer than three letters
    """
    if len(w) < 3:
        raise UnsupportedLength(
            f"Orientation is only defined for words of length at least 3, got {format_word(w)!r}"
        )
    if not is_cyclically_reduced(w):
        return 0
    return cyclic_order(w, surface)


def sign_word(kind: PairType, p: Sequence[Letter], q: Sequence[Letter]) -> LinearWord:
    """The letters whose cyclic order is the sign of a linked pair of the given type."""
    if kind == PairType.TYPE1:
        return (p[0].bar(), q[0].bar(), p[1], q[1])
    if kind == PairType.TYPE2:
        return (p[0].bar(), q[0].bar(), p[1])
    return (q[-1], p[0].bar(), p[1])


def sign(pair, surface: SurfaceSymbol) -> int:
    """Sign of a linked pair: the cyclic order of its type-specific sign word."""
    return cyclic_order(sign_word(pair.kind, pair.p_word, pair.q_word), surface)


def euler_characteristic(surface: SurfaceSymbol) -> int:
    return 1 - surface.n
