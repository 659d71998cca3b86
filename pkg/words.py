"""
Letters, linear words and reduced cyclic words.

A word over the n-alphabet is written in ASCII as a concatenation of tokens
``a<k>`` (the generator a_k) and ``A<k>`` (its inverse, written ā_k), e.g.
``a1A2a1``. Cyclic words are stored by their canonical representative: the
lexicographically least rotation under the letter order
a1 < A1 < a2 < A2 < ...

All values in this module are immutable.
"""

import re
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

from errors import (
    EmptyWordError,
    InvalidExponent,
    InvalidLetter,
    InvalidOccurrence,
    NonCanonicalWord,
    ParseError,
)


_TOKEN = re.compile(r'([aA])([0-9]+)')


@dataclass(frozen=True, order=True)
class Letter:
    """A generator a_index, or its inverse when ``barred`` is set.

    Field order makes the dataclass ordering the letter order
    a1 < A1 < a2 < A2 < ...
    """

    index: int
    barred: bool = False

    def __post_init__(self):
        if self.index < 1:
            raise InvalidLetter(f"Letter index must be at least 1, got {self.index}")

    def bar(self) -> 'Letter':
        return Letter(self.index, not self.barred)

    def __str__(self) -> str:
        return f"{'A' if self.barred else 'a'}{self.index}"


LinearWord = Tuple[Letter, ...]


@dataclass(frozen=True)
class Alphabet:
    """The 2n letters a_1..a_n and their inverses."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidLetter(f"Alphabet needs at least one generator, got n={self.n}")

    def contains(self, letter: Letter) -> bool:
        return 1 <= letter.index <= self.n

    def letters(self) -> List[Letter]:
        """All letters of the alphabet in the total letter order."""
        return [Letter(i, barred) for i in range(1, self.n + 1) for barred in (False, True)]

    @classmethod
    def for_word(cls, letters: Iterable[Letter]) -> 'Alphabet':
        """Smallest alphabet containing every letter of ``letters``."""
        return cls(max((letter.index for letter in letters), default=1))


class _Empty:
    """The empty cyclic word: the result of total cancellation."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return 'Empty'

    def __str__(self) -> str:
        return ''


EMPTY = _Empty()


def format_word(letters: Iterable[Letter]) -> str:
    """Serialize letters as concatenated ``a<k>``/``A<k>`` tokens."""
    return ''.join(str(letter) for letter in letters)


def parse_letters(text: str) -> LinearWord:
    """Tokenize ``text`` without checking letters against an alphabet."""
    text = text.strip()
    letters = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ParseError(f"Malformed word {text!r} at position {pos}")
        kind, digits = match.groups()
        if digits == '0':
            raise InvalidLetter(f"Letter index 0 in {text!r}")
        if digits.startswith('0'):
            raise ParseError(f"Leading zero in letter index {digits!r} of {text!r}")
        letters.append(Letter(int(digits), kind == 'A'))
        pos = match.end()
    return tuple(letters)


def parse_word(text: str, alphabet: Alphabet) -> LinearWord:
    """
    Parse the ASCII form of a linear word. No reduction is performed.

    Args:
        text: Token string such as ``a1A2a1`` (empty string is the empty word)
        alphabet: Alphabet the letters must belong to

    Returns:
        Tuple of letters in reading order

    Raises:
        ParseError: Malformed token
        InvalidLetter: Index 0 or larger than the alphabet size
    """
    letters = parse_letters(text)
    for letter in letters:
        if not alphabet.contains(letter):
            raise InvalidLetter(
                f"Letter {letter} is outside the alphabet of {alphabet.n} generators"
            )
    return letters


def bar(w: Sequence[Letter]) -> LinearWord:
    """Reverse the word and invert every letter."""
    return tuple(letter.bar() for letter in reversed(w))


def is_freely_reduced(w: Sequence[Letter]) -> bool:
    return all(w[i + 1] != w[i].bar() for i in range(len(w) - 1))


def is_cyclically_reduced(w: Sequence[Letter]) -> bool:
    """Freely reduced and, read around the circle, last letter is not the inverse of the first."""
    if not w:
        return False
    if not is_freely_reduced(w):
        return False
    return len(w) == 1 or w[-1] != w[0].bar()


def free_reduce(w: Sequence[Letter]) -> LinearWord:
    """Cancel adjacent inverse pairs until none remain."""
    stack: List[Letter] = []
    for letter in w:
        if stack and stack[-1] == letter.bar():
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def least_rotation(seq: Sequence) -> int:
    """
    Index of the lexicographically least rotation of ``seq``.

    Linear-time two-pointer scan: candidates i and j are compared letter by
    letter and the loser jumps past the compared block.
    """
    n = len(seq)
    i, j, k = 0, 1, 0
    while i < n and j < n and k < n:
        a = seq[(i + k) % n]
        b = seq[(j + k) % n]
        if a == b:
            k += 1
            continue
        if a > b:
            i += k + 1
        else:
            j += k + 1
        if i == j:
            j += 1
        k = 0
    return min(i, j) if n else 0


def rotate(w: Sequence[Letter], start: int) -> LinearWord:
    start %= len(w)
    return tuple(w[start:]) + tuple(w[:start])


@dataclass(frozen=True)
class CyclicWord:
    """
    A non-empty reduced cyclic word, stored as its least rotation.

    Build instances with ``cyclic_reduce_canonicalize`` or ``CyclicWord.parse``;
    the constructor only accepts letters that are already canonical.
    """

    canonical: LinearWord

    def __post_init__(self):
        if not self.canonical:
            raise EmptyWordError("A cyclic word must be non-empty")
        if not is_cyclically_reduced(self.canonical):
            raise NonCanonicalWord(f"{format_word(self.canonical)} is not cyclically reduced")
        if least_rotation(self.canonical) != 0:
            raise NonCanonicalWord(f"{format_word(self.canonical)} is not the least rotation")

    @classmethod
    def parse(cls, text: str, alphabet: Alphabet) -> 'CyclicWord':
        """Parse, reduce and canonicalize; raise EmptyWordError on total cancellation."""
        result = cyclic_reduce_canonicalize(parse_word(text, alphabet))
        if result is EMPTY:
            raise EmptyWordError(f"{text!r} reduces to the empty word")
        return result

    def __len__(self) -> int:
        return len(self.canonical)

    def __str__(self) -> str:
        return format_word(self.canonical)

    @property
    def text(self) -> str:
        return format_word(self.canonical)

    def bar(self) -> 'CyclicWord':
        return cyclic_reduce_canonicalize(bar(self.canonical))

    def is_primitive(self) -> bool:
        return smallest_period(self)[1] == 1

    def rotation(self, start: int) -> LinearWord:
        """Linear representative beginning at position ``start`` of the canonical form."""
        return rotate(self.canonical, start)


CyclicOrEmpty = Union[CyclicWord, _Empty]


def cyclic_reduce_canonicalize(w: Sequence[Letter]) -> CyclicOrEmpty:
    """
    Reduce a linear word to its cyclic word.

    Freely reduces, strips inverse first/last letters until the word is
    cyclically reduced, then rotates to the least representative.

    Returns:
        The CyclicWord, or EMPTY when every letter cancels
    """
    reduced = free_reduce(w)
    lo, hi = 0, len(reduced)
    while hi - lo >= 2 and reduced[hi - 1] == reduced[lo].bar():
        lo += 1
        hi -= 1
    core = reduced[lo:hi]
    if not core:
        return EMPTY
    return CyclicWord(rotate(core, least_rotation(core)))


def power(w: CyclicWord, m: int) -> LinearWord:
    """Canonical representative of ``w`` repeated ``m`` times."""
    if m < 1:
        raise InvalidExponent(f"Exponent must be at least 1, got {m}")
    return w.canonical * m


def smallest_period(w: CyclicWord) -> Tuple[CyclicWord, int]:
    """
    Write ``w`` as root**r with r maximal.

    Returns:
        Tuple of (root, r); ``w`` is primitive iff r == 1
    """
    letters = w.canonical
    length = len(letters)
    for d in range(1, length + 1):
        if length % d == 0 and letters == letters[d:] + letters[:d]:
            return CyclicWord(letters[:d]), length // d
    return w, 1


@dataclass(frozen=True, order=True)
class Occurrence:
    """A window of a cyclic word: ``length`` letters read from ``start``, wrapping as needed."""

    start: int
    length: int

    def __str__(self) -> str:
        return f"{self.start}+{self.length}"

    def last(self, modulus: int) -> int:
        """Position of the window's last letter in a word of length ``modulus``."""
        return (self.start + self.length - 1) % modulus


def window(w: CyclicWord, occ: Occurrence) -> LinearWord:
    """Letters canonical[(start + i) mod l(w)] for i in [0, length)."""
    size = len(w)
    if not 0 <= occ.start < size:
        raise InvalidOccurrence(f"Start {occ.start} outside [0, {size}) for {w}")
    if occ.length < 1:
        raise InvalidOccurrence(f"Occurrence length must be positive, got {occ.length}")
    letters = w.canonical
    return tuple(letters[(occ.start + i) % size] for i in range(occ.length))
