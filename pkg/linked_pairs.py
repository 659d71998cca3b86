"""
Linked pairs of subwords.

An ordered pair (P, Q) of equal-length reduced words is linked relative to a
surface symbol when it models a transversal crossing of two strands:

    type 1  P = p1p2, Q = q1q2 and P1 Q1 p2 q2 lie in one of the two cyclic orders
    type 2  P = p1 Y p2, Q = q1 Y q2 with p1 != q1, p2 != q2
    type 3  P = p1 Y p2, Q = q1 bar(Y) q2 with p1 != bar(q2), p2 != bar(q1)

(P1, Q1 denote the inverse letters.) Orientations here are cyclic orders of
pairwise distinct letters, compared with the symbol's order without asking
the letters to form a reduced word. For types 2 and 3 both condition words
have three distinct letters, so every linked pair has sign +1 or -1.

LP1(W) collects linked pairs of windows of one cyclic word, LP2(V, W) pairs
of windows of powers of V and W.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from orientation import PairType, SurfaceSymbol, cyclic_order
from words import (
    CyclicWord,
    Letter,
    LinearWord,
    Occurrence,
    bar,
    format_word,
    is_freely_reduced,
    window,
)

logger = logging.getLogger(__name__)


def format_sign(value: int) -> str:
    """Render a sign as ``+1``, ``0`` or ``-1``."""
    return f"{value:+d}" if value else '0'


@dataclass(frozen=True, order=True)
class LinkedPair:
    """
    A linked pair located by its two occurrences.

    ``p_occ`` indexes the first word (V, or W for LP1) and ``q_occ`` the
    second. ``exponents`` are the powers (j, k) whose windows realize P and
    Q; they are (1, 1) for pairs of LP1.
    """

    p_occ: Occurrence
    q_occ: Occurrence
    kind: PairType
    sign: int
    p_word: LinearWord
    q_word: LinearWord
    exponents: Tuple[int, int] = (1, 1)

    def reversed(self) -> 'LinkedPair':
        """The pair (Q, P). Its sign is the negation of this pair's sign."""
        j, k = self.exponents
        return LinkedPair(
            p_occ=self.q_occ,
            q_occ=self.p_occ,
            kind=self.kind,
            sign=-self.sign,
            p_word=self.q_word,
            q_word=self.p_word,
            exponents=(k, j),
        )

    def format_line(self) -> str:
        return (
            f"type={int(self.kind)} sign={format_sign(self.sign)} "
            f"P={self.p_occ} Q={self.q_occ} "
            f"Pword={format_word(self.p_word)} Qword={format_word(self.q_word)}"
        )

    def format_record(self) -> str:
        j, k = self.exponents
        return (
            f"type={int(self.kind)} sign={format_sign(self.sign)} "
            f"p_start={self.p_occ.start} p_length={self.p_occ.length} "
            f"q_start={self.q_occ.start} q_length={self.q_occ.length} "
            f"j={j} k={k} "
            f"p_word={format_word(self.p_word)} q_word={format_word(self.q_word)}"
        )


def pair_shape(p: Sequence[Letter], q: Sequence[Letter]) -> Optional[PairType]:
    """
    The type a pair could have, judged from its letters alone.

    Only the equality and inequality conditions are checked here; the
    orientation conditions are left to ``is_linked``.
    """
    if len(p) < 2 or len(p) != len(q):
        return None
    if len(p) == 2:
        return PairType.TYPE1
    middle_p = tuple(p[1:-1])
    middle_q = tuple(q[1:-1])
    if middle_q == middle_p and p[0] != q[0] and p[-1] != q[-1]:
        return PairType.TYPE2
    if middle_q == bar(middle_p) and p[0] != q[-1].bar() and p[-1] != q[0].bar():
        return PairType.TYPE3
    return None


def is_linked(
    p: Sequence[Letter], q: Sequence[Letter], surface: SurfaceSymbol
) -> Optional[Tuple[PairType, int]]:
    """
    Decide whether (P, Q) is a linked pair.

    Args:
        p: Linear word P
        q: Linear word Q
        surface: Surface symbol supplying the orientation

    Returns:
        None when the pair is not linked, otherwise (kind, sign) with sign +1 or -1.
    """
    if not is_freely_reduced(p) or not is_freely_reduced(q):
        return None
    kind = pair_shape(p, q)
    if kind is None:
        return None

    if kind == PairType.TYPE1:
        value = cyclic_order((p[0].bar(), q[0].bar(), p[1], q[1]), surface)
        return (kind, value) if value != 0 else None

    x1 = p[1]
    x2 = p[-2]
    if kind == PairType.TYPE2:
        first = cyclic_order((p[0].bar(), q[0].bar(), x1), surface)
        second = cyclic_order((p[-1], q[-1], x2.bar()), surface)
    else:
        first = cyclic_order((q[-1], p[0].bar(), x1), surface)
        second = cyclic_order((q[0].bar(), p[-1], x2.bar()), surface)
    return (kind, first) if first == second else None


def exponent_caps(v: CyclicWord, w: CyclicWord) -> Tuple[int, int]:
    """Largest powers (j, k) of V and W that can carry a linked pair of LP2(V, W)."""
    return 2 + len(w) // len(v), 2 + len(v) // len(w)


def _windows_by_length(
    word: CyclicWord, max_length: int
) -> Dict[int, List[Tuple[Occurrence, LinearWord]]]:
    """All cyclic windows of ``word`` with lengths 2..max_length, grouped by length."""
    grouped = {}
    for length in range(2, max_length + 1):
        grouped[length] = [
            (occ, window(word, occ))
            for occ in (Occurrence(start, length) for start in range(len(word)))
        ]
    return grouped


def enumerate_lp1(
    w: CyclicWord, surface: SurfaceSymbol, extended_windows: bool = False
) -> List[LinkedPair]:
    """
    Enumerate LP1(W), the linked pairs of subwords of a single cyclic word.

    Args:
        w: The cyclic word
        surface: Surface symbol
        extended_windows: Allow windows up to twice the word length (reading
            into W squared) instead of up to the word length

    Returns:
        Linked pairs sorted by (p_occ, q_occ)
    """
    max_length = 2 * len(w) if extended_windows else len(w)
    pairs = []
    for length, windows in _windows_by_length(w, max_length).items():
        for p_occ, p_word in windows:
            for q_occ, q_word in windows:
                if p_occ == q_occ:
                    continue
                linked = is_linked(p_word, q_word, surface)
                if linked is None:
                    continue
                kind, value = linked
                pairs.append(LinkedPair(p_occ, q_occ, kind, value, p_word, q_word))
    pairs.sort(key=lambda pair: (pair.p_occ, pair.q_occ))
    logger.debug(f"LP1({w}): {len(pairs)} linked pairs")
    return pairs


def power_for(length: int, period: int) -> int:
    """Least j with length <= j * period."""
    return -(-length // period)


def enumerate_lp2(
    v: CyclicWord, w: CyclicWord, surface: SurfaceSymbol, cap_slack: int = 0
) -> List[LinkedPair]:
    """
    Enumerate LP2(V, W), the linked pairs between windows of powers of V and W.

    P ranges over windows of V^j and Q over windows of W^k, where j and k are
    the least powers containing the window and are bounded by
    ``exponent_caps``.

    Args:
        v: First cyclic word
        w: Second cyclic word
        surface: Surface symbol
        cap_slack: Added to both exponent caps (used to confirm the caps lose nothing)

    Returns:
        Linked pairs sorted by (p_occ, q_occ)
    """
    j_max, k_max = exponent_caps(v, w)
    j_max += cap_slack
    k_max += cap_slack
    max_length = min(j_max * len(v), k_max * len(w))
    p_windows = _windows_by_length(v, max_length)
    q_windows = _windows_by_length(w, max_length)

    pairs = []
    for length in range(2, max_length + 1):
        exponents = (power_for(length, len(v)), power_for(length, len(w)))
        for p_occ, p_word in p_windows[length]:
            for q_occ, q_word in q_windows[length]:
                linked = is_linked(p_word, q_word, surface)
                if linked is None:
                    continue
                kind, value = linked
                pairs.append(
                    LinkedPair(p_occ, q_occ, kind, value, p_word, q_word, exponents)
                )
    pairs.sort(key=lambda pair: (pair.p_occ, pair.q_occ))
    logger.debug(f"LP2({v}, {w}) with caps ({j_max}, {k_max}): {len(pairs)} linked pairs")
    return pairs


def nonzero(pairs: Sequence[LinkedPair]) -> List[LinkedPair]:
    return [pair for pair in pairs if pair.sign != 0]
