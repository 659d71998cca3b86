#!/usr/bin/env python3
"""
Check the LP2 exponent caps and the linked-pair counting bounds.

Reproduces the worked LP2 pair over a1a2A1A2 (j = 4, k = 2), confirms that
raising both caps by two adds no pairs on every ordered pair of words of
length <= 5 over two generators, and counts violations of the cardinality
bounds and of the bound on the stretch two words share.
"""

import logging
import os
import sys
import time

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from axioms import exhaustive_words
from linked_pairs import enumerate_lp1, enumerate_lp2, exponent_caps
from orientation import parse_surface_symbol
from words import CyclicWord, Occurrence, smallest_period

# Set up logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

SURFACE = 'a1a2A1A2'
MAX_LENGTH = 5
CAP_SLACK = 2


def check_worked_example(surface):
    """Find the worked LP2 pair and confirm j equals the cap."""
    v = CyclicWord.parse('a1a1a2', surface.alphabet)
    w = CyclicWord.parse('a1a1a2a1a1a2a1', surface.alphabet)

    start_time = time.time()
    pairs = enumerate_lp2(v, w, surface)
    elapsed = time.time() - start_time

    wanted = [
        pair for pair in pairs
        if pair.p_occ == Occurrence(2, 10) and pair.q_occ == Occurrence(0, 10)
    ]
    if not wanted:
        logger.error("Worked LP2 pair not found")
        return False, elapsed
    pair = wanted[0]
    j_max, _ = exponent_caps(v, w)
    logger.info(f"Worked pair: {pair.format_line()} exponents={pair.exponents}")
    logger.info(f"j = {pair.exponents[0]}, cap = {j_max}, {len(pairs)} pairs in {elapsed:.4f} seconds")
    return pair.exponents == (4, 2) and pair.sign == -1 and j_max == 4, elapsed


def _common_root(v, w) -> bool:
    root_v = smallest_period(v)[0]
    root_w = smallest_period(w)[0]
    return root_v == root_w or root_v == root_w.bar()


def check_corpus(surface):
    """Cap soundness, cardinality bounds and the length bound over all word pairs."""
    words = exhaustive_words(surface.alphabet, MAX_LENGTH)
    logger.info(f"Checking {len(words)} words, {len(words) ** 2} ordered pairs...")

    cap_violations = 0
    lp2_bound_violations = 0
    lp1_bound_violations = 0
    length_violations = 0

    for w in words:
        if len(enumerate_lp1(w, surface)) > len(w) * (len(w) - 1):
            lp1_bound_violations += 1
            logger.warning(f"LP1 bound exceeded for {w}")

    for v in words:
        for w in words:
            pairs = enumerate_lp2(v, w, surface)
            if enumerate_lp2(v, w, surface, cap_slack=CAP_SLACK) != pairs:
                cap_violations += 1
                logger.warning(f"Raised caps find extra pairs for ({v}, {w})")
            if len(pairs) > len(v) * len(w):
                lp2_bound_violations += 1
                logger.warning(f"LP2 bound exceeded for ({v}, {w}): {len(pairs)} pairs")
            if not _common_root(v, w):
                for pair in pairs:
                    # the shared stretch drops the two end letters
                    if pair.p_occ.length - 2 >= len(v) + len(w):
                        length_violations += 1
                        logger.warning(f"Long pair for ({v}, {w}): {pair.format_line()}")

    logger.info(f"Cap soundness violations: {cap_violations}")
    logger.info(f"LP1 cardinality violations: {lp1_bound_violations}")
    logger.info(f"LP2 cardinality violations: {lp2_bound_violations}")
    logger.info(f"Length bound violations: {length_violations}")
    return cap_violations + lp1_bound_violations + lp2_bound_violations + length_violations == 0


def main():
    """Main check workflow."""
    logger.info("Starting exponent cap checks...")
    surface = parse_surface_symbol(SURFACE)

    example_ok, example_time = check_worked_example(surface)

    start_time = time.time()
    corpus_ok = check_corpus(surface)
    corpus_time = time.time() - start_time

    # Performance summary
    logger.info("\n--- Performance Summary ---")
    logger.info(f"Worked example: {example_time:.4f} seconds")
    logger.info(f"Corpus checks: {corpus_time:.2f} seconds")

    if not (example_ok and corpus_ok):
        logger.error("Exponent cap checks failed")
        sys.exit(1)
    logger.info("Exponent cap checks completed!")


if __name__ == '__main__':
    main()
