#!/usr/bin/env python3
"""
Verify the involutive Lie bialgebra laws on several surface symbols.

For each symbol the law suite runs on every word of length <= 4 plus seeded
samples of length <= 6. The finite-dimensional fixtures are checked as well;
the perturbed sl2 control is expected to fail, and so are two broken word
operations: every sign forced to +1, and the second cut piece started one
letter late.
"""

import logging
import os
import sys
import time
from unittest import mock

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import bialgebra
import linked_pairs
from axioms import (
    borel_b,
    check_structure_constants,
    perturbed_sl2,
    run_law_suite,
    sl2,
    sl2_dual,
)
from errors import SurfaceWordError
from orientation import parse_surface_symbol
from words import Occurrence

# Set up logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

SURFACES = ['a1a2A1A2', 'a2a1A2A1', 'a1a2a3A1A2A3']
MAX_LENGTH = 6
SAMPLES = 200
SEED = 20240601


def verify_structure_constants():
    """Check the finite-dimensional fixtures; the perturbed control must fail."""
    ok = True
    for sc in (borel_b(), sl2(), sl2_dual()):
        reports = check_structure_constants(sc)
        failed = [report.law for report in reports if not report.holds]
        if failed:
            ok = False
            logger.error(f"{sc.name}: laws failed: {', '.join(failed)}")
        else:
            logger.info(f"{sc.name}: all {len(reports)} laws hold")

    control = perturbed_sl2()
    failed = [report.law for report in check_structure_constants(control) if not report.holds]
    if failed:
        logger.info(f"{control.name}: fails {', '.join(failed)} as expected")
    else:
        ok = False
        logger.error(f"{control.name}: negative control passed every law")
    return ok


def _forced_positive(original):
    def forced(p, q, surface):
        linked = original(p, q, surface)
        return None if linked is None else (linked[0], 1)

    return forced


def _shifted_second_piece(original):
    def shifted(w, pair):
        first, second = original(w, pair)
        return first, Occurrence((second.start + 1) % len(w), second.length)

    return shifted


FAULTS = [
    ('signs forced to +1', linked_pairs, 'is_linked', _forced_positive),
    ('second cut piece shifted by one', bialgebra, 'cut_segments', _shifted_second_piece),
]


def verify_fault_controls(surface_text):
    """Each broken word operation must make at least one law fail."""
    surface = parse_surface_symbol(surface_text)
    ok = True
    for name, module, attribute, wrap in FAULTS:
        try:
            with mock.patch.object(module, attribute, wrap(getattr(module, attribute))):
                summaries = run_law_suite(surface, max_len=4, samples=20, seed=SEED)
            failed = [summary.law for summary in summaries if not summary.holds]
        except SurfaceWordError as e:
            failed = [type(e).__name__]
        if failed:
            logger.info(f"{name} on {surface}: fails {', '.join(failed)} as expected")
        else:
            ok = False
            logger.error(f"{name} on {surface}: fault control passed every law")
    return ok


def verify_surface(surface_text):
    """Run the full law suite on one surface symbol."""
    surface = parse_surface_symbol(surface_text)
    logger.info(f"\n--- Surface {surface} ---")

    start_time = time.time()
    summaries = run_law_suite(surface, max_len=MAX_LENGTH, samples=SAMPLES, seed=SEED)
    elapsed = time.time() - start_time

    for summary in summaries:
        logger.info(summary.format_line())
        if summary.first_failure is not None:
            logger.error(summary.first_failure.describe())
            logger.error(summary.first_failure.residual.format_text())
    logger.info(f"Surface {surface} checked in {elapsed:.2f} seconds")
    return all(summary.holds for summary in summaries), elapsed


def main():
    """Main verification workflow."""
    logger.info("Starting law verification...")

    ok = verify_structure_constants()
    for surface_text in SURFACES:
        ok = verify_fault_controls(surface_text) and ok
    timings = []
    for surface_text in SURFACES:
        surface_ok, elapsed = verify_surface(surface_text)
        ok = ok and surface_ok
        timings.append((surface_text, elapsed))

    # Performance summary
    logger.info("\n--- Performance Summary ---")
    for surface_text, elapsed in timings:
        logger.info(f"{surface_text}: {elapsed:.2f} seconds")
    logger.info(f"Total: {sum(elapsed for _, elapsed in timings):.2f} seconds")

    if not ok:
        logger.error("Law verification failed")
        sys.exit(1)
    logger.info("Law verification completed!")


if __name__ == '__main__':
    main()
