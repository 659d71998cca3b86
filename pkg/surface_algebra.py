"""
Surface Word Bialgebra Service

Binds one surface symbol and exposes the bracket, the cobracket, linked-pair
listings and law checks on words given in their ASCII form. The CLI and the
web API are thin layers over this class.
"""

import logging
from typing import Dict, List, Optional, Union

from axioms import LawSummary, run_law_suite
from bialgebra import FormalSum, Tensor2, bracket, cobracket
from linked_pairs import LinkedPair, enumerate_lp1, enumerate_lp2, exponent_caps, nonzero
from orientation import SurfaceSymbol, euler_characteristic, parse_surface_symbol
from words import CyclicWord

logger = logging.getLogger(__name__)


class SurfaceLieBialgebra:
    """
    The involutive Lie bialgebra of reduced cyclic words over one surface symbol.
    """

    def __init__(self, surface: Union[str, SurfaceSymbol], extended_windows: bool = False):
        """
        Initialize the service.

        Args:
            surface: Surface symbol, parsed when given as text
            extended_windows: Let LP1 windows run up to twice the word length

        Raises:
            NotASurfaceSymbol: ``surface`` is not a valid symbol
        """
        if isinstance(surface, str):
            surface = parse_surface_symbol(surface)
        self.surface = surface
        self.extended_windows = extended_windows
        logger.debug(f"Service bound to surface {surface} (extended_windows={extended_windows})")

    @property
    def alphabet(self):
        return self.surface.alphabet

    def parse(self, text: str) -> CyclicWord:
        """Parse a word over the surface alphabet into its canonical cyclic word."""
        return CyclicWord.parse(text, self.alphabet)

    def bracket(self, left: str, right: str) -> FormalSum:
        return bracket(self.parse(left), self.parse(right), self.surface)

    def cobracket(self, word: str) -> Tensor2:
        return cobracket(self.parse(word), self.surface, extended_windows=self.extended_windows)

    def lp1(self, word: str, nonzero_only: bool = False) -> List[LinkedPair]:
        pairs = enumerate_lp1(self.parse(word), self.surface, extended_windows=self.extended_windows)
        return nonzero(pairs) if nonzero_only else pairs

    def lp2(self, left: str, right: str, nonzero_only: bool = False) -> List[LinkedPair]:
        pairs = enumerate_lp2(self.parse(left), self.parse(right), self.surface)
        return nonzero(pairs) if nonzero_only else pairs

    def caps(self, left: str, right: str):
        return exponent_caps(self.parse(left), self.parse(right))

    def check(self, max_len: int, samples: int, seed: int = 0, laws: str = 'all') -> List[LawSummary]:
        """Run the law suite on a seeded corpus; see ``axioms.run_law_suite``."""
        return run_law_suite(
            self.surface,
            max_len=max_len,
            samples=samples,
            seed=seed,
            laws=laws,
            extended_windows=self.extended_windows,
        )

    def info(self) -> Dict:
        """Metadata of the bound surface symbol."""
        return {
            'surface': self.surface.word.text,
            'generators': self.surface.n,
            'length': len(self.surface.word),
            'euler_characteristic': euler_characteristic(self.surface),
        }


def format_info(info: Dict) -> str:
    return '\n'.join(f"{key}={value}" for key, value in info.items())


def main(surface_text: Optional[str] = None):
    """
    Demonstrate the service on the genus-one symbol.
    """
    service = SurfaceLieBialgebra(surface_text or 'a1a2A1A2')
    print(format_info(service.info()))

    examples = [('a1', 'a2'), ('a1', 'a1a2'), ('a1a1a2', 'a1a1a2a1a1a2a1')]
    for left, right in examples:
        print(f"\n{'=' * 50}")
        print(f"[{left}, {right}]")
        print('=' * 50)
        print(service.bracket(left, right).format_text())

    for word in ['a1a2A1', 'a1a1a2a2']:
        print(f"\n{'=' * 50}")
        print(f"delta({word})")
        print('=' * 50)
        print(service.cobracket(word).format_text())


if __name__ == "__main__":
    main()
