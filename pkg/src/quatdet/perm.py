"""Symmetric-group enumeration and anchored disjoint-cycle normal forms.

Permutations of {1..n} are handled in one-line form: a tuple ``sigma`` of
length n with ``sigma[p-1]`` the image of p (1-based values).  The two
normal forms below fix, for every permutation and anchor, the exact order
in which matrix entries are multiplied by the anchored determinants:

* left-ordered: the anchor opens the first (leftmost) cycle; every other
  cycle opens with its minimal element and cycles follow in increasing
  order of those minima.
* right-ordered: the mirror image; the anchor closes the last (rightmost)
  cycle, every other cycle closes with its minimal element, and the minima
  increase reading right to left.

Fixed points are kept as length-1 cycles so the cycle count r in the sign
(-1)**(n - r) is unambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _one_line_permutations
from typing import Iterator

from .errors import EnumerationLimitError, IndexRangeError

DEFAULT_MAX_ENUM = 8


def enumerate_permutations(n: int, max_enum: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield the n! permutations of {1..n} in lexicographic one-line order.

    Refuses n above ``max_enum`` (default 8): the determinant definitions
    are O(n! * n) by construction, so larger inputs should go through
    cofactor expansion on structured matrices or the elimination /
    embedding oracles instead.
    """
    if max_enum is None:
        max_enum = DEFAULT_MAX_ENUM
    if n < 1:
        raise IndexRangeError(f"permutation degree must be positive, got {n}")
    if n > max_enum:
        raise EnumerationLimitError(
            f"refusing to enumerate {n}! permutations (n={n} > max_enum={max_enum}); "
            "raise max_enum explicitly, or use the elimination/embedding oracles")
    return iter(_one_line_permutations(range(1, n + 1)))


@dataclass(frozen=True)
class CyclePermutation:
    """A permutation in anchored disjoint-cycle normal form.

    ``cycles`` holds the cycles in written order, each cycle a tuple of
    indices in written order; ``ordering`` records which normal form this
    is ("left" or "right").  For the left form the anchor is the first
    element of the first cycle; for the right form it is the last element
    of the last cycle.
    """

    n: int
    cycles: tuple[tuple[int, ...], ...]
    anchor: int
    ordering: str

    @property
    def r(self) -> int:
        """Cycle count, fixed points included."""
        return len(self.cycles)

    @property
    def sign(self) -> int:
        return -1 if (self.n - self.r) % 2 else 1

    def one_line(self) -> tuple[int, ...]:
        """Recompose the cycles into the one-line permutation they denote."""
        image = list(range(1, self.n + 1))
        for cycle in self.cycles:
            for pos, element in enumerate(cycle):
                image[element - 1] = cycle[(pos + 1) % len(cycle)]
        return tuple(image)

    def entry_path(self) -> tuple[tuple[int, int], ...]:
        """The (row, col) index pairs of the monomial, in multiplication order.

        Each cycle contributes the walk a[c, sigma(c)] starting from its
        anchor element (the opening element on the left form, the closing
        element on the right form) and following the permutation around the
        cycle; cycles contribute in written order.
        """
        pairs = []
        for cycle in self.cycles:
            if self.ordering == "left":
                walk = cycle
            else:
                walk = cycle[-1:] + cycle[:-1]
            for pos, element in enumerate(walk):
                pairs.append((element, walk[(pos + 1) % len(walk)]))
        return tuple(pairs)


def _cycle_from(sigma: tuple[int, ...], start: int) -> tuple[int, ...]:
    cycle = [start]
    nxt = sigma[start - 1]
    while nxt != start:
        cycle.append(nxt)
        nxt = sigma[nxt - 1]
    return tuple(cycle)


def _check_anchor(sigma, anchor):
    n = len(sigma)
    if not 1 <= anchor <= n:
        raise IndexRangeError(f"anchor {anchor} out of range 1..{n}")


def left_ordered(sigma: tuple[int, ...], anchor: int) -> CyclePermutation:
    """Left-ordered normal form: the anchor opens the first cycle."""
    _check_anchor(sigma, anchor)
    first = _cycle_from(sigma, anchor)
    used = set(first)
    rest = []
    for m in range(1, len(sigma) + 1):
        if m not in used:
            cycle = _cycle_from(sigma, m)
            used.update(cycle)
            rest.append(cycle)
    return CyclePermutation(len(sigma), (first, *rest), anchor, "left")


def right_ordered(tau: tuple[int, ...], anchor: int) -> CyclePermutation:
    """Right-ordered normal form: the anchor closes the last cycle.

    Cycles are written with their closing element last; non-anchor cycles
    appear before the anchor cycle with closing minima decreasing left to
    right, i.e. increasing when read right to left.
    """
    _check_anchor(tau, anchor)
    walk = _cycle_from(tau, anchor)
    last = walk[1:] + walk[:1]
    used = set(last)
    rest = []
    for m in range(1, len(tau) + 1):
        if m not in used:
            cycle = _cycle_from(tau, m)
            used.update(cycle)
            rest.append(cycle[1:] + cycle[:1])
    rest.reverse()
    return CyclePermutation(len(tau), (*rest, last), anchor, "right")


def sign_exponent(p: CyclePermutation) -> int:
    """(-1)**(n - r) with r counting all disjoint cycles, fixed points too."""
    return p.sign
