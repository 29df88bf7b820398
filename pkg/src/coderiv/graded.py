"""Graded bases, degree shifts and Koszul sign bookkeeping.

The sign conventions here are the load-bearing part of the whole package:
every boundary operator downstream routes its signs through these two
functions.

``koszul_sign(degrees, perm)`` treats ``perm`` as the map sending the letter
at position i to position perm[i]; the letters carry their degrees with them
and every adjacent swap of letters with degrees p, q contributes (-1)**(p*q).
``reorder_sign(degrees, order)`` is the same sign expressed on the result
side: ``order`` lists which original letter lands in each output slot.  The
two agree via order = inverse(perm), so a signed sum written as
"sign(sigma^-1) times the word a_{sigma^-1(1)} ... " is computed by pairing
``koszul_sign(degs, sigma)`` with that word.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb


class NotAPermutation(Exception):
    pass


@dataclass(frozen=True)
class GradedBasis:
    """An ordered basis of a finite graded vector space."""

    names: tuple[str, ...]
    degrees: tuple[int, ...]

    def __post_init__(self):
        if len(self.names) != len(self.degrees):
            raise ValueError("names and degrees differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("basis names must be unique")

    def __len__(self) -> int:
        return len(self.names)

    def degree(self, i: int) -> int:
        return self.degrees[i]

    def index(self, name: str) -> int:
        return self.names.index(name)


@dataclass(frozen=True)
class Word:
    """A tensor word over a graded basis, with an optional degree shift.

    ``shift`` is subtracted from every letter degree: 0 for plain tensor
    powers, 1 for words over the shifted space, 2 is reserved for the doubly
    shifted setting (where it is usually cleaner to keep shift 1 and shift
    once more at the symmetric layer).
    """

    basis: GradedBasis
    letters: tuple[int, ...]
    shift: int = 0

    def __post_init__(self):
        if not self.letters:
            raise ValueError("empty word")
        if self.shift not in (0, 1, 2):
            raise ValueError("shift must be 0, 1 or 2")
        for i in self.letters:
            if not 0 <= i < len(self.basis):
                raise ValueError(f"letter {i} outside basis")

    def __len__(self) -> int:
        return len(self.letters)

    def letter_degrees(self) -> tuple[int, ...]:
        return tuple(self.basis.degree(i) - self.shift for i in self.letters)


def word_degree(w: Word) -> int:
    return sum(w.letter_degrees())


@dataclass(frozen=True)
class Permutation:
    """images[i] is the position letter i is sent to (0-based)."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise NotAPermutation(f"{self.images} is not a permutation of 0..{n-1}")

    def __len__(self) -> int:
        return len(self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: i -> self(other(i))."""
        if len(self) != len(other):
            raise NotAPermutation("size mismatch")
        return Permutation(tuple(self.images[other.images[i]]
                                 for i in range(len(self))))

    def order_list(self) -> tuple[int, ...]:
        """The result-side view: slot k holds letter order_list[k]."""
        return self.inverse().images


def koszul_sign(degrees: list[int] | tuple[int, ...], sigma: Permutation) -> Fraction:
    """Sign produced by carrying graded letters to their new positions.

    Computed by decomposing the move into adjacent transpositions (a plain
    bubble pass) and multiplying (-1)**(d_i * d_{i+1}) for each swap of the
    letters currently sitting side by side.
    """
    if len(degrees) != len(sigma):
        raise NotAPermutation("degree list and permutation size differ")
    # letters listed in output order; bubble-sort back to identity and
    # accumulate the swap signs (same total as sorting forward).
    arrangement = list(sigma.order_list())
    degs = list(degrees)
    exponent = 0
    n = len(arrangement)
    changed = True
    while changed:
        changed = False
        for k in range(n - 1):
            if arrangement[k] > arrangement[k + 1]:
                exponent += degs[arrangement[k]] * degs[arrangement[k + 1]]
                arrangement[k], arrangement[k + 1] = arrangement[k + 1], arrangement[k]
                changed = True
    return Fraction(-1) ** (exponent % 2)


def reorder_sign(degrees: list[int] | tuple[int, ...],
                 order: list[int] | tuple[int, ...]) -> Fraction:
    """Koszul sign of listing the letters in the sequence ``order``.

    ``order`` must be a permutation of range(n); slot k of the output holds
    original letter order[k].
    """
    n = len(order)
    if sorted(order) != list(range(n)) or len(degrees) != n:
        raise NotAPermutation("order must be a permutation matching degrees")
    exponent = 0
    for a in range(n):
        for b in range(a + 1, n):
            if order[a] > order[b]:
                exponent += degrees[order[a]] * degrees[order[b]]
    return Fraction(-1) ** (exponent % 2)


def block_reorder_sign(degrees, blocks) -> Fraction:
    """reorder_sign for an order given as a list of index blocks."""
    order = [i for blk in blocks for i in blk]
    return reorder_sign(degrees, order)


def enumerate_shuffles(p: int, q: int) -> list[Permutation]:
    """All (p,q)-shuffles of p+q letters.

    A shuffle sends positions 1..p and p+1..p+q to increasing images; there
    are C(p+q, p) of them.
    """
    if p < 1 or q < 1:
        raise ValueError("both block sizes must be >= 1")
    n = p + q
    out = []
    for first_block in itertools.combinations(range(n), p):
        rest = [i for i in range(n) if i not in first_block]
        images = [0] * n
        for i, pos in enumerate(first_block):
            images[i] = pos
        for i, pos in enumerate(rest):
            images[p + i] = pos
        out.append(Permutation(tuple(images)))
    assert len(out) == comb(n, p)
    return out


def compositions(n: int) -> list[tuple[int, ...]]:
    """All ordered compositions of n into positive parts."""
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    return out


def bipartitions(n: int):
    """Ordered pairs (I, J) of disjoint nonempty increasing tuples covering range(n)."""
    idx = list(range(n))
    for r in range(1, n):
        for I in itertools.combinations(idx, r):
            J = tuple(i for i in idx if i not in I)
            yield I, J


def set_partitions(items: list[int]):
    """Unordered partitions of ``items`` into nonempty blocks.

    The first element always anchors the first block, making the enumeration
    deterministic and duplicate-free; blocks come out with increasing minima.
    """
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for k in range(len(rest) + 1):
        for with_head in itertools.combinations(rest, k):
            block = (head,) + with_head
            remaining = [i for i in rest if i not in with_head]
            for sub in set_partitions(remaining):
                yield [block] + sub
