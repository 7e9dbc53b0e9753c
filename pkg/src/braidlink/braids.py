"""Braid words in the Artin generators of B_n and closed-braid combinatorics.

A word is a sequence of nonzero integers: letter e > 0 is the generator
sigma_e, letter e < 0 is the inverse of sigma_|e|.  Strand identity through a
word is tracked positionally: strand s starts at position s at the top, and a
letter e swaps the occupants of positions |e| and |e|+1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator


class BraidParseError(ValueError):
    """Raised for malformed braid text."""


@dataclass(frozen=True)
class BraidWord:
    strand_count: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strand_count < 1:
            raise ValueError("strand count must be at least 1")
        for e in self.letters:
            if not isinstance(e, int) or e == 0 or abs(e) > self.strand_count - 1:
                raise ValueError(
                    f"letter {e!r} out of range for {self.strand_count} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; images[i-1] is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError("images do not form a permutation of 1..n")

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Function composition: (p * q)(i) = p(q(i))."""
        if len(self.images) != len(other.images):
            raise ValueError("size mismatch")
        return Permutation(tuple(self(other(i)) for i in range(1, len(self.images) + 1)))

    @property
    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Cycles as tuples, each starting at its least element, ordered by it."""
        seen = [False] * len(self.images)
        out = []
        for start in range(1, len(self.images) + 1):
            if seen[start - 1]:
                continue
            cycle = [start]
            seen[start - 1] = True
            j = self(start)
            while j != start:
                cycle.append(j)
                seen[j - 1] = True
                j = self(j)
            out.append(tuple(cycle))
        return tuple(out)


@dataclass(frozen=True)
class StrandComponentMap:
    """Assignment of closure components to strands.

    Component ids are 0..component_count-1, ordered by least strand index.
    """

    component_of_strand: tuple[int, ...]
    component_count: int

    def __post_init__(self):
        used = set(self.component_of_strand)
        if used != set(range(self.component_count)):
            raise ValueError("component ids must be exactly 0..count-1, all used")

    def strands_in(self, component: int) -> tuple[int, ...]:
        return tuple(
            s + 1
            for s, c in enumerate(self.component_of_strand)
            if c == component
        )


# -- parsing and printing -------------------------------------------------

_HEADER_RE = re.compile(r"^B(\d+)$")
_GENERATOR_RE = re.compile(r"^s(\d+)(\^-1)?$")
_INT_RE = re.compile(r"^-?\d+$")

# The triple-crossing macro expands literally to the three letters 4 5 4.
_MACRO_EXPANSIONS = {"D45": (4, 5, 4)}


def parse_braid(text: str) -> BraidWord:
    """Parse braid text: optional leading "B<n>" header, then letters.

    Letter tokens are signed integers ("3", "-2"), generator names
    ("s3", "s2^-1"), or the macro "D45".  Tokens are separated by
    whitespace or commas.  Without a header the strand count is inferred
    as 1 + max|letter|.
    """
    tokens = [tok for tok in re.split(r"[\s,]+", text.strip()) if tok]
    if not tokens:
        raise BraidParseError("empty input: strand count undeterminable")

    declared: int | None = None
    header = _HEADER_RE.match(tokens[0])
    if header:
        declared = int(header.group(1))
        if declared < 1:
            raise BraidParseError("strand count must be positive")
        tokens = tokens[1:]

    letters: list[int] = []
    for tok in tokens:
        if tok in _MACRO_EXPANSIONS:
            letters.extend(_MACRO_EXPANSIONS[tok])
            continue
        gen = _GENERATOR_RE.match(tok)
        if gen:
            index = int(gen.group(1))
            if index == 0:
                raise BraidParseError(f"generator index must be positive: {tok!r}")
            letters.append(-index if gen.group(2) else index)
            continue
        if _INT_RE.match(tok):
            value = int(tok)
            if value == 0:
                raise BraidParseError("0 is not a valid letter")
            letters.append(value)
            continue
        raise BraidParseError(f"malformed token {tok!r}")

    if declared is None:
        if not letters:
            raise BraidParseError("empty word with no header: strand count undeterminable")
        declared = 1 + max(abs(e) for e in letters)
    for e in letters:
        if abs(e) > declared - 1:
            raise BraidParseError(
                f"letter {e} out of range for declared strand count {declared}"
            )
    return BraidWord(declared, tuple(letters))


def braid_text(word: BraidWord) -> str:
    """Canonical text form: "B<n>" header then signed integers."""
    return " ".join([f"B{word.strand_count}", *map(str, word.letters)]).rstrip()


# -- group operations ------------------------------------------------------

def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strand_count != b.strand_count:
        raise ValueError(
            f"strand-count mismatch: {a.strand_count} vs {b.strand_count}"
        )
    return BraidWord(a.strand_count, a.letters + b.letters)


def invert(word: BraidWord) -> BraidWord:
    return BraidWord(word.strand_count, tuple(-e for e in reversed(word.letters)))


def free_reduce(word: BraidWord) -> BraidWord:
    stack: list[int] = []
    for e in word.letters:
        if stack and stack[-1] == -e:
            stack.pop()
        else:
            stack.append(e)
    return BraidWord(word.strand_count, tuple(stack))


def tau(word: BraidWord) -> BraidWord:
    """The flip automorphism sigma_i -> sigma_(n-i), preserving letter signs."""
    n = word.strand_count
    return BraidWord(
        n, tuple((1 if e > 0 else -1) * (n - abs(e)) for e in word.letters)
    )


def conjugate(word: BraidWord, g: BraidWord) -> BraidWord:
    """g * word * g^-1."""
    return concat(concat(g, word), invert(g))


def stabilize(word: BraidWord, sign: int) -> BraidWord:
    """Add one strand and the letter sign * n at the end (n = old count)."""
    if sign not in (1, -1):
        raise ValueError("stabilization sign must be +1 or -1")
    n = word.strand_count
    return BraidWord(n + 1, word.letters + (sign * n,))


def exponent_sum(word: BraidWord) -> int:
    return sum(1 if e > 0 else -1 for e in word.letters)


# -- closure combinatorics -------------------------------------------------

def crossing_strands(word: BraidWord) -> list[tuple[int, int, int]]:
    """Per letter: (strand at position |e|, strand at position |e|+1, sign).

    Strands are named by their starting position 1..n.
    """
    occ = list(range(1, word.strand_count + 1))
    out = []
    for e in word.letters:
        i = abs(e) - 1
        out.append((occ[i], occ[i + 1], 1 if e > 0 else -1))
        occ[i], occ[i + 1] = occ[i + 1], occ[i]
    return out


def closure_permutation(word: BraidWord) -> Permutation:
    """Strand permutation of the closure: strand s ends at position images[s-1].

    Satisfies closure_permutation(concat(a, b)) == closure_permutation(b) *
    closure_permutation(a) under the function-composition product.
    """
    occ = list(range(1, word.strand_count + 1))
    for e in word.letters:
        i = abs(e) - 1
        occ[i], occ[i + 1] = occ[i + 1], occ[i]
    images = [0] * word.strand_count
    for position, strand in enumerate(occ, start=1):
        images[strand - 1] = position
    return Permutation(tuple(images))


def _components_from_permutation(perm: Permutation) -> StrandComponentMap:
    cycles = perm.cycles()
    component_of_strand = [0] * len(perm.images)
    for cid, cycle in enumerate(cycles):
        for strand in cycle:
            component_of_strand[strand - 1] = cid
    return StrandComponentMap(tuple(component_of_strand), len(cycles))


def components(word: BraidWord) -> StrandComponentMap:
    """Closure components: cycles of the closure permutation."""
    return _components_from_permutation(closure_permutation(word))


def components_of_antipodal_closure(half_word: BraidWord) -> StrandComponentMap:
    """Components when bottom position i is joined to top position n+1-i.

    This is the closure appropriate for a half-turn word w whose full turn
    is concat(w, tau(w)); the standard closure of the full word double
    covers this one.
    """
    n = half_word.strand_count
    perm = closure_permutation(half_word)
    flipped = Permutation(tuple(n + 1 - perm(i) for i in range(1, n + 1)))
    return _components_from_permutation(flipped)


def linking_matrix(word: BraidWord) -> tuple[tuple[int, ...], ...]:
    """Pairwise linking numbers of closure components.

    Entry (P, Q) for P != Q is half the signed count of crossings whose two
    strands lie in components P and Q; that count is always even.  Diagonal
    entries are 0 by convention.
    """
    comp = components(word)
    k = comp.component_count
    twice = [[0] * k for _ in range(k)]
    for s1, s2, sign in crossing_strands(word):
        c1 = comp.component_of_strand[s1 - 1]
        c2 = comp.component_of_strand[s2 - 1]
        if c1 != c2:
            twice[c1][c2] += sign
            twice[c2][c1] += sign
    out = []
    for i in range(k):
        row = []
        for j in range(k):
            if twice[i][j] % 2 != 0:
                raise RuntimeError("odd inter-component crossing count")
            row.append(twice[i][j] // 2)
        out.append(tuple(row))
    return tuple(out)
