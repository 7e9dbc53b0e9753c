"""Reduced Burau representation and the one-variable Alexander polynomial.

The generator sigma_i acts on the rank n-1 representation as the identity
except in column i-1 (0-based), which holds t above the diagonal, -t on it
and 1 below; inverses hold 1 above, -1/t on and 1/t below.  For a word w
with closure L, det(burau(w) - I) equals the Alexander polynomial of L
times 1 + t + ... + t^(n-1), up to a unit: the quotient is taken by exact
division, which keeps the value at t = -1 meaningful for even n as well.
"""

from __future__ import annotations

from fractions import Fraction

from .braids import BraidWord
from .laurent import ONE, T, ZERO, LaurentPolynomial, geometric_sum
from .matrices import bareiss_determinant_laurent

BurauMatrix = tuple[tuple[LaurentPolynomial, ...], ...]

_MINUS_T = LaurentPolynomial({1: -1})
_MINUS_T_INV = LaurentPolynomial({-1: -1})
_T_INV = LaurentPolynomial({-1: 1})


def _identity(size: int) -> list[list[LaurentPolynomial]]:
    return [[ONE if i == j else ZERO for j in range(size)] for i in range(size)]


def burau_reduced(word: BraidWord) -> BurauMatrix:
    """Product of reduced Burau generator matrices over the word's letters.

    Respects concatenation: burau(ab) = burau(a) * burau(b).  Requires at
    least two strands.
    """
    n = word.strand_count
    if n < 2:
        raise ValueError("reduced Burau needs n >= 2")
    size = n - 1
    m = _identity(size)
    for e in word.letters:
        r = abs(e) - 1
        # Right-multiplying by a generator only rewrites column r.
        if e > 0:
            above, diag, below = T, _MINUS_T, ONE
        else:
            above, diag, below = ONE, _MINUS_T_INV, _T_INV
        for row in m:
            new = row[r] * diag
            if r > 0:
                new = new + row[r - 1] * above
            if r + 1 < size:
                new = new + row[r + 1] * below
            row[r] = new
    return tuple(tuple(row) for row in m)


def burau_multiply(a: BurauMatrix, b: BurauMatrix) -> BurauMatrix:
    size = len(a)
    out = []
    for i in range(size):
        row = []
        for j in range(size):
            acc = ZERO
            for k in range(size):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def alexander_polynomial(word: BraidWord) -> LaurentPolynomial:
    """One-variable Alexander polynomial of the closure, normalized so the
    lowest exponent is 0 and the leading coefficient is positive.

    Computed as det(burau(w) - I) divided exactly by 1 + t + ... + t^(n-1).
    Split closures give the zero polynomial; the one-strand word gives 1.
    """
    n = word.strand_count
    if n == 1:
        return ONE
    m = burau_reduced(word)
    size = n - 1
    shifted = [
        [m[i][j] - ONE if i == j else m[i][j] for j in range(size)]
        for i in range(size)
    ]
    det = bareiss_determinant_laurent(shifted)
    if det.is_zero:
        return ZERO
    quotient = det.exact_div(geometric_sum(n))
    return _normalize(quotient)


def _normalize(p: LaurentPolynomial) -> LaurentPolynomial:
    if p.is_zero:
        return p
    p = p.shifted(-p.min_exp)
    if p.coefficient(p.max_exp) < 0:
        p = -p
    return p


def alexander_at(word: BraidWord, point: int | Fraction) -> int | Fraction:
    """Exact value of the normalized Alexander polynomial at a point."""
    return alexander_polynomial(word).evaluate(point)


def determinant_from_burau(word: BraidWord) -> int:
    """Signed Alexander value at t = -1 (the Burau route to the determinant)."""
    value = alexander_at(word, -1)
    if not isinstance(value, int):
        raise RuntimeError("Alexander value at -1 must be an integer")
    return value
