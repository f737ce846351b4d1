"""Degree sequences and pure diagrams for the secant family.

The family is indexed by (g, k, d) with d >= 2g + 2k + 1 and r = d - g,
plus a weakly increasing jump tuple i = (i_0, ..., i_k) with entries in
[0, g]. Each tuple selects k+1 positions to drop from {k+2, ..., r+1};
prepending 0 to what is left gives a strictly increasing sequence of length
r - 2k, so every diagram in the family has projective dimension r - 2k - 1.

The closed forms in this module (degree, bottom-right entry, the dominant
column entries, the leading numerator coefficient) are always validated
against the generic pure-diagram machinery in tests, never the other way
around.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .diagrams import BettiDiagram, DegreeSequence, pure_diagram
from .errors import InvalidParams, InvalidTuple, OutOfRange, TupleNotMaximalRegularity


@dataclass(frozen=True)
class SecantParams:
    """Genus g >= 1, secant index k >= 0, embedding degree d >= 2g + 2k + 1."""

    g: int
    k: int
    d: int

    def __post_init__(self):
        for name in ("g", "k", "d"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidParams(f"{name} must be an integer, got {v!r}")
        if self.g < 1:
            raise InvalidParams(f"g must be at least 1, got {self.g}")
        if self.k < 0:
            raise InvalidParams(f"k must be nonnegative, got {self.k}")
        if self.d < 2 * self.g + 2 * self.k + 1:
            raise InvalidParams(
                f"d={self.d} violates d >= 2g + 2k + 1 = {2 * self.g + 2 * self.k + 1}"
            )

    @property
    def r(self) -> int:
        return self.d - self.g


def _checked_tuple(params: SecantParams, i) -> tuple:
    t = tuple(i)
    if len(t) != params.k + 1:
        raise InvalidTuple(f"need {params.k + 1} entries, got {len(t)}")
    for v in t:
        if not isinstance(v, int) or isinstance(v, bool):
            raise InvalidTuple(f"non-integer entry {v!r}")
    if t[0] < 0 or t[-1] > params.g:
        raise InvalidTuple(f"entries of {t} must lie in [0, {params.g}]")
    if any(a > b for a, b in zip(t, t[1:])):
        raise InvalidTuple(f"{t} is not weakly increasing")
    return t


def jump_tuples(g: int, k: int):
    """All weakly increasing (k+1)-tuples over [0, g], lexicographic.

    There are binomial(g+k+1, k+1) of them.
    """
    if g < 1 or k < 0:
        raise InvalidParams(f"need g >= 1 and k >= 0, got g={g}, k={k}")
    return list(combinations_with_replacement(range(g + 1), k + 1))


def dominant_tuple(params: SecantParams) -> tuple:
    return (params.g,) * (params.k + 1)


def degree_sequence(params: SecantParams, i) -> DegreeSequence:
    """(0) followed by {k+2, ..., r+1} minus the k+1 dropped positions.

    Entry j of the tuple drops position r + 1 - (i_j + j). The dropped
    positions are pairwise distinct because i_j + j strictly increases, and
    the standing hypothesis d >= 2g + 2k + 1 keeps them all at or above
    k + 2, so the result always has exactly r - 2k terms.
    """
    i = _checked_tuple(params, i)
    r = params.r
    dropped = {r + 1 - (ij + j) for j, ij in enumerate(i)}
    seq = [0] + [m for m in range(params.k + 2, r + 2) if m not in dropped]
    return DegreeSequence(seq)


def secant_pure_diagram(params: SecantParams, i) -> BettiDiagram:
    """The multiplicity-1 pure diagram attached to a jump tuple."""
    return pure_diagram(degree_sequence(params, i))


def secant_degree(params: SecantParams) -> int:
    """sum_{i=0}^{min(k+1,g)} binomial(d-g-k-i, k+1-i) * binomial(g, i).

    Collapses to d when k = 0.
    """
    g, k, d = params.g, params.k, params.d
    return sum(
        math.comb(d - g - k - i, k + 1 - i) * math.comb(g, i)
        for i in range(0, min(k + 1, g) + 1)
    )


def bottom_right_betti(params: SecantParams) -> int:
    """The entry at column r - 2k - 1, weight 2k + 2: binomial(g+k, k+1)."""
    return math.comb(params.g + params.k, params.k + 1)


def shape_mask(params: SecantParams) -> frozenset:
    """Positions allowed to be nonzero for any diagram in the family.

    (0,0), the full weight-(k+1) strand, and a g-wide block of weights
    k+2 .. 2k+2 in the trailing columns.
    """
    g, k, r = params.g, params.k, params.r
    allowed = {(0, 0)}
    for p in range(1, r - 2 * k):
        allowed.add((p, k + 1))
    for p in range(r - g - 2 * k, r - 2 * k):
        for q in range(k + 2, 2 * k + 3):
            allowed.add((p, q))
    return frozenset(allowed)


def kappa_dominant(params: SecantParams, p: int) -> Fraction:
    """Closed form for the weight-(k+1) entries of the dominant diagram.

    Valid for 1 <= p <= r - g - 2k - 1; equals the column-p entry of
    secant_pure_diagram(params, (g, ..., g)) on that range.
    """
    g, k, r = params.g, params.k, params.r
    if not isinstance(p, int) or isinstance(p, bool):
        raise OutOfRange(f"p must be an integer, got {p!r}")
    if p < 1 or p > r - g - 2 * k - 1:
        raise OutOfRange(f"p={p} outside [1, {r - g - 2 * k - 1}]")
    value = Fraction(math.comb(r - 2 * k, p)) * Fraction(p, p + k + 1)
    num = 1
    for i in range(k, 2 * k + 1):
        num *= r - p - g - i
    den = r - 2 * k
    for i in range(k, 2 * k):
        den *= r - p - i
    return value * Fraction(num, den)


def hn_leading_coefficient(params: SecantParams, i, alt_denominator: bool = False) -> Fraction:
    """Leading (degree 2k+2) coefficient of the Hilbert numerator.

    prod_j (i_j + j) over (r+1) * prod_{i=k+1}^{2k} (r-i). Defined only for
    tuples with i_0 >= 1; with any i_j = 0 the numerator degree drops below
    2k+2 and there is no such coefficient.

    alt_denominator widens the denominator product to i = k-1 .. 2k. That
    variant is wrong (its degree in r is too high by two) and exists so the
    oracle comparison can demonstrate rejecting it; see the verify CLI.
    """
    i = _checked_tuple(params, i)
    if i[0] < 1:
        raise TupleNotMaximalRegularity(
            f"tuple {i} has i_0 = 0; the numerator has degree below {2 * params.k + 2}"
        )
    r, k = params.r, params.k
    num = 1
    for j, ij in enumerate(i):
        num *= ij + j
    lo = k - 1 if alt_denominator else k + 1
    den = r + 1
    for t in range(lo, 2 * k + 1):
        den *= r - t
    return Fraction(num, den)


def normalized_hn_leading(params: SecantParams) -> Fraction:
    """Leading numerator coefficient of the degree-normalized family target.

    binomial(g+k, k+1) / secant_degree: the bottom-right entry divided by
    the degree. This is the exact value the decomposition coefficients must
    reproduce, which is what the purity lower bound leans on.
    """
    return Fraction(bottom_right_betti(params), secant_degree(params))


def nonvanishing_range(params: SecantParams) -> tuple:
    """Columns (r - 2k - g, r - 2k - 1) where weight 2k+2 persists for large d."""
    r, k, g = params.r, params.k, params.g
    return (r - 2 * k - g, r - 2 * k - 1)
