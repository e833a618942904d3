"""Kauffman bracket state sum, Jones normalization, and v2/v3 extraction.

The bracket of a diagram with c crossings is summed over all 2^c
smoothings.  Each state contributes A^(a-b) * (-A^2 - A^-2)^(loops-1),
where a and b count the two smoothing types and loops is the number of
circles left after smoothing, counted by union-find over edge labels.
States are enumerated as bit masks; since the A-exponent depends only on
the popcount, states are histogrammed by (popcount, loops) and the
polynomial is assembled once at the end.

Normalization multiplies by (-A^3)^(-writhe) and reindexes exponents so
the positive trefoil comes out as -q^4 + q^3 + q; with the smoothing
conventions of this module that pins the exponent divisor to -4 (the
anchor test in the suite guards the choice).  The derivative formulas
  v2 = -J''(1)/6        v3 = -(J'''(1) + 3 J''(1))/36
then yield integers; a non-exact division is a hard error, never rounded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, writhe
from .errors import (CrossingLimitError, ExactnessError,
                     IndivisibleExponentError)
from .laurent import ONE, LaurentPoly, mono

__all__ = ["InvariantPair", "kauffman_bracket", "jones", "v2_v3", "arf",
           "DEFAULT_CROSSING_CAP"]

DEFAULT_CROSSING_CAP = 20

# Exponent divisor taking the normalized bracket (in A) to the Jones
# variable q, fixed once by the trefoil anchor; see module docstring.
_JONES_REINDEX = -4


@dataclass(frozen=True)
class InvariantPair:
    """The integers (v2, v3) of a knot."""

    v2: int
    v3: int

    def __iter__(self):
        return iter((self.v2, self.v3))


def kauffman_bracket(d: Diagram, cap: int = DEFAULT_CROSSING_CAP) -> LaurentPoly:
    """Bracket polynomial in A by brute-force state sum.

    The unknot (no crossings) returns 1.  Raises CrossingLimitError above
    ``cap`` crossings (2^c states; raise the cap knowingly).
    """
    n = d.crossing_count
    if n == 0:
        return ONE
    if n > cap:
        raise CrossingLimitError(
            f"{n} crossings exceeds the state-sum cap of {cap}; "
            "raise the cap to proceed (2^c states)")
    ne = d.edge_count

    joins = []
    for c in d.crossings:
        a, b, cc, dd = (e - 1 for e in c.edges)
        # type-A smoothing joins (a,d) and (b,c); type-B joins (a,b) and (c,d)
        # (assignment calibrated against the trefoil anchor)
        joins.append(((a, dd, b, cc), (a, b, cc, dd)))

    hist: dict[tuple[int, int], int] = {}
    for mask in range(1 << n):
        parent = list(range(ne))
        loops = ne
        bits = mask
        for i in range(n):
            x, y, z, w = joins[i][bits & 1]
            bits >>= 1
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            while parent[y] != y:
                parent[y] = parent[parent[y]]
                y = parent[y]
            if x != y:
                parent[x] = y
                loops -= 1
            while parent[z] != z:
                parent[z] = parent[parent[z]]
                z = parent[z]
            while parent[w] != w:
                parent[w] = parent[parent[w]]
                w = parent[w]
            if z != w:
                parent[z] = w
                loops -= 1
        key = (mask.bit_count(), loops)
        hist[key] = hist.get(key, 0) + 1

    delta = LaurentPoly({2: -1, -2: -1})
    delta_powers = [ONE]
    for _ in range(max(loops_ for _, loops_ in hist)):
        delta_powers.append(delta_powers[-1] * delta)

    total = LaurentPoly()
    for (b_count, loops), count in hist.items():
        term = delta_powers[loops - 1].scale(count)
        total = total + term * mono(1, n - 2 * b_count)
    return total


def jones(d: Diagram, cap: int = DEFAULT_CROSSING_CAP) -> LaurentPoly:
    """Jones polynomial in q, normalized so the unknot maps to 1."""
    br = kauffman_bracket(d, cap)
    w = writhe(d)
    f = br * mono(-1 if w % 2 else 1, -3 * w)
    try:
        return f.reindex_exponents(_JONES_REINDEX)
    except IndivisibleExponentError as exc:
        raise ExactnessError(
            "normalized bracket exponents not divisible by 4; "
            "diagram is not a knot diagram or conventions are broken") from exc


def v2_v3(d: Diagram, cap: int = DEFAULT_CROSSING_CAP) -> InvariantPair:
    """The Vassiliev invariants (v2, v3) via Jones derivatives at 1."""
    j = jones(d, cap)
    j2 = j.falling_factorial_sum(2)
    j3 = j.falling_factorial_sum(3)
    v2, rem = divmod(-j2, 6)
    if rem:
        raise ExactnessError(f"v2 division not exact: J''(1) = {j2}")
    v3, rem = divmod(-(j3 + 3 * j2), 36)
    if rem:
        raise ExactnessError(
            f"v3 division not exact: J'''(1) = {j3}, J''(1) = {j2}")
    return InvariantPair(v2, v3)


def arf(pair: InvariantPair) -> int:
    """Arf invariant: v2 reduced modulo two (nonnegative residue)."""
    return pair.v2 % 2
