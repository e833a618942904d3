"""Exact Laurent polynomials in one variable with integer coefficients.

The representation is a sparse map exponent -> coefficient with no stored
zeros, so equality is map equality.  Coefficients are plain Python ints
(arbitrary precision); bracket-polynomial intermediates overflow 64 bits
well before the crossing cap, so exactness here is non-negotiable.
"""

from __future__ import annotations

from .errors import IndivisibleExponentError

__all__ = ["LaurentPoly", "mono", "ZERO", "ONE"]


class LaurentPoly:
    """Immutable sparse Laurent polynomial ``sum c_k * x^k``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        self._terms = {e: c for e, c in (terms or {}).items() if c != 0}

    @property
    def terms(self) -> dict[int, int]:
        """Copy of the exponent -> coefficient map (canonical, no zeros)."""
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        result = dict(self._terms)
        for e, c in other._terms.items():
            result[e] = result.get(e, 0) + c
        return LaurentPoly(result)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        result: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                result[e] = result.get(e, 0) + c1 * c2
        return LaurentPoly(result)

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers are not defined for Laurent polynomials")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, factor: int) -> LaurentPoly:
        return LaurentPoly({e: factor * c for e, c in self._terms.items()})

    def falling_factorial_sum(self, n: int) -> int:
        """Value of the n-th derivative at 1: sum c_k * k(k-1)...(k-n+1)."""
        if n < 0:
            raise ValueError("derivative order must be nonnegative")
        total = 0
        for e, c in self._terms.items():
            prod = 1
            for j in range(n):
                prod *= e - j
            total += c * prod
        return total

    def reindex_exponents(self, divisor: int) -> LaurentPoly:
        """Divide every exponent by ``divisor`` (negative inverts the variable).

        Raises IndivisibleExponentError naming the first offending exponent.
        """
        if divisor == 0:
            raise ValueError("divisor must be nonzero")
        result: dict[int, int] = {}
        for e in sorted(self._terms):
            if e % divisor != 0:
                raise IndivisibleExponentError(
                    f"exponent {e} is not divisible by {divisor}"
                )
            result[e // divisor] = self._terms[e]
        return LaurentPoly(result)

    def min_exponent(self) -> int:
        return min(self._terms)

    def max_exponent(self) -> int:
        return max(self._terms)

    def format(self, var: str = "q") -> str:
        """Render with terms in decreasing exponent order, e.g. ``-q^4 + q^3 + q``."""
        if not self._terms:
            return "0"
        pieces = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = var if e == 1 else f"{var}^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"LaurentPoly({self._terms!r})"


def mono(coeff: int, exp: int) -> LaurentPoly:
    """The monomial ``coeff * x^exp``."""
    return LaurentPoly({exp: coeff})


ZERO = LaurentPoly()
ONE = mono(1, 0)
