"""Exact Laurent polynomials in one variable with integer coefficients.

Coefficients are arbitrary-precision Python ints and the zero polynomial is
the empty map, so all arithmetic is exact. The variable is anonymous; by
convention the rest of the package uses the Kauffman variable A, with the
Jones variable obtained through the substitution t = A^-4.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Iterator, Mapping


class ExactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


@dataclasses.dataclass(frozen=True)
class LaurentPoly:
    """Immutable Laurent polynomial: map from exponent to nonzero int coefficient."""

    coeffs: Mapping[int, int]

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        filtered = {int(e): int(c) for e, c in items if c != 0}
        object.__setattr__(self, "coeffs", filtered)

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls({})

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPoly:
        return cls({exponent: coefficient})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.coeffs.items()))

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPoly:
        return LaurentPoly({0: other}) - self

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for ea, ca in self.coeffs.items():
            for eb, cb in other.coeffs.items():
                e = ea + eb
                out[e] = out.get(e, 0) + ca * cb
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentPoly:
        if exponent < 0:
            raise ValueError("negative powers are defined only for monomials; invert explicitly")
        result = LaurentPoly.one()
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, delta: int) -> LaurentPoly:
        """Multiply by the monomial x^delta."""
        return LaurentPoly({e + delta: c for e, c in self.coeffs.items()})

    def substitute_inverse(self) -> LaurentPoly:
        """The image under x -> x^-1 (mirror of all exponents)."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def min_exponent(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return min(self.coeffs)

    def max_exponent(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return max(self.coeffs)

    def div_exact(self, divisor: LaurentPoly) -> LaurentPoly:
        """Exact division; raises ExactDivisionError if a remainder survives.

        Works in Z[x, x^-1]: both operands are shifted to ordinary polynomials,
        divided by long division over Z, and the quotient is shifted back.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        offset = self.min_exponent() - divisor.min_exponent()
        num = {e - self.min_exponent(): c for e, c in self.coeffs.items()}
        den = {e - divisor.min_exponent(): c for e, c in divisor.coeffs.items()}
        den_deg = max(den)
        den_lead = den[den_deg]
        quotient: dict[int, int] = {}
        while num:
            deg = max(num)
            if deg < den_deg:
                raise ExactDivisionError("polynomial division leaves a remainder")
            lead = num[deg]
            if lead % den_lead != 0:
                raise ExactDivisionError("leading coefficient not divisible")
            q = lead // den_lead
            quotient[deg - den_deg] = q
            for e, c in den.items():
                e2 = e + deg - den_deg
                c2 = num.get(e2, 0) - q * c
                if c2:
                    num[e2] = c2
                else:
                    num.pop(e2, None)
        return LaurentPoly({e + offset: c for e, c in quotient.items()})

    def evaluate(self, x: complex) -> complex:
        """Numeric evaluation at a nonzero complex point."""
        total = 0j
        for e, c in self.coeffs.items():
            total += c * x**e
        return total

    def to_json_dict(self, variable: str) -> dict:
        """JSON form {"variable": ..., "terms": [[exp, "coeff"], ...]}, coefficients as decimal strings."""
        return {
            "variable": variable,
            "terms": [[e, str(c)] for e, c in sorted(self.coeffs.items())],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> LaurentPoly:
        return cls({int(e): int(c) for e, c in data["terms"]})

    def format(self, variable: str = "A") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.coeffs.items()):
            if e == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                power = variable if e == 1 else f"{variable}^{e}"
                term = f"{mag}{power}"
            parts.append(("- " if c < 0 else "+ ") + term)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"LaurentPoly({self.format()})"


def convert_to_t(poly_a: LaurentPoly) -> LaurentPoly:
    """Substitute t = A^-4 into a polynomial in A.

    Every A-exponent must be divisible by 4; links with an even number of
    components produce half-integer t-powers and are rejected here.
    """
    out: dict[int, int] = {}
    for e, c in poly_a.coeffs.items():
        if e % 4 != 0:
            raise ValueError(f"A-exponent {e} is not divisible by 4; no integer t-form exists")
        out[-e // 4] = c
    return LaurentPoly(out)
