"""Exact arithmetic in the real field generated by square roots of integers.

A value is a finite sum ``sum_d c_d * sqrt(d)`` with rational coefficients
``c_d`` and square-free positive radicands ``d``.  The radicand 1 carries the
rational part.  Square roots of distinct square-free integers are linearly
independent over the rationals, so the term map is a canonical form and
equality is plain map equality; no floating point is involved anywhere.

Coefficients are :class:`fractions.Fraction` values, hence arbitrary
precision.  Radicands stay small in practice (products of sqrt(m) for the
series weights), so square-free splitting by trial division is enough.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "RadicalScalar",
    "Rational",
    "ZERO",
    "ONE",
    "sqrt_int",
    "add",
    "mul",
    "to_float",
    "square_free_split",
]

Rational = Fraction
RationalLike = Union[int, Fraction]


def square_free_split(m: int) -> tuple[int, int]:
    """Factor ``m = s*s*d`` with ``d`` square-free; return ``(s, d)``.

    Trial division.  Raises ValueError for m < 1.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"radicand must be a positive integer, got {m!r}")
    s, d = 1, 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            s *= p ** (k // 2)
            if k % 2:
                d *= p
        p += 1 if p == 2 else 2
    return s, d * m


def _smallest_prime_factor(n: int) -> int:
    p = 2
    while p * p <= n:
        if n % p == 0:
            return p
        p += 1 if p == 2 else 2
    return n


class RadicalScalar:
    """Element of the square-root field, kept in canonical form.

    Immutable.  The term tuple is sorted by radicand and contains no zero
    coefficients and no reducible radicands, so ``==`` and ``hash`` agree
    with field equality.
    """

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Mapping[int, RationalLike] | Iterable[tuple[int, RationalLike]] = (),
    ) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for d, c in items:
            c = Fraction(c)
            if not c:
                continue
            s, rad = square_free_split(d)
            total = acc.get(rad, Fraction(0)) + c * s
            if total:
                acc[rad] = total
            elif rad in acc:
                del acc[rad]
        object.__setattr__(self, "_terms", tuple(sorted(acc.items())))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RadicalScalar is immutable")

    @classmethod
    def _canonical(cls, acc: Mapping[int, Fraction]) -> "RadicalScalar":
        # internal fast path: radicands already square-free, coeffs nonzero
        out = object.__new__(cls)
        object.__setattr__(out, "_terms", tuple(sorted(acc.items())))
        return out

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, value: RationalLike) -> "RadicalScalar":
        return cls(((1, Fraction(value)),))

    @classmethod
    def sqrt_int(cls, m: int) -> "RadicalScalar":
        """Exact square root of a positive integer: sqrt(m) = s*sqrt(d)."""
        s, d = square_free_split(m)
        return cls(((d, Fraction(s)),))

    # -- inspection ---------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[int, Fraction], ...]:
        return self._terms

    def is_rational(self) -> bool:
        return all(d == 1 for d, _ in self._terms)

    @property
    def rational_part(self) -> Fraction:
        for d, c in self._terms:
            if d == 1:
                return c
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- ring operations ----------------------------------------------

    @staticmethod
    def _coerce(value: "RadicalScalar | RationalLike") -> "RadicalScalar":
        if isinstance(value, RadicalScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return RadicalScalar.from_rational(value)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: "RadicalScalar | RationalLike") -> "RadicalScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for d, c in other._terms:
            total = acc.get(d)
            total = c if total is None else total + c
            if total:
                acc[d] = total
            else:
                del acc[d]
        return RadicalScalar._canonical(acc)

    __radd__ = __add__

    def __neg__(self) -> "RadicalScalar":
        return RadicalScalar._canonical({d: -c for d, c in self._terms})

    def __sub__(self, other: "RadicalScalar | RationalLike") -> "RadicalScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "RadicalScalar | RationalLike") -> "RadicalScalar":
        return -(self - other)

    def __mul__(self, other: "RadicalScalar | RationalLike") -> "RadicalScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for d1, c1 in self._terms:
            for d2, c2 in other._terms:
                g = math.gcd(d1, d2)
                # sqrt(d1)*sqrt(d2) = g*sqrt((d1/g)*(d2/g)); both factors are
                # square-free and coprime, so the product is square-free.
                rad = (d1 // g) * (d2 // g)
                c = c1 * c2 * g
                total = acc.get(rad)
                total = c if total is None else total + c
                if total:
                    acc[rad] = total
                elif rad in acc:
                    del acc[rad]
        return RadicalScalar._canonical(acc)

    __rmul__ = __mul__

    def inverse(self) -> "RadicalScalar":
        """Exact multiplicative inverse; raises ZeroDivisionError on zero.

        Rationalizes one prime at a time: split x = A + sqrt(p)*B with p
        absent from A and B, then x*(A - sqrt(p)*B) lies in the subfield
        without p (the conjugation is a field automorphism, so the product
        is nonzero) and recursion terminates.
        """
        if not self._terms:
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return RadicalScalar.from_rational(1 / self.rational_part)
        p = max(_smallest_prime_factor(d) for d, _ in self._terms if d > 1)
        plain = [(d, c) for d, c in self._terms if d % p]
        carried = [(d // p, c) for d, c in self._terms if d % p == 0]
        conj = RadicalScalar(plain) - RadicalScalar.sqrt_int(p) * RadicalScalar(carried)
        norm = self * conj
        return conj * norm.inverse()

    def __truediv__(self, other: "RadicalScalar | RationalLike") -> "RadicalScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    # -- comparison / hashing ------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RadicalScalar.from_rational(other)
        if not isinstance(other, RadicalScalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    # -- conversion -----------------------------------------------------

    def to_float(self) -> float:
        return sum(float(c) * math.sqrt(d) for d, c in self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for d, c in self._terms:
            body = _term_text(d, c)
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append((" + " if c > 0 else " - ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"RadicalScalar({self})"

    # -- JSON ------------------------------------------------------------

    def to_json(self) -> list[dict[str, object]]:
        return [
            {"radicand": d, "coeff": f"{c.numerator}/{c.denominator}"}
            for d, c in self._terms
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping[str, object]]) -> "RadicalScalar":
        return cls([(int(item["radicand"]), Fraction(str(item["coeff"]))) for item in data])


def _frac_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _term_text(d: int, c: Fraction) -> str:
    c = abs(c)
    if d == 1:
        return _frac_text(c)
    if c == 1:
        return f"sqrt({d})"
    return f"{_frac_text(c)}*sqrt({d})"


ZERO = RadicalScalar()
ONE = RadicalScalar.from_rational(1)


def sqrt_int(m: int) -> RadicalScalar:
    """Module-level alias for :meth:`RadicalScalar.sqrt_int`."""
    return RadicalScalar.sqrt_int(m)


def add(a: RadicalScalar, b: RadicalScalar) -> RadicalScalar:
    return a + b


def mul(a: RadicalScalar, b: RadicalScalar) -> RadicalScalar:
    return a * b


def to_float(a: RadicalScalar) -> float:
    return a.to_float()
