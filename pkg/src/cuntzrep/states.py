"""Finite exact linear combinations of reference basis labels."""

from __future__ import annotations

from typing import Iterable, Mapping, Union

from .basis import BasisLabel, RepSpec, label_sort_key
from .scalars import RadicalScalar, ZERO, ONE

__all__ = ["RepMismatchError", "StateVector"]

ScalarLike = Union[RadicalScalar, int]


class RepMismatchError(ValueError):
    """Raised when vectors over different representations are combined."""


def _as_scalar(c: ScalarLike) -> RadicalScalar:
    return c if isinstance(c, RadicalScalar) else RadicalScalar.from_rational(c)


class StateVector:
    """Map from basis labels to nonzero scalars; immutable by convention.

    All arithmetic stays within one representation; mixing representations
    raises RepMismatchError.  Term iteration follows the canonical basis
    enumeration order, so serialized output is reproducible byte for byte.
    """

    __slots__ = ("rep", "_terms")

    def __init__(
        self,
        rep: RepSpec,
        terms: Mapping[BasisLabel, ScalarLike] | Iterable[tuple[BasisLabel, ScalarLike]] = (),
    ) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[BasisLabel, RadicalScalar] = {}
        for label, c in items:
            c = _as_scalar(c)
            if not c:
                continue
            total = acc.get(label, ZERO) + c
            if total:
                acc[label] = total
            elif label in acc:
                del acc[label]
        object.__setattr__(self, "rep", rep)
        object.__setattr__(self, "_terms", acc)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("StateVector is immutable")

    @classmethod
    def zero(cls, rep: RepSpec) -> "StateVector":
        return cls(rep)

    @classmethod
    def basis(cls, rep: RepSpec, label: BasisLabel) -> "StateVector":
        return cls(rep, ((label, ONE),))

    # -- inspection ----------------------------------------------------

    def terms(self) -> list[tuple[BasisLabel, RadicalScalar]]:
        return sorted(self._terms.items(), key=lambda kv: label_sort_key(kv[0]))

    def coeff(self, label: BasisLabel) -> RadicalScalar:
        return self._terms.get(label, ZERO)

    def labels(self) -> list[BasisLabel]:
        return [label for label, _ in self.terms()]

    def depth(self) -> int:
        """Longest word length present; 0 for the zero vector."""
        return max((len(label.word) for label in self._terms), default=0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- arithmetic ------------------------------------------------------

    def _require_same_rep(self, other: "StateVector") -> None:
        if self.rep != other.rep:
            raise RepMismatchError(
                f"cannot combine vectors over {self.rep} and {other.rep}"
            )

    def combine(self, c: ScalarLike, other: "StateVector") -> "StateVector":
        """self + c * other, exactly."""
        self._require_same_rep(other)
        c = _as_scalar(c)
        merged = dict(self._terms)
        for label, coeff in other._terms.items():
            total = merged.get(label, ZERO) + c * coeff
            if total:
                merged[label] = total
            elif label in merged:
                del merged[label]
        out = StateVector.zero(self.rep)
        object.__setattr__(out, "_terms", merged)
        return out

    def __add__(self, other: "StateVector") -> "StateVector":
        return self.combine(ONE, other)

    def __sub__(self, other: "StateVector") -> "StateVector":
        return self.combine(RadicalScalar.from_rational(-1), other)

    def scale(self, c: ScalarLike) -> "StateVector":
        c = _as_scalar(c)
        return StateVector(self.rep, ((label, c * coeff) for label, coeff in self._terms.items()))

    def __rmul__(self, c: ScalarLike) -> "StateVector":
        return self.scale(c)

    def inner(self, other: "StateVector") -> RadicalScalar:
        """Symmetric bilinear pairing; all scalars are real."""
        self._require_same_rep(other)
        small, large = (self, other) if len(self) <= len(other) else (other, self)
        total = ZERO
        for label, coeff in small._terms.items():
            other_coeff = large._terms.get(label)
            if other_coeff is not None:
                total = total + coeff * other_coeff
        return total

    # -- comparison ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.rep == other.rep and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.rep, tuple(self.terms())))

    def __repr__(self) -> str:
        body = " + ".join(f"({coeff})|{label.component}:{label.word};{label.node}>" for label, coeff in self.terms())
        return f"StateVector({body or '0'})"
