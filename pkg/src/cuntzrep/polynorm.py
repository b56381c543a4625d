"""Canonical form for polynomial operator expressions.

Every *-polynomial in the two generators reduces, using t_i* t_j = delta_ij,
to a combination of monomials t_u t_v* (generator word times adjoint word).
Refining each monomial with the completeness relation

    t_u t_v*  =  sum over words x of length (depth - |u|) of  t_(ux) t_(vx)*

brings all left words to one common length.  Two polynomial expressions are
equal in the algebra exactly when these refined term lists coincide, so the
refined, merged, sorted list is a normal form and equality is decidable.

For display the inverse rewrite is applied to exhaustion (merging sibling
pairs with equal coefficients back into their parent), which yields the
minimal equivalent monomial list independent of the chosen depth.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .operators import (
    Adj,
    Boson,
    Cluster,
    Fermion,
    Gen,
    Ident,
    Iso,
    LinComb,
    OperatorExpr,
    PartialShift,
    Prod,
    Psi,
    RangeProj,
    Rho,
    ShiftSeries,
    Zeta,
    partial_shift_definition,
    psi_fermion_index,
    range_proj_definition,
)
from .scalars import RadicalScalar, ONE
from .states import StateVector
from .basis import ALPHABET

__all__ = [
    "PolynomialError",
    "PolyNormalForm",
    "FERMION_CAP",
    "poly_normal_form",
    "monomials",
    "collapse",
    "apply_normal_form",
    "render_monomials",
]

# Materialization guard: a(n) expands to 2^(n-1) monomials.
FERMION_CAP = 16

Monomial = tuple[RadicalScalar, str, str]


class PolynomialError(ValueError):
    """Series node present, depth too small, or materialization too large."""


def _mono_mul(c: RadicalScalar, u1: str, v1: str, u2: str, v2: str) -> Optional[Monomial]:
    # (t_u1 t_v1*)(t_u2 t_v2*): resolve the middle pair by prefix comparison.
    if u2.startswith(v1):
        return (c, u1 + u2[len(v1):], v2)
    if v1.startswith(u2):
        return (c, u1, v2 + v1[len(u2):])
    return None


def _fermion_monomials(n: int) -> list[Monomial]:
    if n > FERMION_CAP:
        raise PolynomialError(
            f"a({n}) expands to 2^{n - 1} monomials, beyond the cap of a({FERMION_CAP})"
        )
    out: list[Monomial] = []
    for letters in itertools.product(ALPHABET, repeat=n - 1):
        w = "".join(letters)
        sign = -1 if w.count("2") % 2 else 1
        out.append((RadicalScalar.from_rational(sign), w + "1", w + "2"))
    return out


def _series_error(e: OperatorExpr) -> PolynomialError:
    token = {
        Boson: lambda x: f"b({x.n})",
        Cluster: lambda x: f"F({x.n})",
        ShiftSeries: lambda x: "Y",
        Rho: lambda x: "rho(...)",
    }[type(e)](e)
    return PolynomialError(f"{token} is a series operator; it has no polynomial normal form")


def monomials(e: OperatorExpr) -> list[Monomial]:
    """Lower a polynomial expression to reduced monomials (unmerged)."""
    if isinstance(e, Gen):
        return [(ONE, str(e.letter), "")]
    if isinstance(e, Adj):
        return [(c, v, u) for c, u, v in monomials(e.arg)]
    if isinstance(e, Ident):
        return [(ONE, "", "")]
    if isinstance(e, Prod):
        acc: list[Monomial] = [(ONE, "", "")]
        for f in e.factors:
            fm = monomials(f)
            nxt: list[Monomial] = []
            for c1, u1, v1 in acc:
                for c2, u2, v2 in fm:
                    m = _mono_mul(c1 * c2, u1, v1, u2, v2)
                    if m is not None:
                        nxt.append(m)
            acc = nxt
            if not acc:
                break
        return acc
    if isinstance(e, LinComb):
        out: list[Monomial] = []
        for c, x in e.parts:
            out.extend((c * c2, u, v) for c2, u, v in monomials(x))
        return out
    if isinstance(e, Iso):
        return [(ONE, "2" * (e.n - 1) + "1", "")]
    if isinstance(e, Fermion):
        return _fermion_monomials(e.n)
    if isinstance(e, Psi):
        return _fermion_monomials(psi_fermion_index(e.numer))
    if isinstance(e, RangeProj):
        return monomials(range_proj_definition(e.n))
    if isinstance(e, PartialShift):
        return monomials(partial_shift_definition(e.n))
    if isinstance(e, Zeta):
        inner = monomials(e.arg)
        out = [(c, "1" + u, "1" + v) for c, u, v in inner]
        out.extend((-c, "2" + u, "2" + v) for c, u, v in inner)
        return out
    if isinstance(e, (Boson, Cluster, ShiftSeries, Rho)):
        raise _series_error(e)
    raise TypeError(f"not an operator expression: {e!r}")


def _merge(terms: list[Monomial]) -> dict[tuple[str, str], RadicalScalar]:
    acc: dict[tuple[str, str], RadicalScalar] = {}
    for c, u, v in terms:
        key = (u, v)
        total = acc.get(key)
        total = c if total is None else total + c
        if total:
            acc[key] = total
        elif key in acc:
            del acc[key]
    return acc


@dataclass(frozen=True)
class PolyNormalForm:
    """Merged monomial list with all left words refined to one length."""

    depth: int
    terms: tuple[Monomial, ...]

    def is_zero(self) -> bool:
        return not self.terms

    def at_depth(self, depth: int) -> "PolyNormalForm":
        if depth < self.depth:
            raise PolynomialError(
                f"cannot lower refinement depth from {self.depth} to {depth}"
            )
        return _refine(list(self.terms), depth)

    def to_json(self) -> dict[str, object]:
        return {
            "depth": self.depth,
            "terms": [
                {"coeff": c.to_json(), "left": u, "right": v} for c, u, v in self.terms
            ],
        }


def _refine(terms: list[Monomial], depth: int) -> PolyNormalForm:
    refined: list[Monomial] = []
    for c, u, v in terms:
        pad = depth - len(u)
        if pad < 0:
            raise PolynomialError(
                f"depth {depth} is smaller than the left word {u!r}"
            )
        if pad == 0:
            refined.append((c, u, v))
        else:
            for letters in itertools.product(ALPHABET, repeat=pad):
                x = "".join(letters)
                refined.append((c, u + x, v + x))
    merged = _merge(refined)
    ordered = tuple(
        (merged[key], key[0], key[1]) for key in sorted(merged)
    )
    return PolyNormalForm(depth, ordered)


def poly_normal_form(e: OperatorExpr, depth: Optional[int] = None) -> PolyNormalForm:
    """Normal form of a polynomial expression at the given (or intrinsic) depth."""
    merged = _merge(monomials(e))
    terms = [(c, u, v) for (u, v), c in merged.items()]
    intrinsic = max((len(u) for _, u, _ in terms), default=0)
    if depth is None:
        depth = intrinsic
    elif depth < intrinsic:
        raise PolynomialError(
            f"depth {depth} is smaller than the intrinsic left-word length {intrinsic}"
        )
    return _refine(terms, depth)


def collapse(terms: tuple[Monomial, ...] | list[Monomial]) -> list[Monomial]:
    """Undo the refinement wherever possible; minimal equivalent term list."""
    table = {(u, v): c for c, u, v in terms}
    changed = True
    while changed:
        changed = False
        for (u, v) in list(table):
            c = table.get((u, v))
            if c is None or not u or not v or u[-1] != v[-1]:
                continue
            flip = "2" if u[-1] == "1" else "1"
            sibling = (u[:-1] + flip, v[:-1] + flip)
            if table.get(sibling) != c:
                continue
            del table[(u, v)]
            del table[sibling]
            parent = (u[:-1], v[:-1])
            total = table.get(parent)
            total = c if total is None else total + c
            if total:
                table[parent] = total
            elif parent in table:
                del table[parent]
            changed = True
    return [(c, u, v) for (u, v), c in sorted(table.items())]


def apply_normal_form(nf: PolyNormalForm, v: StateVector) -> StateVector:
    """Act with a monomial list on a vector; coherence oracle for apply()."""
    from .operators import _apply_letter, _apply_letter_adj  # letter primitives

    out = StateVector.zero(v.rep)
    for c, u, right in nf.terms:
        w = v
        for ch in right:
            w = _apply_letter_adj(w, int(ch))
            if not w:
                break
        if not w:
            continue
        for ch in reversed(u):
            w = _apply_letter(w, int(ch))
        out = out.combine(c, w)
    return out


def render_monomials(terms: list[Monomial] | tuple[Monomial, ...]) -> str:
    """ASCII rendering, e.g. ``t1t1t2*t1* - t2t1t2*t2*`` or ``I``."""
    if not terms:
        return "0"
    pieces: list[str] = []
    for c, u, v in terms:
        body = "".join(f"t{ch}" for ch in u) + "".join(f"t{ch}*" for ch in reversed(v))
        if not body:
            body = "I"
        neg = _is_negative(c)
        mag = -c if neg else c
        if mag == 1:
            text = body
        elif len(mag.terms) > 1:
            text = f"({mag})*{body}"
        else:
            text = f"{mag}*{body}"
        if not pieces:
            pieces.append("-" + text if neg else text)
        else:
            pieces.append((" - " if neg else " + ") + text)
    return "".join(pieces)


def _is_negative(c: RadicalScalar) -> bool:
    # Sign of the leading term; used only for display.
    return bool(c.terms) and c.terms[0][1] < 0
