"""Symbolic operators on the reference subspace and their exact evaluation.

Expression nodes cover the two canonical generators, adjoints, products,
linear combinations, and the named families built from them:

* ``Iso(n)``        the embedded isometries   s_n = t2^(n-1) t1
* ``Fermion(n)``    the recursive fermions    a_1 = t1 t2*,  a_n = zeta(a_{n-1})
* ``Psi(p)``        fermions under the half-integer relabeling p/2
* ``Boson(n)``      the recursive bosons      b_1 = series,  b_n = rho(b_{n-1})
* ``RangeProj(n)``  the projections           W_n = s_{n+1} s_{n+1}*
* ``PartialShift(n)`` the fermion products    X_n
* ``ShiftSeries()`` the summed shift          Y  = sum_n s_{n+1} t2* s_n*
* ``Cluster(n)``    the cluster operators     F_1 = sum_m sqrt(m) W_m,
                                              F_n = Y rho(F_{n-1})
* ``Rho(x)``, ``Zeta(x)``   the transformers
                    rho(x) = sum_m s_m x s_m*,  zeta(x) = t1 x t1* - t2 x t2*

Series carry formally infinite sums, but on any vector of the reference
subspace only finitely many adjoint isometries survive: s_m* v walks the
label backwards and dies once the word is consumed and a full cycle passes
without a 1-edge.  Every series evaluator therefore pulls the finite
support map first and sums exactly; there is no truncation parameter and
no approximation anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .basis import apply_gen, apply_gen_adjoint
from .scalars import RadicalScalar, ONE, sqrt_int
from .states import StateVector

__all__ = [
    "OperatorExpr",
    "Gen",
    "Adj",
    "Prod",
    "LinComb",
    "Ident",
    "Iso",
    "Fermion",
    "Psi",
    "Boson",
    "RangeProj",
    "PartialShift",
    "ShiftSeries",
    "Cluster",
    "Rho",
    "Zeta",
    "gen",
    "adj",
    "prod",
    "lincomb",
    "scaled",
    "ident",
    "iso",
    "fermion",
    "psi",
    "psi_fermion_index",
    "boson",
    "range_proj",
    "partial_shift",
    "shift_series",
    "cluster",
    "rho",
    "zeta",
    "adjoint",
    "apply",
    "s_star_support",
    "eval_series_W",
    "eval_series_b1",
    "eval_series_b1_adj",
    "eval_series_b1_raw",
    "eval_series_Y",
    "eval_series_Y_adj",
    "eval_rho",
    "eval_zeta",
    "range_proj_definition",
    "partial_shift_definition",
]


# ---------------------------------------------------------------------------
# Expression nodes
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Gen:
    """Canonical generator t_1 or t_2."""

    letter: int


@dataclass(frozen=True, slots=True)
class Adj:
    """Adjoint of an atomic or named node (kept unexpanded)."""

    arg: "OperatorExpr"


@dataclass(frozen=True, slots=True)
class Prod:
    """Composition; factors act right to left."""

    factors: tuple["OperatorExpr", ...]


@dataclass(frozen=True, slots=True)
class LinComb:
    """Scalar combination sum_k c_k e_k."""

    parts: tuple[tuple[RadicalScalar, "OperatorExpr"], ...]


@dataclass(frozen=True, slots=True)
class Ident:
    pass


@dataclass(frozen=True, slots=True)
class Iso:
    n: int


@dataclass(frozen=True, slots=True)
class Fermion:
    n: int


@dataclass(frozen=True, slots=True)
class Psi:
    """Fermion indexed by the half-integer numer/2 (numer odd, nonzero)."""

    numer: int


@dataclass(frozen=True, slots=True)
class Boson:
    n: int


@dataclass(frozen=True, slots=True)
class RangeProj:
    n: int


@dataclass(frozen=True, slots=True)
class PartialShift:
    n: int


@dataclass(frozen=True, slots=True)
class ShiftSeries:
    pass


@dataclass(frozen=True, slots=True)
class Cluster:
    n: int


@dataclass(frozen=True, slots=True)
class Rho:
    arg: "OperatorExpr"


@dataclass(frozen=True, slots=True)
class Zeta:
    arg: "OperatorExpr"


OperatorExpr = Union[
    Gen, Adj, Prod, LinComb, Ident, Iso, Fermion, Psi, Boson,
    RangeProj, PartialShift, ShiftSeries, Cluster, Rho, Zeta,
]


# ---------------------------------------------------------------------------
# Constructors with range validation
# ---------------------------------------------------------------------------


def _require_index(n: int, least: int, what: str) -> None:
    if not isinstance(n, int) or n < least:
        raise ValueError(f"{what} index must be an integer >= {least}, got {n!r}")


def gen(i: int) -> Gen:
    if i not in (1, 2):
        raise ValueError(f"generator letter must be 1 or 2, got {i!r}")
    return Gen(i)


def ident() -> Ident:
    return Ident()


def iso(n: int) -> Iso:
    _require_index(n, 1, "s")
    return Iso(n)


def fermion(n: int) -> Fermion:
    _require_index(n, 1, "a")
    return Fermion(n)


def psi(numer: int) -> Psi:
    if not isinstance(numer, int) or numer == 0 or numer % 2 == 0:
        raise ValueError(f"psi index must be an odd half-integer p/2, got numerator {numer!r}")
    return Psi(numer)


def psi_fermion_index(numer: int) -> int:
    """Half-integer relabeling: p/2 > 0 maps to a_{p+1}, p/2 < 0 to a_{-p}."""
    return numer + 1 if numer > 0 else -numer


def boson(n: int) -> Boson:
    _require_index(n, 1, "b")
    return Boson(n)


def range_proj(n: int) -> RangeProj:
    _require_index(n, 0, "W")
    return RangeProj(n)


def partial_shift(n: int) -> PartialShift:
    _require_index(n, 1, "X")
    return PartialShift(n)


def shift_series() -> ShiftSeries:
    return ShiftSeries()


def cluster(n: int) -> Cluster:
    _require_index(n, 1, "F")
    return Cluster(n)


def rho(x: OperatorExpr) -> Rho:
    return Rho(x)


def zeta(x: OperatorExpr) -> Zeta:
    return Zeta(x)


def prod(*factors: OperatorExpr) -> OperatorExpr:
    if not factors:
        return Ident()
    if len(factors) == 1:
        return factors[0]
    flat: list[OperatorExpr] = []
    for f in factors:
        if isinstance(f, Prod):
            flat.extend(f.factors)
        else:
            flat.append(f)
    return Prod(tuple(flat))


def lincomb(*parts: tuple[RadicalScalar, OperatorExpr]) -> OperatorExpr:
    return LinComb(tuple(parts))


def scaled(c: RadicalScalar | int, e: OperatorExpr) -> OperatorExpr:
    if not isinstance(c, RadicalScalar):
        c = RadicalScalar.from_rational(c)
    return LinComb(((c, e),))


# ---------------------------------------------------------------------------
# Adjoint normalization
# ---------------------------------------------------------------------------

_SELF_ADJOINT = (RangeProj, Ident)
_ATOMIC_STARRED = (Gen, Iso, Fermion, Psi, Boson, PartialShift, ShiftSeries)


def adjoint(e: OperatorExpr) -> OperatorExpr:
    """Structural adjoint, normalized so that adjoint(adjoint(e)) == e.

    Stars distribute over sums (real scalars), reverse products, cancel in
    pairs, and stay attached to named nodes; projections, F_1, and the
    identity are self-adjoint, and rho/zeta commute with the star.
    """
    if isinstance(e, Adj):
        return e.arg
    if isinstance(e, _SELF_ADJOINT):
        return e
    if isinstance(e, Cluster):
        return e if e.n == 1 else Adj(e)
    if isinstance(e, Prod):
        return Prod(tuple(adjoint(f) for f in reversed(e.factors)))
    if isinstance(e, LinComb):
        return LinComb(tuple((c, adjoint(x)) for c, x in e.parts))
    if isinstance(e, Rho):
        return Rho(adjoint(e.arg))
    if isinstance(e, Zeta):
        return Zeta(adjoint(e.arg))
    return Adj(e)


adj = adjoint


# ---------------------------------------------------------------------------
# Letter-level actions on vectors
# ---------------------------------------------------------------------------


def _apply_letter(v: StateVector, i: int) -> StateVector:
    return StateVector(v.rep, ((apply_gen(v.rep, i, label), c) for label, c in v.terms()))


def _apply_letter_adj(v: StateVector, i: int) -> StateVector:
    out = []
    for label, c in v.terms():
        image = apply_gen_adjoint(v.rep, i, label)
        if image is not None:
            out.append((image, c))
    return StateVector(v.rep, out)


def _iso_up(v: StateVector, n: int) -> StateVector:
    """s_n v = t2^(n-1) t1 v."""
    v = _apply_letter(v, 1)
    for _ in range(n - 1):
        v = _apply_letter(v, 2)
    return v


def _iso_down(v: StateVector, n: int) -> StateVector:
    """s_n* v = t1* (t2*)^(n-1) v."""
    for _ in range(n - 1):
        v = _apply_letter_adj(v, 2)
        if not v:
            return v
    return _apply_letter_adj(v, 1)


def _support_bound(v: StateVector) -> int:
    # After the word is consumed the label walks the cycle with period L,
    # so a 1-edge either appears within |word| + L steps or never does.
    return max(
        (len(label.word) + v.rep.cycle_len(label.component) + 1 for label in v.labels()),
        default=0,
    )


def s_star_support(v: StateVector) -> dict[int, StateVector]:
    """All m with s_m* v != 0, mapped to the exact vectors s_m* v.

    Walks (t2*)^(m-1) v incrementally; on any single basis label exactly one
    of t1*, t2* survives, so each label contributes to at most one m and the
    walk provably stops by |word| + L + 1 steps.
    """
    support: dict[int, StateVector] = {}
    current = v
    bound = _support_bound(v)
    for m in range(1, bound + 1):
        if not current:
            break
        hit = _apply_letter_adj(current, 1)
        if hit:
            support[m] = hit
        current = _apply_letter_adj(current, 2)
    return support


# ---------------------------------------------------------------------------
# Series evaluators (exact, pull-based)
# ---------------------------------------------------------------------------


def eval_series_W(n: int, v: StateVector) -> StateVector:
    """W_n v = s_{n+1} (s_{n+1}* v)."""
    return _iso_up(_iso_down(v, n + 1), n + 1)


def eval_series_b1(v: StateVector) -> StateVector:
    """b_1 v = sum_m sqrt(m) s_m (s_{m+1}* v); only support keys m+1 survive."""
    out = StateVector.zero(v.rep)
    for j, w in s_star_support(v).items():
        if j >= 2:
            out = out.combine(sqrt_int(j - 1), _iso_up(w, j - 1))
    return out


def eval_series_b1_adj(v: StateVector) -> StateVector:
    """b_1* v = sum_m sqrt(m) s_{m+1} (s_m* v)."""
    out = StateVector.zero(v.rep)
    for j, w in s_star_support(v).items():
        out = out.combine(sqrt_int(j), _iso_up(w, j + 1))
    return out


def eval_series_b1_raw(v: StateVector) -> StateVector:
    """b_1 v summed straight from the defining monomials, term by term.

    Independent of the support machinery: applies t2^(m-1) t1 t1* (t2*)^m
    literally for every m up to the walk bound.  Kept as a cross-check
    oracle for the rewritten evaluator.
    """
    out = StateVector.zero(v.rep)
    current = v
    for m in range(1, _support_bound(v) + 1):
        current = _apply_letter_adj(current, 2)
        if not current:
            break
        out = out.combine(sqrt_int(m), _iso_up(_apply_letter_adj(current, 1), m))
    return out


def eval_series_Y(v: StateVector) -> StateVector:
    """Y v = sum_n s_{n+1} t2* (s_n* v)."""
    out = StateVector.zero(v.rep)
    for n, w in s_star_support(v).items():
        out = out.combine(ONE, _iso_up(_apply_letter_adj(w, 2), n + 1))
    return out


def eval_series_Y_adj(v: StateVector) -> StateVector:
    """Y* v = sum_n s_n t2 (s_{n+1}* v)."""
    out = StateVector.zero(v.rep)
    for j, w in s_star_support(v).items():
        if j >= 2:
            out = out.combine(ONE, _iso_up(_apply_letter(w, 2), j - 1))
    return out


def eval_rho(x: OperatorExpr, v: StateVector) -> StateVector:
    """rho(x) v = sum_m s_m x (s_m* v), summed over the finite support."""
    out = StateVector.zero(v.rep)
    for m, w in s_star_support(v).items():
        out = out.combine(ONE, _iso_up(apply(x, w), m))
    return out


def eval_zeta(x: OperatorExpr, v: StateVector) -> StateVector:
    """zeta(x) v = t1 x t1* v - t2 x t2* v."""
    left = _apply_letter(apply(x, _apply_letter_adj(v, 1)), 1)
    right = _apply_letter(apply(x, _apply_letter_adj(v, 2)), 2)
    return left - right


def _zeta_branch(recurse, n: int, v: StateVector, i: int) -> StateVector:
    # skip the recursion entirely on an annihilated branch
    w = _apply_letter_adj(v, i)
    if not w:
        return w
    return _apply_letter(recurse(n, w), i)


# ---------------------------------------------------------------------------
# Fermion recursion
# ---------------------------------------------------------------------------


def _fermion_vec(n: int, v: StateVector) -> StateVector:
    if not v:
        return v
    if n == 1:
        return _apply_letter(_apply_letter_adj(v, 2), 1)
    return _zeta_branch(_fermion_vec, n - 1, v, 1) - _zeta_branch(_fermion_vec, n - 1, v, 2)


def _fermion_adj_vec(n: int, v: StateVector) -> StateVector:
    if not v:
        return v
    if n == 1:
        return _apply_letter(_apply_letter_adj(v, 1), 2)
    return _zeta_branch(_fermion_adj_vec, n - 1, v, 1) - _zeta_branch(
        _fermion_adj_vec, n - 1, v, 2
    )


def _cluster_vec(n: int, v: StateVector) -> StateVector:
    if not v:
        return v
    if n == 1:
        out = StateVector.zero(v.rep)
        for j, w in s_star_support(v).items():
            if j >= 2:
                out = out.combine(sqrt_int(j - 1), _iso_up(w, j))
        return out
    return eval_series_Y(eval_rho(Cluster(n - 1), v))


def _cluster_adj_vec(n: int, v: StateVector) -> StateVector:
    # F_n* = rho(F_{n-1}*) Y* for n >= 2; F_1 is self-adjoint.
    if not v:
        return v
    if n == 1:
        return _cluster_vec(1, v)
    return eval_rho(adjoint(Cluster(n - 1)), eval_series_Y_adj(v))


# ---------------------------------------------------------------------------
# Definitional fermion products, used by the relation suites as the second
# route of the two-path checks.
# ---------------------------------------------------------------------------


def range_proj_definition(n: int) -> OperatorExpr:
    """W_n as written in fermions: a_{n+1} a_{n+1}* a_n* a_n ... a_1* a_1."""
    _require_index(n, 0, "W")
    factors: list[OperatorExpr] = [Fermion(n + 1), Adj(Fermion(n + 1))]
    for j in range(n, 0, -1):
        factors.extend((Adj(Fermion(j)), Fermion(j)))
    return prod(*factors)


def partial_shift_definition(n: int) -> OperatorExpr:
    """X_n as written in fermions: a_1* a_1 ... a_{n-1}* a_{n-1} a_n* a_{n+1}."""
    _require_index(n, 1, "X")
    factors: list[OperatorExpr] = []
    for j in range(1, n):
        factors.extend((Adj(Fermion(j)), Fermion(j)))
    factors.extend((Adj(Fermion(n)), Fermion(n + 1)))
    return prod(*factors)


# ---------------------------------------------------------------------------
# Evaluation dispatch
# ---------------------------------------------------------------------------


def _apply_adj(e: Adj, v: StateVector) -> StateVector:
    inner = e.arg
    if isinstance(inner, Gen):
        return _apply_letter_adj(v, inner.letter)
    if isinstance(inner, Iso):
        return _iso_down(v, inner.n)
    if isinstance(inner, Fermion):
        return _fermion_adj_vec(inner.n, v)
    if isinstance(inner, Psi):
        return _fermion_adj_vec(psi_fermion_index(inner.numer), v)
    if isinstance(inner, Boson):
        if inner.n == 1:
            return eval_series_b1_adj(v)
        return eval_rho(Adj(Boson(inner.n - 1)), v)
    if isinstance(inner, PartialShift):
        return apply(adjoint(partial_shift_definition(inner.n)), v)
    if isinstance(inner, ShiftSeries):
        return eval_series_Y_adj(v)
    if isinstance(inner, Cluster):
        return _cluster_adj_vec(inner.n, v)
    # Unnormalized star over a compound node: normalize once and retry.
    return apply(adjoint(inner), v)


def apply(e: OperatorExpr, v: StateVector) -> StateVector:
    """Evaluate an operator expression on a vector, exactly."""
    if not v:
        return v
    if isinstance(e, Gen):
        return _apply_letter(v, e.letter)
    if isinstance(e, Adj):
        return _apply_adj(e, v)
    if isinstance(e, Prod):
        for f in reversed(e.factors):
            v = apply(f, v)
            if not v:
                return v
        return v
    if isinstance(e, LinComb):
        out = StateVector.zero(v.rep)
        for c, x in e.parts:
            out = out.combine(c, apply(x, v))
        return out
    if isinstance(e, Ident):
        return v
    if isinstance(e, Iso):
        return _iso_up(v, e.n)
    if isinstance(e, Fermion):
        return _fermion_vec(e.n, v)
    if isinstance(e, Psi):
        return _fermion_vec(psi_fermion_index(e.numer), v)
    if isinstance(e, Boson):
        if e.n == 1:
            return eval_series_b1(v)
        return eval_rho(Boson(e.n - 1), v)
    if isinstance(e, RangeProj):
        return eval_series_W(e.n, v)
    if isinstance(e, PartialShift):
        return apply(partial_shift_definition(e.n), v)
    if isinstance(e, ShiftSeries):
        return eval_series_Y(v)
    if isinstance(e, Cluster):
        return _cluster_vec(e.n, v)
    if isinstance(e, Rho):
        return eval_rho(e.arg, v)
    if isinstance(e, Zeta):
        return eval_zeta(e.arg, v)
    raise TypeError(f"not an operator expression: {e!r}")
