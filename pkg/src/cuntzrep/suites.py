"""Verification suites: each runs a family of exact operator identities over
every basis label up to a depth and reports failures with full witnesses.

All comparisons are exact scalar equality.  A suite never raises on a failed
identity; it records the input vector and both sides so the case can be
replayed through the CLI `apply` command.  Two suites run on fixed
representations by construction: the all-ones cycle (Fock behavior) and the
alternating two-cycle (wedge behavior).  The wedge suite records measured
scalars instead of asserting a disputed value; its pass condition is internal
consistency of the commutation relations only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .basis import BasisLabel, RepSpec, enumerate_basis, label_sort_key
from .operators import (
    OperatorExpr,
    adj,
    apply,
    boson,
    cluster,
    eval_series_b1_raw,
    fermion,
    gen,
    ident,
    iso,
    lincomb,
    partial_shift,
    prod,
    psi,
    range_proj,
    range_proj_definition,
    rho,
    s_star_support,
    shift_series,
)
from .parsing import serialize_vector
from .polynorm import poly_normal_form, render_monomials
from .scalars import ONE, RadicalScalar, sqrt_int
from .states import StateVector

__all__ = [
    "CheckReport",
    "SUITE_NAMES",
    "DEFAULT_N_MAX",
    "DEFAULT_M_MAX",
    "DEFAULT_DEPTH",
    "verify_identity",
    "check_cuntz",
    "check_car",
    "check_ccr",
    "check_wfamily",
    "check_shift_relations",
    "check_embedding_and_rho",
    "check_main_theorem",
    "check_f_closed_forms",
    "check_fock_suite",
    "check_wedge_suite",
    "check_all",
    "run_suite",
]

DEFAULT_N_MAX = 4
DEFAULT_M_MAX = 4
DEFAULT_DEPTH = 5

SUITE_NAMES = (
    "cuntz",
    "car",
    "ccr",
    "wfamily",
    "lemma23",
    "rho",
    "main",
    "closedforms",
    "fock",
    "wedge",
)


@dataclass
class CheckReport:
    """Outcome of one suite run, JSON-serializable and deterministic."""

    suite: str
    rep: str
    params: dict[str, int]
    cases: int = 0
    failures: list[dict[str, str]] = field(default_factory=list)
    measured: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict[str, object]:
        return {
            "suite": self.suite,
            "rep": self.rep,
            "params": dict(self.params),
            "cases": self.cases,
            "passed": self.passed,
            "failures": list(self.failures),
            "measured": dict(self.measured),
        }


class _Runner:
    def __init__(self, suite: str, rep: RepSpec, n_max: int, m_max: int, depth: int) -> None:
        self.rep = rep
        self.report = CheckReport(
            suite=suite,
            rep=str(rep),
            params={"n_max": n_max, "m_max": m_max, "depth": depth},
        )

    def check(self, identity: str, v: StateVector, left: StateVector, right: StateVector) -> None:
        self.report.cases += 1
        if left != right:
            self.report.failures.append(
                {
                    "identity": identity,
                    "input": serialize_vector(v),
                    "left": serialize_vector(left),
                    "right": serialize_vector(right),
                }
            )

    def check_text(self, identity: str, source: str, left: str, right: str) -> None:
        self.report.cases += 1
        if left != right:
            self.report.failures.append(
                {"identity": identity, "input": source, "left": left, "right": right}
            )


def _pair_sum(x: OperatorExpr, y: OperatorExpr) -> OperatorExpr:
    return lincomb((ONE, x), (ONE, y))


def _samples(rep: RepSpec, depth: int) -> list[StateVector]:
    """Every basis label up to depth, plus one fixed mixed superposition."""
    vecs = [StateVector.basis(rep, lab) for lab in enumerate_basis(rep, depth)]
    coeffs = [ONE, sqrt_int(2), RadicalScalar.from_rational(Fraction(-1, 2)), sqrt_int(3)]
    mixed = StateVector.zero(rep)
    for c, b in zip(coeffs, vecs):
        mixed = mixed.combine(c, b)
    if mixed:
        vecs.append(mixed)
    return vecs


def _max_support(v: StateVector) -> int:
    supp = s_star_support(v)
    return max(supp) if supp else 0


def _apply_chain(v: StateVector, *exprs: OperatorExpr) -> StateVector:
    # rightmost expression acts first, matching operator composition
    for e in reversed(exprs):
        v = apply(e, v)
        if not v:
            return v
    return v


def verify_identity(
    rep: RepSpec,
    name: str,
    left: OperatorExpr,
    right: OperatorExpr,
    depth: int = DEFAULT_DEPTH,
) -> CheckReport:
    """Compare two operator expressions on every sample vector."""
    r = _Runner("identity", rep, 0, 0, depth)
    for v in _samples(rep, depth):
        r.check(name, v, apply(left, v), apply(right, v))
    return r.report


# ---------------------------------------------------------------------------
# Generator relations
# ---------------------------------------------------------------------------


def check_cuntz(
    rep: RepSpec,
    n_max: int = DEFAULT_N_MAX,
    m_max: int = DEFAULT_M_MAX,
    depth: int = DEFAULT_DEPTH,
) -> CheckReport:
    r = _Runner("cuntz", rep, n_max, m_max, depth)
    basis_vecs = [StateVector.basis(rep, lab) for lab in enumerate_basis(rep, depth)]
    for v in _samples(rep, depth):
        for i in (1, 2):
            for j in (1, 2):
                got = _apply_chain(v, adj(gen(i)), gen(j))
                want = v if i == j else StateVector.zero(rep)
                r.check(f"t{i}* t{j} = {'I' if i == j else '0'}", v, got, want)
        total = apply(gen(1), apply(adj(gen(1)), v)) + apply(gen(2), apply(adj(gen(2)), v))
        r.check("t1 t1* + t2 t2* = I", v, total, v)
    for v in basis_vecs:
        hits = sum(1 for i in (1, 2) if apply(adj(gen(i)), v))
        r.check_text(
            "exactly one generator range contains each basis vector",
            serialize_vector(v),
            str(hits),
            "1",
        )
    return r.report


# ---------------------------------------------------------------------------
# Anticommutation
# ---------------------------------------------------------------------------


def check_car(
    rep: RepSpec,
    n_max: int = DEFAULT_N_MAX,
    m_max: int = DEFAULT_M_MAX,
    depth: int = DEFAULT_DEPTH,
) -> CheckReport:
    r = _Runner("car", rep, n_max, m_max, depth)
    samples = _samples(rep, depth)
    for n in range(1, n_max + 1):
        for m in range(1, m_max + 1):
            an, am = fermion(n), fermion(m)
            for v in samples:
                mixed = _apply_chain(v, an, adj(am)) + _apply_chain(v, adj(am), an)
                want = v if n == m else StateVector.zero(rep)
                r.check(
                    f"a({n})a({m})* + a({m})*a({n}) = {'I' if n == m else '0'}",
                    v,
                    mixed,
                    want,
                )
                plain = _apply_chain(v, an, am) + _apply_chain(v, am, an)
                r.check(f"a({n})a({m}) + a({m})a({n}) = 0", v, plain, StateVector.zero(rep))
                starred = _apply_chain(v, adj(an), adj(am)) + _apply_chain(v, adj(am), adj(an))
                r.check(
                    f"a({n})*a({m})* + a({m})*a({n})* = 0", v, starred, StateVector.zero(rep)
                )
    # representation-free restatement through the normal form
    cap = min(4, n_max, m_max)
    for n in range(1, cap + 1):
        for m in range(1, cap + 1):
            an, am = fermion(n), fermion(m)
            nf = poly_normal_form(
                _pair_sum(prod(an, adj(am)), prod(adj(am), an))
            )
            if n == m:
                want = poly_normal_form(ident(), depth=nf.depth)
                r.check_text(
                    f"poly: a({n})a({m})* + a({m})*a({n}) = I",
                    "(algebra level)",
                    render_monomials(nf.terms),
                    render_monomials(want.terms),
                )
            else:
                r.check_text(
                    f"poly: a({n})a({m})* + a({m})*a({n}) = 0",
                    "(algebra level)",
                    render_monomials(nf.terms),
                    render_monomials(()),
                )
            nf2 = poly_normal_form(_pair_sum(prod(an, am), prod(am, an)))
            r.check_text(
                f"poly: a({n})a({m}) + a({m})a({n}) = 0",
                "(algebra level)",
                render_monomials(nf2.terms),
                render_monomials(()),
            )
    return r.report


# ---------------------------------------------------------------------------
# Commutation
# ---------------------------------------------------------------------------


def _raw_boson(n: int, v: StateVector) -> StateVector:
    """Boson action built only from the literal word series and the
    recursion sum, bypassing the engine's evaluator shortcuts."""
    if n == 1:
        return eval_series_b1_raw(v)
    out = StateVector.zero(v.rep)
    for m, w in sorted(s_star_support(v).items()):
        out = out + apply(iso(m), _raw_boson(n - 1, w))
    return out


def check_ccr(
    rep: RepSpec,
    n_max: int = DEFAULT_N_MAX,
    m_max: int = DEFAULT_M_MAX,
    depth: int = DEFAULT_DEPTH,
) -> CheckReport:
    r = _Runner("ccr", rep, n_max, m_max, depth)
    samples = _samples(rep, depth)
    for v in samples:
        r.check(
            "b(1) evaluator = literal word series",
            v,
            apply(boson(1), v),
            eval_series_b1_raw(v),
        )
        for n in range(2, n_max + 1):
            r.check(
                f"b({n}) evaluator = recursion over literal series",
                v,
                apply(boson(n), v),
                _raw_boson(n, v),
            )
    for n in range(1, n_max + 1):
        for m in range(1, m_max + 1):
            bn, bm = boson(n), boson(m)
            for v in samples:
                comm = _apply_chain(v, bn, adj(bm)) - _apply_chain(v, adj(bm), bn)
                want = v if n == m else StateVector.zero(rep)
                r.check(
                    f"b({n})b({m})* - b({m})*b({n}) = {'I' if n == m else '0'}",
                    v,
                    comm,
                    want,
                )
                plain = _apply_chain(v, bn, bm) - _apply_chain(v, bm, bn)
                r.check(f"b({n})b({m}) - b({m})b({n}) = 0", v, plain, StateVector.zero(rep))
                starred = _apply_chain(v, adj(bn), adj(bm)) - _apply_chain(v, adj(bm), adj(bn))
                r.check(
                    f"b({n})*b({m})* - b({m})*b({n})* = 0", v, starred, StateVector.zero(rep)
                )
    return r.report


# ---------------------------------------------------------------------------
# Projection family
# ---------------------------------------------------------------------------


def check_wfamily(
    rep: RepSpec,
    n_max: int = DEFAULT_N_MAX,
    m_max: int = DEFAULT_M_MAX,
    depth: int = DEFAULT_DEPTH,
) -> CheckReport:
    r = _Runner("wfamily", rep, n_max, m_max, depth)
    samples = _samples(rep, depth)
    basis_vecs = [StateVector.basis(rep, lab) for lab in enumerate_basis(rep, depth)]
    for v in samples:
        bound = _max_support(v)
        total = StateVector.zero(rep)
        for m in range(0, bound + 1):
            total = total + apply(range_proj(m), v)
        r.check("sum of W(m) = I", v, total, v)
        for n in range(0, n_max + 1):
            wn = apply(range_proj(n), v)
            r.check(f"W({n})W({n}) = W({n})", v, apply(range_proj(n), wn), wn)
            r.check(
                f"W({n}) = fermion product form",
                v,
                wn,
                apply(range_proj_definition(n), v),
            )
            for m in range(0, m_max + 1):
                if m == n:
                    continue
                r.check(
                    f"W({n})W({m}) = 0",
                    v,
                    apply(range_proj(n), apply(range_proj(m), v)),
                    StateVector.zero(rep),
                )
    pairs = list(zip(basis_vecs, basis_vecs[1:]))
    if len(basis_vecs) > 2:
        pairs.append((basis_vecs[0], basis_vecs[-1]))
    for x, y in pairs:
        for n in range(0, n_max + 1):
            lhs = apply(range_proj(n), x).inner(y)
            rhs = x.inner(apply(range_proj(n), y))
            r.check_text(
                f"W({n}) symmetric in the basis pairing",
                f"{serialize_vector(x)} , {serialize_vector(y)}",
                str(lhs),
                str(rhs),
            )
    return r.report


# ---------------------------------------------------------------------------
# Shift relations between isometries and fermions
# ---------------------------------------------------------------------------


def check_shift_relations(
    rep: RepSpec,
    n_max: int = DEFAULT_N_MAX,
    m_max: int = DEFAULT_M_MAX,
    depth: int = DEFAULT_DEPTH,
) -> CheckReport:
    r = _Runner("lemma23", rep, n_max, m_max, depth)
    samples = _samples(rep, depth)
    for v in samples:
        for n in range(1, n_max + 1):
            r.check(
                f"t2 s({n}) = s({n + 1})",
                v,
                apply(gen(2), apply(iso(n), v)),
                apply(iso(n + 1), v),
            )
        for n in range(0, n_max + 1):
            r.check(
                f"W({n}) = s({n + 1})s({n + 1})*",
                v,
                apply(range_proj_definition(n), v),
                _apply_chain(v, iso(n + 1), adj(iso(n + 1))),
            )
        for n in range(1, n_max + 1):
            r.check(
                f"s({n})t2*s({n})* = t2* X({n})",
                v,
                _apply_chain(v, iso(n), adj(gen(2)), adj(iso(n))),
                apply(adj(gen(2)), apply(partial_shift(n), v)),
            )
        for n in range(1, n_max + 1):
            for m in range(1, m_max + 1):
                sign = ONE if m % 2 == 1 else -ONE
                left = apply(iso(m), apply(fermion(n), v))
                right = apply(fermion(n + m), apply(iso(m), v)).scale(sign)
                r.check(f"s({m})a({n}) = (-1)^({m}-1) a({n + m})s({m})", v, left, right)
                left = apply(iso(m), apply(adj(fermion(n)), v))
                right = apply(adj(fermion(n + m)), apply(iso(m), v)).scale(sign)
                r.check(f"s({m})a({n})* = (-1)^({m}-1) a({n + m})*s({m})", v, left, right)
    return r.report


# ---------------------------------------------------------------------------
# Isometry family and the recursion endomorphism
# ---------------------------------------------------------------------------

_RHO_PAIRS: tuple[tuple[str, OperatorExpr, OperatorExpr], ...] = (
    ("rho(t1 t2*) = rho(t1)rho(t2*)", gen(1), adj(gen(2))),
    ("rho(a(1) a(2)) = rho(a(1))rho(a(2))", fermion(1), fermion(2)),
    ("rho(t2 t1* t1) = rho(t2 t1*)rho(t1)", prod(gen(2), adj(gen(1))), gen(1)),
    (
        "rho(a(2)* a(1)a(1)*) = rho(a(2)*)rho(a(1)a(1)*)",
        adj(fermion(2)),
        prod(fermion(1), adj(fermion(1))),
    ),
)


def check_embedding_and_rho(
    rep: RepSpec,
    n_max: int = DEFAULT_N_MAX,
    m_max: int = DEFAULT_M_MAX,
    depth: int = DEFAULT_DEPTH,
) -> CheckReport:
    r = _Runner("rho", rep, n_max, m_max, depth)
    samples = _samples(rep, depth)
    for v in samples:
        for n in range(1, n_max + 1):
            for m in range(1, m_max + 1):
                got = apply(adj(iso(n)), apply(iso(m), v))
                want = v if n == m else StateVector.zero(rep)
                r.check(f"s({n})*s({m}) = {'I' if n == m else '0'}", v, got, want)
        supp = s_star_support(v)
        total = StateVector.zero(rep)
        for m, w in sorted(supp.items()):
            total = total + apply(iso(m), w)
        r.check("sum of s(n)s(n)* = I", v, total, v)
        r.check(
            "rho(t2*) = t2* Y",
            v,
            apply(rho(adj(gen(2))), v),
            apply(adj(gen(2)), apply(shift_series(), v)),
        )
        bound = _max_support(v)
        ysum = StateVector.zero(rep)
        for n in range(1, bound + 2):
            ysum = ysum + apply(partial_shift(n), v)
        r.check("Y = sum of X(n)", v, apply(shift_series(), v), ysum)
        for n in range(1, n_max + 1):
            r.check(
                f"rho(t2* F({n})) = rho(t2*) rho(F({n}))",
                v,
                apply(rho(prod(adj(gen(2)), cluster(n))), v),
                apply(rho(adj(gen(2))), apply(rho(cluster(n)), v)),
            )
            expansion = StateVector.zero(rep)
            for m in range(0, bound + 1):
                sign = ONE if m % 2 == 0 else -ONE
                expansion = expansion + apply(
                    fermion(n + m + 1), apply(range_proj(m), v)
                ).scale(sign)
            r.check(
                f"rho(a({n})) = alternating sum of a({n}+m+1)W(m)",
                v,
                apply(rho(fermion(n)), v),
                expansion,
            )
        for name, x, y in _RHO_PAIRS:
            r.check(
                name,
                v,
                apply(rho(prod(x, y)), v),
                apply(rho(x), apply(rho(y), v)),
            )
    return r.report


# ---------------------------------------------------------------------------
# The fermionization identity
# ---------------------------------------------------------------------------


def check_main_theorem(
    rep: RepSpec,
    n_max: int = DEFAULT_N_MAX,
    m_max: int = DEFAULT_M_MAX,
    depth: int = DEFAULT_DEPTH,
) -> CheckReport:
    r = _Runner("main", rep, n_max, m_max, depth)
    samples = _samples(rep, depth)
    for n in range(1, n_max + 1):
        for v in samples:
            r.check(
                f"b({n}) = t2* F({n})",
                v,
                apply(boson(n), v),
                apply(adj(gen(2)), apply(cluster(n), v)),
            )
            r.check(
                f"b({n})* = F({n})* t2",
                v,
                apply(adj(boson(n)), v),
                apply(adj(cluster(n)), apply(gen(2), v)),
            )
    return r.report


# ---------------------------------------------------------------------------
# Closed forms of the cluster series
# ---------------------------------------------------------------------------


def _occupation_factors(lo: int, hi: int) -> list[OperatorExpr]:
    """a(lo)*a(lo) ... a(hi)*a(hi); empty when hi < lo."""
    out: list[OperatorExpr] = []
    for j in range(lo, hi + 1):
        out.append(adj(fermion(j)))
        out.append(fermion(j))
    return out


def _word_bound(rep: RepSpec, v: StateVector) -> int:
    cyc = max(rep.cycle_len(c) for c in range(len(rep.components)))
    return v.depth() + 2 * cyc + 2


def check_f_closed_forms(
    rep: RepSpec,
    n_max: int = DEFAULT_N_MAX,
    m_max: int = DEFAULT_M_MAX,
    depth: int = DEFAULT_DEPTH,
) -> CheckReport:
    r = _Runner("closedforms", rep, n_max, m_max, depth)
    samples = _samples(rep, depth)
    for v in samples:
        bound = _word_bound(rep, v)
        first = StateVector.zero(rep)
        for n in range(1, bound + 1):
            factors = _occupation_factors(1, n) + [fermion(n + 1), adj(fermion(n + 1))]
            first = first + apply(prod(*factors), v).scale(sqrt_int(n))
        r.check("F(1) = weighted occupation series", v, apply(cluster(1), v), first)
        second = StateVector.zero(rep)
        for n in range(1, bound + 1):
            for m in range(1, bound + 1):
                factors = (
                    _occupation_factors(1, n - 1)
                    + [adj(fermion(n)), fermion(n + 1)]
                    + _occupation_factors(n + 2, n + m)
                    + [fermion(n + m + 1), adj(fermion(n + m + 1))]
                )
                second = second + apply(prod(*factors), v).scale(sqrt_int(m))
        r.check("F(2) = weighted double occupation series", v, apply(cluster(2), v), second)
        supp_bound = _max_support(v)
        for m in range(1, min(3, n_max) + 1):
            expansion = StateVector.zero(rep)
            for l in range(0, supp_bound + 1):
                factors = [
                    fermion(m + l + 2),
                    adj(fermion(m + l + 2)),
                ] + _occupation_factors(l + 2, l + 1 + m)
                expansion = expansion + apply(prod(*factors), apply(range_proj(l), v))
            r.check(
                f"rho(W({m})) = occupation expansion",
                v,
                apply(rho(range_proj(m)), v),
                expansion,
            )
    return r.report


# ---------------------------------------------------------------------------
# Fixed-representation suites
# ---------------------------------------------------------------------------


def _exact_rank(vectors: list[StateVector]) -> list[int]:
    """Running rank after each vector, by exact elimination."""
    pivots: list[tuple[BasisLabel, dict[BasisLabel, RadicalScalar]]] = []
    ranks: list[int] = []
    for vec in vectors:
        row = {lab: c for lab, c in vec.terms()}
        for lead, pivot in pivots:
            c = row.get(lead)
            if c is None or not c:
                continue
            for lab, pc in pivot.items():
                cur = row.get(lab)
                nxt = (cur if cur is not None else RadicalScalar({})) - c * pc
                if nxt:
                    row[lab] = nxt
                else:
                    row.pop(lab, None)
        row = {lab: c for lab, c in row.items() if c}
        if row:
            lead = min(row, key=label_sort_key)
            inv = row[lead].inverse()
            pivots.append((lead, {lab: c * inv for lab, c in row.items()}))
        ranks.append(len(pivots))
    return ranks


def _degree_partitions(total: int) -> list[tuple[int, ...]]:
    """Partitions of total into weakly decreasing positive parts."""
    if total == 0:
        return [()]
    out: list[tuple[int, ...]] = []

    def build(rest: int, cap: int, acc: tuple[int, ...]) -> None:
        if rest == 0:
            out.append(acc)
            return
        for part in range(min(rest, cap), 0, -1):
            build(rest - part, part, acc + (part,))

    build(total, total, ())
    return out


def check_fock_suite(
    rep: RepSpec | None = None,
    n_max: int = DEFAULT_N_MAX,
    m_max: int = DEFAULT_M_MAX,
    depth: int = DEFAULT_DEPTH,
) -> CheckReport:
    del rep  # fixed representation by construction
    fock = RepSpec.parse("1")
    r = _Runner("fock", fock, n_max, m_max, depth)
    vac = StateVector.basis(fock, BasisLabel(0, "", 0))
    r.check("t1 vac = vac", vac, apply(gen(1), vac), vac)
    zero = StateVector.zero(fock)
    for n in range(1, n_max + 1):
        r.check(f"a({n}) vac = 0", vac, apply(fermion(n), vac), zero)
        r.check(f"b({n}) vac = 0", vac, apply(boson(n), vac), zero)
    first = StateVector.basis(fock, BasisLabel(0, "2", 0))
    r.check("b(1)* vac = a(1)* vac", vac, apply(adj(boson(1)), vac), apply(adj(fermion(1)), vac))
    r.check("b(1)* vac = |2;0>", vac, apply(adj(boson(1)), vac), first)
    r.check("b(2)* vac = a(2)* vac", vac, apply(adj(boson(2)), vac), apply(adj(fermion(2)), vac))
    second = StateVector.basis(fock, BasisLabel(0, "12", 0))
    r.check("b(2)* vac = |12;0>", vac, apply(adj(boson(2)), vac), second)
    # span growth of boson monomials on the vacuum, recorded not asserted
    vectors: list[StateVector] = []
    counts: list[int] = []
    for total in range(0, depth + 1):
        for parts in _degree_partitions(total):
            w = vac
            for idx in reversed(parts):
                w = apply(adj(boson(idx)), w)
            vectors.append(w)
        counts.append(len(vectors))
    ranks = _exact_rank(vectors)
    r.report.cases += len(vectors)
    dims = {
        str(d): (ranks[counts[d] - 1] if counts[d] else 0) for d in range(0, depth + 1)
    }
    r.report.measured["span_dimension_by_total_degree"] = dims
    return r.report


def check_wedge_suite(
    rep: RepSpec | None = None,
    n_max: int = DEFAULT_N_MAX,
    m_max: int = DEFAULT_M_MAX,
    depth: int = DEFAULT_DEPTH,
) -> CheckReport:
    del rep  # fixed representation by construction
    wedge = RepSpec.parse("12")
    r = _Runner("wedge", wedge, n_max, m_max, depth)
    vac = StateVector.basis(wedge, BasisLabel(0, "", 0))
    dual = StateVector.basis(wedge, BasisLabel(0, "", 1))
    zero = StateVector.zero(wedge)
    r.check("t2 vac = vac(1)", vac, apply(gen(2), vac), dual)
    for n in range(1, n_max + 1):
        r.check(f"a({2 * n - 1}) vac = 0", vac, apply(fermion(2 * n - 1), vac), zero)
        r.check(f"a({2 * n})* vac = 0", vac, apply(adj(fermion(2 * n)), vac), zero)
        r.check(
            f"psi(-{2 * n - 1}/2) vac = 0", vac, apply(psi(-(2 * n - 1)), vac), zero
        )
        r.check(
            f"psi({2 * n - 1}/2)* vac = 0", vac, apply(adj(psi(2 * n - 1)), vac), zero
        )
    flags = {"even_plain": True, "odd_plain": True, "even_starred": True, "odd_starred": True}
    for n in range(1, n_max + 1):
        r.report.cases += 4
        if apply(fermion(2 * n), dual):
            flags["even_plain"] = False
        if apply(fermion(2 * n - 1), dual):
            flags["odd_plain"] = False
        if apply(adj(fermion(2 * n)), dual):
            flags["even_starred"] = False
        if apply(adj(fermion(2 * n - 1)), dual):
            flags["odd_starred"] = False
    r.report.measured["dual_vacuum_annihilation"] = flags
    lam: dict[str, object] = {}
    mu: dict[str, object] = {}
    lam_from_comm: dict[str, object] = {}
    for n in range(1, n_max + 1):
        raised = apply(boson(n), apply(adj(boson(n)), vac))
        cluster_path = apply(
            adj(gen(2)),
            apply(cluster(n), apply(adj(cluster(n)), apply(gen(2), vac))),
        )
        r.check(f"b({n})b({n})* vac agrees on both evaluation paths", vac, raised, cluster_path)
        lam_n = raised.coeff(BasisLabel(0, "", 0))
        r.check(f"b({n})b({n})* vac is a multiple of vac", vac, raised, vac.scale(lam_n))
        lowered = apply(adj(boson(n)), apply(boson(n), vac))
        mu_n = lowered.coeff(BasisLabel(0, "", 0))
        r.check(f"b({n})*b({n}) vac is a multiple of vac", vac, lowered, vac.scale(mu_n))
        r.check_text(
            f"commutation consistency: lambda({n}) = 1 + mu({n})",
            serialize_vector(vac),
            str(lam_n),
            str(ONE + mu_n),
        )
        lam[str(n)] = lam_n.to_json()
        mu[str(n)] = mu_n.to_json()
        lam_from_comm[str(n)] = (ONE + mu_n).to_json()
    r.report.measured["lambda"] = lam
    r.report.measured["mu"] = mu
    r.report.measured["lambda_from_commutation"] = lam_from_comm
    r.report.measured["reference_scalar"] = "2"
    return r.report


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------

_SUITES = {
    "cuntz": check_cuntz,
    "car": check_car,
    "ccr": check_ccr,
    "wfamily": check_wfamily,
    "lemma23": check_shift_relations,
    "rho": check_embedding_and_rho,
    "main": check_main_theorem,
    "closedforms": check_f_closed_forms,
    "fock": check_fock_suite,
    "wedge": check_wedge_suite,
}


def run_suite(
    name: str,
    rep: RepSpec,
    n_max: int = DEFAULT_N_MAX,
    m_max: int = DEFAULT_M_MAX,
    depth: int = DEFAULT_DEPTH,
) -> CheckReport:
    try:
        fn = _SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}, expected one of {', '.join(SUITE_NAMES)} or all") from None
    return fn(rep, n_max, m_max, depth)


def check_all(
    rep: RepSpec,
    n_max: int = DEFAULT_N_MAX,
    m_max: int = DEFAULT_M_MAX,
    depth: int = DEFAULT_DEPTH,
) -> list[CheckReport]:
    return [run_suite(name, rep, n_max, m_max, depth) for name in SUITE_NAMES]
