"""Gotzmann verdicts and thresholds for principal Borel-stable ideals.

A monomial u is Gotzmann exactly when the gap form mg(u) coincides with the
cogap form mc(u): maxgen of what the Borel closure misses above u against the
cost of climbing that many steps from u.  is_gotzmann tests this without any
enumeration; is_gotzmann_oracle re-derives both sides from explicit sets.

The threshold tau of an x_n-free monomial u0 is the least t making u0 * x_n^t
Gotzmann.  It satisfies

    tau = f(t) - h(t) - k(t) + t        for every t >= tau one ambient down,

where f(t) is the x_n-degree of mg(u0 * x_n^t), z(t) is the first-hit state
of find_z, h(t) its x_n cost and k(t) its x_n degree.  tau() evaluates the
right-hand side at t* = tau(u0, n-1), recursing down to the two-variable
base where every monomial is Gotzmann.  For a general u = u0 * x_n^t the
threshold drops by the shift: max(tau(u0) - t, 0).

tau_oracle scans t upward with the witness test; tau_formula holds the known
closed laws for small ambients; conjecture_scan probes how tau(x_2^d) grows
with the ambient, in exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from .combinatorics import (
    DEFAULT_CAP,
    CapExceeded,
    MonomialSet,
    binom,
    borel_enumerate,
    lexsegment,
    lex_rank,
)
from .maxgen import maxgen_of_set, mg_closed, target_decompose
from .monomial import Monomial, deg, deg_in, truncate, variable_power
from .paths import DEFAULT_MAX_JUMPS, TraceFn, advance, find_z


@dataclass(frozen=True)
class GotzmannWitness:
    """Both sides of the gap/cogap comparison for one monomial."""

    u: Monomial
    mg: Monomial
    u_tilde: Optional[Monomial]
    mc: Optional[Monomial]
    gap_count: int
    is_gotzmann: bool
    note: Optional[str] = None


@dataclass(frozen=True)
class ThresholdReport:
    """One level of the threshold recursion.

    u0 is the x_n-free core of the query; t_star, f, h and k are evaluated at
    t* = tau(u0, n-1); delta = f - h and tau = delta - k + t_star.  When the
    query carried an x_n power t, the tau field is lowered to
    max(core threshold - t, 0) while the other fields keep describing the
    core.  sub_report is the level below, None at n = 2.
    """

    u0: Monomial
    n: int
    t_star: int
    f_at_tstar: int
    h_at_tstar: int
    k_at_tstar: int
    delta: int
    tau: int
    sub_report: Optional["ThresholdReport"]


def is_gotzmann(
    u: Monomial,
    max_jumps: int = DEFAULT_MAX_JUMPS,
    trace: TraceFn | None = None,
) -> GotzmannWitness:
    """Witness test without enumeration: walk deg(mg(u)) steps and compare costs."""
    mg = mg_closed(u)
    g = deg(mg)
    if g > lex_rank(u) - 1:
        # cannot happen when mg is sound (the closure always reaches x_1^d);
        # reported instead of walking out of the slice
        return GotzmannWitness(
            u=u, mg=mg, u_tilde=None, mc=None, gap_count=g, is_gotzmann=False,
            note="gap count exceeds the predecessors above u",
        )
    st = advance(u, g, max_jumps=max_jumps, trace=trace)
    return GotzmannWitness(
        u=u, mg=mg, u_tilde=st.current, mc=st.cost, gap_count=g,
        is_gotzmann=(st.cost == mg),
    )


def is_gotzmann_oracle(u: Monomial, cap: int | None = DEFAULT_CAP) -> bool:
    """The same verdict from fully enumerated gap and cogap sets."""
    seg = lexsegment(u, cap)
    closure = {v.exps for v in borel_enumerate(u, cap)}
    gaps = tuple(z for z in seg.elements if z.exps not in closure)
    mg = maxgen_of_set(MonomialSet(u.n, gaps))
    g = len(gaps)
    cogaps = seg.elements[len(seg.elements) - g:] if g else ()
    mc = maxgen_of_set(MonomialSet(u.n, cogaps))
    return mg == mc


def _split_off_xn(u: Monomial) -> tuple[Monomial, int]:
    n = u.n
    core = Monomial(n, u.exps[: n - 1] + (0,))
    return core, u.exps[n - 1]


def tau(
    u: Monomial,
    n: int,
    max_jumps: int = DEFAULT_MAX_JUMPS,
    trace: TraceFn | None = None,
) -> ThresholdReport:
    """Least t such that u * x_n^t is Gotzmann, with the recursion tower.

    u must already live in ambient n (embed explicitly before calling).
    """
    if n < 2:
        raise ValueError("thresholds need an ambient of at least 2 variables")
    if u.n != n:
        raise ValueError(f"ambient mismatch: monomial lives in {u.n}, asked for {n}")
    core, t = _split_off_xn(u)
    rep = _tau_core(core, n, max_jumps, trace)
    if t:
        rep = replace(rep, tau=max(rep.tau - t, 0))
    return rep


def _tau_core(u0: Monomial, n: int, max_jumps: int, trace: TraceFn | None) -> ThresholdReport:
    # u0 is x_n-free in ambient n
    if n == 2:
        return ThresholdReport(
            u0=u0, n=2, t_star=0, f_at_tstar=0, h_at_tstar=0, k_at_tstar=0,
            delta=0, tau=0, sub_report=None,
        )
    u0_prev = truncate(u0, n - 1)
    sub = tau(u0_prev, n - 1, max_jumps=max_jumps, trace=trace)
    t_star = sub.tau
    f_star = target_decompose(u0_prev, n, t_star).xn_exp
    z, state = find_z(u0_prev, n, t_star, max_jumps=max_jumps, trace=trace)
    h_star = deg_in(state.cost, n)
    k_star = deg_in(z, n)
    delta = f_star - h_star
    value = delta - k_star + t_star
    if delta < 0 or value < 0:
        raise RuntimeError(
            f"threshold invariant violated at n={n}, u0={u0}: "
            f"f={f_star}, h={h_star}, k={k_star}, t*={t_star}"
        )
    return ThresholdReport(
        u0=u0, n=n, t_star=t_star, f_at_tstar=f_star, h_at_tstar=h_star,
        k_at_tstar=k_star, delta=delta, tau=value, sub_report=sub,
    )


def tau_oracle(u0: Monomial, n: int, scan_cap: int = 10_000) -> int:
    """Smallest t with u0 * x_n^t Gotzmann, by upward scan of witness tests."""
    if u0.n != n:
        raise ValueError(f"ambient mismatch: monomial lives in {u0.n}, asked for {n}")
    if n >= 1 and u0.exps[n - 1] != 0:
        raise ValueError(f"u0 = {u0} must be free of x{n}")
    for t in range(scan_cap + 1):
        shifted = Monomial(n, u0.exps[: n - 1] + (t,))
        if is_gotzmann(shifted).is_gotzmann:
            return t
    raise CapExceeded(f"no threshold found for {u0} up to t = {scan_cap}")


def _tau3(b: int, a: int = 0) -> int:
    # threshold of x1^a * x2^b in three variables; a plays no role
    if b < 0 or a < 0:
        raise ValueError("exponents must be nonnegative")
    return binom(b, 2)


def _tau4(b: int, c: int) -> int:
    # threshold of x2^b * x3^c in four variables
    if b < 0 or c < 0:
        raise ValueError("exponents must be nonnegative")
    third = (b + 4) * binom(b, 2)
    assert third % 3 == 0
    return binom(binom(b, 2), 2) + third // 3 + (b + 1) * binom(c + 1, 2) + binom(c + 1, 3) - c


def _tau5_x2(d: int) -> int:
    # threshold of x2^d in five variables
    if d < 0:
        raise ValueError("exponent must be nonnegative")
    cb = binom(d, 2)
    return (
        binom(binom(cb, 2) + binom(d + 1, 3) + cb, 2)
        - binom(cb, 3)
        + binom(d + 3, 4)
        - d
    )


_FORMULAS = {"tau3": _tau3, "tau4": _tau4, "tau5_x2": _tau5_x2}


def tau_formula(name: str, **params: int) -> int:
    """Closed laws: tau3(b[, a]), tau4(b, c), tau5_x2(d)."""
    if name not in _FORMULAS:
        raise ValueError(f"unknown formula {name!r}; have {sorted(_FORMULAS)}")
    return _FORMULAS[name](**params)


@dataclass(frozen=True)
class ScanRow:
    d: int
    tau_n: int
    tau_prev: int
    ratio: Optional[Fraction]
    report: ThresholdReport


@dataclass(frozen=True)
class ConjectureScan:
    """Exact data for the growth of tau(x_2^d) with the ambient.

    ratio compares tau at level n against C(tau at level n-1, 2); the
    conjectured degree of d -> tau is 2^(n-2).  The interpolation runs through
    every computed point; its degree can only certify the conjecture once the
    point count exceeds the conjectured degree by two, otherwise degree_match
    stays None.
    """

    n: int
    rows: tuple[ScanRow, ...]
    conjectured_degree: int
    interp_coeffs: Optional[tuple[Fraction, ...]]
    degree_match: Optional[bool]


def interpolate_points(points: list[tuple[int, int]]) -> tuple[Fraction, ...]:
    """Exact polynomial through the given points, as monomial coefficients.

    Newton divided differences, expanded; returned low degree first with
    trailing zeros trimmed.
    """
    if not points:
        raise ValueError("need at least one point")
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation points must have distinct abscissae")
    diffs = [Fraction(y) for _, y in points]
    newton = [diffs[0]]
    for level in range(1, len(points)):
        diffs = [
            (diffs[i + 1] - diffs[i]) / (xs[i + level] - xs[i])
            for i in range(len(diffs) - 1)
        ]
        newton.append(diffs[0])
    poly = [Fraction(0)]
    basis = [Fraction(1)]
    for c, x0 in zip(newton, xs):
        while len(poly) < len(basis):
            poly.append(Fraction(0))
        for i in range(len(basis)):
            poly[i] += c * basis[i]
        # basis *= (x - x0)
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            nxt[i] -= b * x0
            nxt[i + 1] += b
        basis = nxt
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def conjecture_scan(
    n: int,
    d_values,
    max_jumps: int = DEFAULT_MAX_JUMPS,
) -> ConjectureScan:
    """tau(x_2^d) for each d, with exact growth ratios against the level below."""
    if n < 3:
        raise ValueError("the scan needs an ambient of at least 3 variables")
    rows = []
    for d in d_values:
        if d < 0:
            raise ValueError("exponents must be nonnegative")
        rep = tau(variable_power(2, d, n), n, max_jumps=max_jumps)
        denom = binom(rep.t_star, 2)
        ratio = Fraction(rep.tau, denom) if denom else None
        rows.append(ScanRow(d=d, tau_n=rep.tau, tau_prev=rep.t_star, ratio=ratio, report=rep))
    conj_deg = 2 ** (n - 2)
    coeffs = None
    match = None
    if len(rows) >= 2:
        coeffs = interpolate_points([(r.d, r.tau_n) for r in rows])
        if len(rows) >= conj_deg + 2:
            match = (len(coeffs) - 1 == conj_deg)
    return ConjectureScan(
        n=n, rows=tuple(rows), conjectured_degree=conj_deg,
        interp_coeffs=coeffs, degree_match=match,
    )


def report_to_dict(rep: ThresholdReport) -> dict:
    """JSON-ready form of a report tower; big integers become decimal strings."""
    return {
        "u0": str(rep.u0),
        "n": rep.n,
        "t_star": str(rep.t_star),
        "f": str(rep.f_at_tstar),
        "h": str(rep.h_at_tstar),
        "k": str(rep.k_at_tstar),
        "delta": str(rep.delta),
        "tau": str(rep.tau),
        "sub_report": report_to_dict(rep.sub_report) if rep.sub_report else None,
    }


def witness_to_dict(w: GotzmannWitness) -> dict:
    out = {
        "u": str(w.u),
        "mg": str(w.mg),
        "u_tilde": str(w.u_tilde) if w.u_tilde is not None else None,
        "mc": str(w.mc) if w.mc is not None else None,
        "gap_count": str(w.gap_count),
        "is_gotzmann": w.is_gotzmann,
    }
    if w.note:
        out["note"] = w.note
    return out
