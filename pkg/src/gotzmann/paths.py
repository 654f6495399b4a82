"""Upward walks along a degree slice and their exact costs.

The elementary step from u to pred(u) costs the largest variable of u, and
costs multiply along a walk, so the cost of climbing from u to some v above
it is a monomial whose degree counts the steps.  Walking step by step is the
oracle; the block engine below jumps over whole runs in closed form and is
bit-identical to the stepper.

A block converts part of the top run: from v * x_m^k to v * x_{m-1}^l * x_m^{k-l}
at a cost of

    x_m^l * prod_{s=1}^{n-m} x_{m+s}^{C(k+s-1, s+1) - C(k-l+s-1, s+1)},

which for m = n degenerates to x_n^l (one cheap step per unit).  Every state
inside a block lies on the elementary chain, so jumping is exact, and the
cost exponents are monotone in l, which lets advance pick the largest block
fitting a step budget (doubling then bisection) and lets find_z pick the
largest block whose visible part stays under a componentwise deficit.

find_z hunts for the first state whose cost, truncated below x_n, equals a
target w.  Blocks whose visible cost would exactly consume the deficit are
shrunk by one: costs only grow along the chain, so a block strictly under
the deficit can hide no interior hit, while an exact-hit block might (the
first hit can sit mid-run, right after an elementary step).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .combinatorics import CapExceeded, binom, borel_size, lex_rank
from .maxgen import target_decompose
from .monomial import Monomial, deg, lex_cmp, max_index, one, pred, variable

DEFAULT_MAX_JUMPS = 1_000_000
DEFAULT_MAX_ELEMENTARY = 10_000_000

TraceFn = Callable[[dict], None]


class TargetOvershoot(RuntimeError):
    """The walk can no longer reach its cost target exactly."""


@dataclass(frozen=True)
class WalkState:
    """Position, accumulated cost and step count of a walk.

    deg(cost) == steps, and the cost never contains x_1: no elementary step
    is ever paid in the first variable.
    """

    current: Monomial
    cost: Monomial
    steps: int


def partial_conversion_cost(v: Monomial, m: int, k: int, l: int, n: int) -> Monomial:
    """Cost of the walk from v * x_m^k up to v * x_{m-1}^l * x_m^{k-l}.

    v must live below x_m (any monomial with max_index(v) < m, the unit
    included); the cost itself does not depend on v.
    """
    if not 2 <= m <= n:
        raise ValueError(f"conversion index m={m} out of range for n={n}")
    if not 1 <= l <= k:
        raise ValueError(f"conversion amount l={l} out of range for run length {k}")
    if v.n != n:
        raise ValueError(f"v must live in ambient {n}, got {v.n}")
    if deg(v) > 0 and max_index(v) >= m:
        raise ValueError(f"v = {v} must involve only variables below x{m}")
    return _block_cost(m, k, l, n)


def _block_cost(m: int, k: int, l: int, n: int) -> Monomial:
    e = [0] * n
    e[m - 1] = l
    for s in range(1, n - m + 1):
        e[m + s - 1] = binom(k + s - 1, s + 1) - binom(k - l + s - 1, s + 1)
    return Monomial(n, tuple(e))


def _block_steps(m: int, k: int, l: int, n: int) -> int:
    total = l
    for s in range(1, n - m + 1):
        total += binom(k + s - 1, s + 1) - binom(k - l + s - 1, s + 1)
    return total


def _largest_l(a: int, fits: Callable[[int], bool]) -> int:
    """Largest l in [0, a] passing a monotone predicate (doubling, then bisection)."""
    if a == 0 or not fits(1):
        return 0
    if fits(a):
        return a
    lo = 1
    hi = 2
    while hi < a and fits(hi):
        lo = hi
        hi = min(hi * 2, a)
    # fits(lo) holds, fits(hi) fails
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if fits(mid):
            lo = mid
        else:
            hi = mid
    return lo


def _emit(trace: TraceFn | None, frm: Monomial, to: Monomial, cost: Monomial, done: int) -> None:
    if trace is not None:
        trace(
            {
                "from": str(frm),
                "to": str(to),
                "block_cost": str(cost),
                "steps_so_far": str(done),
            }
        )


def advance(
    origin: Monomial,
    budget: int,
    engine: str = "block",
    max_jumps: int = DEFAULT_MAX_JUMPS,
    max_elementary: int = DEFAULT_MAX_ELEMENTARY,
    trace: TraceFn | None = None,
) -> WalkState:
    """Walk exactly `budget` elementary steps upward from origin.

    engine="elementary" steps one predecessor at a time; engine="block" takes
    the largest run conversion fitting the remaining budget and falls back to
    a single step when even one unit is too expensive.  Both return identical
    states.  The budget must not exceed the predecessors available above the
    origin.
    """
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    avail = lex_rank(origin) - 1
    if budget > avail:
        raise ValueError(
            f"budget {budget} exceeds the {avail} predecessors above {origin}"
        )
    n = origin.n
    if engine == "elementary":
        if budget > max_elementary:
            raise CapExceeded(
                f"elementary walk of {budget} steps exceeds the cap of {max_elementary}"
            )
        cur = origin
        cost = [0] * n
        for done in range(1, budget + 1):
            m = max_index(cur)
            cost[m - 1] += 1
            nxt = pred(cur)
            if trace is not None:
                _emit(trace, cur, nxt, variable(m, n), done)
            cur = nxt
        return WalkState(cur, Monomial(n, tuple(cost)), budget)
    if engine != "block":
        raise ValueError(f"unknown walk engine {engine!r}")

    cur = origin
    cost = [0] * n
    left = budget
    jumps = 0
    while left > 0:
        jumps += 1
        if jumps > max_jumps:
            raise CapExceeded(f"walk exceeded the jump cap of {max_jumps}")
        m = max_index(cur)
        a = cur.exps[m - 1]
        if m == n:
            l = min(a, left)
        else:
            l = _largest_l(a, lambda l: _block_steps(m, a, l, n) <= left)
        if l == 0:
            # even a one-unit conversion is too long; one elementary step
            cost[m - 1] += 1
            nxt = pred(cur)
            left -= 1
            if trace is not None:
                _emit(trace, cur, nxt, variable(m, n), budget - left)
            cur = nxt
            continue
        bc = _block_cost(m, a, l, n)
        e = list(cur.exps)
        e[m - 2] += l
        e[m - 1] = a - l
        nxt = Monomial(n, tuple(e))
        for i in range(n):
            cost[i] += bc.exps[i]
        left -= deg(bc)
        _emit(trace, cur, nxt, bc, budget - left)
        cur = nxt
    return WalkState(cur, Monomial(n, tuple(cost)), budget)


def cost_between(
    u: Monomial,
    v: Monomial,
    engine: str = "block",
    max_jumps: int = DEFAULT_MAX_JUMPS,
    max_elementary: int = DEFAULT_MAX_ELEMENTARY,
    trace: TraceFn | None = None,
) -> Monomial:
    """Cost of the walk from u up to v (v lex >= u, same degree and ambient)."""
    if lex_cmp(v, u) < 0:
        raise ValueError(f"no upward walk: {v} lies below {u}")
    budget = lex_rank(u) - lex_rank(v)
    st = advance(u, budget, engine=engine, max_jumps=max_jumps,
                 max_elementary=max_elementary, trace=trace)
    assert st.current == v
    return st.cost


def u_tilde(u: Monomial, max_jumps: int = DEFAULT_MAX_JUMPS) -> Monomial:
    """pred^g(u) where g = lex_rank(u) - borel_size(u)."""
    g = lex_rank(u) - borel_size(u)
    return advance(u, g, max_jumps=max_jumps).current


def mc(u: Monomial, max_jumps: int = DEFAULT_MAX_JUMPS, trace: TraceFn | None = None) -> Monomial:
    """Cost of the walk from u up to pred^g(u), g = lex_rank(u) - borel_size(u)."""
    g = lex_rank(u) - borel_size(u)
    return advance(u, g, max_jumps=max_jumps, trace=trace).cost


def xn_power_path(u: Monomial, b: int) -> Monomial:
    """pred^b(u) when u carries at least b factors of x_n; cost is exactly x_n^b.

    Each step converts one trailing x_n into x_{n-1}, so the result is
    u * (x_{n-1}/x_n)^b.
    """
    n = u.n
    if b < 0:
        raise ValueError("step count must be nonnegative")
    if n < 2 and b > 0:
        raise ValueError("no predecessors in a single variable")
    if u.exps[n - 1] < b:
        raise ValueError(
            f"{u} carries x{n}^{u.exps[n - 1]}, not enough for {b} cheap steps"
        )
    if b == 0:
        return u
    e = list(u.exps)
    e[n - 1] -= b
    e[n - 2] += b
    return Monomial(n, tuple(e))


def find_z(
    u0: Monomial,
    n: int,
    t: int,
    max_jumps: int = DEFAULT_MAX_JUMPS,
    trace: TraceFn | None = None,
) -> tuple[Monomial, WalkState]:
    """First monomial z above u0 * x_n^t whose walk cost, truncated below x_n,
    equals the x_n-free base w of mg(u0 * x_n^t).

    u0 lives in the ambient below n.  Exists whenever t is at least the
    threshold of u0 one ambient down; otherwise some component of the target
    runs out mid-walk and TargetOvershoot is raised.
    """
    decomp = target_decompose(u0, n, t)
    origin = Monomial(n, u0.exps + (t,))
    deficit = list(decomp.base.exps[: n - 1])
    if not any(deficit):
        return origin, WalkState(origin, one(n), 0)
    cur = origin
    cost = [0] * n
    done = 0
    jumps = 0
    while True:
        jumps += 1
        if jumps > max_jumps:
            raise CapExceeded(f"walk exceeded the jump cap of {max_jumps}")
        m = max_index(cur)
        if m == 1:
            raise TargetOvershoot(f"slice exhausted above {origin} with target unmet")
        a = cur.exps[m - 1]
        if m == n:
            # conversion of the top run is invisible below x_n; take it whole
            cost[n - 1] += a
            done += a
            e = list(cur.exps)
            e[n - 2] += a
            e[n - 1] = 0
            nxt = Monomial(n, tuple(e))
            if trace is not None:
                _emit(trace, cur, nxt, _block_cost(n, a, a, n), done)
            cur = nxt
            continue

        def vis_fits(l: int) -> bool:
            if l > deficit[m - 1]:
                return False
            for s in range(1, n - m):
                delta = binom(a + s - 1, s + 1) - binom(a - l + s - 1, s + 1)
                if delta > deficit[m + s - 1]:
                    return False
            return True

        l = _largest_l(a, vis_fits)
        if l >= 1 and _visible_exactly(m, a, l, n, deficit):
            # an exact-hit block may hide the first hit in its interior
            l -= 1
        if l >= 1:
            bc = _block_cost(m, a, l, n)
            e = list(cur.exps)
            e[m - 2] += l
            e[m - 1] = a - l
            nxt = Monomial(n, tuple(e))
            for i in range(n):
                cost[i] += bc.exps[i]
                if i < n - 1:
                    deficit[i] -= bc.exps[i]
            done += deg(bc)
            _emit(trace, cur, nxt, bc, done)
            cur = nxt
            continue
        # single elementary step, paid in x_m
        if deficit[m - 1] == 0:
            raise TargetOvershoot(
                f"target component x{m} is exhausted at {cur}; no walk from "
                f"{origin} realizes the base of mg (t below the lower threshold?)"
            )
        deficit[m - 1] -= 1
        cost[m - 1] += 1
        done += 1
        nxt = pred(cur)
        if trace is not None:
            _emit(trace, cur, nxt, variable(m, n), done)
        cur = nxt
        if not any(deficit):
            return cur, WalkState(cur, Monomial(n, tuple(cost)), done)


def _visible_exactly(m: int, a: int, l: int, n: int, deficit: list[int]) -> bool:
    """Would the visible part of the (m, a, l) block consume the deficit exactly?"""
    for i in range(m - 1):
        if deficit[i] != 0:
            return False
    if deficit[m - 1] != l:
        return False
    for s in range(1, n - m):
        delta = binom(a + s - 1, s + 1) - binom(a - l + s - 1, s + 1)
        if deficit[m + s - 1] != delta:
            return False
    return True
