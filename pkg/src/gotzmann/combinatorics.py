"""Counting and enumeration over degree slices.

Two kinds of tools live here.  The enumerating operations (enumerate_monomials,
borel_enumerate, lexsegment, lexinterval) materialize every element and refuse
with CapExceeded once a configurable size cap is passed; they never truncate
silently.  The closed-form counters (binom, borel_size, lex_rank, gap_count)
stay exact at any size and are what the fast algorithms rely on.

borel_size uses the standard correspondence between the Borel closure of
x_{i_1}...x_{i_d} (indices ascending) and nondecreasing sequences j_1 <= ...
<= j_d with j_k <= i_k; the prefix-sum dynamic program below counts those
directly.  The enumeration oracle certifies it on small grids in the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .monomial import Monomial, deg, lex_cmp, max_index

DEFAULT_CAP = 5_000_000


class CapExceeded(RuntimeError):
    """An enumeration or walk would exceed its configured size cap."""


def binom(a: int, b: int) -> int:
    """C(a, b), with C(a, b) = 0 for a < b.  Negative arguments are rejected.

    Identities that rely on negative upper arguments are kept out of the code
    on purpose; every formula used here is arranged so both arguments are
    nonnegative, and a negative argument therefore signals a bug.
    """
    if a < 0 or b < 0:
        raise ValueError(f"binom needs nonnegative arguments, got ({a}, {b})")
    if a < b:
        return 0
    return math.comb(a, b)


@dataclass(frozen=True)
class MonomialSet:
    """Finitely many monomials of one degree in one ambient, strictly lex-descending."""

    n: int
    elements: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"bad ambient count {self.n!r}")
        d = None
        prev = None
        for u in self.elements:
            if not isinstance(u, Monomial) or u.n != self.n:
                raise ValueError("all elements must share the ambient count")
            du = deg(u)
            if d is None:
                d = du
            elif du != d:
                raise ValueError(f"mixed degrees {d} and {du} in one set")
            if prev is not None and prev.exps <= u.exps:
                raise ValueError("elements must be strictly lex-descending")
            prev = u

    @property
    def degree(self) -> int | None:
        """Common degree of the elements, or None for the empty set."""
        return deg(self.elements[0]) if self.elements else None

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.elements)

    def __contains__(self, u: Monomial) -> bool:
        return any(u == v for v in self.elements)


def _check_cap(count: int, cap: int | None, what: str) -> None:
    if cap is not None and count > cap:
        raise CapExceeded(f"{what} holds {count} elements, over the cap of {cap}")


def _compositions_desc(total: int, slots: int) -> Iterator[tuple[int, ...]]:
    if slots == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions_desc(total - first, slots - 1):
            yield (first,) + rest


def enumerate_monomials(n: int, d: int, cap: int | None = DEFAULT_CAP) -> MonomialSet:
    """All monomials of degree d in n variables, lex-descending (x_1^d first)."""
    if n < 1 or d < 0:
        raise ValueError(f"bad slice parameters n={n}, d={d}")
    _check_cap(binom(d + n - 1, n - 1), cap, f"the degree-{d} slice in {n} variables")
    els = tuple(Monomial(n, e) for e in _compositions_desc(d, n))
    return MonomialSet(n, els)


def _next_below(z: Monomial) -> Monomial | None:
    """Immediate lex successor downward, or None at the slice minimum x_n^d."""
    e = list(z.exps)
    n = z.n
    j = None
    for i in range(n - 2, -1, -1):
        if e[i] > 0:
            j = i
            break
    if j is None:
        return None
    tail = e[n - 1]
    e[j] -= 1
    e[n - 1] = 0
    e[j + 1] += tail + 1
    return Monomial(n, tuple(e))


def lex_rank(u: Monomial) -> int:
    """1-based position of u in the lex-descending enumeration of its slice.

    Equivalently the size of the lexsegment above u.  Closed form: 1 plus, for
    each position i < n, the count of completions whose prefix agrees with u
    up to i-1 and exceeds u at i; the inner sum telescopes to one binomial.
    """
    rank = 1
    rem = deg(u)
    n = u.n
    for i in range(1, n):
        ui = u.exps[i - 1]
        slack = rem - ui - 1
        if slack >= 0:
            rank += binom(slack + n - i, n - i)
        rem -= ui
    return rank


def lexsegment(u: Monomial, cap: int | None = DEFAULT_CAP) -> MonomialSet:
    """All monomials of the slice that are lex >= u, descending, ending at u."""
    count = lex_rank(u)
    _check_cap(count, cap, f"the lexsegment above {u}")
    els = [Monomial(u.n, ((deg(u),) + (0,) * (u.n - 1)))]
    while els[-1] != u:
        nxt = _next_below(els[-1])
        assert nxt is not None
        els.append(nxt)
    assert len(els) == count
    return MonomialSet(u.n, tuple(els))


def lexinterval(v: Monomial, u: Monomial, cap: int | None = DEFAULT_CAP) -> MonomialSet:
    """The half-open interval {z : v > z >= u}, descending.  Requires v >= u."""
    if lex_cmp(v, u) < 0:
        raise ValueError(f"interval needs v >= u, got v={v} below u={u}")
    count = lex_rank(u) - lex_rank(v)
    _check_cap(count, cap, f"the interval between {v} and {u}")
    els = []
    cur = v
    for _ in range(count):
        cur = _next_below(cur)
        assert cur is not None
        els.append(cur)
    assert count == 0 or els[-1] == u
    return MonomialSet(u.n, tuple(els))


def borel_enumerate(u: Monomial, cap: int | None = DEFAULT_CAP) -> MonomialSet:
    """Closure of {u} under every exchange x_j -> x_i with i <= j, descending."""
    n = u.n
    seen = {u.exps}
    stack = [u.exps]
    while stack:
        e = stack.pop()
        for j in range(1, n):
            if e[j] > 0:
                for i in range(j):
                    e2 = list(e)
                    e2[j] -= 1
                    e2[i] += 1
                    t = tuple(e2)
                    if t not in seen:
                        if cap is not None and len(seen) >= cap:
                            raise CapExceeded(
                                f"the Borel closure of {u} exceeds the cap of {cap}"
                            )
                        seen.add(t)
                        stack.append(t)
    els = tuple(Monomial(n, e) for e in sorted(seen, reverse=True))
    return MonomialSet(n, els)


def prefix_borel_sizes(indices: Sequence[int]) -> list[int]:
    """Borel closure sizes of all prefixes of x_{i_1}...x_{i_d}, indices ascending.

    Entry k-1 is the closure size of the length-k prefix.  dp[c] counts the
    admissible nondecreasing sequences ending at index c+1; one position with
    bound i turns dp into its prefix sums, cut off above i.
    """
    sizes = []
    if not indices:
        return sizes
    width = max(indices)
    if min(indices) < 1:
        raise ValueError("variable indices must be >= 1")
    if any(indices[k] > indices[k + 1] for k in range(len(indices) - 1)):
        raise ValueError("indices must ascend")
    dp = [1] + [0] * (width - 1)
    for i in indices:
        acc = 0
        new = [0] * width
        for c in range(width):
            acc += dp[c]
            if c < i:
                new[c] = acc
        dp = new
        sizes.append(sum(dp))
    return sizes


def _ascending_indices(u: Monomial) -> list[int]:
    out = []
    for i, e in enumerate(u.exps, start=1):
        out.extend([i] * e)
    return out


def borel_size(u: Monomial) -> int:
    """Size of the Borel closure of u, without enumeration.

    Runs in O(deg(u) * n); independent of the ambient count beyond max_index(u).
    """
    idxs = _ascending_indices(u)
    if not idxs:
        return 1
    return prefix_borel_sizes(idxs)[-1]


def gap_count(u: Monomial) -> int:
    """lex_rank(u) - borel_size(u): how much of the segment above u the closure misses."""
    g = lex_rank(u) - borel_size(u)
    assert g >= 0
    return g
