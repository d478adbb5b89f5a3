"""Exact evaluation of the double character sums over F_{q^k}^* x F_q^*.

The sum T(a, b) = sum over x, y of chi'(a*x^(Delta*e1)*y + b*x^(e2)*y)
is kept exact: a CyclotomicCount records, for each character exponent
c in [0, p), how many of the (q^k-1)(q-1) terms evaluate to zeta_p^c.
The vector collapses to a rational integer precisely when the nonzero
exponents all occur equally often; no floating point is involved
anywhere.

Also here: the change-of-variables bijection on the index grid
V = [0, q^k-1) x [0, q-1), the shifted form whose level sets partition
V, and the closed-form predictions for the sum in each (a, b) class.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import TYPE_CHECKING

from .errors import ConsistencyError, InvalidArgumentError
from .gf import ZERO, FieldCtx
from .numth import rem

if TYPE_CHECKING:  # pragma: no cover
    from .codes import CodeSpec


@dataclass(frozen=True)
class CyclotomicCount:
    """A sum of p-th roots of unity, stored as per-exponent term counts."""

    p: int
    counts: tuple[int, ...]

    def total(self) -> int:
        return sum(self.counts)

    def is_integral(self) -> bool:
        tail = self.counts[1:]
        return all(c == tail[0] for c in tail) if tail else True

    def as_integer(self) -> int:
        """Collapse to a rational integer via sum of all p-th roots = 0."""
        if not self.is_integral():
            raise ConsistencyError(
                f"count vector {self.counts} is not a rational integer"
            )
        return self.counts[0] - (self.counts[1] if self.p > 1 else 0)


def substitution(spec: CodeSpec, i: int, j: int) -> tuple[int, int]:
    """Forward reindexing (i, j) -> (v, w) on V.

    v = (e2*i + Delta*j) % (q^k - 1), and w is the exact quotient
    (i - alpha*v) / Delta reduced mod q - 1.  The division is exact for
    every point of V; a failure indicates a broken Bezout pair.
    """
    m = spec.q**spec.k - 1
    _check_point(spec, i, j, m)
    v = rem(spec.e2 * i + spec.delta * j, m)
    diff = i - spec.bezout.alpha * v
    if diff % spec.delta != 0:
        raise ConsistencyError(
            f"Delta = {spec.delta} does not divide i - alpha*v = {diff}"
        )
    w = rem(diff // spec.delta, spec.q - 1)
    return v, w


def substitution_inverse(spec: CodeSpec, v: int, w: int) -> tuple[int, int]:
    """Inverse reindexing (v, w) -> (i, j); a two-sided inverse on V."""
    m = spec.q**spec.k - 1
    _check_point(spec, v, w, m)
    i = rem(spec.bezout.alpha * v + spec.delta * w, m)
    j = rem(spec.bezout.beta * v - spec.e2 * w, spec.q - 1)
    return i, j


def _check_point(spec, first: int, second: int, m: int) -> None:
    if not 0 <= first < m:
        raise InvalidArgumentError(f"first index {first} outside [0, {m})")
    if not 0 <= second < spec.q - 1:
        raise InvalidArgumentError(f"second index {second} outside [0, {spec.q - 1})")


def gap_gcd(spec: CodeSpec) -> int:
    """d = gcd(q - 1, k*e1 - e2), the obstruction to the sum collapsing to 1."""
    return gcd(spec.q - 1, spec.k * spec.e1 - spec.e2)


def level_shift(spec: CodeSpec, d: int) -> int:
    """The exact quotient (Delta*(e1*alpha + beta) - 1) / d.

    Integrality is guaranteed whenever d = gcd(q-1, k*e1 - e2); anything
    else means the Bezout data is inconsistent.
    """
    num = spec.delta * (spec.e1 * spec.bezout.alpha + spec.bezout.beta) - 1
    if num % d != 0:
        raise ConsistencyError(
            f"{d} does not divide Delta*(e1*alpha+beta) - 1 = {num}"
        )
    return num // d


def partition_value(
    ctx: FieldCtx, spec: CodeSpec, a: int, b: int, d: int, v: int, w: int
) -> int:
    """Value a*gamma^(Delta*(e1*alpha+beta)*v + Delta*d*w) + b*gamma^v.

    The level sets of this map over V are invariant under w -> w + (q-1)/d
    and shift predictably under v -> v + Delta, which forces every level
    count to be divisible by d.
    """
    if d != gap_gcd(spec):
        raise InvalidArgumentError(f"d = {d} is not gcd(q-1, k*e1 - e2)")
    level_shift(spec, d)  # integrality check
    m = ctx.m
    _check_point(spec, v, w, m)
    stride = spec.delta * (spec.e1 * spec.bezout.alpha + spec.bezout.beta)
    t1 = ZERO if a == ZERO else (a + stride * v + spec.delta * d * w) % m
    t2 = ZERO if b == ZERO else (b + v) % m
    return ctx.add(t1, t2)


def char_sum(ctx: FieldCtx, spec: CodeSpec, a: int, b: int) -> CyclotomicCount:
    """Exact count vector of T(a, b) over all (q^k-1)(q-1) terms.

    a and b are elements of F_{q^k} in exponent form (ZERO allowed).
    """
    m = ctx.m
    q = ctx.q
    delta = ctx.delta
    chars = ctx.char_exponent_list()
    counts = [0] * ctx.p
    s1 = rem(spec.delta * spec.e1, m)
    s2 = rem(spec.e2, m)
    ea = a
    eb = b
    for _ in range(m):
        s = ctx.add(ea, eb)
        if s == ZERO:
            counts[0] += q - 1
        else:
            for j in range(q - 1):
                counts[chars[(s + delta * j) % m]] += 1
        if ea != ZERO:
            ea = (ea + s1) % m
        if eb != ZERO:
            eb = (eb + s2) % m
    return CyclotomicCount(p=ctx.p, counts=tuple(counts))


def predict_char_sum(
    q: int, k: int, trace_a_zero: bool, a_zero: bool, b_zero: bool
) -> int:
    """Closed-form value of the sum by (a, b) class, under both gcd conditions.

    The published four-case table covers a = 0 for the b = 0 row; the
    value (q-1)(q^k-1) extends to every a with zero trace by linearity
    of the trace, and that extension is what this returns.
    """
    if a_zero and not trace_a_zero:
        raise InvalidArgumentError("a = 0 forces Tr(a) = 0; inconsistent flags")
    n = q**k - 1
    if b_zero:
        return (q - 1) * n if trace_a_zero else -n
    return -(q - 1) if trace_a_zero else 1


def partition_counts(
    ctx: FieldCtx, spec: CodeSpec, a: int, b: int, d: int
) -> dict[int, int]:
    """Level-set sizes of the shifted form over V, keyed by field element.

    Requires d = gcd(q-1, k*e1 - e2) > 1.  Checks that d divides every
    level count and that counts repeat along the v -> v + Delta orbit.
    """
    if d <= 1:
        raise InvalidArgumentError(f"partition requires d > 1, got {d}")
    if d != gap_gcd(spec):
        raise InvalidArgumentError(f"d = {d} is not gcd(q-1, k*e1 - e2)")
    m = ctx.m
    counts: dict[int, int] = {}
    for v in range(m):
        for w in range(ctx.q - 1):
            val = partition_value(ctx, spec, a, b, d, v, w)
            counts[val] = counts.get(val, 0) + 1
    for val, c in counts.items():
        if c % d != 0:
            raise ConsistencyError(f"level count {c} at {val} is not divisible by {d}")
    for e in range(m):
        if counts.get(e, 0) != counts.get((e + ctx.delta) % m, 0):
            raise ConsistencyError("level counts are not Delta-shift periodic")
    return counts
