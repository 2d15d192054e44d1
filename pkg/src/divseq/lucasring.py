"""Lucas-type divisibility sequences built from divisibility polynomials.

Everything is computed in Z[alpha] with alpha**2 = P*alpha - Q, where
P = alpha + beta and Q = alpha*beta. Conjugation alpha -> beta = P - alpha
fixes exactly the integers, so symmetric expressions in (alpha**n, beta**n)
come out as plain ints without ever touching sqrt(P**2 - 4Q).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .cyclotomic import cyclotomic
from .errors import (
    AsymmetryViolation,
    DegenerateDenominator,
    DegenerateParameters,
    IntegralityViolation,
    InvalidOrder,
    NotOrderReversing,
)
from .satset import MultiplicityMap, SaturatedSet, is_order_reversing, saturate


@dataclass(frozen=True)
class RingParams:
    P: int
    Q: int

    @property
    def discriminant(self) -> int:
        return self.P * self.P - 4 * self.Q


@dataclass(frozen=True)
class QuadInt:
    """a + b*alpha in Z[alpha]."""

    a: int
    b: int
    params: RingParams

    def _check(self, other: QuadInt) -> None:
        if other.params != self.params:
            raise ValueError("QuadInt values from different rings")

    def __add__(self, other: QuadInt | int) -> QuadInt:
        if isinstance(other, int):
            return QuadInt(self.a + other, self.b, self.params)
        self._check(other)
        return QuadInt(self.a + other.a, self.b + other.b, self.params)

    __radd__ = __add__

    def __neg__(self) -> QuadInt:
        return QuadInt(-self.a, -self.b, self.params)

    def __sub__(self, other: QuadInt | int) -> QuadInt:
        return self + (-other)

    def __mul__(self, other: QuadInt | int) -> QuadInt:
        if isinstance(other, int):
            return QuadInt(self.a * other, self.b * other, self.params)
        self._check(other)
        P, Q = self.params.P, self.params.Q
        bd = self.b * other.b
        return QuadInt(
            self.a * other.a - Q * bd,
            self.a * other.b + self.b * other.a + P * bd,
            self.params,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QuadInt:
        if n < 0:
            raise ValueError("negative exponent")
        result, base = QuadInt(1, 0, self.params), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> QuadInt:
        return QuadInt(self.a + self.b * self.params.P, -self.b, self.params)

    def trace(self) -> int:
        return 2 * self.a + self.b * self.params.P

    def norm(self) -> int:
        P, Q = self.params.P, self.params.Q
        return self.a * self.a + P * self.a * self.b + Q * self.b * self.b


@dataclass(frozen=True)
class SequenceSpec:
    """A_n = Phi_map(alpha**n, beta**n) / Phi_map(alpha, beta)."""

    map: MultiplicityMap
    params: RingParams

    def __post_init__(self) -> None:
        if not is_order_reversing(self.map):
            raise NotOrderReversing(f"{self.map} is not order-reversing")

    @classmethod
    def from_set(cls, lam: SaturatedSet | list[int], P: int, Q: int) -> SequenceSpec:
        if not isinstance(lam, SaturatedSet):
            lam = saturate(lam)
        return cls(MultiplicityMap.indicator(lam), RingParams(P, Q))


def alpha_power(params: RingParams, n: int) -> QuadInt:
    return QuadInt(0, 1, params) ** n


def s_term(params: RingParams, n: int) -> int:
    """(alpha**n - beta**n) / (alpha - beta), the b-part of alpha**n."""
    return alpha_power(params, n).b


def t_term(params: RingParams, n: int) -> int:
    """alpha**n + beta**n."""
    return alpha_power(params, n).trace()


def _homogenized_value(d: int, u: QuadInt) -> int:
    # sum c_i u^i v^(k-i) with v = conj(u)
    coeffs = cyclotomic(d).coeffs
    k = len(coeffs) - 1
    v = u.conj()
    one = QuadInt(1, 0, u.params)
    upow, vpow = [one], [one]
    for _ in range(k):
        upow.append(upow[-1] * u)
        vpow.append(vpow[-1] * v)
    total = QuadInt(0, 0, u.params)
    for i, c in enumerate(coeffs):
        if c:
            total = total + upow[i] * vpow[k - i] * c
    if total.b:
        raise AsymmetryViolation(f"Phi_{d} value {total} is not rational")
    return total.a


def phi_eval_at_power(d: int, params: RingParams, n: int) -> int:
    """Homogenized Phi_d evaluated at (alpha**n, beta**n), for d >= 2."""
    if d < 2:
        raise InvalidOrder(f"homogenized Phi_{d} is not symmetric; need d >= 2")
    return _homogenized_value(d, alpha_power(params, n))


def is_degenerate(params: RingParams) -> bool:
    """True when alpha*beta = 0 or alpha/beta is a root of unity.

    A root of unity in a quadratic field has order 1, 2, 3, 4 or 6, so it is
    enough to look for a vanishing Phi_d(alpha, beta) at those orders.
    """
    if params.Q == 0 or params.discriminant == 0:
        return True
    return any(phi_eval_at_power(d, params, 1) == 0 for d in (2, 3, 4, 6))


class _Evaluator:
    """Shared numerator/denominator machinery for single terms and ranges."""

    def __init__(self, spec: SequenceSpec):
        self.spec = spec
        self.upper = [(d, m) for d, m in spec.map.items() if d > 1]
        alpha = QuadInt(0, 1, spec.params)
        den = 1
        for d, m in self.upper:
            v = _homogenized_value(d, alpha)
            if v == 0:
                raise DegenerateDenominator(
                    f"Phi_{d}(alpha, beta) = 0 for P={spec.params.P}, Q={spec.params.Q}"
                )
            den *= v**m
        self.den = den

    def term(self, u: QuadInt) -> int:
        num = u.b ** self.spec.map[1]
        for d, m in self.upper:
            num *= _homogenized_value(d, u) ** m
        q, r = divmod(num, self.den)
        if r:
            raise IntegralityViolation(f"{num} is not divisible by {self.den}")
        return q


def seq_term(spec: SequenceSpec, n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _Evaluator(spec).term(alpha_power(spec.params, n))


def seq_range(spec: SequenceSpec, n_max: int) -> list[int]:
    """[A_0, ..., A_n_max]."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    ev = _Evaluator(spec)
    alpha = QuadInt(0, 1, spec.params)
    u = QuadInt(1, 0, spec.params)
    out = []
    for _ in range(n_max + 1):
        out.append(ev.term(u))
        u = u * alpha
    return out


def verify_divisibility(spec: SequenceSpec, n_max: int) -> tuple[int, int] | None:
    """First pair m | n, m < n <= n_max with A_m not dividing A_n."""
    terms = seq_range(spec, n_max)
    for m in range(1, n_max + 1):
        for n in range(2 * m, n_max + 1, m):
            am, an = terms[m], terms[n]
            if (an != 0) if am == 0 else (an % am != 0):
                return m, n
    return None


def verify_strong_divisibility(spec: SequenceSpec, n_max: int) -> tuple[int, int] | None:
    """First pair 2 <= m < n <= n_max with gcd(A_m, A_n) != |A_gcd(m,n)|."""
    terms = seq_range(spec, n_max)
    for m in range(2, n_max + 1):
        for n in range(m + 1, n_max + 1):
            if gcd(terms[m], terms[n]) != abs(terms[gcd(m, n)]):
                return m, n
    return None


def phi_lower_bound_check(params: RingParams, d_max: int) -> int | None:
    """First 2 < d <= d_max with |Phi_d(alpha, beta)| <= 1, else None."""
    if params.Q == 0 or params.P == 0 or params.discriminant == 0:
        raise DegenerateParameters(
            f"need alpha*beta != 0 and alpha != +-beta (P={params.P}, Q={params.Q})"
        )
    for d in range(3, d_max + 1):
        if abs(phi_eval_at_power(d, params, 1)) <= 1:
            return d
    return None
