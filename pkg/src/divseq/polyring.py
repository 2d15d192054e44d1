"""Dense univariate polynomials over the integers.

Coefficients are Python ints (arbitrary precision), stored lowest degree
first. Every value is immutable; all operations return new polynomials.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import InexactDivision, NonIntegralNormalPart, ZeroPolynomial

NEG_INF = float("-inf")


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(v) for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    """Polynomial sum(coeffs[i] * x**i); the zero polynomial has coeffs ()."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> IntPoly:
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c: int = 1) -> IntPoly:
        return cls((0,) * n + (c,))

    @classmethod
    def x_power_minus_one(cls, n: int) -> IntPoly:
        """x**n - 1."""
        return cls((-1,) + (0,) * (n - 1) + (1,))

    @property
    def degree(self) -> int | float:
        """Degree, or NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: IntPoly | int) -> IntPoly:
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> IntPoly:
        return _coerce(other) - self

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        return poly_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        if k < 0:
            raise ValueError("negative exponent")
        result, base = IntPoly((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, v: int) -> int:
        return evaluate_at(self, v)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"IntPoly({format_poly(self)!r})"


def _coerce(v: IntPoly | int) -> IntPoly:
    return v if isinstance(v, IntPoly) else IntPoly((v,))


def format_poly(f: IntPoly, var: str = "x") -> str:
    """Human readable form, highest degree first, e.g. ``x^4 + x^3 - x - 1``."""
    if f.is_zero():
        return "0"
    parts: list[str] = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{a}*{mono}"
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if a.is_zero() or b.is_zero():
        return IntPoly()
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] += x * y
    return IntPoly(tuple(out))


def poly_divmod(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Long division over the integers.

    Raises InexactDivision when a quotient coefficient would not be an integer,
    which can only happen when b is not monic.
    """
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a.coeffs)
    db = len(b.coeffs) - 1
    lb = b.coeffs[-1]
    if len(r) - 1 < db:
        return IntPoly(), a
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c == 0:
            continue
        t, rem = divmod(c, lb)
        if rem:
            raise InexactDivision(f"{a} is not divisible by {b} over the integers")
        q[k - db] = t
        for j in range(db + 1):
            r[k - db + j] -= t * b.coeffs[j]
    return IntPoly(tuple(q)), IntPoly(tuple(r))


def divide_exact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Return q with a == q*b exactly, or raise InexactDivision."""
    q, r = poly_divmod(a, b)
    if not r.is_zero():
        raise InexactDivision(f"{a} is not divisible by {b}: remainder {r}")
    return q


def compose_power(f: IntPoly, n: int) -> IntPoly:
    """f(x**n)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1 or f.is_zero():
        return f
    out = [0] * ((len(f.coeffs) - 1) * n + 1)
    for i, c in enumerate(f.coeffs):
        out[i * n] = c
    return IntPoly(tuple(out))


def evaluate_at(f: IntPoly, v: int) -> int:
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * v + c
    return acc


def is_palindromic(f: IntPoly) -> bool:
    if f.is_zero():
        raise ZeroPolynomial("palindromicity is undefined for the zero polynomial")
    return f.coeffs == f.coeffs[::-1]


def normal_decompose(f: IntPoly) -> tuple[int, int, IntPoly]:
    """Split f = C * x**s * g with g monic and g(0) != 0.

    C is the leading coefficient of f and has to divide every coefficient,
    otherwise g would leave the integers and NonIntegralNormalPart is raised.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot decompose the zero polynomial")
    s = 0
    while f.coeffs[s] == 0:
        s += 1
    C = f.leading
    rest = f.coeffs[s:]
    if any(c % C for c in rest):
        raise NonIntegralNormalPart(f"leading coefficient {C} does not divide {f}")
    return C, s, IntPoly(tuple(c // C for c in rest))


def content(f: IntPoly) -> int:
    g = 0
    for c in f.coeffs:
        g = gcd(g, c)
    return g


def primitive_part(f: IntPoly) -> IntPoly:
    """f divided by its content, with positive leading coefficient."""
    if f.is_zero():
        return f
    c = content(f)
    if f.leading < 0:
        c = -c
    return IntPoly(tuple(v // c for v in f.coeffs))


def pseudo_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    """Remainder of lc(b)**k * a by b, computed without fractions."""
    db = len(b.coeffs) - 1
    lb = b.leading
    r = list(a.coeffs)
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * v for v in r]
        for j in range(db + 1):
            r[shift + j] -= lr * b.coeffs[j]
        while r and r[-1] == 0:
            r.pop()
    return IntPoly(tuple(r))


def primitive_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Greatest common divisor over Q, scaled to a primitive integer polynomial
    with positive leading coefficient.

    Uses the primitive polynomial remainder sequence so intermediate
    coefficients stay bounded by the content removal at each step.
    """
    if a.is_zero() and b.is_zero():
        raise ZeroPolynomial("gcd(0, 0) is undefined")
    a, b = primitive_part(a), primitive_part(b)
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        a, b = b, primitive_part(pseudo_remainder(a, b))
    return a
