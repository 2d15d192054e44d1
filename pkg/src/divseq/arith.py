"""Small integer helpers: factorization, divisors, totient."""
from __future__ import annotations

from functools import reduce
from math import gcd


def prime_factors(n: int) -> dict[int, int]:
    """Trial-division factorization; inputs here stay small."""
    if n < 1:
        raise ValueError("n must be positive")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """Positive divisors of n, ascending."""
    divs = [1]
    for p, e in prime_factors(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def euler_totient(n: int) -> int:
    result = n
    for p in prime_factors(n):
        result -= result // p
    return result


def gcd_list(values) -> int:
    return reduce(gcd, values, 0)
