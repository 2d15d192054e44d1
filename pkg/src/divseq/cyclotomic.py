"""Cyclotomic polynomials and their products.

Phi_n is obtained by dividing x**n - 1 by Phi_d for every proper divisor d of
n, so only exact integer division by monic polynomials is ever needed.
"""
from __future__ import annotations

import threading

from .arith import divisors, euler_totient
from .polyring import IntPoly, divide_exact, poly_mul
from .satset import MultiplicityMap, SaturatedSet

__all__ = ["cyclotomic", "euler_totient", "phi_of_set", "phi_of_map"]

_cache: dict[int, IntPoly] = {1: IntPoly((-1, 1))}
_lock = threading.Lock()


def cyclotomic(n: int) -> IntPoly:
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    f = _cache.get(n)
    if f is not None:
        return f
    # divisors come out ascending, so every proper divisor is ready in time
    for d in divisors(n):
        if d in _cache:
            continue
        prod = IntPoly((1,))
        for e in divisors(d)[:-1]:
            prod = poly_mul(prod, _cache[e])
        phi = divide_exact(IntPoly.x_power_minus_one(d), prod)
        with _lock:
            _cache.setdefault(d, phi)
    return _cache[n]


def phi_of_set(lam: SaturatedSet) -> IntPoly:
    """Product of Phi_d over d in lam (1 for the empty set)."""
    out = IntPoly((1,))
    for d in lam:
        out = poly_mul(out, cyclotomic(d))
    return out


def phi_of_map(lam: MultiplicityMap) -> IntPoly:
    """Product of Phi_h ** lam(h) (1 for the zero map)."""
    out = IntPoly((1,))
    for h, m in lam.items():
        out = poly_mul(out, cyclotomic(h) ** m)
    return out
