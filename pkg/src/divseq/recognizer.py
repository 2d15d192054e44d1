"""Recognition and canonical factorization of divisibility polynomials.

A polynomial f divides f(x**n) for every n exactly when f = C * x**s * g with
g a product of cyclotomic polynomials whose exponent map is order-reversing.
``recognize`` recovers (C, s, map) by trial division; the brute-force
``oracle_composition_divides`` checks the defining property directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import euler_totient
from .cyclotomic import cyclotomic, phi_of_map
from .errors import NotCyclotomicProduct, NotOrderReversing, ZeroPolynomial
from .polyring import IntPoly, compose_power, normal_decompose, poly_divmod
from .satset import (
    MultiplicityMap,
    SaturatedSet,
    compress_core,
    is_order_reversing,
    slicing_layers,
)


@dataclass(frozen=True)
class DivPolyDecomposition:
    constant: int
    power: int
    map: MultiplicityMap

    def expand(self) -> IntPoly:
        return IntPoly.monomial(self.power, self.constant) * phi_of_map(self.map)


def _strip_cyclotomics(g: IntPoly) -> tuple[dict[int, int], IntPoly]:
    """Divide out every cyclotomic factor of a monic g.

    Any cyclotomic factor Phi_d of g has phi(d) <= deg g, and phi(d) >= sqrt(d/2),
    so scanning d up to 2*deg(g)**2 + 1 cannot miss one.
    """
    found: dict[int, int] = {}
    limit = 2 * max(g.degree, 0) ** 2 + 1
    d = 1
    while g.degree > 0 and d <= limit:
        if euler_totient(d) <= g.degree:
            phi = cyclotomic(d)
            while g.degree >= phi.degree:
                q, r = poly_divmod(g, phi)
                if not r.is_zero():
                    break
                g = q
                found[d] = found.get(d, 0) + 1
        d += 1
    return found, g


def recognize(f: IntPoly) -> DivPolyDecomposition:
    """Decompose a divisibility polynomial as C * x**s * Phi_lambda.

    Raises NotCyclotomicProduct when the normal part has a root that is not a
    root of unity, and NotOrderReversing when the cyclotomic exponents break
    the divisibility condition (e.g. Phi_3 without Phi_1).
    """
    C, s, g = normal_decompose(f)
    found, residue = _strip_cyclotomics(g)
    if residue != IntPoly((1,)):
        raise NotCyclotomicProduct(f"{f} has the non-cyclotomic factor {residue}")
    lam = MultiplicityMap.from_dict(found)
    if not is_order_reversing(lam):
        raise NotOrderReversing(f"{f} factors as Phi^{lam}, which is not order-reversing")
    return DivPolyDecomposition(C, s, lam)


def _rational_remainder(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    while len(r) - 1 >= db:
        t = r[-1] / lb
        shift = len(r) - 1 - db
        for j in range(db + 1):
            r[shift + j] -= t * b[j]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def oracle_composition_divides(f: IntPoly, n_max: int) -> int | None:
    """First 2 <= n <= n_max with f not dividing f(x**n) over Q, else None."""
    if f.is_zero():
        raise ZeroPolynomial("oracle needs a nonzero polynomial")
    b = [Fraction(c) for c in f.coeffs]
    for n in range(2, n_max + 1):
        a = [Fraction(c) for c in compose_power(f, n).coeffs]
        if _rational_remainder(a, b):
            return n
    return None


def is_indecomposable(lam: MultiplicityMap) -> bool:
    if not is_order_reversing(lam):
        raise NotOrderReversing(f"{lam} is not order-reversing")
    if not lam:
        raise ValueError("the zero map is not a divisibility polynomial factor")
    return lam[1] == 1


def canonical_form(f: IntPoly) -> tuple[int, int, list[tuple[SaturatedSet, int]]]:
    """(C, s, [(core, exponent), ...]) with f = C x^s prod Phi_core(x**exponent)."""
    dec = recognize(f)
    factors = [compress_core(layer) for layer in slicing_layers(dec.map)]
    return dec.constant, dec.power, factors
