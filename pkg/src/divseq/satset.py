"""Finite saturated (divisor-closed) sets, multiplicity maps and Hasse diagrams.

A saturated set is stored as its sorted element list; the generator form
``<n1, ..., nk>`` (all divisors of some ni) is derived on demand. The empty
set, the zero multiplicity map and the polynomial 1 correspond to each other.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Iterator, Mapping

from .arith import divisors, gcd_list, prime_factors
from .errors import EmptySet, EmptySupport, NotOrderReversing, NotSaturated


@dataclass(frozen=True)
class SaturatedSet:
    elements: tuple[int, ...] = ()
    _members: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        elems = tuple(sorted(set(int(e) for e in self.elements)))
        if elems and elems[0] < 1:
            raise ValueError("elements must be positive integers")
        members = set(elems)
        for h in elems:
            for p in prime_factors(h):
                if h // p not in members:
                    raise NotSaturated(f"{h // p} divides {h} but is missing")
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "_members", frozenset(members))

    @classmethod
    def generated_by(cls, *generators: int) -> SaturatedSet:
        return saturate(generators)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, h: object) -> bool:
        return h in self._members

    @property
    def generators(self) -> list[int]:
        return maximal_generators(self)

    def __str__(self) -> str:
        return "<" + ",".join(map(str, maximal_generators(self))) + ">"


@dataclass(frozen=True)
class MultiplicityMap:
    """Finitely supported map h -> lambda(h); absent keys mean 0."""

    entries: tuple[tuple[int, int], ...] = ()
    _lookup: dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        data: dict[int, int] = {}
        for h, m in self.entries:
            if h < 1 or m < 0:
                raise ValueError(f"bad entry {h}:{m}")
            if m:
                data[int(h)] = int(m)
        object.__setattr__(self, "entries", tuple(sorted(data.items())))
        object.__setattr__(self, "_lookup", data)

    @classmethod
    def from_dict(cls, d: Mapping[int, int]) -> MultiplicityMap:
        return cls(tuple(d.items()))

    @classmethod
    def indicator(cls, s: Iterable[int]) -> MultiplicityMap:
        return cls(tuple((h, 1) for h in s))

    def __getitem__(self, h: int) -> int:
        return self._lookup.get(h, 0)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __add__(self, other: MultiplicityMap) -> MultiplicityMap:
        d = dict(self.entries)
        for h, m in other.entries:
            d[h] = d.get(h, 0) + m
        return MultiplicityMap.from_dict(d)

    def items(self) -> tuple[tuple[int, int], ...]:
        return self.entries

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(h for h, _ in self.entries)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{h}:{m}" for h, m in self.entries) + "}"


@dataclass(frozen=True)
class HasseDiagram:
    nodes: tuple[tuple[int, int], ...]
    edges: tuple[tuple[int, int], ...]


def _as_map(lam: MultiplicityMap | SaturatedSet) -> MultiplicityMap:
    if isinstance(lam, SaturatedSet):
        return MultiplicityMap.indicator(lam)
    return lam


def saturate(generators: Iterable[int]) -> SaturatedSet:
    out: set[int] = set()
    for n in generators:
        if n < 1:
            raise ValueError("generators must be positive")
        out.update(divisors(n))
    return SaturatedSet(tuple(out))


def maximal_generators(lam: SaturatedSet) -> list[int]:
    elems = lam.elements
    return [h for i, h in enumerate(elems) if not any(k % h == 0 for k in elems[i + 1:])]


def set_product(s: SaturatedSet, t: SaturatedSet) -> SaturatedSet:
    return SaturatedSet(tuple({a * b for a in s for b in t}))


def decompress(lam: SaturatedSet, n: int) -> SaturatedSet:
    """Index set of Phi_lam(x**n): the products <n>*lam."""
    if n < 1:
        raise ValueError("n must be positive")
    return set_product(saturate([n]), lam)


def compress_core(lam: SaturatedSet) -> tuple[SaturatedSet, int]:
    """Write lam = <e>*core with the generators of core coprime as a whole."""
    if not lam.elements:
        raise EmptySet("cannot compress the empty set")
    gens = maximal_generators(lam)
    e = gcd_list(gens)
    return saturate(g // e for g in gens), e


def is_principal(lam: SaturatedSet) -> int | None:
    """N if lam is the divisor set of N, else None."""
    if not lam.elements:
        raise EmptySet("empty set has no generator")
    gens = maximal_generators(lam)
    return gens[0] if len(gens) == 1 else None


def is_order_reversing(lam: MultiplicityMap) -> bool:
    for h, m in lam.items():
        for d in divisors(h)[:-1]:
            if lam[d] < m:
                return False
    return True


def slicing_layers(lam: MultiplicityMap) -> list[SaturatedSet]:
    """Level sets {m : lam(m) >= j} for j = 1..lam(1)."""
    if not is_order_reversing(lam):
        raise NotOrderReversing(f"{lam} is not order-reversing")
    return [
        SaturatedSet(tuple(h for h, m in lam.items() if m >= j))
        for j in range(1, lam[1] + 1)
    ]


def strong_set_identity_check(
    lam: SaturatedSet, bound: int | None = None
) -> tuple[int, int] | None:
    """First pair m < n <= bound with <m>lam & <n>lam != <gcd(m,n)>lam.

    A non-principal set always fails at some pair taken from the set itself,
    so the default bound is max(lam).
    """
    if not lam.elements:
        raise EmptySet("identity check needs a nonempty set")
    if bound is None:
        bound = lam.elements[-1]
    dec = {k: set(decompress(lam, k)) for k in range(1, bound + 1)}
    for m in range(1, bound + 1):
        for n in range(m + 1, bound + 1):
            if dec[m] & dec[n] != dec[gcd(m, n)]:
                return m, n
    return None


def hasse_diagram(lam: MultiplicityMap | SaturatedSet) -> HasseDiagram:
    """Covering relation of divisibility on the support, with multiplicities."""
    lam = _as_map(lam)
    if not lam:
        raise EmptySupport("diagram of an empty support")
    support = lam.support
    edges = []
    for b in support:
        below = [a for a in support if a < b and b % a == 0]
        for a in below:
            if not any(c % a == 0 and b % c == 0 for c in below if c != a):
                edges.append((a, b))
    edges.sort()
    return HasseDiagram(nodes=lam.items(), edges=tuple(edges))
