"""The Gelfand pair (S(2n), H(n)) at desk scale.

Permutations of {1..2n} are stored as 0-indexed image tuples.  The base
matching pairs up (2i-1, 2i) in 1-based labels; the hyperoctahedral
group H(n) is its stabilizer.  Irreducible symmetric-group characters
come from the Murnaghan-Nakayama recursion in exact integer arithmetic,
and zonal spherical functions are exact rationals.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DomainError, ParameterError, ResourceCapError
from .measures import ZParams, z_measure
from .partitions import YoungDiagram, iter_partition_tuples

COSET_TYPE_CAP = 6  # n, i.e. permutations of up to 12 points
CHARACTER_CAP = 8  # 2n
ZONAL_CAP = 4  # n

Perm = tuple[int, ...]


def identity_perm(size: int) -> Perm:
    return tuple(range(size))


def compose(a: Perm, b: Perm) -> Perm:
    """a after b: (a*b)(i) = a(b(i))."""
    return tuple(a[x] for x in b)


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def from_cycles(size: int, cycles: Iterable[tuple[int, ...]]) -> Perm:
    """Permutation from 1-based disjoint cycles."""
    img = list(range(size))
    for cyc in cycles:
        for i, v in enumerate(cyc):
            img[v - 1] = cyc[(i + 1) % len(cyc)] - 1
    return tuple(img)


def cycle_type(g: Perm) -> tuple[int, ...]:
    seen = [False] * len(g)
    lens = []
    for i in range(len(g)):
        if seen[i]:
            continue
        ln = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = g[j]
            ln += 1
        lens.append(ln)
    return tuple(sorted(lens, reverse=True))


def all_permutations(size: int) -> Iterator[Perm]:
    return itertools.permutations(range(size))


class SignedPermutationDomainMap:
    """Fixed bijection between the signed symbols {-n..-1,1..n} and the
    1-based labels {1..2n}: -i <-> 2i-1 and i <-> 2i."""

    @staticmethod
    def to_label(symbol: int) -> int:
        if symbol == 0:
            raise DomainError("0 is not a signed symbol")
        return 2 * symbol if symbol > 0 else -2 * symbol - 1

    @staticmethod
    def to_symbol(label: int) -> int:
        if label < 1:
            raise DomainError(f"labels are 1-based, got {label}")
        return label // 2 if label % 2 == 0 else -(label + 1) // 2

    @classmethod
    def signed_to_perm(cls, g: dict[int, int], n: int) -> Perm:
        """Signed-symbol bijection to a 0-indexed permutation of {0..2n-1}."""
        img = [0] * (2 * n)
        for s, v in g.items():
            img[cls.to_label(s) - 1] = cls.to_label(v) - 1
        if sorted(img) != list(range(2 * n)):
            raise DomainError("g is not a bijection of the signed symbols")
        return tuple(img)

    @classmethod
    def perm_to_signed(cls, g: Perm) -> dict[int, int]:
        return {
            cls.to_symbol(i + 1): cls.to_symbol(g[i] + 1) for i in range(len(g))
        }


@dataclass(frozen=True)
class CosetType:
    """Partition of n recording half-sizes of the components of Gamma(g)."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts) or list(self.parts) != sorted(
            self.parts, reverse=True
        ):
            raise DomainError(f"coset type must be a partition, got {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)


@dataclass(frozen=True)
class ThomaPoint:
    """Point (alpha, beta) of the Thoma set, finitely supported."""

    alpha: tuple[float, ...] = ()
    beta: tuple[float, ...] = ()

    def __post_init__(self):
        for seq in (self.alpha, self.beta):
            if any(v < 0 for v in seq):
                raise DomainError("Thoma coordinates must be nonnegative")
            if any(seq[i] < seq[i + 1] for i in range(len(seq) - 1)):
                raise DomainError("Thoma coordinates must be weakly decreasing")
        if sum(self.alpha) + sum(self.beta) > 1 + 1e-12:
            raise DomainError("total Thoma mass must be <= 1")


def coset_type(g: Perm) -> CosetType:
    """Half-sizes of the components of the graph with edges (2i-1, 2i)
    and (g(2i-1), g(2i))."""
    size = len(g)
    if size % 2 != 0:
        raise DomainError("permutation must act on an even number of points")
    n = size // 2
    if n > COSET_TYPE_CAP:
        raise ResourceCapError(f"coset type capped at n <= {COSET_TYPE_CAP}")
    parent = list(range(size))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj

    for i in range(n):
        union(2 * i, 2 * i + 1)
        union(g[2 * i], g[2 * i + 1])
    sizes: dict[int, int] = {}
    for v in range(size):
        r = find(v)
        sizes[r] = sizes.get(r, 0) + 1
    halves = []
    for s in sizes.values():
        assert s % 2 == 0, "odd component in Gamma(g): invariant violation"
        halves.append(s // 2)
    return CosetType(tuple(sorted(halves, reverse=True)))


@lru_cache(maxsize=None)
def _mn_character(mu: tuple[int, ...], rho: tuple[int, ...]) -> int:
    """Murnaghan-Nakayama recursion over border strips, via beta-sets."""
    if not rho:
        return 1
    r = rho[0]
    rest = rho[1:]
    l = len(mu)
    beta = [mu[i] + (l - 1 - i) for i in range(l)]
    beta_set = set(beta)
    total = 0
    for i, b in enumerate(beta):
        nb = b - r
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((beta_set - {b}) | {nb}, reverse=True)
        new_mu = tuple(new_beta[j] - (l - 1 - j) for j in range(l))
        new_mu = tuple(p for p in new_mu if p > 0)
        total += (-1) ** height * _mn_character(new_mu, rest)
    return total


def character_S2n(mu: tuple[int, ...], cls: tuple[int, ...]) -> int:
    """Irreducible character of S(N) at the class of cycle type ``cls``."""
    mu = tuple(mu)
    cls = tuple(sorted(cls, reverse=True))
    n_mu, n_cls = sum(mu), sum(cls)
    if n_mu != n_cls:
        raise DomainError(f"size mismatch: |mu| = {n_mu}, |class| = {n_cls}")
    if n_mu > CHARACTER_CAP:
        raise ResourceCapError(f"characters capped at S({CHARACTER_CAP})")
    return _mn_character(mu, cls)


def class_size(cls: tuple[int, ...]) -> int:
    """Size of the conjugacy class with cycle type ``cls`` in S(sum)."""
    n = sum(cls)
    mult: dict[int, int] = {}
    for k in cls:
        mult[k] = mult.get(k, 0) + 1
    denom = 1
    for k, m in mult.items():
        denom *= k**m * math.factorial(m)
    return math.factorial(n) // denom


def hyperoctahedral_group(n: int) -> list[Perm]:
    """All 2^n n! permutations preserving the base matching {2i-1, 2i}."""
    out = []
    for pi in itertools.permutations(range(n)):
        for flips in itertools.product((0, 1), repeat=n):
            img = [0] * (2 * n)
            for i in range(n):
                tgt = pi[i]
                img[2 * i] = 2 * tgt + flips[i]
                img[2 * i + 1] = 2 * tgt + 1 - flips[i]
            out.append(tuple(img))
    return out


@lru_cache(maxsize=8)
def _hyperoctahedral_cached(n: int) -> tuple[Perm, ...]:
    return tuple(hyperoctahedral_group(n))


def zonal_spherical(lam: YoungDiagram | tuple[int, ...], g: Perm) -> Fraction:
    """w^lam(g): the H(n)-average of the character chi^{2*lam}."""
    parts = lam.parts if isinstance(lam, YoungDiagram) else tuple(lam)
    n = sum(parts)
    if n > ZONAL_CAP:
        raise ResourceCapError(f"zonal spherical functions capped at n <= {ZONAL_CAP}")
    if len(g) != 2 * n:
        raise DomainError(f"g must permute {2 * n} points for |lam| = {n}")
    two_lam = tuple(2 * p for p in parts)
    H = _hyperoctahedral_cached(n)
    total = 0
    for h in H:
        total += character_S2n(two_lam, cycle_type(compose(g, h)))
    return Fraction(total, len(H))


def spherical_restriction(p: ZParams, n: int, g: Perm) -> float:
    """Restriction of the spherical function to S(2n):
    sum over |lam| = n of M^{(n)}_{z, zbar, 1/2}(lam) w^lam(g)."""
    if float(p.theta) != 0.5:
        raise ParameterError("the spherical function lives at theta = 1/2")
    if n > ZONAL_CAP:
        raise ResourceCapError(f"spherical restriction capped at n <= {ZONAL_CAP}")
    if len(g) != 2 * n:
        raise DomainError(f"g must permute {2 * n} points")
    total = 0.0
    for parts in iter_partition_tuples(n):
        lam = YoungDiagram(parts)
        total += z_measure(lam, p) * float(zonal_spherical(lam, g))
    return total


def ptilde(k: int, omega: ThomaPoint, theta: float) -> float:
    """Image of the k-th power sum on the Thoma set: k = 1 maps to 1,
    higher k to sum(alpha^k) + (-theta)^(k-1) sum(beta^k)."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if k == 1:
        return 1.0
    th = float(theta)
    return sum(a**k for a in omega.alpha) + (-th) ** (k - 1) * sum(
        b**k for b in omega.beta
    )


def extreme_character(
    omega: ThomaPoint, rho: CosetType | tuple[int, ...], theta: float = 0.5
) -> float:
    """Product of ptilde(k) over the parts k >= 2 of the coset type,
    with multiplicity; parts equal to 1 contribute a factor 1."""
    parts = rho.parts if isinstance(rho, CosetType) else tuple(rho)
    out = 1.0
    for k in parts:
        if k >= 2:
            out *= ptilde(k, omega, theta)
    return out
