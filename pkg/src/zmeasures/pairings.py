"""Perfect matchings of {-n..-1, 1..n}: the coset space of the
hyperoctahedral subgroup, its t-measures, canonical projections, the
right symmetric-group action, and the fundamental cocycle.

A matching decomposes into "circles": starting from a symbol, alternate
a partner step with a negation step until the walk closes.  The number
of circles is the exponent of the t-measure weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import DomainError, ParameterError, ResourceCapError

MATCHING_ENUMERATION_CAP = 8


def symbols(n: int) -> list[int]:
    return list(range(-n, 0)) + list(range(1, n + 1))


@dataclass(frozen=True)
class Matching:
    """n unordered pairs partitioning {-n, ..., -1, 1, ..., n}."""

    pairs: tuple[tuple[int, int], ...]

    @staticmethod
    def from_pairs(pairs) -> "Matching":
        canon = tuple(sorted(tuple(sorted(p)) for p in pairs))
        return Matching(canon)

    def __post_init__(self):
        seen = set()
        for p in self.pairs:
            if len(p) != 2 or p[0] >= p[1]:
                raise DomainError(f"malformed pair {p}")
            seen.update(p)
        n = len(self.pairs)
        if seen != set(symbols(n)):
            raise DomainError(
                f"pairs must partition the signed symbols 1..{n}, got {self.pairs}"
            )
        if list(self.pairs) != sorted(self.pairs):
            raise DomainError("pairs must be in canonical sorted order")

    @property
    def n(self) -> int:
        return len(self.pairs)

    def partner_map(self) -> dict[int, int]:
        m = {}
        for a, b in self.pairs:
            m[a] = b
            m[b] = a
        return m


def enumerate_matchings(n: int) -> list[Matching]:
    """All (2n-1)!! matchings, in the order produced by repeatedly
    pairing the smallest unmatched symbol with each larger one."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if n > MATCHING_ENUMERATION_CAP:
        raise ResourceCapError(
            f"matching enumeration capped at n <= {MATCHING_ENUMERATION_CAP}, got {n}"
        )

    def rec(remaining: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
        if not remaining:
            yield ()
            return
        first = remaining[0]
        for idx in range(1, len(remaining)):
            mate = remaining[idx]
            rest = remaining[1:idx] + remaining[idx + 1 :]
            for tail in rec(rest):
                yield ((first, mate),) + tail

    return [Matching.from_pairs(ps) for ps in rec(tuple(symbols(n)))]


def cycle_count(x: Matching) -> int:
    """Number of circles in the arrow-configuration decomposition.

    Walks alternate partner and negation steps; the walk from s visits
    partner(s), then -partner(s), and so on.  Each circle is seen once
    when starting points run over unvisited positive symbols.
    """
    partner = x.partner_map()
    visited: set[int] = set()
    circles = 0
    for start in range(1, x.n + 1):
        if start in visited:
            continue
        circles += 1
        # s -> -partner(s) is a bijection, so the walk closes at start
        s = start
        while True:
            t = partner[s]
            visited.add(abs(s))
            visited.add(abs(t))
            s = -t
            if s == start:
                break
    return circles


def t_measure(x: Matching, t: float) -> float:
    """t^{circles} / (t (t+2) ... (t+2n-2))."""
    if not t > 0:
        raise ParameterError(f"t must be positive, got {t}")
    num = t ** cycle_count(x)
    den = 1.0
    for k in range(x.n):
        den *= t + 2 * k
    return num / den


def project(xp: Matching) -> Matching:
    """Canonical projection X(n+1) -> X(n): delete the pair {-n-1, n+1},
    or splice the two pairs containing -n-1 and n+1 into one."""
    n1 = xp.n
    if n1 < 2:
        raise DomainError("projection needs n+1 >= 2")
    top, bot = n1, -n1
    partner = xp.partner_map()
    if partner[top] == bot:
        pairs = [p for p in xp.pairs if top not in p and bot not in p]
        return Matching.from_pairs(pairs)
    i_m = partner[bot]
    i_k = partner[top]
    pairs = [p for p in xp.pairs if top not in p and bot not in p]
    pairs.append((i_m, i_k))
    return Matching.from_pairs(pairs)


def act(x: Matching, g: Mapping[int, int]) -> Matching:
    """Right action: apply g inside every pair."""
    n = x.n
    syms = set(symbols(n))
    if set(g.keys()) != syms or set(g.values()) != syms:
        raise DomainError("g must be a bijection of the 2n signed symbols")
    return Matching.from_pairs((g[a], g[b]) for a, b in x.pairs)


def extend_permutation(g: Mapping[int, int], m: int) -> dict[int, int]:
    """Extend g to the 2m signed symbols, fixing the new ones."""
    out = {s: s for s in symbols(m)}
    for k, v in g.items():
        out[k] = v
    return out


def cocycle(x: Matching, g: Mapping[int, int], support: int | None = None) -> int:
    """c(x; g) = [x . g] - [x] for g supported on the first 2n symbols.

    ``support`` is the claimed n; the matching may live at any level
    m >= n and the value does not depend on m.
    """
    m = x.n
    if support is None:
        support = max((abs(s) for s in g if g[s] != s), default=1)
    if support > m:
        raise DomainError(f"matching level {m} below the support {support} of g")
    for s in symbols(m):
        if abs(s) > support and g.get(s, s) != s:
            raise DomainError(f"g moves symbol {s} outside its declared support")
    gm = extend_permutation(g, m)
    return cycle_count(act(x, gm)) - cycle_count(x)


def preimages(x: Matching, level_up: list[Matching] | None = None) -> list[Matching]:
    """All elements of X(n+1) projecting onto x."""
    n = x.n
    if level_up is None:
        level_up = enumerate_matchings(n + 1)
    return [xp for xp in level_up if project(xp) == x]
