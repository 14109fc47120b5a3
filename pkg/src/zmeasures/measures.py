"""z-measures, mixed z-measures, and brute-force lattice correlations.

The z-measure on partitions of n is

    M(lam) = n! |(z)_{lam,theta}|^2 / ((z zbar/theta)_n H(lam) H'(lam)),

evaluated in log-domain with exact-zero short-circuit.  Mixing over n
with negative-binomial weights gives a probability measure on all of Y,
whose lattice correlation functions are computed here by direct
enumeration with a certified truncation bound (the z-measure at each
size sums to exactly 1, so the discarded mass is exactly the
negative-binomial tail).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, ParameterError, ResourceCapError
from .partitions import (
    HALF,
    YoungDiagram,
    _as_fraction,
    iter_partition_tuples,
)

LATTICE_NMAX_CAP = 200


@dataclass(frozen=True)
class ZParams:
    """Parameters (z, theta, xi) shared by all measures and kernels."""

    z: complex
    theta: float = 0.5
    xi: float = 0.0

    def __post_init__(self):
        if self.z == 0:
            raise ParameterError("z must be nonzero")
        if not self.theta > 0:
            raise ParameterError(f"theta must be positive, got {self.theta}")
        if not (0 <= self.xi < 1):
            raise ParameterError(f"xi must lie in [0, 1), got {self.xi}")

    @property
    def t(self) -> float:
        """|z|^2, the parameter of the underlying t-measures."""
        return abs(self.z) ** 2

    @property
    def a(self) -> float:
        """z zbar / theta, the negative-binomial shape parameter."""
        return self.t / float(self.theta)


@dataclass(frozen=True)
class CorrelationReport:
    """Lattice correlation value with its certified truncation bound.

    The reported value is a lower bound; the true value lies in
    [value, value + truncation_bound].
    """

    value: float
    truncation_bound: float
    n_max_used: int
    terms_summed: int


class _MeasureEngine:
    """Per-(z, theta) evaluator with cached row-Pochhammer log tables."""

    def __init__(self, z: complex, theta: float):
        self.z = complex(z)
        self.theta = float(theta)
        self.a = abs(z) ** 2 / self.theta
        self._row_logs: list[list[float]] = []  # cumulative 2*log|factor|
        self._row_zero: list[int] = []  # first column count hitting a zero factor

    def _ensure_row(self, i: int, length: int):
        while len(self._row_logs) < i:
            self._row_logs.append([0.0])
            self._row_zero.append(1 << 60)
        row = self._row_logs[i - 1]
        base = self.z - (i - 1) * self.theta
        while len(row) <= length:
            j = len(row) - 1
            f = base + j
            af = abs(f)
            if af < 1e-300:
                self._row_zero[i - 1] = min(self._row_zero[i - 1], j + 1)
                row.append(-math.inf)
            else:
                row.append(row[-1] + 2.0 * math.log(af))

    def first_column_zero_row(self, max_rows_scan: int) -> int | None:
        """Smallest i with z - (i-1)theta = 0, scanned up to max_rows_scan."""
        for i in range(1, max_rows_scan + 1):
            if abs(self.z - (i - 1) * self.theta) < 1e-300:
                return i
        return None

    def first_row_zero_col(self, max_cols_scan: int) -> int | None:
        for j in range(1, max_cols_scan + 1):
            if abs(self.z + (j - 1)) < 1e-300:
                return j
        return None

    def measure(self, parts: tuple[int, ...]) -> float:
        """Probability mass of ``parts`` under the z-measure at its size."""
        n = sum(parts)
        if n == 0:
            raise DomainError("z-measure is defined on partitions of n >= 1")
        num = 0.0
        for i, p in enumerate(parts, start=1):
            self._ensure_row(i, p)
            if p >= self._row_zero[i - 1]:
                return 0.0
            num += self._row_logs[i - 1][p]
        # conjugate column counts
        width = parts[0]
        conj = [0] * width
        for p in parts:
            for j in range(p):
                conj[j] += 1
        # hook products as renormalized float products
        th = self.theta
        h = 1.0
        hp = 1.0
        hexp = 0.0
        for i, p in enumerate(parts, start=1):
            for j in range(1, p + 1):
                arm = p - j
                leg = conj[j - 1] - i
                h *= arm + leg * th + 1.0
                hp *= arm + leg * th + th
            if h > 1e250 or hp > 1e250 or hp < 1e-250:
                hexp += math.log(h) + math.log(hp)
                h = 1.0
                hp = 1.0
        logden = hexp + math.log(h) + math.log(hp)
        logden += math.lgamma(self.a + n) - math.lgamma(self.a)
        return math.exp(math.lgamma(n + 1) + num - logden)


_ENGINES: dict[tuple[complex, float], _MeasureEngine] = {}


def _engine(z: complex, theta: float) -> _MeasureEngine:
    key = (complex(z), float(theta))
    eng = _ENGINES.get(key)
    if eng is None:
        eng = _MeasureEngine(*key)
        _ENGINES[key] = eng
    return eng


def z_measure(lam: YoungDiagram, p: ZParams) -> float:
    """M^{(n)}_{z, zbar, theta}(lam) for n = |lam| >= 1."""
    if lam.size == 0:
        raise DomainError("z-measure requires |lam| >= 1")
    return _engine(p.z, float(p.theta)).measure(lam.parts)


def z_measure_symmetry_check(lam: YoungDiagram, p: ZParams) -> tuple[float, float]:
    """Both sides of M_{z,theta}(lam) = M_{-z/theta, 1/theta}(lam')."""
    lhs = z_measure(lam, p)
    th = float(p.theta)
    dual = ZParams(-p.z / th, 1.0 / th, p.xi)
    rhs = z_measure(lam.transpose(), dual)
    return (lhs, rhs)


def negative_binomial_weight(n: int, p: ZParams) -> float:
    """(1-xi)^{z zbar/theta} ((z zbar/theta)_n / n!) xi^n."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    xi = p.xi
    if xi == 0.0:
        return 1.0 if n == 0 else 0.0
    a = p.a
    logw = a * math.log1p(-xi)
    if n > 0:
        logw += math.lgamma(a + n) - math.lgamma(a) - math.lgamma(n + 1) + n * math.log(xi)
    return math.exp(logw)


def negative_binomial_tail(n_max: int, p: ZParams) -> float:
    """Certified upper bound on sum of weights for n > n_max."""
    xi = p.xi
    if xi == 0.0:
        return 0.0
    a = p.a
    total = 0.0
    n = n_max + 1
    w = negative_binomial_weight(n, p)
    while True:
        total += w
        q = xi * (a + n) / (n + 1)
        if q < 1.0 and w * q / (1.0 - q) < max(1e-18 * total, 1e-300):
            total += w * q / (1.0 - q)
            return total
        n += 1
        w *= xi * (a + n - 1) / n
        if n > n_max + 100000:
            raise ResourceCapError("negative-binomial tail summation did not close")


def mixed_z_measure(lam: YoungDiagram, p: ZParams) -> float:
    """Mixed z-measure: negative-binomial weight at |lam| times the
    z-measure; the empty diagram carries the n = 0 weight alone."""
    n = lam.size
    w = negative_binomial_weight(n, p)
    if n == 0 or w == 0.0:
        return w
    return w * z_measure(lam, p)


def _positive_coordinate_shifts(theta: Fraction, width: int) -> list[int]:
    """shift[j-1] = ceil((j-1)/theta): rows excluded from column j of the
    negative part."""
    shifts = []
    for j in range(1, width + 1):
        ratio = Fraction(j - 1, 1) / theta
        shifts.append(int(math.ceil(ratio)))
    return shifts


def _validate_lattice_points(X: Iterable) -> list[int]:
    """Convert X in Z_{>=0}+1/2 to the integers b = x - 1/2."""
    bs = []
    seen = set()
    for x in X:
        f = Fraction(x)
        if f.denominator != 2 or f < HALF:
            raise DomainError(
                f"lattice points must be half-integers >= 1/2, got {x}"
            )
        if f in seen:
            raise DomainError(f"lattice points must be distinct, got repeated {x}")
        seen.add(f)
        bs.append(int(f - HALF))
    if not bs:
        raise DomainError("X must be nonempty")
    return bs


def _stratum_sum(
    n: int,
    z: complex,
    theta: float,
    theta_frac: Fraction,
    target_bs: tuple[int, ...],
    max_rows: int | None,
    max_cols: int | None,
) -> tuple[float, int]:
    """Sum of z-measures over partitions of n whose positive coordinates
    contain all target points.  Returns (sum, matching diagram count)."""
    eng = _engine(z, theta)
    shifts = _positive_coordinate_shifts(theta_frac, n)
    total = 0.0
    count = 0
    bs = sorted(target_bs, reverse=True)
    for parts in iter_partition_tuples(n, cap=LATTICE_NMAX_CAP, max_rows=max_rows, max_cols=max_cols):
        width = parts[0]
        conj = [0] * width
        for q in parts:
            for j in range(q):
                conj[j] += 1
        ok = True
        for b in bs:
            found = False
            for j in range(width):
                v = conj[j] - shifts[j]
                if v <= 0:
                    break
                if v == b:
                    found = True
                    break
            if not found:
                ok = False
                break
        if not ok:
            continue
        m = eng.measure(parts)
        if m != 0.0:
            total += m
            count += 1
    return total, count


def lattice_correlation(
    X: Sequence,
    p: ZParams,
    n_max: int,
    workers: int | None = None,
) -> CorrelationReport:
    """Probability that (A|B)_theta(lam) contains X, under the mixed
    z-measure truncated at |lam| <= n_max.

    The truncation bound is the negative-binomial tail mass beyond
    n_max; diagrams whose measure vanishes identically because of a
    first-row or first-column Pochhammer zero are skipped exactly.
    """
    if n_max < 0 or n_max > LATTICE_NMAX_CAP:
        raise ResourceCapError(
            f"n_max must lie in [0, {LATTICE_NMAX_CAP}], got {n_max}"
        )
    target_bs = tuple(_validate_lattice_points(X))
    theta_frac = _as_fraction(p.theta)
    eng = _engine(p.z, float(p.theta))
    zero_row = eng.first_column_zero_row(n_max + 1)
    zero_col = eng.first_row_zero_col(n_max + 1)
    max_rows = None if zero_row is None else zero_row - 1
    max_cols = None if zero_col is None else zero_col - 1

    if workers is None:
        workers = int(os.environ.get("ZMEASURES_WORKERS", "1"))
    ns = list(range(1, n_max + 1))
    args = [
        (n, p.z, float(p.theta), theta_frac, target_bs, max_rows, max_cols)
        for n in ns
    ]
    if workers > 1 and len(ns) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as ex:
            strata = list(ex.map(_stratum_sum_star, args))
    else:
        strata = [_stratum_sum(*a) for a in args]

    value = 0.0
    terms = 0
    for n, (s, c) in zip(ns, strata):
        if s:
            value += negative_binomial_weight(n, p) * s
        terms += c
    bound = negative_binomial_tail(n_max, p)
    return CorrelationReport(value=value, truncation_bound=bound, n_max_used=n_max, terms_summed=terms)


def _stratum_sum_star(args):
    return _stratum_sum(*args)
