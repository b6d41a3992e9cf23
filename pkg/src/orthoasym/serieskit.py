"""Truncated power series and the coefficient generator of the simple
Bessel-type Laguerre expansion.

Coefficients may be floats or :class:`fractions.Fraction`; every operation
below uses only field arithmetic, except that ``exp``/``log``/``pow`` of a
series with a non-trivial constant term need the corresponding real function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import DomainError

BERNOULLI_DEPTH = 40
DEFAULT_ORDER = 16
MAX_ORDER = 20


@dataclass(frozen=True)
class SeriesPoly:
    """sum_{k=0}^{order} coeffs[k] s^k; terms beyond ``order`` are dropped."""

    coeffs: tuple
    order: int

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValueError(f"expected {self.order + 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def of(cls, coeffs: Sequence, order: int | None = None) -> SeriesPoly:
        if order is None:
            order = len(coeffs) - 1
        c = list(coeffs[: order + 1])
        c += [0] * (order + 1 - len(c))
        return cls(tuple(c), order)

    @classmethod
    def constant(cls, value, order: int) -> SeriesPoly:
        return cls.of([value], order)

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def __len__(self) -> int:
        return self.order + 1

    def _pair(self, other):
        if isinstance(other, SeriesPoly):
            if other.order != self.order:
                raise ValueError("series orders differ")
            return other.coeffs
        return (other,) + (0,) * self.order

    def __add__(self, other) -> SeriesPoly:
        o = self._pair(other)
        return SeriesPoly(tuple(a + b for a, b in zip(self.coeffs, o)), self.order)

    __radd__ = __add__

    def __neg__(self) -> SeriesPoly:
        return SeriesPoly(tuple(-a for a in self.coeffs), self.order)

    def __sub__(self, other) -> SeriesPoly:
        return self + (-other if isinstance(other, SeriesPoly) else -other)

    def __mul__(self, other) -> SeriesPoly:
        if not isinstance(other, SeriesPoly):
            return SeriesPoly(tuple(a * other for a in self.coeffs), self.order)
        b = self._pair(other)
        a = self.coeffs
        out = []
        for n in range(self.order + 1):
            acc = 0
            for k in range(n + 1):
                acc += a[k] * b[n - k]
            out.append(acc)
        return SeriesPoly(tuple(out), self.order)

    __rmul__ = __mul__

    def evaluate(self, s):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * s + c
        return acc


def series_exp(a: SeriesPoly) -> SeriesPoly:
    """exp(a) to the order of ``a``."""
    c = a.coeffs
    b0 = c[0] + 1 if c[0] == 0 else math.exp(c[0])  # keeps Fractions exact
    b = [b0]
    for n in range(1, a.order + 1):
        acc = 0
        for k in range(1, n + 1):
            acc += k * c[k] * b[n - k]
        b.append(acc / n)
    return SeriesPoly(tuple(b), a.order)


def series_log(a: SeriesPoly) -> SeriesPoly:
    """log(a); needs a positive constant term."""
    c = a.coeffs
    if not c[0] > 0:
        raise DomainError("series_log needs a positive constant term")
    b = [c[0] - 1 if c[0] == 1 else math.log(c[0])]
    for n in range(1, a.order + 1):
        acc = 0
        for k in range(1, n):
            acc += k * b[k] * c[n - k]
        b.append((c[n] - acc / n) / c[0])
    return SeriesPoly(tuple(b), a.order)


def series_pow(a: SeriesPoly, r) -> SeriesPoly:
    """a**r for real r; needs a positive constant term."""
    c = a.coeffs
    if not c[0] > 0:
        raise DomainError("series_pow needs a positive constant term")
    b0 = c[0] if c[0] == 1 else c[0] ** r
    b = [b0]
    for n in range(1, a.order + 1):
        acc = 0
        for k in range(1, n + 1):
            acc += ((r + 1) * k - n) * c[k] * b[n - k]
        b.append(acc / (n * c[0]))
    return SeriesPoly(tuple(b), a.order)


@lru_cache(maxsize=1)
def bernoulli_table() -> tuple[Fraction, ...]:
    """B_0, B_2, ..., B_40 as exact rationals (entry k is B_{2k})."""
    n_max = BERNOULLI_DEPTH
    b = [Fraction(1)]
    for m in range(1, n_max + 1):
        acc = Fraction(0)
        binom = 1
        for k in range(m):
            acc += binom * b[k]
            binom = binom * (m + 1 - k) // (k + 1)
        b.append(-acc / (m + 1))
    return tuple(b[2 * k] for k in range(n_max // 2 + 1))


@lru_cache(maxsize=None)
def _building_blocks(order: int) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Exact series of g(s) = 1/s - 1/(e^s - 1) - 1/2 and ln(s / (1 - e^{-s}))."""
    bern = bernoulli_table()
    g = [Fraction(0)] * (order + 1)
    lg = [Fraction(0)] * (order + 1)
    if order >= 1:
        lg[1] = Fraction(1, 2)
    for k in range(1, order // 2 + 2):
        fact = math.factorial(2 * k)
        if 2 * k - 1 <= order:
            g[2 * k - 1] = -bern[k] / fact
        if 2 * k <= order:
            lg[2 * k] = -bern[k] / (2 * k * fact)
    return tuple(g), tuple(lg)


def laguerre_f_series(x, alpha, order: int = DEFAULT_ORDER) -> SeriesPoly:
    """Series of f(x, s) = exp(x g(s)) (s / (1 - e^{-s}))^{alpha + 1} in s.

    Exact when ``x`` and ``alpha`` are Fractions.
    """
    if order > MAX_ORDER:
        raise DomainError(f"order {order} exceeds the Bernoulli table depth")
    g, lg = _building_blocks(order)
    c = alpha + 1
    expo = SeriesPoly(tuple(x * gi + c * li for gi, li in zip(g, lg)), order)
    return series_exp(expo)


def laguerre_ck_coeffs(x: float, alpha: float, K: int = DEFAULT_ORDER) -> list[float]:
    """c_0(x) .. c_K(x) of the simple Bessel-type Laguerre expansion."""
    if K > MAX_ORDER:
        raise DomainError(f"K={K} exceeds {MAX_ORDER}")
    return [float(v) for v in laguerre_f_series(float(x), float(alpha), K).coeffs]


def _poch(a, k: int):
    out = 1
    for j in range(k):
        out *= a + j
    return out


def assemble_ab(c: Sequence, x, alpha, kmax: int) -> tuple[list, list]:
    """a_k, b_k for k <= kmax from c_0 .. c_{2 kmax + 1}."""
    if len(c) < 2 * kmax + 2:
        raise DomainError(f"need c_0..c_{2 * kmax + 1}, got {len(c)} coefficients")
    cc = alpha + 1
    a_out, b_out = [], []
    for k in range(kmax + 1):
        a = b = 0
        xm = 1
        for m in range(k + 1):
            binom = math.comb(k, m)
            a += binom * _poch(m + 1 - cc, k - m) * xm * c[k + m]
            b += binom * _poch(m + 2 - cc, k - m) * xm * c[k + m + 1]
            xm *= x
        a_out.append(a)
        b_out.append(b)
    return a_out, b_out


def laguerre_ab_coeffs(x: float, alpha: float, kmax: int) -> tuple[list[float], list[float]]:
    """(a_0..a_kmax, b_0..b_kmax) with c = alpha + 1."""
    c = laguerre_ck_coeffs(x, alpha, 2 * kmax + 1)
    return assemble_ab(c, float(x), float(alpha), kmax)
