"""Exact truncated formal power series in q over the integers.

A series is a frozen value: a truncation order N and the exact
coefficients of q^0 .. q^N.  Every operation returns a fresh series and
is exact for all exponents up to the truncation order.  Coefficients are
Python integers, so results never wrap or lose precision.

Combining series with different truncation orders is an error rather
than a silent re-truncation: long derivation chains must not lose
precision by accident.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

# Threshold under which a convolution provably fits in int64 (see _mul_numpy).
_INT64_SAFE = 1 << 62


class TruncationMismatch(ValueError):
    """Two series with different truncation orders were combined."""


@dataclass(frozen=True)
class QSeries:
    """Integer power series known exactly for exponents 0..trunc."""

    trunc: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.trunc < 0:
            raise ValueError("truncation order must be >= 0")
        if len(self.coeffs) != self.trunc + 1:
            raise ValueError(
                f"need {self.trunc + 1} coefficients, got {len(self.coeffs)}"
            )

    # -- basic access ----------------------------------------------------

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.trunc:
            raise IndexError(f"exponent {n} outside known range 0..{self.trunc}")
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, new_trunc: int) -> "QSeries":
        """Forget coefficients above new_trunc (new_trunc <= trunc)."""
        if new_trunc > self.trunc:
            raise ValueError("cannot extend a series by truncating")
        return QSeries(new_trunc, self.coeffs[: new_trunc + 1])

    def _check(self, other: "QSeries") -> None:
        if self.trunc != other.trunc:
            raise TruncationMismatch(
                f"orders differ: {self.trunc} vs {other.trunc}"
            )

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "QSeries") -> "QSeries":
        self._check(other)
        return QSeries(
            self.trunc, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "QSeries") -> "QSeries":
        self._check(other)
        return QSeries(
            self.trunc, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "QSeries":
        return QSeries(self.trunc, tuple(-a for a in self.coeffs))

    def scale(self, k: int) -> "QSeries":
        return QSeries(self.trunc, tuple(k * a for a in self.coeffs))

    def __mul__(self, other: "QSeries") -> "QSeries":
        self._check(other)
        n = self.trunc
        a, b = self.coeffs, other.coeffs
        nz_a = [j for j, c in enumerate(a) if c]
        nz_b = [j for j, c in enumerate(b) if c]
        if not nz_a or not nz_b:
            return zero(n)
        # Convolve from the sparser side.
        if len(nz_b) < len(nz_a):
            a, b, nz_a = b, a, nz_b
        out = _mul_numpy(a, b, nz_a, n)
        if out is None:
            out = [0] * (n + 1)
            for j in nz_a:
                c = a[j]
                for i in range(n + 1 - j):
                    out[j + i] += c * b[i]
        return QSeries(n, tuple(out))

    def pow(self, k: int) -> "QSeries":
        if k < 0:
            raise ValueError("negative power; use divide_exact")
        result = one(self.trunc)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divide_exact(self, other: "QSeries") -> "QSeries":
        """Quotient Q with Q * other == self; other must have unit constant term."""
        self._check(other)
        b0 = other.coeffs[0]
        if b0 not in (1, -1):
            raise ValueError("divisor constant term must be +1 or -1")
        n = self.trunc
        b = other.coeffs
        nz_b = [j for j in range(1, n + 1) if b[j]]
        q = [0] * (n + 1)
        for i in range(n + 1):
            acc = self.coeffs[i]
            for j in nz_b:
                if j > i:
                    break
                acc -= b[j] * q[i - j]
            q[i] = acc * b0  # b0 is +-1, so this is exact division
        return QSeries(n, tuple(q))

    # -- exponent transforms ----------------------------------------------

    def dilate(self, k: int) -> "QSeries":
        """Send q to q^k; exponents above the truncation order are dropped."""
        if k < 1:
            raise ValueError("dilation step must be >= 1")
        out = [0] * (self.trunc + 1)
        for j in range(self.trunc // k + 1):
            out[j * k] = self.coeffs[j]
        return QSeries(self.trunc, tuple(out))

    def alternate(self) -> "QSeries":
        """Send q to -q: negate every odd-exponent coefficient."""
        return QSeries(
            self.trunc,
            tuple(-c if j & 1 else c for j, c in enumerate(self.coeffs)),
        )

    def sift(self, t: int, s: int) -> "QSeries":
        """Keep coefficients at exponents congruent to s mod t, reindexed.

        Output coefficient k is the input coefficient at t*k + s; the
        output is truncated at floor((trunc - s) / t).
        """
        if not 0 <= s < t:
            raise ValueError("sift needs 0 <= s < t")
        if self.trunc < s:
            raise ValueError("series too short to sift at this residue")
        m = (self.trunc - s) // t
        return QSeries(m, tuple(self.coeffs[t * k + s] for k in range(m + 1)))

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"trunc": self.trunc, "coeffs": list(self.coeffs)}

    @staticmethod
    def from_json_dict(data: dict) -> "QSeries":
        return QSeries(int(data["trunc"]), tuple(int(c) for c in data["coeffs"]))


def _mul_numpy(a, b, nz_a, n):
    """int64 sparse-times-dense convolution when provably overflow-free.

    Every partial sum is bounded by len(nz_a) * max|a| * max|b|, so the
    result is exact whenever that bound stays below 2^62.  Returns None
    when the bound cannot be certified; callers then use the unbounded
    Python-integer path.
    """
    max_a = max(abs(a[j]) for j in nz_a)
    max_b = max(abs(c) for c in b)
    if max_a * max_b * len(nz_a) >= _INT64_SAFE:
        return None
    try:
        bb = np.array(b, dtype=np.int64)
    except OverflowError:  # pragma: no cover - guarded by the bound above
        return None
    out = np.zeros(n + 1, dtype=np.int64)
    for j in nz_a:
        out[j:] += a[j] * bb[: n + 1 - j]
    return [int(x) for x in out]


# -- constructors ---------------------------------------------------------


def zero(trunc: int) -> QSeries:
    return QSeries(trunc, (0,) * (trunc + 1))


def one(trunc: int) -> QSeries:
    return QSeries(trunc, (1,) + (0,) * trunc)


def monomial(trunc: int, exponent: int, coeff: int = 1) -> QSeries:
    if not 0 <= exponent <= trunc:
        raise ValueError("monomial exponent outside 0..trunc")
    out = [0] * (trunc + 1)
    out[exponent] = coeff
    return QSeries(trunc, tuple(out))


def phi(trunc: int, step: int = 1) -> QSeries:
    """Sum of q^(step*n^2) over all integers n."""
    out = [0] * (trunc + 1)
    out[0] = 1
    n = 1
    while step * n * n <= trunc:
        out[step * n * n] += 2
        n += 1
    return QSeries(trunc, tuple(out))


def psi(trunc: int, step: int = 1) -> QSeries:
    """Sum of q^(step*n(n+1)/2) over n >= 0."""
    out = [0] * (trunc + 1)
    n = 0
    while step * n * (n + 1) // 2 <= trunc:
        out[step * n * (n + 1) // 2] += 1
        n += 1
    return QSeries(trunc, tuple(out))


def theta_f(r: int, s: int, trunc: int) -> QSeries:
    """Two-parameter theta sum of q^(r*n(n-1)/2 + s*n(n+1)/2) over all n."""
    if r < 1 or s < 1:
        raise ValueError("theta parameters must be positive")
    out = [0] * (trunc + 1)
    bound = isqrt(4 * trunc // (r + s)) + 2
    for n in range(-bound, bound + 1):
        e = (r * n * (n - 1) + s * n * (n + 1)) // 2
        if 0 <= e <= trunc:
            out[e] += 1
    return QSeries(trunc, tuple(out))


def theta_f_product(r: int, s: int, trunc: int) -> QSeries:
    """Product form of theta_f via the triple product expansion."""
    if r < 1 or s < 1:
        raise ValueError("theta parameters must be positive")
    return prod_ap(
        [(r + s, r, 1, 1), (r + s, s, 1, 1), (r + s, r + s, -1, 1)], trunc
    )


def euler_e(step: int, trunc: int) -> QSeries:
    """Product of (1 - q^(step*j)) over j >= 1, expanded exactly."""
    if step < 1:
        raise ValueError("step must be >= 1")
    return prod_ap([(step, step, -1, 1)], trunc)


def prod_ap(factors, trunc: int) -> QSeries:
    """Expand a product of factors (1 + sign*q^(a*j+b))^e, j >= 0.

    Each factor is a tuple (a, b, sign, e) with a >= 1, b >= 1 (an
    exponent of zero at j = 0 is rejected), sign in {+1, -1} and e a
    nonzero integer; negative e divides instead of multiplying.
    """
    co = [0] * (trunc + 1)
    co[0] = 1
    for a, b, sign, e in factors:
        if a < 1:
            raise ValueError("factor step must be >= 1")
        if b < 1:
            raise ValueError(
                "factor offset must be >= 1 (a j=0 factor with exponent 0 "
                "is not a valid infinite-product term)"
            )
        if sign not in (1, -1):
            raise ValueError("factor sign must be +1 or -1")
        if e == 0:
            raise ValueError("factor exponent must be nonzero")
        for m in range(b, trunc + 1, a):
            for _ in range(abs(e)):
                if e > 0:
                    _mul_binomial(co, m, sign)
                else:
                    _div_binomial(co, m, sign)
    return QSeries(trunc, tuple(co))


def _mul_binomial(co, m, c):
    # In-place multiply by (1 + c*q^m); the comprehension reads the old
    # values of both slices before assignment.
    n1 = len(co)
    if c == 1:
        co[m:] = [x + y for x, y in zip(co[m:], co[: n1 - m])]
    else:
        co[m:] = [x - y for x, y in zip(co[m:], co[: n1 - m])]


def _div_binomial(co, m, c):
    # In-place divide by (1 + c*q^m): q[i] = a[i] - c*q[i-m], ascending.
    if c == 1:
        for i in range(m, len(co)):
            co[i] -= co[i - m]
    else:
        for i in range(m, len(co)):
            co[i] += co[i - m]
