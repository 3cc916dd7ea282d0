"""Exact representation counts and theta series of definite quadratic forms.

All enumeration bounds are derived in integer arithmetic (isqrt on exact
discriminants), never floating point, so every reported count is provably
complete.  Ternary forms are written a*x^2 + b*y^2 + c*z^2 + d*yz + e*zx
+ f*xy and binary forms a*m^2 + b*mn + c*n^2, optionally with a linear
part (u, v) and a constant shift added to the exponent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

import numpy as np

from .qseries import QSeries


@dataclass(frozen=True)
class TernaryForm:
    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    def __post_init__(self) -> None:
        if not self.is_positive_definite():
            raise ValueError(f"form {self.as_tuple()} is not positive definite")

    def is_positive_definite(self) -> bool:
        a, b, c, d, e, f = self.as_tuple()
        if a <= 0 or 4 * a * b - f * f <= 0:
            return False
        return self.gram2_det() > 0

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    def gram2(self) -> tuple[tuple[int, int, int], ...]:
        """Doubled Gram matrix (symmetric, even diagonal)."""
        a, b, c, d, e, f = self.as_tuple()
        return ((2 * a, f, e), (f, 2 * b, d), (e, d, 2 * c))

    def gram2_det(self) -> int:
        a, b, c, d, e, f = self.as_tuple()
        return 2 * (4 * a * b * c + d * e * f - a * d * d - b * e * e - c * f * f)

    def disc(self) -> int:
        """Half the determinant of the doubled Gram matrix (always integral)."""
        det = self.gram2_det()
        assert det % 2 == 0
        return det // 2

    def value(self, x: int, y: int, z: int) -> int:
        a, b, c, d, e, f = self.as_tuple()
        return (
            a * x * x + b * y * y + c * z * z
            + d * y * z + e * z * x + f * x * y
        )

    def bilinear(self, u, v) -> int:
        """u^T G v for the doubled Gram G, i.e. Q(u+v) - Q(u) - Q(v)."""
        g = self.gram2()
        return sum(u[i] * g[i][j] * v[j] for i in range(3) for j in range(3))

    def __str__(self) -> str:
        return "({},{},{},{},{},{})".format(*self.as_tuple())


@dataclass(frozen=True)
class BinaryForm:
    """a*m^2 + b*mn + c*n^2, plus an optional affine part u*m + v*n + w."""

    a: int
    b: int
    c: int
    linear: tuple[int, int] = (0, 0)
    const: int = 0

    def __post_init__(self) -> None:
        if self.a <= 0 or self.b * self.b - 4 * self.a * self.c >= 0:
            raise ValueError(
                f"binary quadratic part ({self.a},{self.b},{self.c}) "
                "is not positive definite"
            )

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def value(self, m: int, n: int) -> int:
        u, v = self.linear
        return (
            self.a * m * m + self.b * m * n + self.c * n * n
            + u * m + v * n + self.const
        )


@dataclass(frozen=True)
class Constraint:
    """Admissible residue tuples for the variables, modulo a fixed modulus."""

    modulus: int
    allowed: frozenset = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError("constraint modulus must be >= 1")
        arities = {len(t) for t in self.allowed}
        if len(arities) > 1:
            raise ValueError("constraint tuples have inconsistent arity")
        for t in self.allowed:
            if any(not 0 <= r < self.modulus for r in t):
                raise ValueError("constraint residues must lie in [0, modulus)")

    def arity(self) -> int | None:
        for t in self.allowed:
            return len(t)
        return None


def _x_range(aa: int, bb: int, cc: int, n: int):
    """Integer solutions of aa*x^2 + bb*x + cc <= n (aa > 0), as lo, hi.

    With disc = bb^2 - 4*aa*(cc-n) and s = isqrt(disc), the admissible
    integers are exactly -((bb+s)//(2aa)) .. (-bb+s)//(2aa): an integer
    multiple of 2aa can never fall strictly between the integer bb+s and
    the real bb+sqrt(disc), so the floors agree.
    """
    disc = bb * bb - 4 * aa * (cc - n)
    if disc < 0:
        return 1, 0
    s = isqrt(disc)
    return -((bb + s) // (2 * aa)), (-bb + s) // (2 * aa)


def _ternary_points(form: TernaryForm, bound: int):
    """Yield (x, y, z, value) for all integer triples with value <= bound."""
    a, b, c, d, e, f = form.as_tuple()
    disc = form.disc()
    # After completing the square in x: P2(y,z) <= 4*a*bound with
    # P2 = (4ab-f^2) y^2 + (4ad-2ef) yz + (4ac-e^2) z^2, and
    # 4*(4ab-f^2)*(4ac-e^2) - (4ad-2ef)^2 = 16*a*disc.
    a2 = 4 * a * b - f * f
    b2 = 4 * a * d - 2 * e * f
    c2 = 4 * a * c - e * e
    if bound < 0:
        return
    zmax = isqrt(a2 * bound // disc)
    for z in range(-zmax, zmax + 1):
        ylo, yhi = _x_range(a2, b2 * z, c2 * z * z - 4 * a * bound, 0)
        for y in range(ylo, yhi + 1):
            b1 = f * y + e * z
            c1 = b * y * y + c * z * z + d * y * z
            xlo, xhi = _x_range(a, b1, c1, bound)
            val = a * xlo * xlo + b1 * xlo + c1
            step = a * (2 * xlo + 1) + b1
            for x in range(xlo, xhi + 1):
                yield x, y, z, val
                val += step
                step += 2 * a


def theta_series_ternary(
    form: TernaryForm, trunc: int, constraint: Constraint | None = None
) -> QSeries:
    """Theta series: coefficient of q^n counts triples with form value n."""
    out = [0] * (trunc + 1)
    if constraint is None:
        for _x, _y, _z, val in _ternary_points(form, trunc):
            out[val] += 1
    else:
        if constraint.arity() not in (None, 3):
            raise ValueError("constraint arity does not match 3 variables")
        mod = constraint.modulus
        allowed = constraint.allowed
        for x, y, z, val in _ternary_points(form, trunc):
            if (x % mod, y % mod, z % mod) in allowed:
                out[val] += 1
    return QSeries(trunc, tuple(out))


def _binary_points(bform: BinaryForm, bound: int):
    """Yield (m, n, value) over all integer pairs with value <= bound."""
    a, b, c = bform.a, bform.b, bform.c
    u, v = bform.linear
    w = bform.const
    # Minimizing over m first: n is admissible iff
    # (4ac-b^2) n^2 + (4av-2bu) n + (4aw-u^2-4a*bound) <= 0.
    nlo, nhi = _x_range(
        4 * a * c - b * b, 4 * a * v - 2 * b * u, 4 * a * w - u * u, 4 * a * bound
    )
    for n in range(nlo, nhi + 1):
        b1 = b * n + u
        c1 = c * n * n + v * n + w
        mlo, mhi = _x_range(a, b1, c1, bound)
        val = a * mlo * mlo + b1 * mlo + c1
        step = a * (2 * mlo + 1) + b1
        for m in range(mlo, mhi + 1):
            yield m, n, val
            val += step
            step += 2 * a


def theta_series_binary(
    bform: BinaryForm, trunc: int, constraint: Constraint | None = None
) -> QSeries:
    """Theta series of a binary form, affine part included in the exponent.

    An affine instance that reaches a negative exponent signals a
    misconfigured series and raises.
    """
    out = [0] * (trunc + 1)
    if constraint is not None and constraint.arity() not in (None, 2):
        raise ValueError("constraint arity does not match 2 variables")
    mod = constraint.modulus if constraint is not None else 1
    allowed = constraint.allowed if constraint is not None else None
    for m, n, val in _binary_points(bform, trunc):
        if val < 0:
            raise ValueError(
                f"affine exponent {val} is negative at (m,n)=({m},{n})"
            )
        if allowed is not None and (m % mod, n % mod) not in allowed:
            continue
        out[val] += 1
    return QSeries(trunc, tuple(out))


def constrained_theta(form, constraint: Constraint, trunc: int) -> QSeries:
    """Theta series restricted to residue tuples admitted by the constraint."""
    if isinstance(form, TernaryForm):
        if constraint.arity() not in (None, 3):
            raise ValueError("constraint arity does not match 3 variables")
        return theta_series_ternary(form, trunc, constraint)
    if isinstance(form, BinaryForm):
        if constraint.arity() not in (None, 2):
            raise ValueError("constraint arity does not match 2 variables")
        return theta_series_binary(form, trunc, constraint)
    raise TypeError("form must be TernaryForm or BinaryForm")


def rep_count_ternary(form: TernaryForm, n) -> int:
    """Exact number of integer triples representing n; 0 off the integers."""
    if isinstance(n, float):
        if not n.is_integer():
            return 0
        n = int(n)
    elif isinstance(n, Fraction):
        if n.denominator != 1:
            return 0
        n = n.numerator
    if n < 0:
        return 0
    if n == 0:
        return 1
    a, b, c, d, e, f = form.as_tuple()
    disc = form.disc()
    a2 = 4 * a * b - f * f
    b2 = 4 * a * d - 2 * e * f
    c2 = 4 * a * c - e * e
    count = 0
    zmax = isqrt(a2 * n // disc)
    for z in range(-zmax, zmax + 1):
        ylo, yhi = _x_range(a2, b2 * z, c2 * z * z - 4 * a * n, 0)
        for y in range(ylo, yhi + 1):
            b1 = f * y + e * z
            c1 = b * y * y + c * z * z + d * y * z
            disc_x = b1 * b1 - 4 * a * (c1 - n)
            if disc_x < 0:
                continue
            s = isqrt(disc_x)
            if s * s != disc_x:
                continue
            for sign in ((s,) if s == 0 else (s, -s)):
                num = -b1 + sign
                if num % (2 * a) == 0:
                    count += 1
    return count


_I3 = None


def identity_form() -> TernaryForm:
    """The sum of three squares form x^2 + y^2 + z^2."""
    global _I3
    if _I3 is None:
        _I3 = TernaryForm(1, 1, 1, 0, 0, 0)
    return _I3


def s_of_n(n) -> int:
    """Number of representations of n as a sum of three squares."""
    return rep_count_ternary(identity_form(), n)


def s_table(n_max: int) -> np.ndarray:
    """s(0..n_max) in one sweep: enumerate all (a,b) pairs, then fold in z^2.

    Works in int64; counts here stay far below 2^40 so no overflow is
    possible (r2 <= 4*d(n), s(n) <= sum of r2 values at one index).
    """
    r2 = np.zeros(n_max + 1, dtype=np.int64)
    top = isqrt(n_max)
    squares = np.arange(top + 1, dtype=np.int64) ** 2
    for a in range(top + 1):
        rem = n_max - a * a
        k = isqrt(rem)
        idx = a * a + squares[: k + 1]
        w = np.full(k + 1, 2, dtype=np.int64)
        w[0] = 1
        if a > 0:
            w *= 2
        r2[idx] += w
    s = np.zeros(n_max + 1, dtype=np.int64)
    for z in range(top + 1):
        m = z * z
        w = 2 if z > 0 else 1
        s[m:] += w * r2[: n_max + 1 - m]
    return s


def borwein_a(trunc: int, step: int = 1) -> QSeries:
    """Theta series of m^2 + mn + n^2 in q^step."""
    return theta_series_binary(BinaryForm(step, step, step), trunc)


def short_vectors(form: TernaryForm, bound: int):
    """All integer triples v != 0 with form(v) <= bound, with their values."""
    return [
        ((x, y, z), val)
        for x, y, z, val in _ternary_points(form, bound)
        if (x, y, z) != (0, 0, 0)
    ]
