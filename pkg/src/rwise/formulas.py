"""Exact evaluation of the closed forms and bounds.

Everything returns ``int`` or :class:`fractions.Fraction`.  The one real
quantity (a fractional root in one of the threshold constants) is carried as
an exact base/exponent pair together with a rational upper bound.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, isqrt

from .family import FamilyError, check_params


class BelowThresholdWarning(UserWarning):
    """Evaluated outside the parameter range where the bound is proved."""


def binomial(n: int, k: int) -> int:
    """C(n, k), and 0 whenever k < 0, n < 0 or k > n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def _grid_params(n: int, k: int, r: int, t: int) -> None:
    # pure arithmetic: no bitmask width limit
    check_params(n, k, r, t, bounded=False)
    if n < r + t:
        raise FamilyError(f"need n >= r + t = {r + t}, got n={n}")


def exact_count_G(n: int, k: int, r: int, t: int) -> int:
    """Number of (r+1, t)-triangles in G_{r,t}, by inclusion-exclusion.

    A triangle takes one member from each of r + 1 distinct blocks; the core
    parts then meet in exactly t - 1 elements, so the outside parts (s-subsets
    of the m outside elements) must have empty common intersection.
    """
    _grid_params(n, k, r, t)
    m, s = n - r - t, k - r - t + 1
    if s < 0 or s > m:
        return 0
    tuples = sum((-1) ** j * binomial(m, j) * binomial(m - j, s - j) ** (r + 1) for j in range(0, s + 1))
    return binomial(r + t, r + 1) * tuples


def lemma21_gate(n: int, k: int) -> bool:
    return n >= k**4


def lower_bound_L21(n: int, k: int, r: int, t: int) -> Fraction:
    """(999/1000) C(r+t, r+1) C(n-r-t, k-r-t+1)^(r+1)."""
    _grid_params(n, k, r, t)
    if not lemma21_gate(n, k):
        warnings.warn(f"n={n} < k^4={k**4}: lower bound not guaranteed", BelowThresholdWarning, stacklevel=2)
    return Fraction(999, 1000) * binomial(r + t, r + 1) * binomial(n - r - t, k - r - t + 1) ** (r + 1)


def size_bound_L22(n: int, k: int, t: int) -> int:
    """k^2 C(t+2, 2) C(n-t-2, k-t-2), the size cap when tau_t >= t + 2."""
    if not 1 <= t <= k - 2:
        raise FamilyError(f"need 1 <= t <= k - 2, got t={t}, k={k}")
    return k * k * binomial(t + 2, 2) * binomial(n - t - 2, k - t - 2)


_L24_CONSTANTS = {1: Fraction(6, 5), 2: Fraction(21, 10)}


def size_bounds_L24(n: int, k: int, t: int, case: int) -> Fraction:
    """Relaxed size caps for the three cover cases with tau_t = t + 1."""
    if case not in (1, 2, 3):
        raise FamilyError(f"case must be 1, 2 or 3, got {case!r}")
    if not 1 <= t <= k - 2:
        raise FamilyError(f"need 1 <= t <= k - 2, got t={t}, k={k}")
    const = _L24_CONSTANTS.get(case, Fraction(k + 1))
    return const * binomial(n - t - 1, k - t - 1)


def intersection_floor(r: int, s: int, t: int) -> int:
    """(r - 2)(s - t) + t: pairwise intersection guaranteed when tau_t = s."""
    if s < t:
        raise FamilyError(f"covering number s={s} cannot be below t={t}")
    return (r - 2) * (s - t) + t


def size_bound_L42(n: int, k: int, t: int, ell: int, s: int) -> Fraction:
    """((k-s+2)/(ell-s+2))^(s-1) C(k, ell) C(n-ell-s+t, k-ell-s+t).

    Caps an ell-intersecting family with tau_t >= s.
    """
    if ell < t:
        raise FamilyError(f"need ell >= t, got ell={ell}, t={t}")
    den = ell - s + 2
    if den <= 0:
        raise FamilyError(f"ell - s + 2 = {den} must be positive")
    ratio = Fraction(k - s + 2, den)
    return ratio ** (s - 1) * binomial(k, ell) * binomial(n - ell - s + t, k - ell - s + t)


def size_bound_L42_special(n: int, k: int, r: int, t: int) -> tuple[Fraction, int]:
    """The r-wise, tau_t = t + 1 case: (exact form, relaxed k^(r+2t-2) form)."""
    full = size_bound_L42(n, k, t, r + t - 2, t + 1)
    relaxed = k ** (r + 2 * t - 2) * binomial(n - r - t + 1, k - r - t + 1)
    return full, relaxed


# --------------------------------------------------------------------------
# thresholds n >= c k^d

def iroot_ceil(x: int, m: int) -> int:
    """Smallest integer y with y^m >= x (x >= 0)."""
    if x < 0 or m < 1:
        raise ValueError("need x >= 0 and m >= 1")
    if m == 1 or x < 2:
        return x
    if m == 2:
        y = isqrt(x)
        return y if y * y == x else y + 1
    y = 1 << ((x.bit_length() + m - 1) // m)
    # Newton from above converges to floor root
    while True:
        z = ((m - 1) * y + x // y ** (m - 1)) // m
        if z >= y:
            break
        y = z
    while y**m > x:
        y -= 1
    return y if y**m == x else y + 1


def root_upper(q: Fraction, m: int, digits: int = 12) -> Fraction:
    """A rational >= q^(1/m), within 10^-digits relative slack."""
    if q < 0:
        raise ValueError("root of a negative number")
    scale = 10**digits
    # q^(1/m) = (q * scale^m)^(1/m) / scale
    num = q.numerator * scale**m
    return Fraction(iroot_ceil(-(-num // q.denominator), m), scale)


@dataclass(frozen=True)
class ThresholdSpec:
    """c, d with the guarantee holding for n >= c k^d.

    ``c_base``/``c_root`` keep the exact form ``max(c_base^(1/c_root), 2)``
    when ``c`` involves a root; ``c`` is then a rational upper bound, which is
    the conservative direction for an ``n >= c k^d`` gate.
    """

    lemma: str
    c: Fraction
    d: Fraction
    c_exact: bool
    c_base: Fraction | None = None
    c_root: int | None = None

    def n0(self, k: int) -> Fraction:
        """Rational upper bound on c * k^d (exact when d is an integer)."""
        if self.d.denominator == 1:
            return self.c * k ** int(self.d)
        p, q = self.d.numerator, self.d.denominator
        return self.c * iroot_ceil(k**p, q)

    def holds(self, n: int, k: int) -> bool:
        return n >= self.n0(k)


def _at_least_two(num: Fraction) -> Fraction:
    return max(num, Fraction(2))


def threshold_n0(r: int, t: int, lemma: str) -> ThresholdSpec:
    """Constants (c, d) attached to the large-n guarantees for r >= 3."""
    lemma = str(lemma)
    if t < 1 or r < 2:
        raise FamilyError(f"need r >= 2 and t >= 1, got r={r}, t={t}")
    base = Fraction(1000 * 2 ** (r + 1), 999) / binomial(r + t, r + 1)
    if lemma == "4.3":
        if r < 3:
            raise FamilyError("the tau_t >= t + 2 threshold needs r >= 3")
        inner = Fraction(1000 * factorial(t - 1), 999 * factorial(r + t))
        root = (r + 1) * (r - 2)
        d = max(Fraction(3 * r + 2 * t - 5, r - 2), Fraction(1))
        if inner <= 1:
            # inner^(1/root) <= 1 < 2
            return ThresholdSpec("4.3", Fraction(2), d, True, inner, root)
        upper = root_upper(inner, root)
        return ThresholdSpec("4.3", max(upper, Fraction(2)), d, upper <= 2, inner, root)
    if lemma == "4.4":
        return ThresholdSpec("4.4", _at_least_two(base), Fraction(r * (r + 2 * t - 1)), True)
    if lemma == "4.5":
        return ThresholdSpec("4.5", _at_least_two(base * t), Fraction(r * (r + 2 * t - 2) + 1), True)
    if lemma == "4.6":
        return ThresholdSpec("4.6", _at_least_two(base), Fraction(r * (r + 2 * t - 1) + 2), True)
    raise FamilyError(f"unknown lemma {lemma!r}; expected 4.3, 4.4, 4.5 or 4.6")


def format_exact(x: int | Fraction) -> str:
    """Integer or reduced ``p/q``; never floating point."""
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(int(x))
