"""Exact equality and sign tests for differences of monomial products.

The central question answered here: given integers alpha_i, beta_i and
natural exponents u_i, v_i, what is the sign of

    prod_i alpha_i^{u_i}  -  prod_i beta_i^{v_i}

without ever expanding the (potentially astronomically large) products?
Equality is decided combinatorially through a gcd-free basis; strict
inequality through interval enclosures of logarithms at adaptively
doubled precision.  Refinement terminates because two unequal products
of integers cannot have arbitrarily close logarithms.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import PreconditionError, PrecisionLimitError

_MAX_BITS_ENV = "FEWNO_MAX_BITS"
_DEFAULT_MAX_BITS = 1 << 20


@dataclass(frozen=True)
class GcdFreeBasis:
    """Pairwise-coprime integers > 1 with a factorization of each input.

    input i reconstructs exactly as prod_j gammas[j] ** exponent_matrix[i][j].
    """

    gammas: tuple[int, ...]
    exponent_matrix: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class LogInterval:
    """A dyadic enclosure [value - radius, value + radius] of a natural log."""

    value: Fraction
    radius: Fraction
    bits: int


def _refine_pairwise_coprime(items):
    """Shrink a multiset of integers > 1 to a pairwise-coprime set whose
    elements generate the same multiplicative span."""
    work = sorted(set(v for v in items if v > 1))
    changed = True
    while changed:
        changed = False
        for i in range(len(work)):
            for j in range(i + 1, len(work)):
                g = gcd(work[i], work[j])
                if g > 1:
                    a, b = work[i], work[j]
                    rest = [w for k, w in enumerate(work) if k not in (i, j)]
                    rest.extend(x for x in (a // g, g, b // g) if x > 1)
                    work = sorted(set(rest))
                    changed = True
                    break
            if changed:
                break
    return work


def gcd_free_basis(alphas) -> GcdFreeBasis:
    """Factor-refinement gcd-free basis of a list of integers >= 1."""
    alphas = [int(a) for a in alphas]
    if any(a < 1 for a in alphas):
        raise PreconditionError("gcd_free_basis requires integers >= 1")
    basis = _refine_pairwise_coprime(alphas)
    while True:
        matrix = []
        leftovers = []
        for a in alphas:
            row = []
            rem = a
            for g in basis:
                e = 0
                while rem % g == 0:
                    rem //= g
                    e += 1
                row.append(e)
            if rem > 1:
                leftovers.append(rem)
            matrix.append(tuple(row))
        if not leftovers:
            return GcdFreeBasis(tuple(basis), tuple(matrix))
        basis = _refine_pairwise_coprime(basis + leftovers)


def _check_product_lists(alphas, betas, us, vs):
    if not (len(alphas) == len(betas) == len(us) == len(vs)):
        raise PreconditionError("product description lists must share a length")
    if len(alphas) == 0:
        raise PreconditionError("empty product description")
    if any(u < 0 for u in us) or any(v < 0 for v in vs):
        raise PreconditionError("exponents must be natural numbers")
    for base, exp in list(zip(alphas, us)) + list(zip(betas, vs)):
        if base == 0 and exp == 0:
            raise PreconditionError("0^0 term is not defined")


def binomial_vanish(alphas, betas, us, vs) -> bool:
    """Whether prod alpha_i^{u_i} equals prod beta_i^{v_i} as integers.

    Decided without expanding: sign parity first, then comparison of
    exponent vectors over a common gcd-free basis of the magnitudes.
    """
    _check_product_lists(alphas, betas, us, vs)
    left_zero = any(a == 0 and u > 0 for a, u in zip(alphas, us))
    right_zero = any(b == 0 and v > 0 for b, v in zip(betas, vs))
    if left_zero or right_zero:
        return left_zero and right_zero
    left_neg = sum(u for a, u in zip(alphas, us) if a < 0) % 2
    right_neg = sum(v for b, v in zip(betas, vs) if b < 0) % 2
    if left_neg != right_neg:
        return False
    mags = [abs(a) for a in alphas] + [abs(b) for b in betas]
    basis = gcd_free_basis(mags)
    eta = len(basis.gammas)
    n = len(alphas)
    left = [0] * eta
    right = [0] * eta
    for i in range(n):
        for j in range(eta):
            left[j] += us[i] * basis.exponent_matrix[i][j]
            right[j] += vs[i] * basis.exponent_matrix[n + i][j]
    return left == right


def _atanh_enclosure(z: Fraction, prec: int):
    """(midpoint, radius) enclosure of atanh(z) for 0 <= z <= 1/3,
    radius <= 2^-prec."""
    if z == 0:
        return Fraction(0), Fraction(0)
    guard = prec + prec.bit_length() + 6
    scale = 1 << guard
    tol = Fraction(1, 1 << (prec + 2))
    zz = z * z
    power = z
    total = Fraction(0)
    k = 0
    rounding = Fraction(0)
    while True:
        term = power / (2 * k + 1)
        q = Fraction(round(term * scale), scale)
        total += q
        rounding += Fraction(1, 2 * scale)
        # geometric tail bound: remaining sum <= next power * 9/8 for z <= 1/3
        tail = power * zz * Fraction(9, 8)
        if tail <= tol:
            return total, tail + rounding
        power *= zz
        k += 1


def log_interval(n: int, bits: int) -> LogInterval:
    """A rigorous dyadic enclosure of ln(n) with radius <= 2^-bits.

    Argument reduction: with 2^k <= n < 2^(k+1) and z = (n-2^k)/(n+2^k),
    ln n = 2k*atanh(1/3) + 2*atanh(z), where z lies in [0, 1/3).
    """
    if n < 1:
        raise PreconditionError("log_interval requires n >= 1")
    if bits < 1:
        raise PreconditionError("log_interval requires bits >= 1")
    if n == 1:
        return LogInterval(Fraction(0), Fraction(1, 1 << (bits + 1)), bits)
    k = n.bit_length() - 1
    inner = bits + 2 * k.bit_length() + 6
    z = Fraction(n - (1 << k), n + (1 << k))
    ln2_mid, ln2_rad = _atanh_enclosure(Fraction(1, 3), inner)
    z_mid, z_rad = _atanh_enclosure(z, inner)
    mid = 2 * k * ln2_mid + 2 * z_mid
    rad = 2 * k * ln2_rad + 2 * z_rad
    scale = 1 << (bits + 3)
    rounded = Fraction(round(mid * scale), scale)
    rad += abs(rounded - mid) + Fraction(1, scale)
    assert rad <= Fraction(1, 1 << bits)
    return LogInterval(rounded, rad, bits)


_LOG_CACHE: dict = {}


def _cached_log(n, bits):
    key = (n, bits)
    li = _LOG_CACHE.get(key)
    if li is None:
        li = log_interval(n, bits)
        if len(_LOG_CACHE) < 4096:
            _LOG_CACHE[key] = li
    return li


def _log_sum_enclosure(bases, exps, bits):
    mid = Fraction(0)
    rad = Fraction(0)
    for base, exp in zip(bases, exps):
        if exp == 0 or base == 1:
            continue
        li = _cached_log(base, bits)
        mid += exp * li.value
        rad += exp * li.radius
    return mid, rad


def binomial_sign(alphas, betas, us, vs) -> int:
    """Exact sign of prod alpha_i^{u_i} - prod beta_i^{v_i}, bases >= 1.

    Interval arithmetic on the logarithms at doubling precision; ties are
    broken exactly by binomial_vanish, so 0 is returned iff the products
    are equal.  Raises PrecisionLimitError past the FEWNO_MAX_BITS budget.
    """
    _check_product_lists(alphas, betas, us, vs)
    if any(a < 1 for a in alphas) or any(b < 1 for b in betas):
        raise PreconditionError("binomial_sign requires bases >= 1")
    max_bits = int(os.environ.get(_MAX_BITS_ENV, _DEFAULT_MAX_BITS))
    bits = 32
    checked_equal = False
    while True:
        lm, lr = _log_sum_enclosure(alphas, us, bits)
        rm, rr = _log_sum_enclosure(betas, vs, bits)
        if lm - lr > rm + rr:
            return 1
        if lm + lr < rm - rr:
            return -1
        if not checked_equal:
            if binomial_vanish(alphas, betas, us, vs):
                return 0
            checked_equal = True
        bits *= 2
        if bits > max_bits:
            raise PrecisionLimitError(
                f"sign undecided at {max_bits} bits; raise {_MAX_BITS_ENV}"
            )
