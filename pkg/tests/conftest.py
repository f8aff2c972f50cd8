"""Shared test oracles: exact-series Laguerre evaluation, quantum-number
chain enumeration, sign-change counting and quadrature overlaps."""

import math
from fractions import Fraction

from morsebound.morse import eigenfunction as morse_eigenfunction
from morsebound.specfun import integrate_halfline


def laguerre_series(n, alpha, x):
    """Finite-series Laguerre value with exact rational arithmetic.

    sum_k (-1)^k * binom(n + alpha, n - k) * x^k / k!, where the binomial is
    the product form valid for non-integer alpha.  Both alpha and x enter as
    exact binary fractions, so the only float rounding is the final cast.
    """
    a = Fraction(alpha)
    xf = Fraction(x)
    total = Fraction(0)
    for k in range(n + 1):
        binom = Fraction(1)
        for i in range(1, n - k + 1):
            binom *= (a + k + i) / i
        total += (-1) ** k * binom * xf ** k / math.factorial(k)
    return float(total)


def chain_count(dim, l):
    """Brute-force count of hyperspherical quantum-number chains for (D, l).

    The labels descend l = l_{D-1} >= l_{D-2} >= ... >= l_2 >= 0 with the
    innermost l_1 ranging over -l_2 .. +l_2.
    """
    if dim == 2:
        return 1 if l == 0 else 2
    if dim == 3:
        return 2 * l + 1
    return sum(chain_count(dim - 1, k) for k in range(l + 1))


def count_sign_changes(values):
    nodes = 0
    prev = 0.0
    for v in values:
        if v != 0.0:
            if prev != 0.0 and (v > 0.0) != (prev > 0.0):
                nodes += 1
            prev = v
    return nodes


def morse_overlap(params, state_a, state_b, tol=1e-11):
    """<psi_a | psi_b> over the whole line, split at x = 0 for the quadrature."""
    s_min = min(state_a.s, state_b.s)

    def right(x):
        return morse_eigenfunction(params, state_a, x) * morse_eigenfunction(params, state_b, x)

    def left(x):
        return morse_eigenfunction(params, state_a, -x) * morse_eigenfunction(params, state_b, -x)

    scale_right = 1.0 / (params.alpha * s_min)
    return (integrate_halfline(right, decay_scale=scale_right, tol=tol)
            + integrate_halfline(left, decay_scale=0.5 / params.alpha, tol=tol))


def radial_overlap(u_a, u_b, decay_scale, tol=1e-11):
    return integrate_halfline(lambda r: u_a(r) * u_b(r), decay_scale=decay_scale, tol=tol)
