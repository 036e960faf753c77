"""Schur algorithm with exact precision accounting.

Converts a Caratheodory series F into its Schur function f, extracts
Verblunsky parameters one per step, and exposes the first-return amplitude
series together with an independent renewal-equation oracle.

The engine works over real rational data (conjugation is the identity);
complex coins are handled numerically elsewhere.  Each Schur step consumes
exactly one trustworthy series order, which the TruncatedSeries ledger
enforces: running out of orders raises instead of silently truncating.

The step-n first-return amplitude is the order n-1 Taylor coefficient of f.
That offset is not an assumption: the renewal inversion of the moment
sequence is implemented independently below and the test suite asserts the
two paths coincide order by order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .series import TruncatedSeries


class ParameterOutOfDisk(ValueError):
    """An extracted parameter has modulus >= 1.

    Signals a finitely supported measure or corrupted input; the iteration
    cannot continue either way.
    """


class PrecisionExhausted(ValueError):
    """The iterate has no trustworthy orders left for another step."""


class InsufficientPrecision(ValueError):
    """More series orders were requested than the input can vouch for."""


@dataclass(frozen=True)
class SchurState:
    """Iterate of the Schur algorithm after ``step`` parameter extractions."""

    current: TruncatedSeries
    step: int = 0
    extracted: tuple[Fraction, ...] = ()


@dataclass(frozen=True)
class FirstReturnSeries:
    """Amplitudes of first return in exactly n steps, n = 1, 2, ...

    ``amplitudes[i]`` is the step i+1 amplitude.  The squared amplitudes must
    have partial sums bounded by one: their total is a return probability.
    """

    amplitudes: tuple[Fraction, ...]

    def __post_init__(self):
        total = Fraction(0)
        for a in self.amplitudes:
            total += a * a
            if total > 1:
                raise ValueError("cumulative return probability exceeds 1")


def schur_from_caratheodory(F: TruncatedSeries) -> TruncatedSeries:
    """Schur function f = (F - 1) / (z (F + 1)); valid order drops by one."""
    if F.valid_order < 0 or F.coefficient(0) != 1:
        raise ValueError("Caratheodory series must have constant term 1")
    numerator = F.add_constant(-1)
    denominator = F.add_constant(1)
    return (numerator * denominator.reciprocal()).shift_down()


def schur_step(state: SchurState) -> SchurState:
    """One Schur iteration: strip the constant term, Moebius-shift, divide by z."""
    f = state.current
    if f.valid_order < 1:
        raise PrecisionExhausted(
            f"valid_order {f.valid_order} at step {state.step}: cannot step again"
        )
    alpha = f.coefficient(0)
    if abs(alpha) >= 1:
        raise ParameterOutOfDisk(f"|alpha_{state.step}| = |{alpha}| >= 1")
    numerator = f.add_constant(-alpha)
    denominator = f.scale(-alpha).add_constant(1)
    nxt = (numerator * denominator.reciprocal()).shift_down()
    return SchurState(nxt, state.step + 1, state.extracted + (alpha,))


def _fraction_free_start(F: TruncatedSeries, length: int) -> tuple[list[int], list[int]]:
    """Integer numerator/denominator polynomials of f through ``length`` orders."""
    p_frac = [F.coefficient(k) for k in range(1, length + 1)]
    q_frac = [F.coefficient(k) for k in range(length)]
    q_frac[0] += 1
    scale = 1
    for c in p_frac + q_frac:
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    p = [int(c * scale) for c in p_frac]
    q = [int(c * scale) for c in q_frac]
    return p, q


def extract_verblunsky(F: TruncatedSeries, count: int) -> list[Fraction]:
    """First ``count`` Verblunsky parameters of the measure behind F, exactly.

    Equivalent to iterating schur_step ``count`` times, but carries the
    iterate as a ratio of two integer-coefficient polynomials: each step is
    then a linear combination plus a shift instead of a series reciprocal.
    The test suite pins the two routes to bit-identical results.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    if F.valid_order < count + 1:
        raise PrecisionExhausted(
            f"need valid_order >= {count + 1}, have {F.valid_order}"
        )
    if F.coefficient(0) != 1:
        raise ValueError("Caratheodory series must have constant term 1")
    p, q = _fraction_free_start(F, F.valid_order)
    out: list[Fraction] = []
    for step in range(count):
        p0, q0 = p[0], q[0]
        if abs(p0) >= q0:
            raise ParameterOutOfDisk(f"|alpha_{step}| >= 1")
        out.append(Fraction(p0, q0))
        m = len(p)
        # f' = (1/z) (q0 p - p0 q) / (q0 q - p0 p); the numerator's constant
        # term cancels exactly, so the shift is an index drop.
        new_p = [q0 * p[i] - p0 * q[i] for i in range(1, m)]
        new_q = [q0 * q[i] - p0 * p[i] for i in range(m - 1)]
        g = 0
        for v in new_p:
            g = math.gcd(g, v)
        for v in new_q:
            g = math.gcd(g, v)
        if g > 1:
            new_p = [v // g for v in new_p]
            new_q = [v // g for v in new_q]
        p, q = new_p, new_q
    return out


def first_return_series(f: TruncatedSeries, max_n: int) -> FirstReturnSeries:
    """First-return amplitudes for steps 1..max_n read off the Schur function."""
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    if max_n - 1 > f.valid_order:
        raise InsufficientPrecision(
            f"step {max_n} needs order {max_n - 1}, valid through {f.valid_order}"
        )
    return FirstReturnSeries(tuple(f.coefficient(n - 1) for n in range(1, max_n + 1)))


def renewal_first_return(
    moments: Sequence[Fraction], max_n: int
) -> FirstReturnSeries:
    """First-return amplitudes from the moment sequence alone.

    With r(z) = sum_n moments[n] z^n the first-return generating series is
    1 - 1/r(z); this uses nothing but the moments, making it an independent
    check on the Schur-function route.
    """
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    if len(moments) < max_n + 1:
        raise ValueError(f"need {max_n + 1} moments, got {len(moments)}")
    if Fraction(moments[0]) != 1:
        raise ValueError("zeroth moment must be 1")
    r = TruncatedSeries([Fraction(c) for c in moments[: max_n + 1]], max_n)
    a = TruncatedSeries.constant(1, max_n) - r.reciprocal()
    return FirstReturnSeries(tuple(a.coefficients[1:]))


def cumulative_return_probability(a: FirstReturnSeries) -> tuple[Fraction, ...]:
    """Partial sums of squared first-return amplitudes; monotone and <= 1."""
    out = []
    total = Fraction(0)
    for amp in a.amplitudes:
        total += amp * amp
        out.append(total)
    return tuple(out)
