"""Truncated formal power series over exact rationals.

Every series carries an explicit ``valid_order``: the highest order whose
coefficient is trustworthy.  Operations never read a coefficient beyond the
valid order of their inputs, and each operation's output valid order follows
a fixed rule (min for ring operations, minus one for the downward shift).
This explicit ledger exists because the Verblunsky extraction loop loses
exactly one trustworthy order per step, and silently reading past the valid
order is the main correctness hazard of the whole computation.

Coefficients are ``fractions.Fraction`` throughout; arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction

CoefficientLike = Union[Fraction, int]


class ZeroConstantTerm(ValueError):
    """Reciprocal requested for a series whose constant term is zero."""


class NonzeroConstantTerm(ValueError):
    """Downward shift requested for a series whose constant term is not zero."""


class TruncatedSeries:
    """Dense power series with coefficients trusted through ``valid_order``.

    The stored coefficient list always has length ``valid_order + 1``;
    ``valid_order == -1`` means no coefficient is trustworthy.  Instances are
    immutable: all operations return new series.
    """

    __slots__ = ("_coeffs", "valid_order")

    def __init__(self, coefficients: Iterable[CoefficientLike], valid_order: int):
        if valid_order < -1:
            raise ValueError("valid_order must be >= -1")
        coeffs = [Fraction(c) for c in coefficients]
        n = valid_order + 1
        if len(coeffs) < n:
            # Missing trailing coefficients are exact zeros (polynomial input).
            coeffs.extend([Fraction(0)] * (n - len(coeffs)))
        else:
            del coeffs[n:]
        self._coeffs = tuple(coeffs)
        self.valid_order = valid_order

    @classmethod
    def constant(cls, value: CoefficientLike, valid_order: int) -> "TruncatedSeries":
        return cls([Fraction(value)], valid_order)

    @classmethod
    def zero(cls, valid_order: int) -> "TruncatedSeries":
        return cls([], valid_order)

    @property
    def coefficients(self) -> Sequence[Fraction]:
        return self._coeffs

    def coefficient(self, order: int) -> Fraction:
        """Coefficient of z**order; refuses to read beyond the valid order."""
        if order < 0:
            raise IndexError("negative order")
        if order > self.valid_order:
            raise IndexError(
                f"order {order} beyond valid_order {self.valid_order}"
            )
        return self._coeffs[order]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.valid_order == other.valid_order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._coeffs, self.valid_order))

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self._coeffs[:6])
        tail = ", ..." if len(self._coeffs) > 6 else ""
        return f"TruncatedSeries([{head}{tail}], valid_order={self.valid_order})"

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.valid_order, other.valid_order)
        a, b = self._coeffs, other._coeffs
        return TruncatedSeries([a[k] + b[k] for k in range(order + 1)], order)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.valid_order, other.valid_order)
        a, b = self._coeffs, other._coeffs
        return TruncatedSeries([a[k] - b[k] for k in range(order + 1)], order)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self._coeffs], self.valid_order)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        # Both factors have nonnegative valuation, so the Cauchy product
        # through the common valid order uses only trustworthy coefficients.
        order = min(self.valid_order, other.valid_order)
        a, b = self._coeffs, other._coeffs
        out = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(order + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return TruncatedSeries(out, order)

    def scale(self, factor: CoefficientLike) -> "TruncatedSeries":
        f = Fraction(factor)
        return TruncatedSeries([f * c for c in self._coeffs], self.valid_order)

    def add_constant(self, value: CoefficientLike) -> "TruncatedSeries":
        if self.valid_order < 0:
            return self
        v = Fraction(value)
        coeffs = list(self._coeffs)
        coeffs[0] += v
        return TruncatedSeries(coeffs, self.valid_order)

    # -- structural operations ----------------------------------------------

    def reciprocal(self) -> "TruncatedSeries":
        """Multiplicative inverse through the same valid order."""
        if self.valid_order < 0 or not self._coeffs[0]:
            raise ZeroConstantTerm("series has no invertible constant term")
        a = self._coeffs
        inv0 = 1 / a[0]
        out = [inv0]
        for n in range(1, self.valid_order + 1):
            acc = Fraction(0)
            for i in range(1, n + 1):
                ai = a[i]
                if ai:
                    acc += ai * out[n - i]
            out.append(-inv0 * acc)
        return TruncatedSeries(out, self.valid_order)

    def shift_down(self) -> "TruncatedSeries":
        """Divide by z; costs exactly one trustworthy order."""
        if self.valid_order < 0:
            raise NonzeroConstantTerm("series has no trustworthy constant term")
        if self._coeffs[0]:
            raise NonzeroConstantTerm(
                f"constant term {self._coeffs[0]} != 0, cannot divide by z"
            )
        return TruncatedSeries(self._coeffs[1:], self.valid_order - 1)

    def substitute_quartic(self) -> "TruncatedSeries":
        """Substitute z**4 for z.

        The gaps between surviving coefficients are exact zeros, so the
        output is trustworthy through 4*valid_order + 3.
        """
        order = 4 * self.valid_order + 3
        out = [Fraction(0)] * (order + 1)
        for k, c in enumerate(self._coeffs):
            out[4 * k] = c
        return TruncatedSeries(out, order)
