"""Exact polynomial and truncated power-series arithmetic.

Two layers, both over arbitrary-precision integers:

* ``IntPoly`` -- a dense univariate polynomial in ``t``, coefficients indexed
  by exponent starting with the constant term.
* ``PolySeries`` -- a power series in a second variable ``u`` truncated at a
  fixed order (inclusive), whose coefficients are ``IntPoly`` values.

Everything is immutable and exact; no floats anywhere.  The module also
houses the two solver primitives shared by the higher layers: the coefficient
recurrence for the series root ``F`` of ``u*(1 - u + t*u)*F^2 - F + 1 = 0``
and the reflection trick that extracts a low-degree polynomial ``P`` from an
identity ``t^r * P(1/t) - P(t) = q(t)``.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Union


@dataclasses.dataclass(frozen=True, init=False)
class IntPoly:
    """Polynomial in t with integer coefficients, stored densely.

    ``coeffs[k]`` is the coefficient of ``t^k``; the top stored coefficient is
    always nonzero, and the zero polynomial stores the empty tuple.

    >>> IntPoly((1, 0, 2)) * IntPoly((0, 1))
    IntPoly((0, 1, 0, 2))
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        """Coefficient of t^k, zero outside the stored window."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: Union[IntPoly, int]) -> IntPoly:
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __sub__(self, other: Union[IntPoly, int]) -> IntPoly:
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[k] - other[k] for k in range(n))

    def __rsub__(self, other: Union[IntPoly, int]) -> IntPoly:
        return _as_poly(other) - self

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __mul__(self, other: Union[IntPoly, int]) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPoly:
        if n < 0:
            raise ValueError("negative polynomial power")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, k: int) -> IntPoly:
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return IntPoly((0,) * k + self.coeffs)

    def evaluate(self, x: int) -> int:
        """Exact integer evaluation by Horner's scheme."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def constant_term(self) -> int:
        return self[0]

    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = "t" if mag == 1 else f"{mag}*t"
            else:
                body = f"t^{k}" if mag == 1 else f"{mag}*t^{k}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def _as_poly(value: Union[IntPoly, int]) -> IntPoly:
    if isinstance(value, IntPoly):
        return value
    return IntPoly((value,))


ZERO = IntPoly()
ONE = IntPoly((1,))
T = IntPoly((0, 1))


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact product of two polynomials."""
    return a * b


def poly_reverse(r: int, p: IntPoly) -> IntPoly:
    """Reverse p within the coefficient window 0..r, i.e. t^r * p(1/t).

    Requires deg p <= r, otherwise the result would not be a polynomial.
    """
    if r < 0:
        raise ValueError("window size must be nonnegative")
    if p.degree() > r:
        raise ValueError(f"degree {p.degree()} exceeds reversal window {r}")
    return IntPoly(p[r - k] for k in range(r + 1))


@dataclasses.dataclass(frozen=True, init=False)
class PolySeries:
    """Power series in u, truncated at ``order`` inclusive.

    ``coeffs[m]`` is the IntPoly coefficient of ``u^m``; there are always
    exactly ``order + 1`` entries.  Arithmetic requires both operands to carry
    the same truncation order.
    """

    order: int
    coeffs: tuple[IntPoly, ...]

    def __init__(self, order: int, coeffs: Iterable[Union[IntPoly, int]] = ()):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        cs = [_as_poly(c) for c in coeffs]
        if len(cs) > order + 1:
            raise ValueError(f"{len(cs)} coefficients exceed order {order}")
        cs.extend([ZERO] * (order + 1 - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, order: int, value: Union[IntPoly, int]) -> PolySeries:
        return cls(order, (value,))

    def coefficient(self, m: int) -> IntPoly:
        return self.coeffs[m]

    def _check_order(self, other: PolySeries) -> None:
        if self.order != other.order:
            raise ValueError(
                f"truncation order mismatch: {self.order} != {other.order}"
            )

    def __add__(self, other: PolySeries) -> PolySeries:
        self._check_order(other)
        return PolySeries(self.order, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: PolySeries) -> PolySeries:
        self._check_order(other)
        return PolySeries(self.order, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: PolySeries) -> PolySeries:
        self._check_order(other)
        out = [ZERO] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return PolySeries(self.order, out)

    def shifted_up(self) -> PolySeries:
        """Multiply by u, keeping the truncation order (top coefficient drops)."""
        return PolySeries(self.order, (ZERO,) + self.coeffs[:-1])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)


def series_mul(a: PolySeries, b: PolySeries) -> PolySeries:
    """Truncated Cauchy product of two series of equal order."""
    return a * b


def expand_F(order: int) -> PolySeries:
    """Expand the unique power-series root F of u*(1-u+t*u)*F^2 - F + 1 = 0.

    Rewriting the equation as F = 1 + u*(1-u+t*u)*F^2 and comparing u^m
    coefficients gives F_0 = 1 and, for m >= 1,

        F_m = sum_{a+b=m-1} F_a F_b + (t - 1) * sum_{a+b=m-2} F_a F_b.

    The recurrence stays in integer arithmetic; no square root is extracted
    (the quadratic's other root has no power-series expansion at u = 0).
    """
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    t_minus_1 = T - ONE
    f: list[IntPoly] = [ONE]
    for m in range(1, order + 1):
        conv1 = ZERO
        for a in range(m):
            conv1 = conv1 + f[a] * f[m - 1 - a]
        conv2 = ZERO
        for a in range(m - 1):
            conv2 = conv2 + f[a] * f[m - 2 - a]
        f.append(conv1 + t_minus_1 * conv2)
    return PolySeries(order, f)


def solve_reflection_equation(rank: int, rhs: IntPoly) -> IntPoly:
    """Solve t^rank * P(1/t) - P(t) = rhs for P with deg P < rank/2.

    The degree bound puts the reflected coefficients of P strictly above the
    coefficients of -P, so P can be read off the top of rhs:
    P[k] = rhs[rank - k] for k <= (rank-1)//2.  The low-order window of rhs
    must then replicate -P and the gap between the two windows must vanish;
    either failing indicates a corrupted right-hand side.
    """
    if rank <= 0:
        raise ValueError("rank must be positive")
    if rhs.degree() > rank:
        raise ArithmeticError(
            f"right-hand side has degree {rhs.degree()} > rank {rank}"
        )
    dmax = (rank - 1) // 2
    solution = IntPoly(rhs[rank - k] for k in range(dmax + 1))
    for j in range(dmax + 1):
        if rhs[j] != -solution[j]:
            raise ArithmeticError(
                f"inconsistent reflection: coefficient of t^{j} is {rhs[j]}, "
                f"expected {-solution[j]}"
            )
    for j in range(dmax + 1, rank - dmax):
        if rhs[j] != 0:
            raise ArithmeticError(
                f"inconsistent reflection: coefficient of t^{j} is {rhs[j]}, "
                "expected 0 in the window between -P and its reflection"
            )
    return solution
