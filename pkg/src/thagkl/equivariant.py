"""Symmetric-group-equivariant refinement of the thagomizer KL polynomials.

p_n(t) is a degree-n Schur expansion whose graded dimension is P_n(t).  It is
solved bottom-up from

    t^(n+1) p_n(1/t) = (t-1) * sum_{l=0}^{n} v_l(t) s[n-l]
                       + sum_{i+j+m=n} p_i(t) w_j(t) w_m(t)

over ordered triples (i, j, m): the (n, 0, 0) term is p_n itself, so moving
it left leaves a right-hand side in known quantities, and each partition's
coefficient is extracted by the same reflection trick as the scalar case
(deg < (n+1)/2).  The triple sum is symmetric in (j, m) and is accumulated
over j <= m with a factor 2 off the diagonal.

``conjecture_poly`` assembles the closed-form candidate for p_n indexed by
the partition family of shape [a, b, 2^i, 1^eta] (2 <= a < n; b = 0 or
2 <= b <= a), and ``verify_conjecture`` compares it against the computed
table term by term.
"""

from __future__ import annotations

import dataclasses
import functools

from .kl import kl_poly
from .polynomials import IntPoly, ONE, T, ZERO, solve_reflection_equation
from .symfunc import Partition, SchurPoly, _sign_t_power, partitions_of, v_poly


def _apply_w(f: SchurPoly, j: int) -> SchurPoly:
    """Product f * w_j through the h/e decomposition of w_j."""
    total = SchurPoly({}, degree=f.degree + j)
    for a in range(j + 1):
        b = j - a
        total = total + f.mul_h(a).mul_e(b).scaled(_sign_t_power(b, a))
    return total


class EqKLTable:
    """Bottom-up table of p_0, p_1, ...; entries are immutable SchurPoly values."""

    def __init__(self) -> None:
        self._entries: list[SchurPoly] = []
        self._products: dict[tuple[int, int], SchurPoly] = {}

    def poly(self, n: int) -> SchurPoly:
        if n < 0:
            raise ValueError("index must be nonnegative")
        while len(self._entries) <= n:
            self._append_next()
        return self._entries[n]

    def _p_times_w(self, i: int, m: int) -> SchurPoly:
        key = (i, m)
        cached = self._products.get(key)
        if cached is None:
            cached = _apply_w(self._entries[i], m)
            self._products[key] = cached
        return cached

    def _recursion_rhs(self, n: int) -> SchurPoly:
        first = SchurPoly({}, degree=n)
        for ell in range(n + 1):
            first = first + v_poly(ell).mul_h(n - ell)
        rhs = first.scaled(T - ONE)
        for i in range(n):
            rem = n - i
            for j in range(rem // 2 + 1):
                m = rem - j
                term = _apply_w(self._p_times_w(i, m), j)
                if j != m:
                    term = term.scaled(2)
                rhs = rhs + term
        return rhs

    def _append_next(self) -> None:
        n = len(self._entries)
        rhs = self._recursion_rhs(n)
        terms: dict[Partition, IntPoly] = {}
        for lam in partitions_of(n):
            q = rhs.coefficient(lam)
            if q.is_zero():
                continue
            terms[lam] = solve_reflection_equation(n + 1, q)
        solution = SchurPoly(terms, degree=n)
        dimension = solution.graded_dimension()
        if dimension != kl_poly(n):
            raise ArithmeticError(
                f"graded dimension {dimension} of the equivariant solution "
                f"differs from the scalar polynomial at n={n}"
            )
        self._entries.append(solution)


_TABLE = EqKLTable()


def eq_kl(n: int) -> SchurPoly:
    """The equivariant polynomial p_n, solved with shared memoization."""
    return _TABLE.poly(n)


def _rhs_reference(n: int, table: EqKLTable) -> SchurPoly:
    """Recursion right-hand side over all ordered triples, no symmetry shortcut.

    Exists to pin the optimized accumulation in tests; table entries below n
    must already be built.
    """
    total = SchurPoly({}, degree=n)
    for ell in range(n + 1):
        total = total + v_poly(ell).mul_h(n - ell)
    total = total.scaled(T - ONE)
    for i in range(n):
        for j in range(n - i + 1):
            m = n - i - j
            total = total + _apply_w(_apply_w(table.poly(i), j), m)
    return total


def upsilon(n: int) -> tuple[Partition, ...]:
    """The partition family indexing the closed-form candidate.

    Partitions of n of shape [a, b, 2^i, 1^eta] with 2 <= a < n, i >= 0,
    eta in {0, 1}, and b = n - a - 2i - eta required to be 0 (omitted) or to
    satisfy 2 <= b <= a.  Returned deduplicated in canonical order.
    """
    if n < 1:
        raise ValueError("index must be positive")
    found: set[Partition] = set()
    for a in range(2, n):
        for eta in (0, 1):
            i = 0
            while True:
                b = n - a - 2 * i - eta
                if b < 0:
                    break
                if b == 0 or 2 <= b <= a:
                    middle = (b,) if b else ()
                    lam = (a,) + middle + (2,) * i + (1,) * eta
                    found.add(lam)
                i += 1
    return tuple(sorted(found, reverse=True))


def kappa(lam: Partition, n: int) -> int:
    """Leading multiplicity of the closed-form candidate at lam."""
    if lam == (n - 1, 1):
        return lam[0] - 1
    second = lam[1] if len(lam) > 1 else 0
    return lam[0] - second + 1


def omega(lam: Partition) -> int:
    """1 when the smallest part differs from 1, else 0."""
    return 0 if lam and lam[-1] == 1 else 1


@dataclasses.dataclass(frozen=True)
class ConjectureTerm:
    """One closed-form term: kappa * t^(ell-1) * (t+1)^omega * s[partition]."""

    partition: Partition
    kappa: int
    ell: int
    omega: int


def conjecture_terms(n: int) -> tuple[ConjectureTerm, ...]:
    terms = []
    for lam in upsilon(n):
        # a < n keeps [n] out of the family, so the one-part kappa convention
        # is never exercised; the kappa special case [n-1, 1] always has
        # smallest part 1 and therefore never meets the (t+1) factor
        assert lam[0] < n and len(lam) >= 2
        k = kappa(lam, n)
        w = omega(lam)
        assert not (lam == (n - 1, 1) and w == 1)
        terms.append(ConjectureTerm(partition=lam, kappa=k, ell=len(lam), omega=w))
    return tuple(terms)


@functools.cache
def conjecture_poly(n: int) -> SchurPoly:
    """Closed-form candidate for the equivariant polynomial at index n.

    sum over the partition family of kappa * t^(ell-1) * (t+1)^omega * s[lam],
    plus ((n-1)t + 1) * s[n].
    """
    if n < 1:
        raise ValueError("index must be positive")
    terms: dict[Partition, IntPoly] = {(n,): IntPoly((1, n - 1))}
    for term in conjecture_terms(n):
        coeff = IntPoly((term.kappa,)).shifted(term.ell - 1)
        if term.omega:
            coeff = coeff * (T + ONE)
        terms[term.partition] = terms.get(term.partition, ZERO) + coeff
    return SchurPoly(terms, degree=n)


@dataclasses.dataclass(frozen=True)
class TermMismatch:
    """One (n, partition) cell where computed and predicted coefficients differ."""

    n: int
    partition: Partition
    computed: IntPoly
    predicted: IntPoly


@dataclasses.dataclass(frozen=True)
class ConjectureReport:
    """Outcome of comparing the computed table against the closed form."""

    max_n: int
    ok: bool
    mismatches: tuple[TermMismatch, ...]


def verify_conjecture(
    max_n: int,
    *,
    candidates: dict[int, SchurPoly] | None = None,
) -> ConjectureReport:
    """Compare eq_kl(n) against the closed form for 1 <= n <= max_n.

    ``candidates`` may supply replacement predictions per n (used for
    negative controls); missing indices fall back to the honest closed form.
    Disagreements are returned as data, not raised.
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    mismatches: list[TermMismatch] = []
    for n in range(1, max_n + 1):
        computed = eq_kl(n)
        predicted = conjecture_poly(n)
        if candidates and n in candidates:
            predicted = candidates[n]
        lams = sorted(
            set(computed.partitions()) | set(predicted.partitions()), reverse=True
        )
        for lam in lams:
            a = computed.coefficient(lam)
            b = predicted.coefficient(lam)
            if a != b:
                mismatches.append(
                    TermMismatch(n=n, partition=lam, computed=a, predicted=b)
                )
    return ConjectureReport(max_n=max_n, ok=not mismatches, mismatches=tuple(mismatches))
