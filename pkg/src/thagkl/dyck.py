"""Dyck paths counted by their number of long ascents.

A Dyck path of semilength n is a word over {U, D} of length 2n in which every
prefix has at least as many U's as D's and the totals balance.  A long ascent
is a maximal run of at least two consecutive U's; in a valid path these are in
bijection with occurrences of the factor UUD.

The triangle a[n][k] = #{paths of semilength n with k long ascents} is
computed three independent ways: exhaustive enumeration (n <= 14), a dynamic
program over (height, current run length), and a binomial closed form

    a[n][k] = 1/(n+1) * C(n+1, k) * sum_{j} C(j-k-1, k-1) * C(n+1-k, n-j).

Paths are plain strings of "U"/"D".
"""

from __future__ import annotations

import functools
import re
from math import comb
from typing import Iterator

MAX_ENUM_SEMILENGTH = 14

# semilengths up to this bound keep their full path list cached
_MEMO_SEMILENGTH = 12

_LONG_RUN = re.compile("UU+")


def catalan(n: int) -> int:
    """n-th Catalan number, C(2n, n) / (n + 1), checked to divide exactly."""
    if n < 0:
        raise ValueError("catalan index must be nonnegative")
    q, r = divmod(comb(2 * n, n), n + 1)
    if r:
        raise ArithmeticError(f"catalan division inexact at n={n}")
    return q


def is_dyck_word(word: str) -> bool:
    """True iff word is a balanced U/D word with all prefix sums nonnegative."""
    height = 0
    for step in word:
        if step == "U":
            height += 1
        elif step == "D":
            height -= 1
            if height < 0:
                return False
        else:
            return False
    return height == 0


@functools.cache
def _paths_tuple(n: int) -> tuple[str, ...]:
    # first-return decomposition: every nonempty path is U <left> D <right>
    if n == 0:
        return ("",)
    out: list[str] = []
    for a in range(n):
        for left in _paths_tuple(a):
            prefix = "U" + left + "D"
            out.extend(prefix + right for right in _paths_tuple(n - 1 - a))
    return tuple(out)


def _iter_paths(n: int) -> Iterator[str]:
    if n <= _MEMO_SEMILENGTH:
        yield from _paths_tuple(n)
        return
    for a in range(n):
        for left in _iter_paths(a):
            prefix = "U" + left + "D"
            for right in _iter_paths(n - 1 - a):
                yield prefix + right


def enumerate_paths(n: int) -> Iterator[str]:
    """Yield every Dyck path of semilength n exactly once.

    Rejects n beyond MAX_ENUM_SEMILENGTH (the list is Catalan-sized).
    """
    if n < 0:
        raise ValueError("semilength must be nonnegative")
    if n > MAX_ENUM_SEMILENGTH:
        raise ValueError(
            f"semilength {n} exceeds enumeration bound {MAX_ENUM_SEMILENGTH}"
        )
    return _iter_paths(n)


def long_ascents(path: str) -> int:
    """Number of long ascents of a Dyck path.

    Counts maximal runs of >= 2 consecutive U's and, independently, UUD
    factors; for a valid path the two agree (every maximal long run is closed
    by a D) and a disagreement is reported rather than silently resolved.
    """
    runs = len(_LONG_RUN.findall(path))
    factors = path.count("UUD")
    if runs != factors:
        raise ArithmeticError(
            f"run scan ({runs}) and UUD factor count ({factors}) disagree; "
            "input is not a Dyck path"
        )
    return runs


def count_by_ascents_enum(n: int) -> dict[int, int]:
    """Triangle row by exhaustive enumeration: k -> #paths with k long ascents."""
    row: dict[int, int] = {}
    for path in enumerate_paths(n):
        k = long_ascents(path)
        row[k] = row.get(k, 0) + 1
    return dict(sorted(row.items()))


def count_by_ascents_dp(n: int) -> dict[int, int]:
    """Triangle row by dynamic programming over (height, run length).

    The run length saturates at 2: runs of length >= 2 are equivalent for the
    statistic.  A D step leaving run state 2 closes one long ascent, which
    shifts that state's count vector by one in k.
    """
    if n < 0:
        raise ValueError("semilength must be nonnegative")
    total = 2 * n
    # state: (height, saturated run length) -> counts indexed by long ascents
    states: dict[tuple[int, int], list[int]] = {(0, 0): [1]}
    for step in range(total):
        remaining = total - step
        nxt: dict[tuple[int, int], list[int]] = {}
        for (height, run), vec in states.items():
            if height + 1 <= remaining - 1:
                _accumulate(nxt, (height + 1, min(run + 1, 2)), vec, 0)
            if height > 0:
                _accumulate(nxt, (height - 1, 0), vec, 1 if run == 2 else 0)
        states = nxt
    vec = states.get((0, 0), [])
    if n == 0:
        vec = [1]
    return {k: v for k, v in enumerate(vec) if v}


def _accumulate(
    dst: dict[tuple[int, int], list[int]],
    key: tuple[int, int],
    vec: list[int],
    shift: int,
) -> None:
    src = [0] * shift + vec if shift else vec
    cur = dst.get(key)
    if cur is None:
        dst[key] = list(src)
        return
    if len(cur) < len(src):
        cur.extend([0] * (len(src) - len(cur)))
    for i, v in enumerate(src):
        cur[i] += v


def _binom(a: int, b: int) -> int:
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def closed_form(n: int, k: int) -> int:
    """Triangle entry by the binomial closed form.

    The inner factor C(j-k-1, k-1) at k = 0 is read as C(j-1, -1) := 1 when
    j = 0 and 0 otherwise, which makes the k = 0 column come out as 1 in
    agreement with the enumeration (only (UD)^n avoids UU).  All other
    binomials with a negative argument vanish.  Division by n+1 must be
    exact; a remainder indicates an implementation fault.
    """
    if n < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    total = 0
    for j in range(n + 1):
        if k == 0:
            inner = 1 if j == 0 else 0
        else:
            inner = _binom(j - k - 1, k - 1)
        if inner:
            total += inner * _binom(n + 1 - k, n - j)
    total *= comb(n + 1, k) if k <= n + 1 else 0
    q, r = divmod(total, n + 1)
    if r:
        raise ArithmeticError(f"inexact division by {n + 1} at (n, k) = ({n}, {k})")
    return q


def closed_form_row(n: int) -> dict[int, int]:
    """Triangle row assembled from the closed form, nonzero entries only."""
    row = {}
    for k in range(n // 2 + 1):
        value = closed_form(n, k)
        if value:
            row[k] = value
    return row
