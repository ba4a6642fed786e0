"""Permutation statistics and brute-force enumeration oracles.

Permutations live as tuples of values (one-line notation, 1-based values and
positions); the wrapper class exists for validation and a few conveniences,
while iterators and statistics work on raw tuples so that full-group sweeps
stay cheap.  Every generating polynomial here is an enumeration: no closed
forms, no recurrences.  The closed-form counterparts live in transforms.py
and the two routes are compared in tests.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .budget import check_group_budget
from .poly import Poly, one_plus_x_power

Word = Sequence[int]
PermLike = Union["Permutation", Word]


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line notation."""

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.word)
        if sorted(self.word) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.word!r}")

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.word):
            raise IndexError(f"position {i} out of range 1..{len(self.word)}")
        return self.word[i - 1]

    def inverse(self) -> "Permutation":
        out = [0] * len(self.word)
        for i, v in enumerate(self.word, start=1):
            out[v - 1] = i
        return Permutation(tuple(out))


def _word(w: PermLike) -> tuple[int, ...]:
    if isinstance(w, Permutation):
        return w.word
    return tuple(w)


@dataclass(frozen=True)
class PermStats:
    """All statistics of one permutation, computed in a single pass.

    Positions are 1-based throughout.  rl_minima uses the weak convention
    (w(i) <= w(j) for all j >= i); for distinct values this coincides with
    the strict one.  decreasing_runs partitions the positions 1..n into the
    maximal blocks on which the word strictly decreases.
    """

    des: int
    asc: int
    exc: int
    fix_set: frozenset[int]
    lr_maxima: tuple[int, ...]
    rl_minima: tuple[int, ...]
    decreasing_runs: tuple[tuple[int, ...], ...]


def stats(w: PermLike) -> PermStats:
    word = _word(w)
    n = len(word)
    des = sum(1 for i in range(n - 1) if word[i] > word[i + 1])
    asc = (n - 1 if n else 0) - des
    # values never exceed n, so w(i) > i is impossible at i = n and this
    # matches the convention that counts excedances over i < n only
    exc = sum(1 for i in range(n) if word[i] > i + 1)
    fix_set = frozenset(i + 1 for i in range(n) if word[i] == i + 1)

    lr: list[int] = []
    best = 0
    for i in range(n):
        if word[i] > best:
            lr.append(i + 1)
            best = word[i]

    rl: list[int] = []
    cur = n + 1
    for i in range(n - 1, -1, -1):
        if word[i] <= cur:
            rl.append(i + 1)
            cur = word[i]
    rl.reverse()

    runs: list[tuple[int, ...]] = []
    start = 0
    for i in range(1, n + 1):
        if i == n or word[i - 1] < word[i]:
            runs.append(tuple(range(start + 1, i + 1)))
            start = i

    return PermStats(
        des=des,
        asc=asc,
        exc=exc,
        fix_set=fix_set,
        lr_maxima=tuple(lr),
        rl_minima=tuple(rl),
        decreasing_runs=tuple(runs),
    )


def fix_k(w: PermLike, k: int) -> int:
    """Number of fixed points i with i <= k."""
    word = _word(w)
    if not 0 <= k <= len(word) + 1:
        raise ValueError(f"k={k} out of range for size {len(word)}")
    return sum(1 for i in range(min(k, len(word))) if word[i] == i + 1)


def bad_k(w: PermLike, k: int) -> int:
    """Positions i where w(i) <= k is a weak right-to-left minimum and either
    i = 1 or w(i-1) < w(i).  The identity permutation scores exactly k."""
    word = _word(w)
    n = len(word)
    if not 0 <= k <= n + 1:
        raise ValueError(f"k={k} out of range for size {n}")
    count = 0
    cur = n + 1
    suffix_min = [0] * n
    for i in range(n - 1, -1, -1):
        suffix_min[i] = cur = min(cur, word[i])
    for i in range(n):
        if word[i] > k or word[i] > suffix_min[i]:
            continue
        if i == 0 or word[i - 1] < word[i]:
            count += 1
    return count


def fundamental_transformation(w: PermLike) -> Permutation:
    """Cycle form read as a word: each cycle is written with its smallest
    element last, cycles in increasing order of their smallest elements.

    The map is a bijection and carries excedances of the inverse to
    descents of the image, so exc and des are equidistributed.
    """
    word = _word(w)
    n = len(word)
    Permutation(word)
    seen = [False] * (n + 1)
    cyc_list: list[list[int]] = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        seen[start] = True
        cyc = [start]
        cur = word[start - 1]
        while cur != start:
            seen[cur] = True
            cyc.append(cur)
            cur = word[cur - 1]
        low = cyc.index(min(cyc))
        cyc_list.append(cyc[low + 1 :] + cyc[: low + 1])
    cyc_list.sort(key=lambda c: c[-1])
    return Permutation(tuple(v for c in cyc_list for v in c))


def symmetric_group(n: int) -> Iterator[tuple[int, ...]]:
    """All of S_n in lexicographic order, as raw value tuples."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    check_group_budget(math.factorial(n), f"S_{n}")
    return itertools.permutations(range(1, n + 1))


def signed_permutations(n: int) -> Iterator[tuple[int, ...]]:
    """All signed permutations of 1..n as tuples of nonzero signed values."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    check_group_budget((2**n) * math.factorial(n), f"signed permutations of size {n}")

    def gen() -> Iterator[tuple[int, ...]]:
        for base in itertools.permutations(range(1, n + 1)):
            for signs in itertools.product((1, -1), repeat=n):
                yield tuple(s * v for s, v in zip(signs, base))

    return gen()


def colored_permutations(
    n: int, r: int
) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All pairs (word, colors) with colors in {0, ..., r-1}^n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if r < 1:
        raise ValueError("r must be positive")
    check_group_budget(
        (r**n) * math.factorial(n), f"{r}-colored permutations of size {n}"
    )

    def gen() -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
        for base in itertools.permutations(range(1, n + 1)):
            for colors in itertools.product(range(r), repeat=n):
                yield base, colors

    return gen()


def des_B(w: Word) -> int:
    """Descents of a signed word read with a fixed 0 prepended at position 0."""
    word = tuple(w)
    n = len(word)
    count = 1 if n and word[0] < 0 else 0
    count += sum(1 for i in range(n - 1) if word[i] > word[i + 1])
    return count


def xi_counts(n: int, k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Run-class counts behind the two-layer expansion of d_{n,k}.

    plus[i] counts permutations with w(1) > n-k, every decreasing run of
    length >= 2 and exactly i runs; minus[i] counts those with w(1) <= n-k,
    every run except possibly the first of length >= 2 and exactly i+1 runs.
    The empty permutation sits in the plus class.
    """
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range 0..{n}")
    plus = [0] * (n // 2 + 1)
    minus = [0] * ((n - 1) // 2 + 1 if n >= 1 else 0)
    if n == 0:
        plus[0] = 1
        return tuple(plus), tuple(minus)
    for word in symmetric_group(n):
        runs = stats(word).decreasing_runs
        if word[0] > n - k:
            if all(len(run) >= 2 for run in runs):
                plus[len(runs)] += 1
        else:
            if all(len(run) >= 2 for run in runs[1:]):
                minus[len(runs) - 1] += 1
    return tuple(plus), tuple(minus)


def _xi_reconstruction(n: int, k: int) -> Poly:
    plus, minus = xi_counts(n, k)
    total: Poly = Poly(())
    for i, c in enumerate(plus):
        if c:
            total = total + one_plus_x_power(n - 2 * i).times_x_power(i) * c
    for i, c in enumerate(minus):
        if c:
            total = total + one_plus_x_power(n - 1 - 2 * i).times_x_power(i) * c
    return total


def flag_excedance_poly(n: int, r: int, k: int) -> Poly:
    """Sum of x^(fexc/r) over color-balanced r-colored permutations whose
    zero-color fixed points all lie in {1, ..., k}.

    fexc(w) = r * #{i : w(i) > i with color 0} + (total color weight); the
    balance condition makes it divisible by r.  At r = 1 this is the
    enumeration behind d_{n, n-k}.
    """
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range 0..{n}")
    counts: dict[int, int] = {}
    for word, colors in colored_permutations(n, r):
        if sum(colors) % r != 0:
            continue
        ok = True
        flag = sum(colors)
        for i in range(n):
            if colors[i] == 0:
                if word[i] == i + 1 and i + 1 > k:
                    ok = False
                    break
                if word[i] > i + 1:
                    flag += r
        if not ok:
            continue
        assert flag % r == 0
        e = flag // r
        counts[e] = counts.get(e, 0) + 1
    if not counts:
        return Poly(())
    coeffs = [0] * (max(counts) + 1)
    for e, c in counts.items():
        coeffs[e] = c
    return Poly(coeffs)


def _poly_from_exponents(counts: dict[int, int]) -> Poly:
    if not counts:
        return Poly(())
    coeffs = [0] * (max(counts) + 1)
    for e, c in counts.items():
        coeffs[e] = c
    return Poly(coeffs)


def _mixed_poly(counts: dict[tuple[int, int], int]) -> Poly:
    """Assemble sum of c * (1+x)^t * x^e from (t, e) -> c."""
    total: Poly = Poly(())
    for (t, e), c in counts.items():
        if c:
            total = total + one_plus_x_power(t).times_x_power(e) * c
    return total


def _require(name: str, value: int | None) -> int:
    if value is None:
        raise ValueError(f"family requires parameter {name}")
    return value


def brute_force_family(
    family: str,
    n: int,
    k: int | None = None,
    j: int | None = None,
    r: int | None = None,
) -> Poly:
    """Enumeration oracle for one named polynomial family.

    Families and their statistics:

    - "A": x^des over S_n; "A-exc": x^exc over S_n
    - "p": x^des over w in S_{n+1} with w(1) = k+1
    - "p-asc": x^asc over w in S_{n+1} with w(n+1) = k+1
    - "p-exc": x^exc over w in S_{n+1} with w^{-1}(1) = k+1
    - "q-fix": (1+x)^fix_k x^exc over S_n
    - "q-bad": (1+x)^bad_k x^des over S_n
    - "qnkj": (1+x)^fix_k x^exc over w in S_{n+1} with w^{-1}(1) = j+1
    - "qnkj-alt": (1+x)^bad_k x^des over w in S_{n+1} with w(1) = j+1
    - "qstar": "qnkj" divided by 1+x when j = 0 and k >= 1
    - "d": x^exc over derangements of S_n
    - "dnk": x^exc over w in S_n with all fixed points in {1, ..., n-k}
    - "xi": the run-class reconstruction of d_{n,k}
    - "B": x^des_B over signed permutations of size n
    - "colored-local": flag_excedance_poly(n, r, k)
    """
    if n < 0:
        raise ValueError("n must be nonnegative")

    if family == "A":
        return _poly_from_exponents(_tally(symmetric_group(n), "des"))
    if family == "A-exc":
        return _poly_from_exponents(_tally(symmetric_group(n), "exc"))

    if family == "p":
        kk = _require("k", k)
        _check_range(kk, n)
        counts: dict[int, int] = {}
        for word in symmetric_group(n + 1):
            if word[0] == kk + 1:
                _bump(counts, stats(word).des)
        return _poly_from_exponents(counts)
    if family == "p-asc":
        kk = _require("k", k)
        _check_range(kk, n)
        counts = {}
        for word in symmetric_group(n + 1):
            if word[n] == kk + 1:
                _bump(counts, stats(word).asc)
        return _poly_from_exponents(counts)
    if family == "p-exc":
        kk = _require("k", k)
        _check_range(kk, n)
        counts = {}
        for word in symmetric_group(n + 1):
            if word[kk] == 1:
                _bump(counts, stats(word).exc)
        return _poly_from_exponents(counts)

    if family == "q-fix":
        kk = _require("k", k)
        _check_range(kk, n)
        mixed: dict[tuple[int, int], int] = {}
        for word in symmetric_group(n):
            _bump(mixed, (fix_k(word, kk), stats(word).exc))
        return _mixed_poly(mixed)
    if family == "q-bad":
        kk = _require("k", k)
        _check_range(kk, n)
        mixed = {}
        for word in symmetric_group(n):
            _bump(mixed, (bad_k(word, kk), stats(word).des))
        return _mixed_poly(mixed)

    if family in ("qnkj", "qnkj-alt", "qstar"):
        kk = _require("k", k)
        jj = _require("j", j)
        if not 0 <= kk <= n + 1:
            raise ValueError(f"k={kk} out of range 0..{n + 1}")
        _check_range(jj, n)
        mixed = {}
        if family == "qnkj-alt":
            for word in symmetric_group(n + 1):
                if word[0] == jj + 1:
                    _bump(mixed, (bad_k(word, kk), stats(word).des))
            return _mixed_poly(mixed)
        for word in symmetric_group(n + 1):
            if word[jj] == 1:
                _bump(mixed, (fix_k(word, kk), stats(word).exc))
        q = _mixed_poly(mixed)
        if family == "qstar" and jj == 0 and kk >= 1:
            return q.exact_div(one_plus_x_power(1))
        return q

    if family == "d":
        counts = {}
        for word in symmetric_group(n):
            st = stats(word)
            if not st.fix_set:
                _bump(counts, st.exc)
        return _poly_from_exponents(counts)
    if family == "dnk":
        kk = _require("k", k)
        _check_range(kk, n)
        counts = {}
        for word in symmetric_group(n):
            st = stats(word)
            if all(i <= n - kk for i in st.fix_set):
                _bump(counts, st.exc)
        return _poly_from_exponents(counts)
    if family == "xi":
        kk = _require("k", k)
        _check_range(kk, n)
        return _xi_reconstruction(n, kk)

    if family == "B":
        counts = {}
        for word in signed_permutations(n):
            _bump(counts, des_B(word))
        return _poly_from_exponents(counts)

    if family == "colored-local":
        kk = _require("k", k)
        rr = _require("r", r)
        return flag_excedance_poly(n, rr, kk)

    raise ValueError(f"unknown family {family!r}")


def _check_range(k: int, n: int) -> None:
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range 0..{n}")


def _bump(counts: dict, key) -> None:
    counts[key] = counts.get(key, 0) + 1


def _tally(words: Iterator[tuple[int, ...]], stat: str) -> dict[int, int]:
    counts: dict[int, int] = {}
    for word in words:
        _bump(counts, getattr(stats(word), stat))
    return counts
