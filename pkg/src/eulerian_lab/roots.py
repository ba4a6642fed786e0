"""Exact real root analysis built on Sturm chains.

Everything here is decided in rational arithmetic: distinct root counts
over half open intervals (lo, hi], real rootedness, isolating intervals
with multiplicities, and the interlacing partial order on real rooted
polynomials.  No floating point enters at any stage, so answers are exact
even for roots that are irrational or very close together.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import CertificationError
from .poly import (
    Poly,
    is_gamma_positive,
    is_unimodal,
    poly_gcd,
    reciprocal,
    squarefree_decomposition,
    squarefree_part,
    symmetric_decomposition,
)

__all__ = [
    "sturm_distinct_real_roots",
    "is_real_rooted",
    "IsolatingInterval",
    "isolate_roots",
    "interlaces",
    "interlaces_checked",
    "is_interlacing_sequence",
    "interlacing_failures",
    "DecompositionVerdict",
    "interlacing_symmetric_decomposition",
]


def _int_primitive(p: Poly) -> Poly:
    """Rescale by a positive rational to coprime integer coefficients.

    Positive rescaling preserves signs everywhere, which is all the Sturm
    machinery cares about.
    """
    if p.is_zero():
        return p
    lcm = math.lcm(*(c.denominator for c in p.coeffs))
    gcd = math.gcd(*(c.numerator for c in p.coeffs))
    scale = Fraction(lcm, gcd)
    return Poly(c * scale for c in p.coeffs)


@lru_cache(maxsize=None)
def _sturm_chain(p: Poly) -> tuple[Poly, ...]:
    # p must be squarefree; each remainder is rescaled positively to keep
    # integer coefficients small without disturbing sign variations
    chain = [_int_primitive(p)]
    d = p.derivative()
    while not d.is_zero():
        chain.append(_int_primitive(d))
        d = -(chain[-2] % chain[-1])
    return tuple(chain)


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: Iterable[int]) -> int:
    out = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            out += 1
        prev = s
    return out


def _variations_at(chain: Sequence[Poly], x: Fraction) -> int:
    return _variations(_sign(f.evaluate(x)) for f in chain)


def _variations_neg_inf(chain: Sequence[Poly]) -> int:
    return _variations(_sign(f.leading()) * (-1 if f.deg() % 2 else 1) for f in chain)


def _variations_pos_inf(chain: Sequence[Poly]) -> int:
    return _variations(_sign(f.leading()) for f in chain)


def sturm_distinct_real_roots(
    p: Poly,
    lo: Fraction | int | None = None,
    hi: Fraction | int | None = None,
) -> int:
    """Number of distinct real roots of p in the half open interval (lo, hi].

    A bound of None stands for the corresponding infinity.  Multiplicities
    are ignored; the count is exact for any nonzero p.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has every point as a root")
    if lo is not None and hi is not None and Fraction(lo) > Fraction(hi):
        raise ValueError("need lo <= hi")
    sq = squarefree_part(p)
    if sq.deg() <= 0:
        return 0
    chain = _sturm_chain(sq)
    va = _variations_neg_inf(chain) if lo is None else _variations_at(chain, Fraction(lo))
    vb = _variations_pos_inf(chain) if hi is None else _variations_at(chain, Fraction(hi))
    return va - vb


@lru_cache(maxsize=None)
def is_real_rooted(p: Poly) -> bool:
    """Whether all complex roots of p are real.

    The zero polynomial and nonzero constants count as real rooted (there
    is nothing to check).
    """
    if p.deg() <= 0:
        return True
    sq = squarefree_part(p)
    return sturm_distinct_real_roots(sq) == sq.deg()


def _root_bound_pow2(p: Poly) -> int:
    # power of two strictly exceeding the magnitude of every root
    an = abs(p.leading())
    m = max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0))
    bound = 1 + m / an
    return 2 ** (bound.numerator // bound.denominator).bit_length()


def _isolate_squarefree(p: Poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint isolating intervals for the roots of a squarefree p.

    Pairs (lo, hi) come back sorted; lo == hi marks an exact rational root,
    otherwise the unique root sits strictly inside (lo, hi) and p(hi) != 0.
    """
    if p.deg() <= 0:
        return []
    chain = _sturm_chain(p)
    bound = _root_bound_pow2(p)
    a, b = Fraction(-bound), Fraction(bound)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(a, _variations_at(chain, a), b, _variations_at(chain, b))]
    while stack:
        lo, vlo, hi, vhi = stack.pop()
        cnt = vlo - vhi
        if cnt == 0:
            continue
        if cnt == 1:
            if p.evaluate(hi) == 0:
                out.append((hi, hi))
            else:
                out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        vmid = _variations_at(chain, mid)
        stack.append((lo, vlo, mid, vmid))
        stack.append((mid, vmid, hi, vhi))
    out.sort()
    return out


def _refine_step(f: Poly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    # invariant: exactly one root of f inside the open interval, f(hi) != 0
    mid = (lo + hi) / 2
    fm = f.evaluate(mid)
    if fm == 0:
        return mid, mid
    if (fm > 0) == (f.evaluate(hi) > 0):
        return lo, mid
    return mid, hi


class _RootRec:
    """One isolated root: exact point when lo == hi, else open interval."""

    __slots__ = ("source", "lo", "hi")

    def __init__(self, source: int, lo: Fraction, hi: Fraction) -> None:
        self.source = source
        self.lo = lo
        self.hi = hi

    def is_point(self) -> bool:
        return self.lo == self.hi


def _separated(r1: _RootRec, r2: _RootRec) -> bool:
    return r1.hi <= r2.lo or r2.hi <= r1.lo


def _separated_roots(sources: Sequence[Poly]) -> list[_RootRec]:
    """Isolate the roots of pairwise coprime squarefree polynomials and
    refine until every pair of records is strictly ordered.

    After this the half open interval (lo, hi] of each record contains
    exactly one root of the product of all sources, so records give a total
    order on the union of the root sets.
    """
    recs: list[_RootRec] = []
    for si, f in enumerate(sources):
        for lo, hi in _isolate_squarefree(f):
            recs.append(_RootRec(si, lo, hi))
    for _ in range(10000):
        dirty = False
        for i in range(len(recs)):
            for j in range(i + 1, len(recs)):
                r1, r2 = recs[i], recs[j]
                if r1.is_point() and r2.is_point():
                    if r1.lo == r2.lo:
                        raise ValueError("sources are not coprime: shared root")
                    continue
                if _separated(r1, r2):
                    continue
                dirty = True
                if r1.is_point() or r2.is_point():
                    pt, iv = (r1, r2) if r1.is_point() else (r2, r1)
                    f = sources[iv.source]
                    v = pt.lo
                    fv = f.evaluate(v)
                    if fv == 0:
                        raise ValueError("sources are not coprime: shared root")
                    # split the interval exactly at the point value
                    if (fv > 0) == (f.evaluate(iv.hi) > 0):
                        iv.hi = v
                    else:
                        iv.lo = v
                else:
                    r1.lo, r1.hi = _refine_step(sources[r1.source], r1.lo, r1.hi)
                    r2.lo, r2.hi = _refine_step(sources[r2.source], r2.lo, r2.hi)
        if not dirty:
            recs.sort(key=lambda r: (r.lo, r.hi))
            return recs
    raise RuntimeError("root separation failed to converge")


@dataclass(frozen=True)
class IsolatingInterval:
    """A root locator: exact when lo == hi, otherwise the root lies
    strictly inside (lo, hi)."""

    lo: Fraction
    hi: Fraction
    multiplicity: int

    def is_exact(self) -> bool:
        return self.lo == self.hi

    def width(self) -> Fraction:
        return self.hi - self.lo


def isolate_roots(
    p: Poly, max_width: Fraction | int | None = None
) -> tuple[IsolatingInterval, ...]:
    """Pairwise disjoint isolating intervals for all real roots, ascending.

    Multiplicities refer to p itself.  With max_width set, non exact
    intervals are bisected until no wider than requested.
    """
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    if p.deg() == 0:
        return ()
    factors = squarefree_decomposition(p)
    recs = _separated_roots([f for f, _ in factors])
    out = []
    for rec in recs:
        f, mult = factors[rec.source]
        lo, hi = rec.lo, rec.hi
        if max_width is not None:
            while lo != hi and hi - lo > max_width:
                lo, hi = _refine_step(f, lo, hi)
        out.append(IsolatingInterval(lo=lo, hi=hi, multiplicity=mult))
    return tuple(out)


def _mult_in(rec: _RootRec, factors: Sequence[tuple[Poly, int]]) -> int:
    # rec isolates one root of the combined source product strictly inside
    # the open interval (lo, hi); the endpoint hi may carry a different
    # record's root, so it must not count toward membership
    for f, mult in factors:
        if rec.is_point():
            if f.evaluate(rec.lo) == 0:
                return mult
        else:
            inside = sturm_distinct_real_roots(f, rec.lo, rec.hi)
            if f.evaluate(rec.hi) == 0:
                inside -= 1
            if inside == 1:
                return mult
    raise AssertionError("isolated root does not belong to any factor")


def _merged_root_lists(p: Poly, q: Poly) -> tuple[list[int], list[int]]:
    """Descending root lists of p and q with multiplicity, encoded as
    positions in one shared total order so equality of shared roots and
    comparisons of distinct roots are both exact."""
    sp, sq = squarefree_part(p), squarefree_part(q)
    g = poly_gcd(sp, sq)
    parts = [
        (g, True, True),
        (sp.exact_div(g), True, False),
        (sq.exact_div(g), False, True),
    ]
    parts = [t for t in parts if t[0].deg() > 0]
    recs = _separated_roots([t[0] for t in parts])
    yun_p = squarefree_decomposition(p)
    yun_q = squarefree_decomposition(q)
    a_list: list[int] = []
    b_list: list[int] = []
    for idx, rec in enumerate(recs):
        _, in_p, in_q = parts[rec.source]
        if in_p:
            a_list.extend([idx] * _mult_in(rec, yun_p))
        if in_q:
            b_list.extend([idx] * _mult_in(rec, yun_q))
    a_list.reverse()
    b_list.reverse()
    assert len(a_list) == p.deg() and len(b_list) == q.deg()
    return a_list, b_list


def interlaces(p: Poly, q: Poly) -> bool:
    """Decide whether p interlaces q (p below q in the interlacing order).

    For real rooted p, q with descending root lists a_1 >= a_2 >= ... and
    b_1 >= b_2 >= ... this requires deg q - deg p in {0, 1} and the
    alternation b_1 >= a_1 >= b_2 >= a_2 >= ...  Conventions: the zero
    polynomial interlaces every real rooted polynomial and conversely, and
    a nonzero constant interlaces exactly the polynomials of degree <= 1.
    Shared roots and repeated roots are compared exactly.
    """
    if p.is_zero():
        return is_real_rooted(q)
    if q.is_zero():
        return is_real_rooted(p)
    if p.deg() == 0:
        return q.deg() <= 1
    if q.deg() - p.deg() not in (0, 1):
        return False
    if not (is_real_rooted(p) and is_real_rooted(q)):
        return False
    a_list, b_list = _merged_root_lists(p, q)
    return all(b_list[i] >= a_list[i] for i in range(len(a_list))) and all(
        a_list[i] >= b_list[i + 1] for i in range(len(b_list) - 1)
    )


def interlaces_checked(p: Poly, q: Poly) -> bool:
    """Like interlaces, but refuses non real rooted input outright."""
    for which, f in (("first", p), ("second", q)):
        if not is_real_rooted(f):
            raise ValueError(f"{which} argument is not real rooted: {f!r}")
    return interlaces(p, q)


def interlacing_failures(polys: Sequence[Poly]) -> list[tuple[int, int]]:
    """Index pairs (i, j) with i < j where polys[i] fails to interlace polys[j]."""
    out = []
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if not interlaces(polys[i], polys[j]):
                out.append((i, j))
    return out


def is_interlacing_sequence(polys: Sequence[Poly]) -> bool:
    """Whether every earlier entry interlaces every later one."""
    return not interlacing_failures(polys)


@dataclass(frozen=True)
class DecompositionVerdict:
    """Certified facts about the split p = a + x*b inside degree window n."""

    a: Poly
    b: Poly
    n: int
    nonnegative: bool
    unimodal_pair: bool
    gamma_positive_pair: bool
    real_rooted_pair: bool
    interlacing: bool


def interlacing_symmetric_decomposition(p: Poly, n: int) -> DecompositionVerdict:
    """Certify structural positivity of the split p = a + x*b for window n.

    When the split is nonnegative (both a and b have nonnegative
    coefficients), four equivalent routes to the interlacing property are
    computed independently (b interlaces a, a interlaces p, b interlaces p,
    the reversal of p interlaces p) and any disagreement raises
    CertificationError.  A positive verdict also forces p itself to be real
    rooted, which is checked as well.
    """
    dec = symmetric_decomposition(p, n)
    a, b = dec.a, dec.b
    nonneg = all(c >= 0 for c in a.coeffs) and all(c >= 0 for c in b.coeffs)
    unimodal = is_unimodal(a) is not None and is_unimodal(b) is not None
    gamma_a = is_gamma_positive(a, n)
    gamma_b = True if b.is_zero() else is_gamma_positive(b, n - 1)
    rr_pair = is_real_rooted(a) and is_real_rooted(b)
    e1 = interlaces(b, a)
    if nonneg:
        e2 = interlaces(a, p)
        e3 = interlaces(b, p)
        e4 = interlaces(reciprocal(p, n), p)
        if not (e1 == e2 == e3 == e4):
            raise CertificationError(
                f"equivalent interlacing routes disagree on {p!r} in window {n}: "
                f"b|a={e1} a|p={e2} b|p={e3} rev|p={e4}"
            )
        if e1 and not is_real_rooted(p):
            raise CertificationError(
                f"interlacing decomposition found for non real rooted {p!r}"
            )
    return DecompositionVerdict(
        a=a,
        b=b,
        n=n,
        nonnegative=nonneg,
        unimodal_pair=unimodal,
        gamma_positive_pair=gamma_a and gamma_b,
        real_rooted_pair=rr_pair,
        interlacing=e1,
    )
