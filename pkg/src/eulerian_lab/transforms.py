"""Closed forms and recurrences for the polynomial families.

Every family that the literature derives in more than one way is computed
here by all of those routes and the results are compared on the spot; a
mismatch raises CertificationError rather than silently returning one of
them.  The enumeration oracles live in permutations.py and are checked
against these closed forms in the tests, so nothing here depends on group
sweeps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable, Sequence

from .errors import CertificationError
from .poly import ONE, X, ZERO, Poly, one_plus_x_power


@lru_cache(maxsize=None)
def _pnk_row(n: int) -> tuple[Poly, ...]:
    if n == 0:
        return (ONE,)
    prev = _pnk_row(n - 1)
    prefix: list[Poly] = [ZERO]
    for q in prev:
        prefix.append(prefix[-1] + q)
    total = prefix[-1]
    return tuple(X * prefix[k] + (total - prefix[k]) for k in range(n + 1))


def pnk(n: int, k: int) -> Poly:
    """Descent polynomial over permutations of size n+1 with first value k+1.

    Row recurrence: p_{n,k} = x * sum(p_{n-1,i} for i < k)
    + sum(p_{n-1,i} for i >= k); equivalently sum(C(k,i) (x-1)^i A_{n-i}).
    The endpoints give p_{n,0} = A_n and p_{n,n} = x A_n.
    """
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range 0..{n}")
    return _pnk_row(n)[k]


def eulerian(n: int) -> Poly:
    """The descent (equivalently excedance) polynomial of S_n, with A_0 = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _pnk_row(n)[0]


@lru_cache(maxsize=None)
def qnk(n: int, k: int) -> Poly:
    """Eulerian polynomial with the first k fixed-point positions inflated
    by 1+x.  Three independent routes are compared before returning."""
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range 0..{n}")
    via_binomial = ZERO
    via_p = ZERO
    for i in range(k + 1):
        c = comb(k, i)
        via_binomial = via_binomial + eulerian(n - i).times_x_power(i) * c
        via_p = via_p + pnk(n - i, k - i) * c
    if k == 0:
        via_rec = eulerian(n)
    else:
        via_rec = qnk(n, k - 1) + X * qnk(n - 1, k - 1)
    if not (via_binomial == via_p == via_rec):
        raise CertificationError(
            f"q_({n},{k}) routes disagree: binomial={via_binomial!r} "
            f"p-sum={via_p!r} recurrence={via_rec!r}"
        )
    return via_binomial


def binomial_eulerian(n: int) -> Poly:
    """Binomial Eulerian polynomial, the k = n endpoint of the q family."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    via_q = qnk(n, n)
    via_sum = ONE + X * sum(
        (eulerian(i) * comb(n, i) for i in range(1, n + 1)), ZERO
    )
    via_rev = sum(
        (eulerian(i).times_x_power(n - i) * comb(n, i) for i in range(n + 1)), ZERO
    )
    if not (via_q == via_sum == via_rev):
        raise CertificationError(
            f"binomial Eulerian routes disagree at n={n}: "
            f"q={via_q!r} sum={via_sum!r} reversed-sum={via_rev!r}"
        )
    return via_q


@lru_cache(maxsize=None)
def qnkj_star(n: int, k: int, j: int) -> Poly:
    """Refinement of the q family by the preimage of 1, normalized so the
    j = 0 member sheds its forced 1+x factor.

    Defined for 0 <= k <= n+1 and 0 <= j <= n by the branching recurrence
    in j relative to k, with the k <= 1 members collapsing to p_{n,j}.
    """
    if not 0 <= j <= n:
        raise ValueError(f"j={j} out of range 0..{n}")
    if not 0 <= k <= n + 1:
        raise ValueError(f"k={k} out of range 0..{n + 1}")
    if k <= 1:
        return pnk(n, j)
    if j == 0:
        return qnk(n, k - 1)
    level = k - 1 if j <= k - 1 else k
    low = sum((qnkj_star(n - 1, level, i) for i in range(j)), ZERO)
    high = sum((qnkj_star(n - 1, level, i) for i in range(j, n)), ZERO)
    return X * low + high


def qnkj(n: int, k: int, j: int) -> Poly:
    """Un-normalized refinement; equals (1+x) * qnkj_star exactly when j = 0
    and k >= 1, and qnkj_star otherwise."""
    base = qnkj_star(n, k, j)
    if j == 0 and k >= 1:
        return base * one_plus_x_power(1)
    return base


@lru_cache(maxsize=None)
def dnk(n: int, k: int) -> Poly:
    """Excedance polynomial over permutations whose fixed points avoid the
    last k positions: alternating binomial sum checked against the
    subtraction recurrence."""
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range 0..{n}")
    closed = ZERO
    for i in range(k + 1):
        closed = closed + eulerian(n - i) * ((-1) ** i * comb(k, i))
    if k >= 1:
        via_rec = dnk(n, k - 1) - dnk(n - 1, k - 1)
        if closed != via_rec:
            raise CertificationError(
                f"d_({n},{k}) routes disagree: closed={closed!r} "
                f"recurrence={via_rec!r}"
            )
    return closed


def derangement(n: int) -> Poly:
    """Excedance polynomial of the derangements of S_n; d_0 = 1, d_1 = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return dnk(n, n)


@lru_cache(maxsize=None)
def typeB_eulerian(n: int) -> Poly:
    """Descent polynomial of the signed permutation group, computed by the
    derivative recurrence and checked against the closed coefficient form
    b_j = sum((-1)^i C(n+1,i) (2(j-i)+1)^n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        via_rec = ONE
    else:
        prev = typeB_eulerian(n - 1)
        via_rec = (ONE + X * (2 * n - 1)) * prev + (X * 2) * (
            ONE - X
        ) * prev.derivative()
    closed = Poly(
        [
            sum(
                (-1) ** i * comb(n + 1, i) * (2 * (j - i) + 1) ** n
                for i in range(j + 1)
            )
            for j in range(n + 1)
        ]
    )
    if via_rec != closed:
        raise CertificationError(
            f"type B Eulerian routes disagree at n={n}: "
            f"recurrence={via_rec!r} closed={closed!r}"
        )
    return via_rec


def typeB_derangement_image(n: int) -> Poly:
    """Alternating binomial sum of type B Eulerian polynomials; the image of
    x^n under the type B analogue of the derangement transform."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = ZERO
    for i in range(n + 1):
        total = total + typeB_eulerian(n - i) * ((-1) ** i * comb(n, i))
    return total


@lru_cache(maxsize=None)
def generic_hnk(hs: tuple[Poly, ...], n: int, k: int) -> Poly:
    """The additive two-index family built from an arbitrary base sequence:
    h_{n,k} = sum(C(k,i) x^i h_{n-i}), with the shift recurrence
    h_{n,k+1} = h_{n,k} + x h_{n-1,k} asserted on the way."""
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range 0..{n}")
    if n >= len(hs):
        raise ValueError(f"base sequence too short for n={n}")
    closed = ZERO
    for i in range(k + 1):
        closed = closed + hs[n - i].times_x_power(i) * comb(k, i)
    if k >= 1:
        via_rec = generic_hnk(hs, n, k - 1) + X * generic_hnk(hs, n - 1, k - 1)
        if closed != via_rec:
            raise CertificationError(
                f"generic h_({n},{k}) routes disagree: closed={closed!r} "
                f"recurrence={via_rec!r}"
            )
    return closed


@lru_cache(maxsize=None)
def generic_lnk(hs: tuple[Poly, ...], n: int, k: int) -> Poly:
    """The alternating two-index family from an arbitrary base sequence:
    l_{n,k} = sum((-1)^i C(k,i) h_{n-i}), with l_{n,k+1} = l_{n,k} - l_{n-1,k}
    asserted on the way.  With the Eulerian base this is dnk."""
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range 0..{n}")
    if n >= len(hs):
        raise ValueError(f"base sequence too short for n={n}")
    closed = ZERO
    for i in range(k + 1):
        closed = closed + hs[n - i] * ((-1) ** i * comb(k, i))
    if k >= 1:
        via_rec = generic_lnk(hs, n, k - 1) - generic_lnk(hs, n - 1, k - 1)
        if closed != via_rec:
            raise CertificationError(
                f"generic l_({n},{k}) routes disagree: closed={closed!r} "
                f"recurrence={via_rec!r}"
            )
    return closed


@dataclass(frozen=True)
class LinearTransform:
    """A linear operator on polynomials of degree at most n, given by its
    images of the monomials."""

    name: str
    n: int
    image: Callable[[int], Poly]


def apply_transform(transform: LinearTransform, p: Poly) -> Poly:
    if p.deg() > transform.n:
        raise ValueError(
            f"degree {p.deg()} exceeds the bound {transform.n} of "
            f"transform {transform.name}"
        )
    total = ZERO
    for m, c in enumerate(p):
        if c:
            total = total + transform.image(m) * c
    return total


def eulerian_transform(n: int) -> LinearTransform:
    """x^0 -> 1 and x^m -> x A_m for m >= 1."""

    def image(m: int) -> Poly:
        return ONE if m == 0 else X * eulerian(m)

    return LinearTransform(name="eulerian-interior", n=n, image=image)


def plain_eulerian_transform(n: int) -> LinearTransform:
    """x^m -> A_m."""
    return LinearTransform(name="eulerian", n=n, image=eulerian)


def derangement_transform(n: int) -> LinearTransform:
    """x^m -> d_m; sends (1+x)^n to A_n."""
    return LinearTransform(name="derangement", n=n, image=derangement)


def typeB_transform(n: int) -> LinearTransform:
    """x^m -> B_m."""
    return LinearTransform(name="typeB-eulerian", n=n, image=typeB_eulerian)


def typeB_derangement_transform(n: int) -> LinearTransform:
    """x^m -> the alternating B sum; the type B derangement analogue."""
    return LinearTransform(
        name="typeB-derangement", n=n, image=typeB_derangement_image
    )


def basis_sequence(images: Sequence[Poly], name: str) -> LinearTransform:
    """Transform with explicitly listed monomial images."""
    imgs = tuple(images)

    def image(m: int) -> Poly:
        return imgs[m]

    return LinearTransform(name=name, n=len(imgs) - 1, image=image)
