"""Dense univariate polynomials over the rationals.

Coefficients are ``fractions.Fraction`` values stored low degree first with
trailing zeros stripped, so the zero polynomial has an empty coefficient
tuple and degree -1.  Floats are rejected everywhere: every computation in
this package is exact.

Beyond ring arithmetic the module provides the structural toolkit used by
the rest of the package: reciprocals and palindromicity with respect to a
chosen degree, unimodality with peak location, gamma expansions, the
symmetric decomposition p = a + x*b, and expansions in the triangular basis
x^(n-k) * (1+x)^k.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Union

Scalar = Union[int, Fraction]


def _as_fraction(value: object) -> Fraction:
    if isinstance(value, float):
        raise TypeError("float coefficients are not allowed, use Fraction or int")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as a coefficient")


_TERM_RE = re.compile(
    r"""^(?P<sign>[+-]?)\s*
        (?P<coeff>\d+(?:/\d+)?)?\s*
        (?:\*?\s*x(?:\^(?P<exp>\d+))?)?$""",
    re.VERBOSE,
)


class Poly:
    """Immutable dense polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[object] = ()) -> None:
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Poly is immutable")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def constant(cls, value: Scalar) -> "Poly":
        return cls((value,))

    @classmethod
    def monomial(cls, coeff: Scalar, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        return cls((0,) * exponent + (coeff,))

    @classmethod
    def from_text(cls, text: str) -> "Poly":
        """Parse human readable polynomial text such as ``1 + 11x + 11x^2 + x^3``.

        Accepts optional ``*`` between coefficient and variable, rational
        coefficients written ``a/b``, and bare terms like ``x``, ``7x`` or
        ``x^4``.
        """
        s = text.strip().replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        terms = re.findall(r"[+-]?[^+-]+", s)
        if "".join(terms) != s:
            raise ValueError(f"cannot parse polynomial text: {text!r}")
        by_exp: dict[int, Fraction] = {}
        for term in terms:
            m = _TERM_RE.match(term)
            if not m or (m.group("coeff") is None and "x" not in term):
                raise ValueError(f"cannot parse term {term!r} in {text!r}")
            coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
            if m.group("sign") == "-":
                coeff = -coeff
            if "x" in term:
                exp = int(m.group("exp")) if m.group("exp") else 1
            else:
                exp = 0
            by_exp[exp] = by_exp.get(exp, Fraction(0)) + coeff
        size = max(by_exp) + 1
        cs = [Fraction(0)] * size
        for exp, coeff in by_exp.items():
            cs[exp] = coeff
        return cls(cs)

    # -- basic queries ---------------------------------------------------------

    def deg(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly.from_text({self.to_text()!r})"

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other: object) -> "Poly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: object) -> "Poly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "Poly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: object) -> "Poly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZERO
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: object) -> tuple["Poly", "Poly"]:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn = other.deg()
        lead = other.leading()
        quot = [Fraction(0)] * max(len(rem) - dn, 0)
        for i in range(len(rem) - dn - 1, -1, -1):
            c = rem[i + dn] / lead
            if c == 0:
                continue
            quot[i] = c
            for j, b in enumerate(other.coeffs):
                rem[i + j] -= c * b
        return Poly(quot), Poly(rem)

    def __floordiv__(self, other: object) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: object) -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError(f"{self!r} is not divisible by {other!r}")
        return q

    def evaluate(self, x: Scalar) -> Fraction:
        """Evaluate at a rational point by Horner's rule."""
        x = _as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def times_x_power(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative shift")
        if self.is_zero():
            return ZERO
        return Poly((0,) * k + self.coeffs)

    # -- formatting ----------------------------------------------------------------

    def to_text(self) -> str:
        """Render in ascending degree order, e.g. ``1 + 11x + 11x^2 + x^3``."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "x" if e == 1 else f"x^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def _coerce(value: object) -> Poly | None:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.constant(value)
    return None


ZERO = Poly()
ONE = Poly((1,))
X = Poly((0, 1))


@lru_cache(maxsize=None)
def one_plus_x_power(k: int) -> Poly:
    """(1 + x)^k with binomial coefficients, cached."""
    return Poly(math.comb(k, i) for i in range(k + 1))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor, with gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return ZERO
    return a * (1 / a.leading())


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: monic squarefree factors with their multiplicities.

    Returns pairs (factor, multiplicity) in increasing multiplicity order,
    omitting trivial (constant) factors.  The product of factor^multiplicity
    equals p up to a nonzero rational constant.
    """
    if p.deg() <= 0:
        return []
    p = p * (1 / p.leading())
    dp = p.derivative()
    g = poly_gcd(p, dp)
    w = p.exact_div(g)
    y = dp.exact_div(g)
    z = y - w.derivative()
    out: list[tuple[Poly, int]] = []
    i = 1
    while w.deg() > 0:
        f = poly_gcd(w, z)
        if f.deg() > 0:
            out.append((f, i))
        w = w.exact_div(f)
        y = z.exact_div(f)
        z = y - w.derivative()
        i += 1
    return out


def squarefree_part(p: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of p."""
    if p.deg() <= 0:
        return ZERO if p.is_zero() else ONE
    g = poly_gcd(p, p.derivative())
    q = p.exact_div(g)
    return q * (1 / q.leading())


def reciprocal(p: Poly, n: int) -> Poly:
    """x^n * p(1/x), the coefficient reversal inside degree window n.

    Requires deg(p) <= n so the result is a polynomial.
    """
    if n < 0:
        raise ValueError("window degree must be nonnegative")
    if p.deg() > n:
        raise ValueError(f"degree {p.deg()} exceeds window {n}")
    return Poly(p[n - i] for i in range(n + 1))


def is_symmetric(p: Poly, n: int) -> bool:
    """Whether the coefficient vector inside degree window n is palindromic."""
    if p.deg() > n:
        return False
    return reciprocal(p, n) == p


def is_unimodal(p: Poly) -> int | None:
    """Least valid peak index if the coefficients rise then fall, else None.

    Only polynomials with nonnegative coefficients qualify.  Index j is a
    valid peak when c_0 <= ... <= c_j >= ... >= c_d; the smallest such j is
    returned.  The zero polynomial counts as unimodal with peak 0.
    """
    cs = p.coeffs
    if not cs:
        return 0
    if any(c < 0 for c in cs):
        return None
    d = len(cs) - 1
    suffix_start = d
    while suffix_start > 0 and cs[suffix_start - 1] >= cs[suffix_start]:
        suffix_start -= 1
    prefix_end = 0
    while prefix_end < d and cs[prefix_end] <= cs[prefix_end + 1]:
        prefix_end += 1
    if suffix_start <= prefix_end:
        return suffix_start
    return None


@dataclass(frozen=True)
class GammaVector:
    """Coordinates of a palindromic polynomial in the basis x^k (1+x)^(n-2k)."""

    n: int
    gammas: tuple[Fraction, ...]

    def reconstruct(self) -> "Poly":
        total = ZERO
        for k, g in enumerate(self.gammas):
            if g != 0:
                total = total + one_plus_x_power(self.n - 2 * k).times_x_power(k) * g
        return total

    def is_nonnegative(self) -> bool:
        return all(g >= 0 for g in self.gammas)


def gamma_expand(p: Poly, n: int) -> GammaVector | None:
    """Expand p in the basis x^k (1+x)^(n-2k) by iterated peeling, or None.

    The expansion exists exactly when p is palindromic inside the degree
    window n; the vector has floor(n/2) + 1 entries.
    """
    if not is_symmetric(p, n):
        return None
    gammas: list[Fraction] = []
    residual = p
    for k in range(n // 2 + 1):
        g = residual[k]
        gammas.append(g)
        if g != 0:
            residual = residual - one_plus_x_power(n - 2 * k).times_x_power(k) * g
    assert residual.is_zero()
    return GammaVector(n=n, gammas=tuple(gammas))


def is_gamma_positive(p: Poly, n: int) -> bool:
    gv = gamma_expand(p, n)
    return gv is not None and gv.is_nonnegative()


@dataclass(frozen=True)
class SymmetricDecomposition:
    """The unique split p = a + x*b with a palindromic inside window n and
    b palindromic inside window n - 1."""

    a: Poly
    b: Poly
    n: int


def symmetric_decomposition(p: Poly, n: int) -> SymmetricDecomposition:
    """Split p = a + x*b into its palindromic parts for degree window n.

    Works for any p with deg(p) <= n; the difference p - x^n p(1/x) always
    vanishes at 1, which makes the division by x - 1 exact.
    """
    if p.deg() > n:
        raise ValueError(f"degree {p.deg()} exceeds window {n}")
    b = (p - reciprocal(p, n)).exact_div(X - ONE)
    a = p - b.times_x_power(1)
    assert is_symmetric(a, n) and is_symmetric(b, n - 1) if n >= 1 else b.is_zero()
    return SymmetricDecomposition(a=a, b=b, n=n)


def basis_p_coeffs(p: Poly, n: int) -> tuple[Fraction, ...]:
    """Coefficients c_0..c_n with p = sum of c_k x^(n-k) (1+x)^k.

    The basis is triangular in the lowest degree term, so the expansion
    always exists and is unique for deg(p) <= n.
    """
    if p.deg() > n:
        raise ValueError(f"degree {p.deg()} exceeds window {n}")
    residual = p
    out = [Fraction(0)] * (n + 1)
    for k in range(n, -1, -1):
        c = residual[n - k]
        out[k] = c
        if c != 0:
            residual = residual - one_plus_x_power(k).times_x_power(n - k) * c
    assert residual.is_zero()
    return tuple(out)


def basis_p_combination(coeffs: Sequence[Scalar], n: int) -> Poly:
    """Inverse of basis_p_coeffs: sum of c_k x^(n-k) (1+x)^k."""
    if len(coeffs) != n + 1:
        raise ValueError(f"expected {n + 1} coefficients, got {len(coeffs)}")
    total = ZERO
    for k, c in enumerate(coeffs):
        if c != 0:
            total = total + one_plus_x_power(k).times_x_power(n - k) * c
    return total
