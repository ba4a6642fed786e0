"""Named verification suites shared by the test battery and the CLI.

Each engine returns a flat list of CaseResult records so callers can render
them as a report or assert that every status is "pass".  The suites pit
independent routes against each other: closed forms against full-group
enumerations, geometric face counts against permutation statistics, and
certified decompositions against sampled inputs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .poly import (
    ONE,
    X,
    ZERO,
    Poly,
    basis_p_combination,
    is_symmetric,
    one_plus_x_power,
    reciprocal,
)
from .roots import (
    interlaces,
    interlacing_failures,
    interlacing_symmetric_decomposition,
    is_real_rooted,
)
from .transforms import (
    apply_transform,
    binomial_eulerian,
    derangement_transform,
    dnk,
    eulerian,
    eulerian_transform,
    generic_hnk,
    generic_lnk,
    pnk,
    qnk,
    qnkj,
    qnkj_star,
    typeB_eulerian,
)
from .permutations import (
    brute_force_family,
    flag_excedance_poly,
    symmetric_group,
)
from .simplicial import (
    CarriedTriangulation,
    FTriangle,
    antiprism_partial,
    antiprism_sphere,
    barycentric_f_triangle,
    barycentric_subdivision,
    colored_barycentric,
    edgewise_subdivision,
    f_triangle,
    ft_lnk,
    ft_qnk,
    ft_theta,
    h_poly,
    identity_suite,
    theta_flags,
    trivial_f_triangle,
    trivial_triangulation,
)


@dataclass(frozen=True)
class CaseResult:
    name: str
    status: str
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "pass"


def _case(name: str, ok: bool, detail: str = "") -> CaseResult:
    return CaseResult(name=name, status="pass" if ok else "fail", detail=detail)


def _eq_case(name: str, got: Poly, want: Poly) -> CaseResult:
    return _case(name, got == want, f"got {got.to_text()}, want {want.to_text()}")


GOLDEN_QNK = {
    (0, 0): "1",
    (1, 0): "1",
    (1, 1): "1 + x",
    (2, 0): "1 + x",
    (2, 1): "1 + 2x",
    (2, 2): "1 + 3x + x^2",
    (3, 0): "1 + 4x + x^2",
    (3, 1): "1 + 5x + 2x^2",
    (3, 2): "1 + 6x + 4x^2",
    (3, 3): "1 + 7x + 7x^2 + x^3",
    (4, 0): "1 + 11x + 11x^2 + x^3",
    (4, 1): "1 + 12x + 15x^2 + 2x^3",
    (4, 2): "1 + 13x + 20x^2 + 4x^3",
    (4, 3): "1 + 14x + 26x^2 + 8x^3",
    (4, 4): "1 + 15x + 33x^2 + 15x^3 + x^4",
}

GOLDEN_DNK = {
    (0, 0): "1",
    (1, 0): "1",
    (1, 1): "0",
    (2, 0): "1 + x",
    (2, 1): "x",
    (2, 2): "x",
    (3, 0): "1 + 4x + x^2",
    (3, 1): "3x + x^2",
    (3, 2): "2x + x^2",
    (3, 3): "x + x^2",
    (4, 0): "1 + 11x + 11x^2 + x^3",
    (4, 1): "7x + 10x^2 + x^3",
    (4, 2): "4x + 9x^2 + x^3",
    (4, 3): "2x + 8x^2 + x^3",
    (4, 4): "x + 7x^2 + x^3",
}


def golden_table_cases() -> list[CaseResult]:
    """Both frozen reference tables against the closed-form families."""
    cases = []
    for (n, k), text in sorted(GOLDEN_QNK.items()):
        cases.append(_eq_case(f"golden-qnk-{n}-{k}", qnk(n, k), Poly.from_text(text)))
    for (n, k), text in sorted(GOLDEN_DNK.items()):
        cases.append(_eq_case(f"golden-dnk-{n}-{k}", dnk(n, k), Poly.from_text(text)))
    return cases


def _q_rows_by_enumeration(n: int) -> dict[int, Poly]:
    """q_{n,k} for every k from one sweep over S_n, via (exc, fix-mask)."""
    counts: dict[tuple[int, int], int] = {}
    for word in symmetric_group(n):
        exc = 0
        fixmask = 0
        for i, v in enumerate(word):
            if v > i + 1:
                exc += 1
            elif v == i + 1:
                fixmask |= 1 << i
        key = (exc, fixmask)
        counts[key] = counts.get(key, 0) + 1
    rows: dict[int, Poly] = {}
    for k in range(n + 1):
        low = (1 << k) - 1
        total = ZERO
        for (exc, fixmask), c in counts.items():
            t = (fixmask & low).bit_count()
            total = total + one_plus_x_power(t).times_x_power(exc) * c
        rows[k] = total
    return rows


def _d_rows_by_enumeration(n: int) -> dict[int, Poly]:
    """d_{n,k} for every k from one sweep, via (exc, largest fixed point)."""
    counts: dict[tuple[int, int], int] = {}
    for word in symmetric_group(n):
        exc = 0
        maxfix = 0
        for i, v in enumerate(word):
            if v > i + 1:
                exc += 1
            elif v == i + 1:
                maxfix = i + 1
        key = (exc, maxfix)
        counts[key] = counts.get(key, 0) + 1
    rows: dict[int, Poly] = {}
    for k in range(n + 1):
        coeffs = [0] * (n + 1)
        for (exc, maxfix), c in counts.items():
            if maxfix <= n - k:
                coeffs[exc] += c
        rows[k] = Poly(coeffs)
    return rows


def _qnkj_grids_by_enumeration(
    n: int,
) -> tuple[dict[tuple[int, int], Poly], dict[tuple[int, int], Poly]]:
    """Both statistics for the doubly refined family, one sweep each.

    Returns (fix-and-excedance grid, bad-and-descent grid), keyed by (k, j)
    with k in 0..n+1 and j in 0..n; permutations live in S_{n+1}.
    """
    fix_counts: dict[tuple[int, int, int], int] = {}
    bad_counts: dict[tuple[int, int, int], int] = {}
    for word in symmetric_group(n + 1):
        m = n + 1
        exc = 0
        fixmask = 0
        j_fix = 0
        for i, v in enumerate(word):
            if v > i + 1:
                exc += 1
            elif v == i + 1:
                fixmask |= 1 << i
            if v == 1:
                j_fix = i
        key = (j_fix, exc, fixmask)
        fix_counts[key] = fix_counts.get(key, 0) + 1

        des = sum(1 for i in range(m - 1) if word[i] > word[i + 1])
        badmask = 0
        cur = m + 1
        suffix_min = [0] * m
        for i in range(m - 1, -1, -1):
            suffix_min[i] = cur = min(cur, word[i])
        for i in range(m):
            if word[i] == suffix_min[i] and (i == 0 or word[i - 1] < word[i]):
                badmask |= 1 << (word[i] - 1)
        key = (word[0] - 1, des, badmask)
        bad_counts[key] = bad_counts.get(key, 0) + 1

    fix_grid: dict[tuple[int, int], Poly] = {}
    bad_grid: dict[tuple[int, int], Poly] = {}
    for k in range(n + 2):
        low = (1 << k) - 1
        for j in range(n + 1):
            total = ZERO
            for (jj, exc, fixmask), c in fix_counts.items():
                if jj == j:
                    t = (fixmask & low).bit_count()
                    total = total + one_plus_x_power(t).times_x_power(exc) * c
            fix_grid[(k, j)] = total
            total = ZERO
            for (jj, des, badmask), c in bad_counts.items():
                if jj == j:
                    t = (badmask & low).bit_count()
                    total = total + one_plus_x_power(t).times_x_power(des) * c
            bad_grid[(k, j)] = total
    return fix_grid, bad_grid


def equivalence_cases(n_max: int = 6) -> list[CaseResult]:
    """Closed forms against raw enumeration for every family, n <= n_max."""
    cases = []
    for n in range(n_max + 1):
        cases.append(
            _eq_case(f"A-des-enumeration-{n}", brute_force_family("A", n), eulerian(n))
        )
        cases.append(
            _eq_case(
                f"A-exc-enumeration-{n}", brute_force_family("A-exc", n), eulerian(n)
            )
        )
        q_rows = _q_rows_by_enumeration(n)
        cases.append(
            _eq_case(f"Atilde-enumeration-{n}", q_rows[n], binomial_eulerian(n))
        )
        for k in range(n + 1):
            cases.append(
                _eq_case(f"p-des-enumeration-{n}-{k}", brute_force_family("p", n, k=k), pnk(n, k))
            )
            cases.append(
                _eq_case(
                    f"p-asc-enumeration-{n}-{k}",
                    brute_force_family("p-asc", n, k=k),
                    pnk(n, k),
                )
            )
            cases.append(
                _eq_case(
                    f"p-exc-enumeration-{n}-{k}",
                    brute_force_family("p-exc", n, k=k),
                    pnk(n, k),
                )
            )
            cases.append(_eq_case(f"q-fix-enumeration-{n}-{k}", q_rows[k], qnk(n, k)))
            cases.append(
                _eq_case(
                    f"q-bad-enumeration-{n}-{k}",
                    brute_force_family("q-bad", n, k=k),
                    qnk(n, k),
                )
            )
        d_rows = _d_rows_by_enumeration(n)
        for k in range(n + 1):
            cases.append(_eq_case(f"dnk-enumeration-{n}-{k}", d_rows[k], dnk(n, k)))
            cases.append(
                _eq_case(
                    f"xi-reconstruction-{n}-{k}",
                    brute_force_family("xi", n, k=k),
                    dnk(n, k),
                )
            )
        fix_grid, bad_grid = _qnkj_grids_by_enumeration(n)
        for k in range(n + 2):
            for j in range(n + 1):
                closed = qnkj(n, k, j)
                cases.append(
                    _eq_case(f"qnkj-fix-enumeration-{n}-{k}-{j}", fix_grid[(k, j)], closed)
                )
                cases.append(
                    _eq_case(f"qnkj-bad-enumeration-{n}-{k}-{j}", bad_grid[(k, j)], closed)
                )
                if j == 0 and k >= 1:
                    cases.append(
                        _eq_case(
                            f"qstar-normalization-{n}-{k}-{j}",
                            fix_grid[(k, j)].exact_div(one_plus_x_power(1)),
                            qnkj_star(n, k, j),
                        )
                    )
        cases.append(
            _eq_case(
                f"B-enumeration-{n}", brute_force_family("B", n), typeB_eulerian(n)
            )
        )
        for k in range(n + 1):
            cases.append(
                _eq_case(
                    f"colored-r1-reduction-{n}-{k}",
                    flag_excedance_poly(n, 1, k),
                    dnk(n, n - k),
                )
            )
    return cases


def identity_cases(n_max: int = 8) -> list[CaseResult]:
    """The recurrence and summation identities tying the families together,
    checked exactly for all indices up to n_max."""
    cases = []
    for n in range(n_max + 1):
        # additive recurrence and both closed forms of the q family
        for k in range(n + 1):
            if k < n:
                cases.append(
                    _eq_case(
                        f"qnk-recurrence-{n}-{k}",
                        qnk(n, k + 1),
                        qnk(n, k) + X * qnk(n - 1, k),
                    )
                )
            via_binomial = sum(
                (eulerian(n - i).times_x_power(i) * comb(k, i) for i in range(k + 1)),
                ZERO,
            )
            via_p = sum((pnk(n - i, k - i) * comb(k, i) for i in range(k + 1)), ZERO)
            cases.append(_eq_case(f"qnk-binomial-form-{n}-{k}", qnk(n, k), via_binomial))
            cases.append(_eq_case(f"qnk-p-form-{n}-{k}", qnk(n, k), via_p))
            cases.append(
                _eq_case(
                    f"qnk-via-interior-eulerian-{n}-{k}",
                    reciprocal(qnk(n, k), n),
                    apply_transform(
                        eulerian_transform(n),
                        one_plus_x_power(k).times_x_power(n - k),
                    ),
                )
            )
        # the doubly refined family: boundary, diagonal, shift and top rows
        for k in range(1, n + 2):
            cases.append(
                _eq_case(
                    f"qstar-first-column-{n}-{k}", qnkj_star(n, k, 0), qnk(n, k - 1)
                )
            )
            if 1 <= k <= n:
                cases.append(
                    _eq_case(
                        f"qstar-last-column-{n}-{k}",
                        qnkj_star(n, k, n),
                        X * qnk(n, k - 1),
                    )
                )
                cases.append(
                    _eq_case(
                        f"qnkj-diagonal-{n}-{k}", qnkj(n, k, k), qnkj(n, k + 1, k)
                    )
                )
        for k in range(n):
            if n >= 1:
                total = sum((qnkj(n - 1, k, j) for j in range(n)), ZERO)
                cases.append(_eq_case(f"qnk-from-qnkj-{n}-{k}", qnk(n, k), total))
                total = sum((qnkj_star(n - 1, k + 1, j) for j in range(n)), ZERO)
                cases.append(_eq_case(f"qnk-from-qstar-{n}-{k}", qnk(n, k), total))
        for j in range(n + 1):
            cases.append(
                _eq_case(f"qnkj-base-0-{n}-{j}", qnkj(n, 0, j), pnk(n, j))
            )
            cases.append(
                _eq_case(f"qstar-base-1-{n}-{j}", qnkj_star(n, 1, j), pnk(n, j))
            )
        for k in range(2, n + 1):
            for j in range(k, n + 1):
                cases.append(
                    _eq_case(
                        f"qnkj-shift-{n}-{k}-{j}",
                        qnkj(n, k, j),
                        qnkj(n, k - 1, j) + X * qnkj(n - 1, k - 1, j - 1),
                    )
                )
        # derangement family: alternating form and recurrence
        for k in range(n + 1):
            alt = sum(
                (eulerian(n - i) * ((-1) ** i * comb(k, i)) for i in range(k + 1)),
                ZERO,
            )
            cases.append(_eq_case(f"dnk-alternating-form-{n}-{k}", dnk(n, k), alt))
            if k >= 1:
                cases.append(
                    _eq_case(
                        f"dnk-recurrence-{n}-{k}",
                        dnk(n, k),
                        dnk(n, k - 1) - dnk(n - 1, k - 1),
                    )
                )
            cases.append(
                _eq_case(
                    f"dnk-via-derangement-transform-{n}-{k}",
                    dnk(n, k),
                    apply_transform(
                        derangement_transform(n),
                        one_plus_x_power(n - k).times_x_power(k),
                    ),
                )
            )
        cases.append(
            _eq_case(
                f"derangement-binomial-{n}",
                apply_transform(derangement_transform(n), one_plus_x_power(n)),
                eulerian(n),
            )
        )
        cases.append(
            _eq_case(
                f"Atilde-via-interior-eulerian-{n}",
                apply_transform(eulerian_transform(n), one_plus_x_power(n)),
                binomial_eulerian(n),
            )
        )
        # the abstract two-index families over the f-triangle h-sequences
        bary = barycentric_f_triangle(n)
        triv = trivial_f_triangle(n)
        for m in range(n + 1):
            for k in range(m + 1):
                cases.append(
                    _eq_case(
                        f"ft-qnk-barycentric-{n}-{m}-{k}", ft_qnk(bary, m, k), qnk(m, k)
                    )
                )
                cases.append(
                    _eq_case(
                        f"ft-lnk-barycentric-{n}-{m}-{k}", ft_lnk(bary, m, k), dnk(m, k)
                    )
                )
                if k < m:
                    cases.append(
                        _eq_case(
                            f"ft-qnk-recurrence-trivial-{n}-{m}-{k}",
                            ft_qnk(triv, m, k + 1),
                            ft_qnk(triv, m, k) + X * ft_qnk(triv, m - 1, k),
                        )
                    )
                    cases.append(
                        _eq_case(
                            f"ft-lnk-recurrence-trivial-{n}-{m}-{k}",
                            ft_lnk(triv, m, k + 1),
                            ft_lnk(triv, m, k) - ft_lnk(triv, m - 1, k),
                        )
                    )
        cases.extend(worpitzky_cases(n))
    return cases


def worpitzky_cases(n: int) -> list[CaseResult]:
    """Series congruences: the rational generating functions of m^k (1+m)^(n-k)
    and (2m+1)^n truncate to the p and B families."""
    cases = []
    m_top = n + 3
    one_minus = (ONE - X) ** (n + 1)
    for k in range(n + 1):
        series = Poly([m**k * (m + 1) ** (n - k) for m in range(m_top + 1)])
        prod = series * one_minus
        target = pnk(n, k)
        ok = all(prod[i] == target[i] for i in range(m_top + 1))
        cases.append(
            _case(
                f"worpitzky-p-{n}-{k}",
                ok,
                f"truncated product {prod.to_text()} vs {target.to_text()}",
            )
        )
    series = Poly([(2 * m + 1) ** n for m in range(m_top + 1)])
    prod = series * one_minus
    target = typeB_eulerian(n)
    ok = all(prod[i] == target[i] for i in range(m_top + 1))
    cases.append(
        _case(
            f"worpitzky-B-{n}",
            ok,
            f"truncated product {prod.to_text()} vs {target.to_text()}",
        )
    )
    return cases


def q_interlacing_cases(n_max: int = 9) -> list[CaseResult]:
    cases = []
    for n in range(n_max + 1):
        row = [qnk(n, k) for k in range(n + 1)]
        rr = all(is_real_rooted(q) for q in row)
        fails = interlacing_failures(row)
        cases.append(_case(f"qnk-row-real-rooted-{n}", rr))
        cases.append(
            _case(f"qnk-row-interlacing-{n}", not fails, f"failed pairs {fails}")
        )
    return cases


def d_interlacing_cases(n_max: int = 9) -> list[CaseResult]:
    cases = []
    for n in range(n_max + 1):
        row = [dnk(n, k) for k in range(n + 1)]
        rr = all(is_real_rooted(q) for q in row)
        fails = interlacing_failures(row)
        cases.append(_case(f"dnk-row-real-rooted-{n}", rr))
        cases.append(
            _case(f"dnk-row-interlacing-{n}", not fails, f"failed pairs {fails}")
        )
    return cases


def sample_p_polynomial(rng: random.Random, n: int) -> Poly:
    """Random element of the nonnegative span of x^(n-k) (1+x)^k."""
    coeffs = [
        Fraction(rng.randrange(100), rng.randrange(1, 10)) for _ in range(n + 1)
    ]
    return basis_p_combination(coeffs, n)


def theorem1_sample_cases(n: int, samples: int, seed: int) -> list[CaseResult]:
    """Sampled certification that the interior Eulerian transform produces
    real-rooted images squeezed between the binomial Eulerian polynomial and
    x A_n, with an interlacing nonnegative split."""
    rng = random.Random(seed)
    transform = eulerian_transform(n)
    upper = X * eulerian(n)
    lower = binomial_eulerian(n)
    cases = []
    for s in range(samples):
        p = sample_p_polynomial(rng, n)
        f = apply_transform(transform, p)
        verdict = interlacing_symmetric_decomposition(f, n)
        ok = (
            is_real_rooted(f)
            and interlaces(lower, f)
            and interlaces(f, upper)
            and verdict.nonnegative
            and verdict.real_rooted_pair
            and verdict.interlacing
            and verdict.unimodal_pair
            and verdict.gamma_positive_pair
        )
        cases.append(
            _case(
                f"theorem1-sample-{n}-{s}",
                ok,
                f"p = {p.to_text()}; image {f.to_text()}; "
                f"nonneg={verdict.nonnegative} rr={verdict.real_rooted_pair} "
                f"interlacing={verdict.interlacing}",
            )
        )
    return cases


def derangement_sample_cases(n: int, samples: int, seed: int) -> list[CaseResult]:
    """Sampled certification for the derangement transform: images are real
    rooted and their reversals split into interlacing nonnegative pairs."""
    rng = random.Random(seed)
    transform = derangement_transform(n)
    cases = []
    for s in range(samples):
        p = sample_p_polynomial(rng, n)
        g = apply_transform(transform, p)
        rev = reciprocal(g, n)
        verdict = interlacing_symmetric_decomposition(rev, n)
        ok = (
            is_real_rooted(g)
            and verdict.nonnegative
            and verdict.real_rooted_pair
            and verdict.interlacing
        )
        cases.append(
            _case(
                f"derangement-sample-{n}-{s}",
                ok,
                f"p = {p.to_text()}; image {g.to_text()}; "
                f"nonneg={verdict.nonnegative} rr={verdict.real_rooted_pair} "
                f"interlacing={verdict.interlacing}",
            )
        )
    return cases


def eulerian_combination_sample_cases(
    n: int, samples: int, seed: int
) -> list[CaseResult]:
    """Sampled check that s = a A_n + b A_{n-1} + c A_{n-2} is real rooted
    whenever (a, b, c) comes from the nonnegative cone a = c0+c1+c2,
    b = c1+2c2, c = c2, and that x s splits into an interlacing pair."""
    if n < 2:
        raise ValueError("needs n >= 2")
    rng = random.Random(seed)
    cases = []
    for s_idx in range(samples):
        c0, c1, c2 = (
            Fraction(rng.randrange(100), rng.randrange(1, 10)) for _ in range(3)
        )
        s = (
            eulerian(n) * (c0 + c1 + c2)
            + eulerian(n - 1) * (c1 + 2 * c2)
            + eulerian(n - 2) * c2
        )
        verdict = interlacing_symmetric_decomposition(X * s, n)
        ok = is_real_rooted(s) and verdict.interlacing and verdict.nonnegative
        cases.append(
            _case(
                f"eulerian-combination-sample-{n}-{s_idx}",
                ok,
                f"coeffs ({c0},{c1},{c2}); s = {s.to_text()}",
            )
        )
    return cases


def build_geometry_family(family: str, n: int, r: int = 2) -> CarriedTriangulation:
    if family == "trivial":
        return trivial_triangulation(n)
    if family == "barycentric":
        return barycentric_subdivision(n)
    if family == "esd":
        return edgewise_subdivision(n, r)
    if family == "colored":
        return colored_barycentric(n, r)
    raise ValueError(f"unknown geometry family {family!r}")


def geometry_cases(
    family: str, n: int, r: int = 2, with_antiprism: bool = True
) -> list[CaseResult]:
    """Everything the face-count calculus promises for one triangulation:
    the identity suite, uniformity of the f-triangle, theta symmetry, the
    cross-checks against the permutation families, and the antiprism
    subcomplex formula."""
    t = build_geometry_family(family, n, r)
    label = f"{family}-{n}" + (f"-r{r}" if family in ("esd", "colored") else "")
    cases = []

    for c in identity_suite(t, strict=False):
        cases.append(_case(f"{label}-{c.name}", c.ok, c.detail))

    try:
        triangle = f_triangle(t)
        cases.append(_case(f"{label}-uniform", True))
    except ValueError as exc:
        cases.append(_case(f"{label}-uniform", False, str(exc)))
        return cases

    for m in range(n + 1):
        theta = ft_theta(triangle, m)
        cases.append(
            _case(
                f"{label}-ft-theta-symmetric-{m}",
                is_symmetric(theta, m),
                theta.to_text(),
            )
        )

    if family == "barycentric":
        cases.append(
            _case(
                f"{label}-ft-matches-closed-form",
                triangle == barycentric_f_triangle(n),
            )
        )
        for emask in range(1 << n):
            e = emask.bit_count()
            cases.append(
                _eq_case(
                    f"{label}-local-h-derangement-{emask}",
                    t.local_h(emask),
                    dnk(n, n - e),
                )
            )
    if family == "trivial":
        cases.append(
            _case(
                f"{label}-ft-matches-closed-form",
                triangle == trivial_f_triangle(n),
            )
        )
    if family == "colored":
        for emask in range(1 << n):
            e = emask.bit_count()
            cases.append(
                _eq_case(
                    f"{label}-local-h-flag-excedance-{emask}",
                    t.local_h(emask),
                    flag_excedance_poly(n, r, e),
                )
            )

    if with_antiprism:
        sphere = antiprism_sphere(t)
        euler = sphere.complex.euler_characteristic()
        cases.append(
            _case(
                f"{label}-antiprism-euler",
                euler == 1 + (-1) ** (n - 1) if n >= 1 else euler == 0,
                f"chi = {euler}",
            )
        )
        for k in range(n + 1):
            partial = antiprism_partial(sphere, k)
            cases.append(
                _eq_case(
                    f"{label}-antiprism-partial-h-{k}",
                    h_poly(partial, n),
                    ft_qnk(triangle, n, k),
                )
            )
    return cases


def conjecture_cases(
    triangle: FTriangle, part: str = "both"
) -> tuple[list[CaseResult], dict]:
    """The interlacing conjecture on one uniform triangulation: hypothesis
    (strong interlacing of the h / theta data) reported first, then the
    real-rootedness and pairwise interlacing of the additive and alternating
    sequences at the top size."""
    if part not in ("a", "b", "both"):
        raise ValueError(f"part must be a, b or both, not {part!r}")
    n = triangle.n
    flags = theta_flags(triangle)
    cases = [
        _case(
            "hypothesis-strong-interlacing",
            flags.strong_interlacing,
            f"theta unimodal={flags.theta_unimodal} "
            f"gamma-positive={flags.theta_gamma_positive}",
        )
    ]
    summary: dict = {"hypothesis": flags.strong_interlacing}
    if part in ("a", "both"):
        row = [ft_qnk(triangle, n, k) for k in range(n + 1)]
        rr = [is_real_rooted(q) for q in row]
        fails = interlacing_failures(row)
        cases.append(_case("part-a-real-rooted", all(rr), f"{rr}"))
        cases.append(_case("part-a-interlacing", not fails, f"failed pairs {fails}"))
        summary["part_a"] = {
            "real_rooted": rr,
            "interlacing_pairs_failed": [list(p) for p in fails],
        }
    if part in ("b", "both"):
        row = [ft_lnk(triangle, n, k) for k in range(n + 1)]
        rr = [is_real_rooted(q) for q in row]
        fails = interlacing_failures(row)
        cases.append(_case("part-b-real-rooted", all(rr), f"{rr}"))
        cases.append(_case("part-b-interlacing", not fails, f"failed pairs {fails}"))
        summary["part_b"] = {
            "real_rooted": rr,
            "interlacing_pairs_failed": [list(p) for p in fails],
        }
    return cases, summary


def generic_conjecture_cases(
    hs: tuple[Poly, ...], n: int, part: str = "both"
) -> tuple[list[CaseResult], dict]:
    """The same conclusion checks over an arbitrary base h-sequence, with the
    hypothesis replaced by the necessary condition that consecutive base
    polynomials are real rooted and interlace."""
    if part not in ("a", "b", "both"):
        raise ValueError(f"part must be a, b or both, not {part!r}")
    hyp = all(is_real_rooted(h) for h in hs[: n + 1]) and all(
        interlaces(hs[m - 1], hs[m]) for m in range(1, n + 1)
    )
    cases = [_case("hypothesis-consecutive-interlacing", hyp)]
    summary: dict = {"hypothesis": hyp}
    if part in ("a", "both"):
        row = [generic_hnk(hs, n, k) for k in range(n + 1)]
        rr = [is_real_rooted(q) for q in row]
        fails = interlacing_failures(row)
        cases.append(_case("part-a-real-rooted", all(rr), f"{rr}"))
        cases.append(_case("part-a-interlacing", not fails, f"failed pairs {fails}"))
        summary["part_a"] = {
            "real_rooted": rr,
            "interlacing_pairs_failed": [list(p) for p in fails],
        }
    if part in ("b", "both"):
        row = [generic_lnk(hs, n, k) for k in range(n + 1)]
        rr = [is_real_rooted(q) for q in row]
        fails = interlacing_failures(row)
        cases.append(_case("part-b-real-rooted", all(rr), f"{rr}"))
        cases.append(_case("part-b-interlacing", not fails, f"failed pairs {fails}"))
        summary["part_b"] = {
            "real_rooted": rr,
            "interlacing_pairs_failed": [list(p) for p in fails],
        }
    return cases, summary


def binomial_base(n: int) -> tuple[Poly, ...]:
    return tuple(one_plus_x_power(m) for m in range(n + 1))


def counterexample_cases() -> list[CaseResult]:
    """The binomial base (1+x)^m at size 2: closed forms pinned and both
    derived sequences failing to interlace at the outer pair."""
    hs = binomial_base(2)
    one_plus_2x = Poly((1, 2))
    cases = []
    for k in range(3):
        cases.append(
            _eq_case(
                f"counterexample-h-value-{k}",
                generic_hnk(hs, 2, k),
                one_plus_x_power(2 - k) * one_plus_2x**k,
            )
        )
        cases.append(
            _eq_case(
                f"counterexample-l-value-{k}",
                generic_lnk(hs, 2, k),
                one_plus_x_power(2 - k).times_x_power(k),
            )
        )
    h_fails = interlacing_failures([generic_hnk(hs, 2, k) for k in range(3)])
    l_fails = interlacing_failures([generic_lnk(hs, 2, k) for k in range(3)])
    cases.append(
        _case("counterexample-h-fails", h_fails == [(0, 2)], f"failed pairs {h_fails}")
    )
    cases.append(
        _case("counterexample-l-fails", l_fails == [(0, 2)], f"failed pairs {l_fails}")
    )
    return cases
