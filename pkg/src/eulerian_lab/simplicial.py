"""Simplicial complexes, carried triangulations of a simplex, and the
face-count calculus behind the geometric polynomial identities.

A triangulation of the simplex on a base vertex set V is stored as a
complex together with a carrier map: each triangulation vertex knows the
smallest face of 2^V containing it.  Every h / interior-h / theta / local-h
computation then reduces to one table counting faces by (carrier, size),
so restrictions to faces of 2^V are submask sums and never materialize new
complexes.  The f-triangle abstraction keeps only those counts per face
size, which is all the uniform-triangulation theory consumes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

from .budget import face_limit
from .errors import BudgetExceeded, CertificationError
from .poly import (
    ZERO,
    Poly,
    is_gamma_positive,
    is_symmetric,
    is_unimodal,
    reciprocal,
)
from .roots import interlaces, is_real_rooted
from .transforms import (
    LinearTransform,
    derangement,
    dnk,
    eulerian,
    generic_hnk,
    generic_lnk,
)


@lru_cache(maxsize=None)
def _one_minus_x_power(k: int) -> Poly:
    return Poly((1, -1)) ** k


class SimplicialComplex:
    """Finite abstract simplicial complex with an explicit vertex order.

    faces must be downward closed; the complex {emptyset} is a (-1)-sphere
    and the void complex (no faces at all) is tolerated as the boundary of
    a point.  The vertex order fixes all index-based output.
    """

    __slots__ = ("faces", "vertex_order", "_index")

    def __init__(self, faces: Iterable[Iterable], vertex_order: Sequence | None = None):
        fs = frozenset(frozenset(f) for f in faces)
        for f in fs:
            for v in f:
                if f - {v} not in fs:
                    raise ValueError("faces are not downward closed")
        verts = set()
        for f in fs:
            verts.update(f)
        if vertex_order is None:
            try:
                order = tuple(sorted(verts))
            except TypeError:
                raise ValueError(
                    "vertex labels are not sortable; pass vertex_order"
                ) from None
        else:
            order = tuple(vertex_order)
            if len(set(order)) != len(order) or set(order) != verts:
                raise ValueError("vertex_order must list each vertex exactly once")
        object.__setattr__(self, "faces", fs)
        object.__setattr__(self, "vertex_order", order)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(order)})

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("SimplicialComplex is immutable")

    @classmethod
    def from_facets(
        cls, facets: Iterable[Iterable], vertex_order: Sequence | None = None
    ) -> "SimplicialComplex":
        faces: set[frozenset] = set()
        for facet in facets:
            base = frozenset(facet)
            members = tuple(base)
            for mask in range(1 << len(members)):
                faces.add(frozenset(members[i] for i in range(len(members)) if mask >> i & 1))
        faces.add(frozenset())
        return cls(faces, vertex_order)

    def is_void(self) -> bool:
        return not self.faces

    def index(self, v) -> int:
        return self._index[v]

    def dim(self) -> int:
        if self.is_void():
            raise ValueError("the void complex has no dimension")
        return max(len(f) for f in self.faces) - 1

    def f_vector(self) -> tuple[int, ...]:
        """Counts by cardinality, starting with the empty face."""
        if self.is_void():
            return ()
        top = max(len(f) for f in self.faces)
        out = [0] * (top + 1)
        for f in self.faces:
            out[len(f)] += 1
        return tuple(out)

    def facets(self) -> tuple[frozenset, ...]:
        out = []
        for f in self.faces:
            if not any(f | {v} in self.faces for v in self.vertex_order if v not in f):
                out.append(f)
        return tuple(sorted(out, key=self._face_key))

    def euler_characteristic(self) -> int:
        return sum((-1) ** (len(f) - 1) for f in self.faces if f)

    def induced(self, keep: Iterable) -> "SimplicialComplex":
        keep_set = set(keep)
        faces = [f for f in self.faces if f <= keep_set]
        order = tuple(v for v in self.vertex_order if v in keep_set)
        return SimplicialComplex(faces, order)

    def _face_key(self, f: frozenset) -> tuple:
        return (len(f), tuple(sorted(self._index[v] for v in f)))

    def sorted_faces(self) -> tuple[frozenset, ...]:
        return tuple(sorted(self.faces, key=self._face_key))


def h_poly(complex: SimplicialComplex, n: int) -> Poly:
    """h-polynomial sum(f_{i-1} x^i (1-x)^(n-i)) in the degree window n."""
    fv = complex.f_vector()
    if len(fv) - 1 > n:
        raise ValueError(f"window n={n} below the top face size {len(fv) - 1}")
    total = ZERO
    for size, count in enumerate(fv):
        if count:
            total = total + _one_minus_x_power(n - size).times_x_power(size) * count
    return total


def faces_as_index_lines(complex: SimplicialComplex) -> list[str]:
    """Nonempty faces, one line each, as sorted vertex indices."""
    lines = []
    for f in complex.sorted_faces():
        if f:
            lines.append(" ".join(str(complex.index(v)) for v in sorted(f, key=complex.index)))
    return lines


class CarriedTriangulation:
    """A triangulation of the simplex 2^V with carrier-tagged vertices.

    carrier[u] is the smallest face of 2^V whose realization contains the
    point u; the carrier of a face is the union over its vertices.  The
    constructor folds everything into counts[(carrier mask, size)] so the
    polynomial operations below are submask sums over at most 2^|V| masks.
    """

    __slots__ = ("complex", "base_vertices", "carrier", "counts", "_h_cache")

    def __init__(
        self,
        complex: SimplicialComplex,
        base_vertices: Sequence,
        carrier: Mapping,
    ):
        base = tuple(base_vertices)
        base_index = {v: i for i, v in enumerate(base)}
        if len(base_index) != len(base):
            raise ValueError("base vertices repeat")
        vertex_mask: dict = {}
        for u in complex.vertex_order:
            c = carrier.get(u)
            if not c:
                raise ValueError(f"vertex {u!r} lacks a nonempty carrier")
            mask = 0
            for v in c:
                if v not in base_index:
                    raise ValueError(f"carrier of {u!r} leaves the base simplex")
                mask |= 1 << base_index[v]
            vertex_mask[u] = mask
        counts: dict[tuple[int, int], int] = {}
        for f in complex.faces:
            mask = 0
            for u in f:
                mask |= vertex_mask[u]
            key = (mask, len(f))
            counts[key] = counts.get(key, 0) + 1
        for i, v in enumerate(base):
            point = 1 << i
            if counts.get((point, 1), 0) != 1 or any(
                m == point and s >= 2 for (m, s) in counts
            ):
                raise ValueError(
                    f"restriction to the vertex {v!r} is not a single point"
                )
        object.__setattr__(self, "complex", complex)
        object.__setattr__(self, "base_vertices", base)
        object.__setattr__(
            self, "carrier", {u: frozenset(carrier[u]) for u in complex.vertex_order}
        )
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "_h_cache", {})

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("CarriedTriangulation is immutable")

    @property
    def n(self) -> int:
        return len(self.base_vertices)

    def base_mask(self, face: Iterable) -> int:
        index = {v: i for i, v in enumerate(self.base_vertices)}
        mask = 0
        for v in face:
            if v not in index:
                raise ValueError(f"{v!r} is not a base vertex")
            mask |= 1 << index[v]
        return mask

    def mask_face(self, mask: int) -> tuple:
        return tuple(
            v for i, v in enumerate(self.base_vertices) if mask >> i & 1
        )

    def restriction_h(self, fmask: int) -> Poly:
        """h-polynomial of the restriction to the base face fmask, in the
        window |fmask|."""
        cached = self._h_cache.get(fmask)
        if cached is not None:
            return cached
        m = int.bit_count(fmask)
        total = ZERO
        for (mask, size), count in self.counts.items():
            if mask & ~fmask == 0:
                total = total + _one_minus_x_power(m - size).times_x_power(size) * count
        self._h_cache[fmask] = total
        return total

    def boundary_h(self, fmask: int) -> Poly:
        """h-polynomial of the boundary of the restriction (faces whose
        carrier is a proper subface), in the window |fmask| - 1."""
        m = int.bit_count(fmask)
        total = ZERO
        for (mask, size), count in self.counts.items():
            if mask & ~fmask == 0 and mask != fmask:
                total = (
                    total
                    + _one_minus_x_power(m - 1 - size).times_x_power(size) * count
                )
        return total

    def interior_h(self, fmask: int) -> Poly:
        """Interior h-polynomial of the restriction; certified against the
        reversal of the plain h-polynomial."""
        m = int.bit_count(fmask)
        total = ZERO
        for (mask, size), count in self.counts.items():
            if mask == fmask:
                total = total + _one_minus_x_power(m - size).times_x_power(size) * count
        expected = reciprocal(self.restriction_h(fmask), m)
        if total != expected:
            raise CertificationError(
                f"interior h of face mask {fmask} is {total!r}, expected the "
                f"reversal {expected!r}; the carrier map is inconsistent"
            )
        return total

    def theta(self, fmask: int) -> Poly:
        return self.restriction_h(fmask) - self.boundary_h(fmask)

    def local_h(self, emask: int = 0, fmask: int | None = None) -> Poly:
        """The alternating sum over emask <= G <= fmask of restriction
        h-polynomials: the (relative) local h-polynomial of the restriction
        to fmask."""
        if fmask is None:
            fmask = (1 << self.n) - 1
        if emask & ~fmask:
            raise ValueError("emask must be a submask of fmask")
        m = int.bit_count(fmask)
        total = ZERO
        for gmask in _submasks_over(emask, fmask):
            term = self.restriction_h(gmask)
            if (m - int.bit_count(gmask)) % 2:
                total = total - term
            else:
                total = total + term
        return total


def _submasks_over(emask: int, fmask: int) -> Iterator[int]:
    """All masks G with emask <= G <= fmask."""
    free = fmask & ~emask
    sub = free
    while True:
        yield emask | sub
        if sub == 0:
            return
        sub = (sub - 1) & free


def restriction(t: CarriedTriangulation, face: Iterable) -> CarriedTriangulation:
    """The carried triangulation induced on a base face."""
    fmask = t.base_mask(face)
    keep = [
        u
        for u in t.complex.vertex_order
        if t.base_mask(t.carrier[u]) & ~fmask == 0
    ]
    sub = t.complex.induced(keep)
    return CarriedTriangulation(sub, t.mask_face(fmask), t.carrier)


def trivial_triangulation(n: int) -> CarriedTriangulation:
    """The simplex 2^[n] triangulating itself."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    base = tuple(range(1, n + 1))
    complex = SimplicialComplex.from_facets([base] if n else [], base)
    return CarriedTriangulation(complex, base, {v: frozenset({v}) for v in base})


def barycentric_subdivision(
    arg: int | CarriedTriangulation,
) -> CarriedTriangulation:
    """First barycentric subdivision; accepts a size n (subdividing the
    trivial triangulation) or any carried triangulation.

    Vertices of the subdivision are the nonempty faces of the input and its
    faces are the chains; the carrier of a chain is the carrier of its top.
    """
    t = trivial_triangulation(arg) if isinstance(arg, int) else arg
    return CarriedTriangulation(
        sd_complex(t.complex),
        t.base_vertices,
        {
            s: frozenset().union(*(t.carrier[u] for u in s))
            for s in t.complex.faces
            if s
        },
    )


def sd_complex(complex: SimplicialComplex) -> SimplicialComplex:
    """Order complex of the poset of nonempty faces."""
    key = complex._face_key
    cells = sorted((f for f in complex.faces if f), key=key)
    limit = face_limit()
    chains: list[frozenset] = [frozenset()]
    ending: dict[frozenset, list[frozenset]] = {}
    for s in cells:
        mine: list[frozenset] = [frozenset({s})]
        for t in cells:
            if t < s:
                mine.extend(c | {s} for c in ending[t])
        ending[s] = mine
        chains.extend(mine)
        if len(chains) > limit:
            raise BudgetExceeded(
                f"barycentric subdivision needs more than {limit} faces"
            )
    return SimplicialComplex(chains, tuple(cells))


def edgewise_subdivision(
    arg: int | CarriedTriangulation, r: int
) -> CarriedTriangulation:
    """The r-fold edgewise subdivision.

    Vertices are weightings of a face summing to r (encoded as sorted
    tuples of (vertex index, weight) pairs); two weightings are joinable
    when their prefix-sum difference over the global vertex order never
    spans both +1 and -1.  Faces are assembled facet by facet as cliques
    of that relation and glued.
    """
    if r < 1:
        raise ValueError("r must be positive")
    t = trivial_triangulation(arg) if isinstance(arg, int) else arg
    base_complex = t.complex
    order = base_complex.vertex_order
    positions = len(order)
    limit = face_limit()

    vertex_label: dict[tuple, tuple] = {}
    vertex_iota: dict[tuple, tuple[int, ...]] = {}
    vertex_carrier: dict[tuple, frozenset] = {}

    def register(weights: dict[int, int]) -> tuple:
        label = tuple(sorted(weights.items()))
        if label not in vertex_iota:
            running = 0
            iota = []
            for i in range(positions):
                running += weights.get(i, 0)
                iota.append(running)
            vertex_iota[label] = tuple(iota)
            vertex_carrier[label] = frozenset().union(
                *(t.carrier[order[i]] for i in weights)
            )
        return label

    def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
        if parts == 0:
            if total == 0:
                yield ()
            return
        for first in range(1, total - parts + 2):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    faces: set[frozenset] = {frozenset()}
    for facet in base_complex.facets():
        idx = sorted(base_complex.index(v) for v in facet)
        pool: list[tuple] = []
        for submask in range(1, 1 << len(idx)):
            support = [idx[i] for i in range(len(idx)) if submask >> i & 1]
            if len(support) > r:
                continue
            for comp in compositions(r, len(support)):
                pool.append(register(dict(zip(support, comp))))
        pool.sort()
        iotas = [vertex_iota[lbl] for lbl in pool]
        size = len(pool)
        adj = [0] * size
        for a in range(size):
            for b in range(a + 1, size):
                diff = [x - y for x, y in zip(iotas[a], iotas[b])]
                if max(diff) - min(diff) <= 1:
                    adj[a] |= 1 << b
                    adj[b] |= 1 << a

        def extend(clique: tuple[int, ...], allowed: int) -> None:
            if clique:
                faces.add(frozenset(pool[i] for i in clique))
                if len(faces) > limit:
                    raise BudgetExceeded(
                        f"edgewise subdivision needs more than {limit} faces"
                    )
            m = allowed
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                extend(clique + (j,), allowed & adj[j] & ~((1 << (j + 1)) - 1))

        extend((), (1 << size) - 1)

    complex = SimplicialComplex(faces, tuple(sorted(vertex_iota)))
    return CarriedTriangulation(complex, t.base_vertices, vertex_carrier)


def colored_barycentric(n: int, r: int) -> CarriedTriangulation:
    """The r-colored barycentric subdivision of the simplex 2^[n]: the
    r-fold edgewise subdivision of the barycentric one."""
    return edgewise_subdivision(barycentric_subdivision(n), r)


@dataclass(frozen=True)
class AntiprismSphere:
    """The sphere obtained by gluing the antiprism cone over a
    triangulation of the simplex boundary onto the triangulation itself."""

    complex: SimplicialComplex
    u_vertices: tuple
    n: int


def antiprism_sphere(t: CarriedTriangulation) -> AntiprismSphere:
    """Faces are unions of {u_i : i in I} with a face of the restriction of
    t to the complementary base face."""
    n = t.n
    limit = face_limit()
    projected = sum(
        count << (n - int.bit_count(mask)) for (mask, _), count in t.counts.items()
    )
    if projected > limit:
        raise BudgetExceeded(f"antiprism sphere needs {projected} faces")
    u_vertices = tuple(("u", i) for i in range(1, n + 1))
    vmask = {u: t.base_mask(t.carrier[u]) for u in t.complex.vertex_order}
    by_carrier: dict[int, list[frozenset]] = {}
    for f in t.complex.faces:
        mask = 0
        for u in f:
            mask |= vmask[u]
        by_carrier.setdefault(mask, []).append(f)
    faces = []
    full = (1 << n) - 1
    for imask in range(1 << n):
        u_part = frozenset(u_vertices[i] for i in range(n) if imask >> i & 1)
        allowed = full & ~imask
        for cmask, fs in by_carrier.items():
            if cmask & ~allowed == 0:
                faces.extend(u_part | f for f in fs)
    order = u_vertices + t.complex.vertex_order
    return AntiprismSphere(SimplicialComplex(faces, order), u_vertices, n)


def antiprism_partial(sphere: AntiprismSphere, k: int) -> SimplicialComplex:
    """The induced subcomplex keeping only the first k apex vertices."""
    if not 0 <= k <= sphere.n:
        raise ValueError(f"k={k} out of range 0..{sphere.n}")
    dropped = set(sphere.u_vertices[k:])
    keep = [v for v in sphere.complex.vertex_order if v not in dropped]
    return sphere.complex.induced(keep)


@dataclass(frozen=True)
class FTriangle:
    """Face counts of a uniform triangulation: rows[j][i] is the number of
    i-element faces in the restriction to any j-element base face."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.rows) != self.n + 1:
            raise ValueError("need one row per face size 0..n")
        for j, row in enumerate(self.rows):
            if len(row) != j + 1:
                raise ValueError(f"row {j} must have {j + 1} entries")
            if row[0] != 1:
                raise ValueError("every restriction contains the empty face once")
            if any(c < 0 for c in row) or row[j] < 1:
                raise ValueError("face counts must be nonnegative with a top cell")

    def f(self, i: int, j: int) -> int:
        if not 0 <= j <= self.n:
            raise ValueError(f"face size {j} out of range 0..{self.n}")
        return self.rows[j][i] if 0 <= i <= j else 0

    def to_json(self) -> str:
        return json.dumps(
            {"n": self.n, "f": [list(row) for row in self.rows]},
            indent=2,
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "FTriangle":
        try:
            data = json.loads(text)
            n = data["n"]
            rows = tuple(tuple(int(c) for c in row) for row in data["f"])
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed f-triangle document: {exc}") from None
        if not isinstance(n, int):
            raise ValueError("n must be an integer")
        return cls(n=n, rows=rows)


def f_triangle(t: CarriedTriangulation) -> FTriangle:
    """Face counts by restriction size, validated to agree on every base
    face of each size (the uniformity this theory requires)."""
    n = t.n
    per_mask: dict[int, list[int]] = {}
    for fmask in range(1 << n):
        m = int.bit_count(fmask)
        row = [0] * (m + 1)
        for (mask, size), count in t.counts.items():
            if mask & ~fmask == 0:
                row[size] += count
        per_mask[fmask] = row
    rows = []
    for j in range(n + 1):
        same = [per_mask[m] for m in per_mask if int.bit_count(m) == j]
        first = same[0]
        if any(other != first for other in same[1:]):
            raise ValueError(
                f"face counts differ across base faces of size {j}; "
                "the triangulation is not uniform"
            )
        rows.append(tuple(first))
    return FTriangle(n=n, rows=tuple(rows))


def trivial_f_triangle(n: int) -> FTriangle:
    return FTriangle(
        n=n, rows=tuple(tuple(comb(j, i) for i in range(j + 1)) for j in range(n + 1))
    )


def barycentric_f_triangle(n: int) -> FTriangle:
    """Chain counts of the barycentric subdivision, by closed recursion:
    d[i][m] counts i-chains of nonempty subsets of [m] topped by [m]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    d = [[0] * (n + 1) for _ in range(n + 1)]
    d[0][0] = 1
    for i in range(1, n + 1):
        for m in range(n + 1):
            d[i][m] = sum(comb(m, mm) * d[i - 1][mm] for mm in range(m))
    rows = []
    for j in range(n + 1):
        rows.append(
            tuple(
                sum(comb(j, m) * d[i][m] for m in range(j + 1)) for i in range(j + 1)
            )
        )
    return FTriangle(n=n, rows=tuple(rows))


@lru_cache(maxsize=None)
def ft_h(triangle: FTriangle, m: int) -> Poly:
    """h-polynomial of the restriction to an m-element base face."""
    if not 0 <= m <= triangle.n:
        raise ValueError(f"m={m} out of range 0..{triangle.n}")
    total = ZERO
    for i in range(m + 1):
        c = triangle.f(i, m)
        if c:
            total = total + _one_minus_x_power(m - i).times_x_power(i) * c
    return total


@lru_cache(maxsize=None)
def _ft_interior_counts(triangle: FTriangle, m: int) -> tuple[int, ...]:
    return tuple(
        sum(
            (-1) ** (m - j) * comb(m, j) * triangle.f(i, j) for j in range(m + 1)
        )
        for i in range(m + 1)
    )


def ft_h_interior(triangle: FTriangle, m: int) -> Poly:
    """Interior h-polynomial via inclusion-exclusion over subfaces; must be
    the reversal of ft_h, else the triangle is not a triangulation."""
    if not 0 <= m <= triangle.n:
        raise ValueError(f"m={m} out of range 0..{triangle.n}")
    total = ZERO
    for i, c in enumerate(_ft_interior_counts(triangle, m)):
        if c:
            total = total + _one_minus_x_power(m - i).times_x_power(i) * c
    expected = reciprocal(ft_h(triangle, m), m)
    if total != expected:
        raise ValueError(
            f"interior h at size {m} is {total!r}, not the reversal "
            f"{expected!r}; the f-triangle is not a uniform triangulation"
        )
    return total


def ft_boundary_h(triangle: FTriangle, m: int) -> Poly:
    """h-polynomial of the boundary of the restriction, window m - 1."""
    if not 0 <= m <= triangle.n:
        raise ValueError(f"m={m} out of range 0..{triangle.n}")
    if m == 0:
        return ZERO
    interior = _ft_interior_counts(triangle, m)
    boundary = [triangle.f(i, m) - interior[i] for i in range(m + 1)]
    if boundary[m] != 0 or any(c < 0 for c in boundary):
        raise ValueError(
            f"boundary face counts at size {m} are impossible: {boundary}"
        )
    total = ZERO
    for i in range(m):
        if boundary[i]:
            total = total + _one_minus_x_power(m - 1 - i).times_x_power(i) * boundary[i]
    return total


def ft_theta(triangle: FTriangle, m: int) -> Poly:
    """Difference of the restriction h-polynomial and its boundary's;
    equals 1 at m = 0."""
    return ft_h(triangle, m) - ft_boundary_h(triangle, m)


@lru_cache(maxsize=None)
def _ft_h_sequence(triangle: FTriangle) -> tuple[Poly, ...]:
    return tuple(ft_h(triangle, m) for m in range(triangle.n + 1))


def ft_qnk(triangle: FTriangle, m: int, k: int) -> Poly:
    """The additive family over the triangulation's h-sequence; the k = 0
    member is the restriction h-polynomial."""
    return generic_hnk(_ft_h_sequence(triangle), m, k)


def ft_lnk(triangle: FTriangle, m: int, k: int) -> Poly:
    """The alternating family; at k = m this is the local h-polynomial of
    the restriction."""
    return generic_lnk(_ft_h_sequence(triangle), m, k)


def ft_interior_transform(triangle: FTriangle) -> LinearTransform:
    """x^m -> interior h of the size-m restriction."""
    return LinearTransform(
        name="interior-h",
        n=triangle.n,
        image=lambda m: ft_h_interior(triangle, m),
    )


def ft_h_transform(triangle: FTriangle) -> LinearTransform:
    """x^m -> h of the size-m restriction."""
    return LinearTransform(
        name="restriction-h", n=triangle.n, image=lambda m: ft_h(triangle, m)
    )


def ft_local_transform(triangle: FTriangle) -> LinearTransform:
    """x^m -> local h of the size-m restriction."""
    return LinearTransform(
        name="local-h", n=triangle.n, image=lambda m: ft_lnk(triangle, m, m)
    )


@dataclass(frozen=True)
class ThetaFlags:
    theta_unimodal: bool
    theta_gamma_positive: bool
    strong_interlacing: bool


def theta_flags(triangle: FTriangle) -> ThetaFlags:
    """Structural positivity of the theta polynomials, plus the interlacing
    hypothesis: for 2 <= m < n the restriction h-polynomial is real rooted
    and theta is zero or real rooted of degree m-1 with nonnegative
    coefficients, interlaced by the next smaller h-polynomial."""
    thetas = [ft_theta(triangle, m) for m in range(triangle.n + 1)]
    unimodal = all(is_unimodal(theta) is not None for theta in thetas)
    gamma = all(is_gamma_positive(theta, m) for m, theta in enumerate(thetas))
    strong = True
    for m in range(2, triangle.n):
        if not is_real_rooted(ft_h(triangle, m)):
            strong = False
            break
        theta = thetas[m]
        if theta.is_zero():
            continue
        if (
            theta.deg() != m - 1
            or any(c < 0 for c in theta.coeffs)
            or not is_real_rooted(theta)
            or not interlaces(ft_h(triangle, m - 1), theta)
        ):
            strong = False
            break
    return ThetaFlags(
        theta_unimodal=unimodal,
        theta_gamma_positive=gamma,
        strong_interlacing=strong,
    )


@dataclass(frozen=True)
class IdentityCase:
    name: str
    detail: str
    ok: bool


def identity_suite(
    t: CarriedTriangulation, strict: bool = True
) -> list[IdentityCase]:
    """Certify the face-count identities tying h, theta and local h together
    on one carried triangulation.

    Runs, over every base face / pair of base faces where applicable:
    interior reciprocity, theta symmetry, the Eulerian and derangement
    expansions of h and local h over theta, the relative expansion, the
    reconstruction of restriction h from relative local h, and the
    subdivision-sum form of relative local h.  With strict=True any failure
    raises CertificationError.
    """
    n = t.n
    full = (1 << n) - 1
    cases: list[IdentityCase] = []

    def record(name: str, detail: str, ok: bool) -> None:
        cases.append(IdentityCase(name=name, detail=detail, ok=ok))

    for fmask in range(1 << n):
        m = int.bit_count(fmask)
        try:
            t.interior_h(fmask)
            ok = True
        except CertificationError:
            ok = False
        record("interior-reciprocity", f"face mask {fmask}", ok)
        record(
            "theta-symmetric",
            f"face mask {fmask}",
            is_symmetric(t.theta(fmask), m),
        )

    thetas = {fmask: t.theta(fmask) for fmask in range(1 << n)}

    lhs = t.restriction_h(full)
    rhs = ZERO
    for fmask, theta in thetas.items():
        rhs = rhs + theta * eulerian(n - int.bit_count(fmask))
    record("h-from-theta", f"{lhs!r} vs {rhs!r}", lhs == rhs)

    lhs = t.local_h()
    rhs = ZERO
    for fmask, theta in thetas.items():
        rhs = rhs + theta * derangement(n - int.bit_count(fmask))
    record("local-h-from-theta", f"{lhs!r} vs {rhs!r}", lhs == rhs)

    for emask in range(1 << n):
        e = int.bit_count(emask)
        lhs = t.local_h(emask)
        rhs = ZERO
        for fmask, theta in thetas.items():
            union = int.bit_count(emask | fmask)
            rhs = rhs + theta * dnk(n - int.bit_count(fmask), n - union)
        record("relative-local-h-from-theta", f"E mask {emask}", lhs == rhs)

        rhs = ZERO
        comp = full & ~emask
        for fmask in _submasks_over(comp, full):
            rhs = rhs + t.local_h(0, fmask)
        record(
            "relative-local-h-from-restrictions",
            f"E mask {emask}",
            t.local_h(emask) == rhs,
        )

        if e == n - 1:
            record(
                "facet-difference",
                f"E mask {emask}",
                t.local_h(emask)
                == t.restriction_h(full) - t.restriction_h(emask),
            )

        for gmask in _submasks_over(emask, full):
            rhs = ZERO
            for fmask in _submasks_over(emask, gmask):
                rhs = rhs + t.local_h(emask, fmask)
            record(
                "h-from-relative-local-h",
                f"E mask {emask} G mask {gmask}",
                t.restriction_h(gmask) == rhs,
            )

    failures = [c for c in cases if not c.ok]
    if strict and failures:
        names = sorted({c.name for c in failures})
        raise CertificationError(
            f"{len(failures)} geometric identity checks failed: {', '.join(names)}"
        )
    return cases
