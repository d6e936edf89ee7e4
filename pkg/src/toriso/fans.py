"""Fans and characteristic pairs: rays indexed by the vertices of a complex.

One datatype covers three regimes, selected by `mode`:

* ``toric``      -- rays span complete nonsingular fans in Z^n,
* ``quasitoric`` -- characteristic pairs (unimodularity on each facet only,
                    no completeness of any geometric realization required),
* ``smallcover`` -- characteristic pairs over the field with two elements.

Construction only checks shape; `validate` checks the actual axioms and
returns a report instead of raising, so a caller can see every failure at
once.  The toric completeness test is layered: combinatorial closedness,
then a local wall-crossing test, then exact pairwise cone-overlap checks,
then a seeded sampling backstop.  Each layer catches failures the earlier
ones provably cannot.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd

from .lattice import (
    Matrix,
    Vector,
    adjugate,
    as_matrix,
    det,
    is_primitive,
    mat_vec,
    transpose,
)
from .simplicial import (
    SimplicialComplex,
    VertexMap,
    euler_characteristic,
    is_face,
    is_pure_pseudomanifold,
    stellar_subdivide,
)

MODES = ("toric", "quasitoric", "smallcover")

# Fixed seed for the sampling backstop; validation must be reproducible.
_COVERAGE_SEED = 171717
_COVERAGE_SAMPLES = 1000


@dataclass(frozen=True)
class FanData:
    """Rays v_1..v_m in Z^n plus the complex recording which sets of rays
    span cones.  Ray i belongs to vertex i of the complex; order is semantic."""

    n: int
    m: int
    rays: tuple[Vector, ...]
    complex: SimplicialComplex
    mode: str = "toric"

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.n < 1:
            raise ValueError("ambient rank must be at least 1")
        if self.m != len(self.rays):
            raise ValueError("ray count does not match m")
        if self.complex.m != self.m:
            raise ValueError("complex vertex count does not match m")
        for v in self.rays:
            if len(v) != self.n:
                raise ValueError(f"ray {v} does not have {self.n} entries")
            for x in v:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError(f"ray entries must be ints, got {x!r}")

    def ray(self, i: int) -> Vector:
        """Ray of vertex i (1-indexed)."""
        return self.rays[i - 1]


def cone_matrix(fan: FanData, face: tuple[int, ...]) -> Matrix:
    """Square matrix whose columns are the rays of `face` (in face order)."""
    return transpose(as_matrix([fan.ray(i) for i in face]))


@dataclass(frozen=True)
class ValidationIssue:
    check: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    issues: tuple[ValidationIssue, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.issues

    def failed(self, check: str) -> bool:
        return any(i.check == check for i in self.issues)

    def render(self) -> str:
        if self.ok:
            return "VALID"
        lines = ["INVALID"]
        lines += [f"  {i.check}: {i.message}" for i in self.issues]
        return "\n".join(lines)


def _ray_issues(fan: FanData) -> list[ValidationIssue]:
    out = []
    for i, v in enumerate(fan.rays, start=1):
        if not any(v):
            out.append(ValidationIssue("rays", f"ray {i} is zero"))
        elif fan.mode == "smallcover":
            if any(x not in (0, 1) for x in v):
                out.append(
                    ValidationIssue("rays", f"ray {i} has entries outside {{0, 1}}")
                )
        elif not is_primitive(v):
            out.append(ValidationIssue("rays", f"ray {i} = {v} is not primitive"))
    if fan.mode == "toric":
        # Distinct rays of a fan span distinct cones.  Characteristic pairs
        # may repeat vectors, so this is a toric-only condition.
        seen: dict[Vector, int] = {}
        for i, v in enumerate(fan.rays, start=1):
            if v in seen:
                out.append(
                    ValidationIssue("rays", f"rays {seen[v]} and {i} coincide: {v}")
                )
            else:
                seen[v] = i
    return out


def _nonsingular_issues(fan: FanData) -> list[ValidationIssue]:
    out = []
    for f in fan.complex.facets:
        d = det(cone_matrix(fan, f))
        if fan.mode == "smallcover":
            if d % 2 == 0:
                out.append(
                    ValidationIssue(
                        "nonsingular", f"cone {f}: determinant {d} is even"
                    )
                )
        elif d not in (1, -1):
            out.append(
                ValidationIssue("nonsingular", f"cone {f}: determinant {d}")
            )
    return out


def _wall_issues(fan: FanData) -> list[ValidationIssue]:
    # Local closedness: across each wall the two leftover rays must lie
    # strictly on opposite sides of the wall's hyperplane.
    out = []
    by_wall: dict[tuple[int, ...], list[int]] = {}
    for f in fan.complex.facets:
        for v in f:
            by_wall.setdefault(tuple(x for x in f if x != v), []).append(v)
    for wall, across in sorted(by_wall.items()):
        if len(across) != 2:
            continue  # already reported by the pseudomanifold check
        rows = [fan.ray(i) for i in wall]
        sides = [det(as_matrix(rows + [fan.ray(v)])) for v in across]
        if sides[0] * sides[1] >= 0:
            out.append(
                ValidationIssue(
                    "wall",
                    f"wall {wall}: rays {across[0]} and {across[1]} do not lie "
                    "on opposite sides",
                )
            )
    return out


def _cone_inequalities(fan: FanData, face: tuple[int, ...]) -> list[Vector]:
    """Rows r with: x lies in cone(face) iff r . x >= 0 for every row.

    For a nonsingular matrix S of rays, x is in the cone iff S^-1 x >= 0;
    scaling the exact inverse adj(S)/det(S) by det(S)^2 > 0 keeps everything
    in integers whatever the sign of the determinant.
    """
    s = cone_matrix(fan, face)
    d = det(s)
    if d == 0:
        raise ValueError(f"cone {face} is degenerate")
    return [tuple(d * x for x in row) for row in adjugate(s)]


def _feasible(constraints: list[tuple[Vector, int]], n: int) -> bool:
    """Exact rational feasibility of {x : c . x >= b for all (c, b)} by
    Fourier-Motzkin elimination.  Problem sizes here are tiny."""

    def normalize(rows: list[tuple[Vector, int]]) -> list[tuple[Vector, int]]:
        seen = set()
        out = []
        for c, b in rows:
            g = 0
            for x in c:
                g = gcd(g, abs(x))
            if g > 1 and b % g == 0:
                # Only divide when exact; rounding the bound would change
                # the real feasible set.
                c = tuple(x // g for x in c)
                b //= g
            key = (c, b)
            if key not in seen:
                seen.add(key)
                out.append(key)
        return out

    rows = normalize(constraints)
    for k in range(n - 1, -1, -1):
        pos = [(c, b) for c, b in rows if c[k] > 0]
        neg = [(c, b) for c, b in rows if c[k] < 0]
        rest = [(c, b) for c, b in rows if c[k] == 0]
        for cp, bp in pos:
            for cn, bn in neg:
                # cp[k] * (cn-row) + (-cn[k]) * (cp-row) kills variable k.
                a, b = -cn[k], cp[k]
                comb = tuple(a * x + b * y for x, y in zip(cp, cn))
                rest.append((comb, a * bp + b * bn))
        rows = normalize(rest)
    return all(b <= 0 for _, b in rows)


def _overlap_issues(fan: FanData) -> list[ValidationIssue]:
    # Two maximal cones must meet exactly in the cone of their shared face.
    # For each pair sharing a vertex, ask whether some point lies in both
    # cones with a strictly positive coordinate outside the shared face;
    # such a point certifies an overlap.
    out = []
    facets = fan.complex.facets
    ineqs = {f: _cone_inequalities(fan, f) for f in facets}
    for fa, fb in combinations(facets, 2):
        shared = set(fa) & set(fb)
        if not shared:
            continue
        base = [(row, 0) for row in ineqs[fa]] + [(row, 0) for row in ineqs[fb]]
        overlap = False
        for f, other in ((fa, fb), (fb, fa)):
            for pos, vertex in enumerate(f):
                if vertex in shared:
                    continue
                if _feasible(base + [(ineqs[f][pos], 1)], fan.n):
                    overlap = True
                    break
            if overlap:
                break
        if overlap:
            out.append(
                ValidationIssue(
                    "overlap",
                    f"cones {fa} and {fb} intersect beyond their shared face",
                )
            )
    return out


def _coverage_issues(fan: FanData) -> list[ValidationIssue]:
    # Sampling backstop: a complete fan contains every vector.  Exact
    # membership test per sample, fixed seed for reproducibility.
    rng = random.Random(_COVERAGE_SEED)
    ineqs = [_cone_inequalities(fan, f) for f in fan.complex.facets]
    misses = 0
    first: Vector | None = None
    for _ in range(_COVERAGE_SAMPLES):
        x = tuple(rng.randint(-999, 999) for _ in range(fan.n))
        if not any(x):
            continue
        if not any(all(sum(c * y for c, y in zip(row, x)) >= 0 for row in rows)
                   for rows in ineqs):
            misses += 1
            if first is None:
                first = x
    if misses:
        return [
            ValidationIssue(
                "coverage",
                f"{misses} of {_COVERAGE_SAMPLES} sample vectors lie in no cone "
                f"(first: {first})",
            )
        ]
    return []


def validate(fan: FanData, strict_sphere: bool = False) -> ValidationReport:
    """Check the axioms for `fan.mode` and report every failure found.

    Layers, in order: ray conditions, purity, pseudomanifold closedness,
    unimodularity of each maximal cone, and (toric only) wall crossing,
    pairwise cone overlap, and the sampled coverage backstop.  With
    `strict_sphere` the complex must also have the Euler characteristic of a
    sphere of the right dimension; that is a necessary condition only, the
    validator is deliberately conservative rather than a full sphere
    recognizer.
    """
    issues = _ray_issues(fan)
    pure = True
    for f in fan.complex.facets:
        if len(f) != fan.n:
            issues.append(
                ValidationIssue(
                    "purity",
                    f"facet {f} has {len(f)} vertices, expected {fan.n}",
                )
            )
            pure = False
    if not pure:
        return ValidationReport(tuple(issues))
    pm = is_pure_pseudomanifold(fan.complex, fan.n)
    issues += [ValidationIssue("pseudomanifold", p) for p in pm.problems]
    issues += _nonsingular_issues(fan)
    if fan.mode == "toric":
        issues += _wall_issues(fan)
        degenerate = any(det(cone_matrix(fan, f)) == 0 for f in fan.complex.facets)
        if not degenerate:
            issues += _overlap_issues(fan)
            issues += _coverage_issues(fan)
    if strict_sphere:
        expected = 1 + (-1) ** (fan.n - 1)
        chi = euler_characteristic(fan.complex)
        if chi != expected:
            issues.append(
                ValidationIssue(
                    "sphere",
                    f"Euler characteristic {chi}, a sphere of dimension "
                    f"{fan.n - 1} has {expected}",
                )
            )
    return ValidationReport(tuple(issues))


def fixed_points(fan: FanData) -> tuple[tuple[int, ...], ...]:
    """Maximal cones, i.e. the fixed points of the torus action, in canonical
    order."""
    return fan.complex.facets


def projective_space(n: int) -> FanData:
    """The fan of n-dimensional complex projective space.

    >>> projective_space(2).rays
    ((1, 0), (0, 1), (-1, -1))
    """
    if n < 1:
        raise ValueError("dimension must be at least 1")
    rays = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    rays.append(tuple(-1 for _ in range(n)))
    faces = combinations(range(1, n + 2), n)
    return FanData(
        n=n,
        m=n + 1,
        rays=tuple(rays),
        complex=SimplicialComplex.from_faces(n + 1, list(faces)),
    )


def hirzebruch(a: int) -> FanData:
    """The Hirzebruch-type surface fan with twist parameter a."""
    return FanData(
        n=2,
        m=4,
        rays=((1, 0), (0, 1), (-1, a), (0, -1)),
        complex=SimplicialComplex.from_faces(4, [[1, 2], [2, 3], [3, 4], [1, 4]]),
    )


def product(first: FanData, second: FanData) -> FanData:
    """Product fan: block-diagonal rays, join of the two complexes."""
    if first.mode != second.mode:
        raise ValueError("product factors must share a mode")
    n = first.n + second.n
    pad_a = tuple(0 for _ in range(second.n))
    pad_b = tuple(0 for _ in range(first.n))
    rays = [v + pad_a for v in first.rays] + [pad_b + v for v in second.rays]
    faces = [
        fa + tuple(v + first.m for v in fb)
        for fa in first.complex.facets
        for fb in second.complex.facets
    ]
    return FanData(
        n=n,
        m=first.m + second.m,
        rays=tuple(rays),
        complex=SimplicialComplex.from_faces(first.m + second.m, faces),
        mode=first.mode,
    )


def blow_up(fan: FanData, face: tuple[int, ...]) -> FanData:
    """Subdivide at `face`, appending the ray sum as the new last ray.

    On a nonsingular fan the new cones stay nonsingular.  Blowing up at a
    single vertex is rejected (the subdivision would delete the vertex's
    star and leave it in no cone).
    """
    if fan.mode != "toric":
        raise ValueError("blow-up is defined for toric mode")
    f = tuple(sorted(face))
    subdivided = stellar_subdivide(fan.complex, f)  # rejects size < 2
    new_ray = tuple(sum(fan.ray(i)[j] for i in f) for j in range(fan.n))
    return FanData(
        n=fan.n,
        m=fan.m + 1,
        rays=fan.rays + (new_ray,),
        complex=subdivided,
        mode=fan.mode,
    )


def apply_torus_automorphism(fan: FanData, a: Matrix) -> FanData:
    """Replace every ray v by a @ v; `a` must be unimodular."""
    if det(as_matrix(a)) not in (1, -1):
        raise ValueError("torus automorphism must be unimodular")
    return FanData(
        n=fan.n,
        m=fan.m,
        rays=tuple(mat_vec(a, v) for v in fan.rays),
        complex=fan.complex,
        mode=fan.mode,
    )


def relabel_vertices(fan: FanData, sigma: VertexMap) -> FanData:
    """Move ray i to slot sigma(i) and rename complex vertices to match.

    The result is the same fan presented with permuted indices.
    """
    if len(sigma.images) != fan.m:
        raise ValueError("permutation size does not match ray count")
    rays = [None] * fan.m
    for i in range(1, fan.m + 1):
        rays[sigma(i) - 1] = fan.ray(i)
    faces = [sigma.map_face(f) for f in fan.complex.facets]
    return FanData(
        n=fan.n,
        m=fan.m,
        rays=tuple(rays),  # type: ignore[arg-type]
        complex=SimplicialComplex.from_faces(fan.m, faces),
        mode=fan.mode,
    )
