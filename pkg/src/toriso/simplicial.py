"""Finite simplicial complexes on the vertex set {1, ..., m}.

A complex is stored by its maximal faces.  Everything downstream (fans,
characteristic pairs) keeps vertex i glued to ray i, so vertex order is
semantic and nothing here ever renumbers silently; relabelling is always an
explicit VertexMap.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Mapping, Sequence

Face = tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    """Simplicial complex given by maximal faces, in canonical form.

    `facets` holds each maximal face as a sorted tuple, the whole collection
    sorted lexicographically.  Invariants: vertices lie in 1..m, every vertex
    is in some maximal face, and no maximal face contains another.
    """

    m: int
    facets: tuple[Face, ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("vertex count must be at least 1")
        if not self.facets:
            raise ValueError("complex needs at least one maximal face")
        covered = set()
        for f in self.facets:
            if not f:
                raise ValueError("maximal faces must be nonempty")
            if list(f) != sorted(set(f)):
                raise ValueError(f"face {f} is not a sorted duplicate-free tuple")
            if f[0] < 1 or f[-1] > self.m:
                raise ValueError(f"face {f} has a vertex outside 1..{self.m}")
            covered.update(f)
        if list(self.facets) != sorted(self.facets):
            raise ValueError("maximal faces are not in canonical order")
        if len(set(self.facets)) != len(self.facets):
            raise ValueError("duplicate maximal face")
        for f, g in combinations(self.facets, 2):
            if set(f) <= set(g) or set(g) <= set(f):
                raise ValueError(f"maximal face {f} is contained in {g}")
        missing = set(range(1, self.m + 1)) - covered
        if missing:
            raise ValueError(f"vertices {sorted(missing)} lie in no maximal face")

    @classmethod
    def from_faces(cls, m: int, faces: Sequence[Sequence[int]]) -> "SimplicialComplex":
        """Build a complex from (unordered) maximal faces."""
        normal = sorted(set(tuple(sorted(f)) for f in faces))
        return cls(m=m, facets=tuple(normal))

    def vertices(self) -> range:
        return range(1, self.m + 1)


def is_face(k: SimplicialComplex, face: Sequence[int]) -> bool:
    """True iff `face` is contained in some maximal face (the empty face is)."""
    s = set(face)
    if not s:
        return True
    if min(s) < 1 or max(s) > k.m:
        return False
    return any(s <= set(f) for f in k.facets)


def faces_of(k: SimplicialComplex) -> set[Face]:
    """All nonempty faces."""
    out: set[Face] = set()
    for f in k.facets:
        for size in range(1, len(f) + 1):
            out.update(combinations(f, size))
    return out


def euler_characteristic(k: SimplicialComplex) -> int:
    """Alternating face count f_0 - f_1 + f_2 - ...

    >>> euler_characteristic(SimplicialComplex.from_faces(3, [[1, 2], [2, 3], [1, 3]]))
    0
    """
    return sum((-1) ** (len(f) - 1) for f in faces_of(k))


def minimal_nonfaces(k: SimplicialComplex) -> tuple[Face, ...]:
    """Minimal non-faces, sorted by size then lexicographically.

    A minimal non-face is a vertex set that is not a face although all its
    proper subsets are.  Its size is at most (largest facet) + 1, so the
    search below is complete.

    >>> minimal_nonfaces(SimplicialComplex.from_faces(4, [[1, 2], [2, 3], [3, 4], [1, 4]]))
    ((1, 3), (2, 4))
    """
    top = max(len(f) for f in k.facets)
    out = []
    for size in range(1, top + 2):
        for cand in combinations(range(1, k.m + 1), size):
            if is_face(k, cand):
                continue
            if all(is_face(k, cand[:i] + cand[i + 1:]) for i in range(size)):
                out.append(cand)
    return tuple(out)


@dataclass(frozen=True)
class PseudomanifoldReport:
    ok: bool
    problems: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def is_pure_pseudomanifold(k: SimplicialComplex, n: int) -> PseudomanifoldReport:
    """Check that every facet has n vertices, every wall (facet minus one
    vertex) lies in exactly two facets, and the facet adjacency graph is
    connected.  These are the combinatorial closedness conditions a complete
    fan's underlying complex must satisfy."""
    problems = []
    for f in k.facets:
        if len(f) != n:
            problems.append(f"facet {f} has {len(f)} vertices, expected {n}")
    if problems:
        return PseudomanifoldReport(False, tuple(problems))
    walls = Counter()
    for f in k.facets:
        for v in f:
            walls[tuple(x for x in f if x != v)] += 1
    for wall, count in sorted(walls.items()):
        if count != 2:
            problems.append(f"wall {wall} lies in {count} facets, expected 2")
    # Connectivity of the facet adjacency graph (facets sharing a wall).
    by_wall: dict[Face, list[int]] = {}
    for idx, f in enumerate(k.facets):
        for v in f:
            by_wall.setdefault(tuple(x for x in f if x != v), []).append(idx)
    seen = {0}
    frontier = [0]
    while frontier:
        idx = frontier.pop()
        f = k.facets[idx]
        for v in f:
            for other in by_wall[tuple(x for x in f if x != v)]:
                if other not in seen:
                    seen.add(other)
                    frontier.append(other)
    if len(seen) != len(k.facets):
        problems.append("facet adjacency graph is disconnected")
    return PseudomanifoldReport(not problems, tuple(problems))


@dataclass(frozen=True)
class VertexMap:
    """A bijection of {1, ..., m}; images[i - 1] is the image of vertex i."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        m = len(self.images)
        if sorted(self.images) != list(range(1, m + 1)):
            raise ValueError("images must be a permutation of 1..m")

    @classmethod
    def identity(cls, m: int) -> "VertexMap":
        return cls(tuple(range(1, m + 1)))

    def __call__(self, v: int) -> int:
        return self.images[v - 1]

    def map_face(self, face: Sequence[int]) -> Face:
        return tuple(sorted(self(v) for v in face))

    def inverse(self) -> "VertexMap":
        inv = [0] * len(self.images)
        for v, w in enumerate(self.images, start=1):
            inv[w - 1] = v
        return VertexMap(tuple(inv))

    def compose(self, first: "VertexMap") -> "VertexMap":
        """self after first."""
        return VertexMap(tuple(self(first(v)) for v in range(1, len(self.images) + 1)))


def enumerate_isomorphisms(
    k: SimplicialComplex,
    other: SimplicialComplex,
    labels: Mapping[int, int] | None = None,
    other_labels: Mapping[int, int] | None = None,
) -> Iterator[VertexMap]:
    """Yield every label-preserving simplicial isomorphism k -> other.

    Backtracking over vertices, most-constrained vertex first; candidate
    images are filtered by (label, facet degree, facet size multiset) and the
    partial map is pruned whenever the image of a touched facet stops being a
    face.  The yield order is deterministic, which makes every search built
    on top of this reproducible.
    """
    if k.m != other.m or len(k.facets) != len(other.facets):
        return
    if sorted(map(len, k.facets)) != sorted(map(len, other.facets)):
        return
    m = k.m
    lab = dict(labels) if labels is not None else {v: 0 for v in k.vertices()}
    lab2 = dict(other_labels) if other_labels is not None else {v: 0 for v in other.vertices()}

    at: dict[int, list[Face]] = {v: [] for v in k.vertices()}
    for f in k.facets:
        for v in f:
            at[v].append(f)
    at2: dict[int, list[Face]] = {v: [] for v in other.vertices()}
    for f in other.facets:
        for v in f:
            at2[v].append(f)

    def profile(v: int, table, labs) -> tuple:
        return (labs[v], len(table[v]), tuple(sorted(len(f) for f in table[v])))

    want = {v: profile(v, at, lab) for v in k.vertices()}
    have: dict[tuple, list[int]] = {}
    for w in other.vertices():
        have.setdefault(profile(w, at2, lab2), []).append(w)
    candidates = {v: have.get(want[v], []) for v in k.vertices()}
    if any(not c for c in candidates.values()):
        return

    order = sorted(k.vertices(), key=lambda v: (len(candidates[v]), v))
    facet_set = set(other.facets)
    assign: dict[int, int] = {}
    used: set[int] = set()

    def consistent(v: int) -> bool:
        for f in at[v]:
            image = [assign[u] for u in f if u in assign]
            if len(image) == len(f):
                if tuple(sorted(image)) not in facet_set:
                    return False
            elif not is_face(other, image):
                return False
        return True

    def extend(idx: int) -> Iterator[VertexMap]:
        if idx == m:
            yield VertexMap(tuple(assign[v] for v in range(1, m + 1)))
            return
        v = order[idx]
        for w in candidates[v]:
            if w in used:
                continue
            assign[v] = w
            used.add(w)
            if consistent(v):
                yield from extend(idx + 1)
            del assign[v]
            used.discard(w)

    yield from extend(0)


def stellar_subdivide(k: SimplicialComplex, face: Sequence[int]) -> SimplicialComplex:
    """Subdivide at `face`: a new vertex m+1 replaces the face in every facet
    containing it.  Faces of size < 2 are rejected; subdividing at a vertex
    would leave that vertex in no maximal face.

    >>> square = stellar_subdivide(SimplicialComplex.from_faces(3, [[1, 2], [2, 3], [1, 3]]), [1, 2])
    >>> square.facets
    ((1, 3), (1, 4), (2, 3), (2, 4))
    """
    f = tuple(sorted(face))
    if not is_face(k, f):
        raise ValueError(f"{f} is not a face")
    if len(f) < 2:
        raise ValueError("subdivision face needs at least two vertices")
    fs = set(f)
    new = k.m + 1
    out: list[tuple[int, ...]] = []
    for facet in k.facets:
        if fs <= set(facet):
            for v in f:
                out.append(tuple(sorted((set(facet) - {v}) | {new})))
        else:
            out.append(facet)
    return SimplicialComplex.from_faces(new, out)
