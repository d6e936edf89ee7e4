"""Equivariant cohomology of a fan, presented as a face ring.

The degree-2 part is free on one generator tau_i per ray; products of the
tau_i over minimal non-faces generate the relations; the torus weights enter
through the structure map u |-> sum <u, v_i> tau_i.  Restriction to a fixed
point (a maximal cone) rewrites a degree-2 class in the dual basis of that
cone's rays.  In smallcover mode every computation is over the field with
two elements.

Two independent routes count the fixed points where a class restricts to
zero: `zero_length` uses the combinatorial support shortcut, while
`annihilator_rank_oracle` does the exact dual-basis linear algebra at every
fixed point.  They must agree; the test suite leans on that redundancy.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fans import FanData, cone_matrix
from .lattice import Matrix, Vector, as_matrix, inverse_mod2, inverse_unimodular, smith_normal_form
from .simplicial import Face, minimal_nonfaces


@dataclass(frozen=True)
class DegreeTwoClass:
    """An integer combination sum coeffs[i-1] * tau_i of the ray classes."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        for x in self.coeffs:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ValueError(f"coefficients must be ints, got {x!r}")

    @classmethod
    def generator(cls, m: int, i: int) -> "DegreeTwoClass":
        """The class tau_i of ray i (1-indexed)."""
        if not 1 <= i <= m:
            raise ValueError(f"generator index {i} out of range 1..{m}")
        return cls(tuple(1 if j == i else 0 for j in range(1, m + 1)))

    def coeff(self, i: int) -> int:
        return self.coeffs[i - 1]


def structure_matrix(fan: FanData) -> Matrix:
    """Rows are the rays; this matrix presents u |-> sum <u, v_i> tau_i."""
    return as_matrix(fan.rays)


@dataclass(frozen=True)
class Presentation:
    """Face-ring presentation of the equivariant cohomology."""

    m: int
    relations: tuple[Face, ...]
    structure: Matrix
    mode: str

    def render(self) -> str:
        coeff_ring = "Z/2" if self.mode == "smallcover" else "Z"
        gens = f"tau_1 .. tau_{self.m}" if self.m > 1 else "tau_1"
        if self.relations:
            rels = ", ".join(
                "*".join(f"tau_{i}" for i in rel) for rel in self.relations
            )
        else:
            rels = "(none)"
        lines = [
            f"coefficients: {coeff_ring}",
            f"generators: {gens} (degree 2)",
            f"relations: {rels}",
            "structure matrix (row i = ray i):",
        ]
        lines += ["[" + ", ".join(str(x) for x in row) + "]" for row in self.structure]
        return "\n".join(lines)


def presentation(fan: FanData) -> Presentation:
    """Generators, monomial relations, and structure map of the fan's
    equivariant cohomology.

    >>> from toriso.fans import hirzebruch
    >>> print(presentation(hirzebruch(1)).render())
    coefficients: Z
    generators: tau_1 .. tau_4 (degree 2)
    relations: tau_1*tau_3, tau_2*tau_4
    structure matrix (row i = ray i):
    [1, 0]
    [0, 1]
    [-1, 1]
    [0, -1]
    """
    rows = structure_matrix(fan)
    if fan.mode == "smallcover":
        rows = tuple(tuple(x % 2 for x in row) for row in rows)
    return Presentation(
        m=fan.m,
        relations=minimal_nonfaces(fan.complex),
        structure=rows,
        mode=fan.mode,
    )


def pi_star(fan: FanData, u: Vector) -> DegreeTwoClass:
    """Image of the torus weight u under the structure map.

    >>> from toriso.fans import projective_space
    >>> pi_star(projective_space(2), (1, 0)).coeffs
    (1, 0, -1)
    """
    if len(u) != fan.n:
        raise ValueError(f"weight must have {fan.n} entries")
    coeffs = [sum(a * b for a, b in zip(u, v)) for v in fan.rays]
    if fan.mode == "smallcover":
        coeffs = [c % 2 for c in coeffs]
    return DegreeTwoClass(tuple(coeffs))


def _check_class(fan: FanData, xi: DegreeTwoClass) -> None:
    if len(xi.coeffs) != fan.m:
        raise ValueError(
            f"class has {len(xi.coeffs)} coefficients, fan has {fan.m} rays"
        )


def restrict(fan: FanData, xi: DegreeTwoClass, fixed_point) -> Vector:
    """Restriction of xi at a fixed point, in coordinates dual to the rays.

    The rays of a maximal cone form a lattice basis; the covector returned
    has entry k equal to the pairing of the restriction with the k-th dual
    basis vector (k follows the sorted cone order).

    >>> from toriso.fans import projective_space
    >>> cp2 = projective_space(2)
    >>> restrict(cp2, DegreeTwoClass.generator(3, 1), (1, 2))
    (1, 0)
    >>> restrict(cp2, DegreeTwoClass.generator(3, 1), (2, 3))
    (0, 0)
    """
    _check_class(fan, xi)
    f = tuple(sorted(fixed_point))
    if f not in fan.complex.facets:
        raise ValueError(f"{f} is not a maximal cone")
    s = cone_matrix(fan, f)
    if fan.mode == "smallcover":
        sinv = inverse_mod2(s)
        return tuple(
            sum(xi.coeff(i) * sinv[k][j] for k, i in enumerate(f)) % 2
            for j in range(fan.n)
        )
    # Row k of the inverse is the covector dual to ray f[k].
    sinv = inverse_unimodular(s)
    return tuple(
        sum(xi.coeff(i) * sinv[k][j] for k, i in enumerate(f))
        for j in range(fan.n)
    )


def restriction_table(fan: FanData, xi: DegreeTwoClass):
    """Restrictions of xi at every fixed point, in canonical facet order."""
    return tuple((f, restrict(fan, xi, f)) for f in fan.complex.facets)


def zero_length(fan: FanData, xi: DegreeTwoClass) -> int:
    """Number of fixed points where xi restricts to zero.

    Support shortcut: the restriction at a maximal cone vanishes iff every
    coefficient of xi on that cone's rays is zero, because the dual covectors
    of a cone are linearly independent.

    >>> from toriso.fans import hirzebruch
    >>> zero_length(hirzebruch(2), DegreeTwoClass((1, 0, 1, 0)))
    0
    """
    _check_class(fan, xi)
    if fan.mode == "smallcover":
        vanishes = [xi.coeff(i) % 2 == 0 for i in range(1, fan.m + 1)]
    else:
        vanishes = [xi.coeff(i) == 0 for i in range(1, fan.m + 1)]
    return sum(
        1 for f in fan.complex.facets if all(vanishes[i - 1] for i in f)
    )


def annihilator_rank_oracle(fan: FanData, xi: DegreeTwoClass) -> int:
    """Independent route to `zero_length`: do the dual-basis solve at every
    fixed point and count the zero covectors."""
    return sum(
        1 for _, cov in restriction_table(fan, xi) if not any(cov)
    )


def restriction_matrix(fan: FanData) -> Matrix:
    """Matrix of the total restriction map on degree-2 classes.

    Rows are grouped by fixed point (canonical order), one row per dual
    coordinate; columns follow tau_1..tau_m.  Integer modes only.
    """
    if fan.mode == "smallcover":
        raise ValueError("restriction matrix is only computed over Z")
    rows = []
    for f in fan.complex.facets:
        sinv = inverse_unimodular(cone_matrix(fan, f))
        pos = {i: k for k, i in enumerate(f)}
        for j in range(fan.n):
            rows.append(
                tuple(
                    sinv[pos[i]][j] if i in pos else 0
                    for i in range(1, fan.m + 1)
                )
            )
    return as_matrix(rows)


def restriction_rank(fan: FanData) -> int:
    """Rank of the total restriction map (injective iff this equals m)."""
    return smith_normal_form(restriction_matrix(fan)).rank
