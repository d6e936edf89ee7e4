"""Shared corpus and randomized-construction helpers.

Everything seeded; any test built on these helpers is reproducible.
"""

from __future__ import annotations

import random
from functools import cache

import toriso as t
from toriso.lattice import Matrix, identity, mat_vec


def random_unimodular(rng: random.Random, n: int) -> Matrix:
    """Random product of elementary row operations; determinant stays +-1."""
    a = [list(row) for row in identity(n)]
    for _ in range(8):
        op = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if op == 0 and i != j:
            f = rng.choice((-2, -1, 1, 2))
            a[i] = [x + f * y for x, y in zip(a[i], a[j])]
        elif op == 1:
            a[i], a[j] = a[j], a[i]
        else:
            a[i] = [-x for x in a[i]]
    return tuple(tuple(row) for row in a)


def random_vertex_map(rng: random.Random, m: int) -> t.VertexMap:
    images = list(range(1, m + 1))
    rng.shuffle(images)
    return t.VertexMap(tuple(images))


def scrambled_copy(fan: t.FanData, rng: random.Random) -> t.FanData:
    """The same fan with rays pushed through a random unimodular matrix and
    vertex slots permuted.  Both operations are fan isomorphisms, so the
    result is valid whenever the input is."""
    sigma = random_vertex_map(rng, fan.m)
    a = random_unimodular(rng, fan.n)
    return t.relabel_vertices(t.apply_torus_automorphism(fan, a), sigma)


def blowup_chain(base: t.FanData, rng: random.Random, depth: int) -> list[t.FanData]:
    """base plus `depth` successive blow-ups at randomly chosen maximal
    cones."""
    out = [base]
    for _ in range(depth):
        base = t.blow_up(base, rng.choice(base.complex.facets))
        out.append(base)
    return out


@cache
def corpus() -> tuple[t.FanData, ...]:
    """The standing test corpus: projective spaces, the Hirzebruch family,
    three blow-ups, and two products."""
    rng = random.Random(424242)
    fans = [
        t.projective_space(1),
        t.projective_space(2),
        t.projective_space(3),
        t.hirzebruch(0),
        t.hirzebruch(1),
        t.hirzebruch(2),
        t.hirzebruch(3),
    ]
    fans += blowup_chain(t.projective_space(2), rng, 2)[1:]
    fans.append(t.blow_up(t.projective_space(3), (1, 2, 3)))
    fans.append(t.product(t.projective_space(1), t.projective_space(1)))
    fans.append(t.product(t.projective_space(1), t.projective_space(2)))
    return tuple(fans)


def random_class(rng: random.Random, m: int) -> t.DegreeTwoClass:
    return t.DegreeTwoClass(tuple(rng.randint(-5, 5) for _ in range(m)))


def quasitoric_square() -> t.FanData:
    """Characteristic pair over the 4-cycle that is not the data of any
    complete nonsingular fan."""
    return t.FanData(
        n=2,
        m=4,
        rays=((1, 0), (0, 1), (1, 2), (0, -1)),
        complex=t.SimplicialComplex.from_faces(4, [[1, 2], [2, 3], [3, 4], [1, 4]]),
        mode="quasitoric",
    )


def smallcover_triangle() -> t.FanData:
    return t.FanData(
        n=2,
        m=3,
        rays=((1, 0), (0, 1), (1, 1)),
        complex=t.SimplicialComplex.from_faces(3, [[1, 2], [2, 3], [1, 3]]),
        mode="smallcover",
    )
