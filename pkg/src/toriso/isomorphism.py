"""Deciding when two fans present the same manifold, with explicit witnesses.

A witness is a triple (sigma, epsilon, A): a simplicial isomorphism sigma of
the complexes, signs epsilon_i in {+1, -1}, and a unimodular matrix A with

    epsilon_i * A @ v_i == v'_sigma(i)   for every ray i.

Four decision modes share the search skeleton and differ in what they allow:

* ``weak``       -- toric fans, A searched freely (variety isomorphism),
* ``strict``     -- toric fans, A must be the identity (equivariant case,
                    any torus change of basis already absorbed),
* ``quasitoric`` -- characteristic pairs, A the identity, signs free,
* ``smallcover`` -- mod-2 characteristic pairs, A the identity, no signs.

The search enumerates label-preserving simplicial isomorphisms (labelled by
the zero count of each ray class, which any witness must preserve), and for
each candidate solves for A on an anchor cone and propagates.  Enumeration
order is canonical, so results are deterministic.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from itertools import product as iter_product

from .cohomology import DegreeTwoClass, zero_length
from .fans import FanData
from .lattice import (
    Matrix,
    as_matrix,
    det,
    identity,
    inverse_unimodular,
    mat_vec,
    shape,
    solve_basis_map,
)
from .simplicial import VertexMap, enumerate_isomorphisms


class DecisionMode(Enum):
    WEAK_TORIC = "weak"
    STRICT_TORIC = "strict"
    QUASITORIC = "quasitoric"
    SMALLCOVER = "smallcover"


_ALLOWED_FAN_MODES = {
    DecisionMode.WEAK_TORIC: {"toric"},
    DecisionMode.STRICT_TORIC: {"toric"},
    DecisionMode.QUASITORIC: {"toric", "quasitoric"},
    DecisionMode.SMALLCOVER: {"smallcover"},
}


@dataclass(frozen=True)
class IsoWitness:
    """(sigma, epsilon, matrix) as above; `matrix` is the change of basis of
    the torus lattice, row-major."""

    sigma: VertexMap
    epsilon: tuple[int, ...]
    matrix: Matrix

    def __post_init__(self) -> None:
        if len(self.epsilon) != len(self.sigma.images):
            raise ValueError("one sign per ray is required")
        if any(e not in (1, -1) for e in self.epsilon):
            raise ValueError("signs must be +1 or -1")

    def uses_negative_sign(self) -> bool:
        return any(e == -1 for e in self.epsilon)

    def as_dict(self) -> dict:
        return {
            "sigma": list(self.sigma.images),
            "epsilon": list(self.epsilon),
            "matrix": [list(row) for row in self.matrix],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())

    @classmethod
    def from_dict(cls, doc: dict) -> "IsoWitness":
        return cls(
            sigma=VertexMap(tuple(doc["sigma"])),
            epsilon=tuple(doc["epsilon"]),
            matrix=as_matrix(doc["matrix"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "IsoWitness":
        return cls.from_dict(json.loads(text))


def thom_stratification(fan: FanData) -> dict[int, int]:
    """Zero count of each ray class tau_i, keyed by ray index.

    Any isomorphism carries ray classes to ray classes up to sign and
    preserves these counts, so they are free vertex labels for the search.

    >>> from toriso.fans import hirzebruch
    >>> thom_stratification(hirzebruch(1))
    {1: 2, 2: 2, 3: 2, 4: 2}
    """
    return {
        i: zero_length(fan, DegreeTwoClass.generator(fan.m, i))
        for i in range(1, fan.m + 1)
    }


def _check_modes(first: FanData, second: FanData, mode: DecisionMode,
                 allow_experimental: bool) -> None:
    allowed = _ALLOWED_FAN_MODES[mode]
    for fan in (first, second):
        if fan.mode in allowed:
            continue
        if (
            mode is DecisionMode.WEAK_TORIC
            and fan.mode == "quasitoric"
            and allow_experimental
        ):
            # No structure theorem backs a free A on characteristic pairs;
            # opt-in only, results are a search outcome and nothing more.
            continue
        raise ValueError(
            f"decision mode {mode.value!r} does not accept a fan in mode "
            f"{fan.mode!r}"
        )


def _propagate(first: FanData, second: FanData, sigma: VertexMap,
               a: Matrix) -> tuple[int, ...] | None:
    """Signs forced by A on every ray, or None if some ray maps nowhere."""
    eps = []
    for i in range(1, first.m + 1):
        w = mat_vec(a, first.ray(i))
        target = second.ray(sigma(i))
        if w == target:
            eps.append(1)
        elif w == tuple(-x for x in target):
            eps.append(-1)
        else:
            return None
    return tuple(eps)


def _propagate_mod2(first: FanData, second: FanData,
                    sigma: VertexMap) -> tuple[int, ...] | None:
    for i in range(1, first.m + 1):
        v = first.ray(i)
        w = second.ray(sigma(i))
        if any((x - y) % 2 for x, y in zip(v, w)):
            return None
    return tuple(1 for _ in range(first.m))


def _anchor_facet(fan: FanData, labels: dict[int, int]):
    """Facet with the rarest label multiset; ties break lexicographically.
    A rare anchor minimizes how many sign patterns survive propagation."""
    key = {f: tuple(sorted(labels[v] for v in f)) for f in fan.complex.facets}
    freq = Counter(key.values())
    return min(fan.complex.facets, key=lambda f: (freq[key[f]], key[f], f))


def decide(first: FanData, second: FanData, mode: DecisionMode,
           allow_experimental: bool = False) -> IsoWitness | None:
    """Search for a witness; None means no witness exists in this mode.

    Both fans must already be valid for their mode.  The search is complete:
    simplicial isomorphisms compatible with the zero-count labels are
    enumerated exhaustively, and for each one either A is the identity
    (strict, quasitoric, smallcover) or A is determined by the sign pattern
    on one anchor cone, whose 2^n patterns are all tried.
    """
    _check_modes(first, second, mode, allow_experimental)
    if first.n != second.n or first.m != second.m:
        return None
    if len(first.complex.facets) != len(second.complex.facets):
        return None
    labels = thom_stratification(first)
    labels2 = thom_stratification(second)
    if sorted(labels.values()) != sorted(labels2.values()):
        return None

    sigmas = enumerate_isomorphisms(first.complex, second.complex, labels, labels2)
    if mode is DecisionMode.WEAK_TORIC:
        anchor = _anchor_facet(first, labels)
        src = tuple(first.ray(i) for i in anchor)
        patterns = tuple(iter_product((1, -1), repeat=first.n))
        for sigma in sigmas:
            for signs in patterns:
                dst = tuple(
                    tuple(s * x for x in second.ray(sigma(i)))
                    for s, i in zip(signs, anchor)
                )
                a = solve_basis_map(src, dst)
                eps = _propagate(first, second, sigma, a)
                if eps is not None:
                    return IsoWitness(sigma=sigma, epsilon=eps, matrix=a)
        return None

    eye = identity(first.n)
    for sigma in sigmas:
        if mode is DecisionMode.SMALLCOVER:
            eps = _propagate_mod2(first, second, sigma)
        else:
            eps = _propagate(first, second, sigma, eye)
        if eps is not None:
            return IsoWitness(sigma=sigma, epsilon=eps, matrix=eye)
    return None


def verify_witness(first: FanData, second: FanData, witness: IsoWitness,
                   mode: DecisionMode) -> bool:
    """Recheck a witness from scratch; False rather than raising on any
    structural mismatch.  Deliberately shares no code with the search."""
    m, n = first.m, first.n
    if second.m != m or second.n != n:
        return False
    if len(witness.sigma.images) != m or len(witness.epsilon) != m:
        return False
    if any(e not in (1, -1) for e in witness.epsilon):
        return False
    if shape(witness.matrix) != (n, n):
        return False
    if det(witness.matrix) not in (1, -1):
        return False
    if mode is not DecisionMode.WEAK_TORIC:
        if witness.matrix != identity(n):
            return False
    if mode is DecisionMode.SMALLCOVER:
        if any(e != 1 for e in witness.epsilon):
            return False
    mapped = {witness.sigma.map_face(f) for f in first.complex.facets}
    if mapped != set(second.complex.facets):
        return False
    for i in range(1, m + 1):
        image = mat_vec(witness.matrix, first.ray(i))
        target = second.ray(witness.sigma(i))
        if mode is DecisionMode.SMALLCOVER:
            if any((x - y) % 2 for x, y in zip(image, target)):
                return False
        else:
            e = witness.epsilon[i - 1]
            if tuple(e * x for x in image) != target:
                return False
    return True


def inverse_witness(witness: IsoWitness) -> IsoWitness:
    """The witness for the opposite direction: inverse permutation, signs
    pulled back along it, inverse matrix."""
    sigma_inv = witness.sigma.inverse()
    eps = tuple(
        witness.epsilon[sigma_inv(j) - 1]
        for j in range(1, len(witness.epsilon) + 1)
    )
    return IsoWitness(
        sigma=sigma_inv,
        epsilon=eps,
        matrix=inverse_unimodular(witness.matrix),
    )


def transport_class(witness: IsoWitness, xi: DegreeTwoClass) -> DegreeTwoClass:
    """Push a degree-2 class along a witness: coefficient a_i lands on
    generator sigma(i) with sign epsilon_i."""
    m = len(witness.sigma.images)
    if len(xi.coeffs) != m:
        raise ValueError("class size does not match witness size")
    out = [0] * m
    for i in range(1, m + 1):
        out[witness.sigma(i) - 1] = witness.epsilon[i - 1] * xi.coeff(i)
    return DegreeTwoClass(tuple(out))
