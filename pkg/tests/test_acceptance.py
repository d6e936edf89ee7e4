"""Acceptance gate: one test per shipped guarantee, one printed line each.

Run `pytest -s tests/test_acceptance.py` to see the per-criterion lines.
Each check is independent of the code path it certifies wherever possible:
the Hirzebruch grid is re-decided by a flat brute force, zero counts are
recomputed through per-point linear algebra, and witnesses are rechecked by
`verify_witness`, which shares nothing with the search.
"""

from __future__ import annotations

import random
from functools import cache
from itertools import product as iter_product

from conftest import (
    blowup_chain,
    corpus,
    quasitoric_square,
    random_class,
    scrambled_copy,
    smallcover_triangle,
)
import toriso as t
from toriso.cli import main as cli_main
from toriso.fanio import save_fan
from toriso.lattice import identity, mat_vec, solve_basis_map


WEAK = t.DecisionMode.WEAK_TORIC


def _report(num: int, name: str, ok: bool) -> None:
    print(f"criterion {num} [{'PASS' if ok else 'FAIL'}] {name}")
    assert ok, f"criterion {num} failed: {name}"


def containment_corpus() -> list[t.FanData]:
    """Projective spaces, the Hirzebruch family, and three blow-ups."""
    rng = random.Random(616)
    fans = [t.projective_space(n) for n in (1, 2, 3)]
    fans += [t.hirzebruch(a) for a in range(4)]
    fans += blowup_chain(t.projective_space(2), rng, 2)[1:]
    fans.append(t.blow_up(t.projective_space(3), (2, 3, 4)))
    return fans


def test_criterion_1_ring_vs_algebra_separation(tmp_path, capsys):
    h0, h1 = t.hirzebruch(0), t.hirzebruch(1)
    same_ring = (
        h0.complex == h1.complex
        and t.minimal_nonfaces(h0.complex) == ((1, 3), (2, 4))
        and t.presentation(h0).relations == t.presentation(h1).relations
    )
    first = tmp_path / "h0.json"
    second = tmp_path / "h1.json"
    save_fan(first, h0)
    save_fan(second, h1)
    code = cli_main(["iso", str(first), str(second), "--mode", "weak"])
    out = capsys.readouterr().out.strip()
    separated = code == 1 and out == "NOT ISOMORPHIC"
    positive_control = (
        cli_main(["iso", str(first), str(first), "--mode", "weak"]) == 0
    )
    capsys.readouterr()
    _report(
        1,
        "identical face rings, weak isomorphism still refused",
        same_ring and separated and positive_control,
    )


def _brute_force_hirzebruch(a: int, b: int) -> bool:
    """Flat search: all 8 symmetries of the 4-cycle, all 16 sign vectors,
    the matrix solved from cone {1, 2}.  Shares nothing with `decide`."""
    first, second = t.hirzebruch(a), t.hirzebruch(b)
    dihedral = [
        (1, 2, 3, 4), (2, 3, 4, 1), (3, 4, 1, 2), (4, 1, 2, 3),
        (4, 3, 2, 1), (3, 2, 1, 4), (2, 1, 4, 3), (1, 4, 3, 2),
    ]
    facets = set(second.complex.facets)
    for images in dihedral:
        if any(
            tuple(sorted((images[i - 1], images[j - 1]))) not in facets
            for i, j in first.complex.facets
        ):
            continue
        for eps in iter_product((1, -1), repeat=4):
            src = (first.ray(1), first.ray(2))
            dst = (
                tuple(eps[0] * x for x in second.ray(images[0])),
                tuple(eps[1] * x for x in second.ray(images[1])),
            )
            mat = solve_basis_map(src, dst)
            if all(
                tuple(eps[i - 1] * x for x in mat_vec(mat, first.ray(i)))
                == second.ray(images[i - 1])
                for i in range(1, 5)
            ):
                return True
    return False


def test_criterion_2_hirzebruch_classification_grid():
    ok = True
    for a in range(-3, 4):
        for b in range(-3, 4):
            expected = abs(a) == abs(b)
            found = t.decide(t.hirzebruch(a), t.hirzebruch(b), WEAK)
            if (found is not None) != expected:
                ok = False
            if found is not None and not t.verify_witness(
                t.hirzebruch(a), t.hirzebruch(b), found, WEAK
            ):
                ok = False
            if _brute_force_hirzebruch(a, b) != expected:
                ok = False
    _report(2, "49-pair Hirzebruch grid, search and brute force agree", ok)


def _corrupted(witness: t.IsoWitness, rng: random.Random, kind: int) -> t.IsoWitness:
    m = len(witness.epsilon)
    n = len(witness.matrix)
    if kind == 0:
        i = rng.randrange(m)
        eps = tuple(-e if k == i else e for k, e in enumerate(witness.epsilon))
        return t.IsoWitness(witness.sigma, eps, witness.matrix)
    if kind == 1:
        i, j = rng.randrange(n), rng.randrange(n)
        mat = tuple(
            tuple(x + (1 if (r, c) == (i, j) else 0) for c, x in enumerate(row))
            for r, row in enumerate(witness.matrix)
        )
        return t.IsoWitness(witness.sigma, witness.epsilon, mat)
    i, j = rng.sample(range(m), 2)
    images = list(witness.sigma.images)
    images[i], images[j] = images[j], images[i]
    return t.IsoWitness(t.VertexMap(tuple(images)), witness.epsilon, witness.matrix)


@cache
def _soundness_witnesses() -> tuple[bool, list[tuple[t.FanData, t.FanData, t.IsoWitness]]]:
    rng = random.Random(20240616)
    bases = [t.projective_space(2), t.projective_space(3), t.hirzebruch(1)]
    pool = list(bases)
    for base in bases:
        pool += blowup_chain(base, rng, 5)[1:]
    ok = True
    produced = []
    for trial in range(200):
        fan = pool[trial % len(pool)]
        moved = scrambled_copy(fan, rng)
        witness = t.decide(fan, moved, WEAK)
        if witness is None or not t.verify_witness(fan, moved, witness, WEAK):
            ok = False
            continue
        produced.append((fan, moved, witness))
        if t.verify_witness(fan, moved, _corrupted(witness, rng, trial % 3), WEAK):
            ok = False
    return ok, produced


def test_criterion_3_soundness_round_trip():
    ok, produced = _soundness_witnesses()
    ok = ok and len(produced) == 200
    _report(
        3,
        "200 scrambles decided and verified, 200 corruptions rejected",
        ok,
    )


def test_criterion_4_zero_set_containment():
    rng = random.Random(617)
    ok = True
    for fan in containment_corpus():
        taus = {
            i: {
                f
                for f, cov in t.restriction_table(
                    fan, t.DegreeTwoClass.generator(fan.m, i)
                )
                if not any(cov)
            }
            for i in range(1, fan.m + 1)
        }
        for _ in range(500):
            xi = random_class(rng, fan.m)
            zeros = {
                f for f, cov in t.restriction_table(fan, xi) if not any(cov)
            }
            support = [i for i in range(1, fan.m + 1) if xi.coeff(i)]
            for i in support:
                if not zeros <= taus[i]:
                    ok = False
                if len(support) >= 2 and zeros == taus[i]:
                    ok = False
    _report(4, "zero sets sit inside ray zero sets, strictly when shared", ok)


def test_criterion_5_zero_length_oracle_equality():
    rng = random.Random(618)
    ok = True
    for fan in containment_corpus():
        for i in range(1, fan.m + 1):
            tau = t.DegreeTwoClass.generator(fan.m, i)
            if t.zero_length(fan, tau) != t.annihilator_rank_oracle(fan, tau):
                ok = False
        for _ in range(500):
            xi = random_class(rng, fan.m)
            if t.zero_length(fan, xi) != t.annihilator_rank_oracle(fan, xi):
                ok = False
    _report(5, "support shortcut equals per-point linear algebra", ok)


def test_criterion_6_structure_map_restriction_identity():
    ok = True
    for fan in corpus():
        for j in range(fan.n):
            u = tuple(1 if k == j else 0 for k in range(fan.n))
            xi = t.pi_star(fan, u)
            for facet in fan.complex.facets:
                if t.restrict(fan, xi, facet) != u:
                    ok = False
    _report(6, "pulled-back weights restrict to themselves everywhere", ok)


def test_criterion_7_quotient_kernels():
    ok = True
    for fan in corpus():
        kd = t.kernel_data(fan)
        if kd.rank != fan.m - fan.n or kd.torsion != ():
            ok = False
    produced = list(_soundness_witnesses()[1])
    grid_pairs = [
        (t.hirzebruch(a), t.hirzebruch(b))
        for a in range(-3, 4)
        for b in range(-3, 4)
        if abs(a) == abs(b)
    ]
    for first, second in grid_pairs:
        witness = t.decide(first, second, WEAK)
        if witness is None:
            ok = False
            continue
        produced.append((first, second, witness))
    for first, second, witness in produced:
        absorbed = t.apply_torus_automorphism(first, witness.matrix)
        strict = t.IsoWitness(
            sigma=witness.sigma,
            epsilon=witness.epsilon,
            matrix=identity(first.n),
        )
        if not t.verify_witness(absorbed, second, strict, t.DecisionMode.STRICT_TORIC):
            ok = False
        elif not t.kernels_equal(absorbed, second, strict):
            ok = False
    _report(7, "witnesses carry kernel lattices onto kernel lattices", ok)


def test_criterion_8_quasitoric_and_smallcover_modes():
    quasi = quasitoric_square()
    ok = t.validate(quasi).ok
    as_toric = t.FanData(
        n=2, m=4, rays=quasi.rays, complex=quasi.complex, mode="toric"
    )
    report = t.validate(as_toric)
    ok = ok and (not report.ok) and report.failed("overlap")
    witness = t.decide(quasi, quasi, t.DecisionMode.QUASITORIC)
    ok = ok and witness is not None
    if witness is not None:
        ok = ok and t.verify_witness(quasi, quasi, witness, t.DecisionMode.QUASITORIC)
        back = t.inverse_witness(witness)
        ok = ok and t.verify_witness(quasi, quasi, back, t.DecisionMode.QUASITORIC)
    # Symmetry with a distinct second pair, not just self-comparison.
    shuffled = t.relabel_vertices(quasi, t.VertexMap((3, 1, 4, 2)))
    forward = t.decide(quasi, shuffled, t.DecisionMode.QUASITORIC)
    backward = t.decide(shuffled, quasi, t.DecisionMode.QUASITORIC)
    ok = ok and forward is not None and backward is not None
    if forward is not None and backward is not None:
        ok = ok and t.verify_witness(
            quasi, shuffled, forward, t.DecisionMode.QUASITORIC
        )
        ok = ok and t.verify_witness(
            shuffled, quasi, backward, t.DecisionMode.QUASITORIC
        )
    ok = ok and t.validate(smallcover_triangle()).ok
    _report(8, "characteristic pairs and mod-2 pairs validate and decide", ok)


def test_criterion_9_degree_two_injectivity():
    ok = True
    for fan in corpus():
        if t.restriction_rank(fan) != fan.m:
            ok = False
    _report(9, "restriction to fixed points is injective in degree 2", ok)
