"""The subtorus a toric fan quotients by, recovered from its rays.

The rays assemble into an n x m integer matrix V; the group carrying the
quotient construction is cut out by the kernel of V acting on the m-torus.
Everything needed here is the kernel lattice (a saturated sublattice of
Z^m) plus the cokernel torsion, both read off a Smith decomposition.

Kernel lattices are compared through their canonical Hermite bases, so two
descriptions agree iff the rendered data is identical.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fans import FanData
from .isomorphism import DecisionMode, IsoWitness, verify_witness
from .lattice import (
    Matrix,
    as_matrix,
    row_hermite_form,
    smith_normal_form,
    transpose,
)


@dataclass(frozen=True)
class KernelData:
    """Kernel of the ray matrix: rank, cokernel torsion, canonical basis
    rows (each of length m).  For a nonsingular fan the torsion is empty."""

    rank: int
    torsion: tuple[int, ...]
    basis: Matrix | tuple[()]

    def render(self) -> str:
        lines = [
            f"rank: {self.rank}",
            f"torsion: [{', '.join(str(d) for d in self.torsion)}]",
        ]
        if self.basis:
            lines.append("basis:")
            lines += [
                "[" + ", ".join(str(x) for x in row) + "]" for row in self.basis
            ]
        else:
            lines.append("basis: (none)")
        return "\n".join(lines)


def kernel_data(fan: FanData) -> KernelData:
    """Kernel lattice of the n x m ray matrix, in canonical Hermite form.

    >>> from toriso.fans import projective_space
    >>> kernel_data(projective_space(2)).basis
    ((1, 1, 1),)
    """
    if fan.mode != "toric":
        raise ValueError("the quotient description applies to toric mode")
    rays_cols = transpose(as_matrix(fan.rays))
    snf = smith_normal_form(rays_cols)
    r = snf.rank
    # Columns r.. of the right transform span the kernel: V @ right has the
    # nonzero diagonal in its first r columns and zeros after.  Because
    # `right` is unimodular these columns are a basis of the full kernel
    # lattice, which is automatically saturated.
    cols = transpose(snf.right)
    kernel_rows = cols[r:]
    basis: Matrix | tuple[()] = ()
    if kernel_rows:
        basis = row_hermite_form(as_matrix(kernel_rows))
    return KernelData(
        rank=fan.m - r,
        torsion=tuple(d for d in snf.diag if d > 1),
        basis=basis,
    )


def twist_rows(basis, epsilon: tuple[int, ...], sigma) -> Matrix:
    """Transport kernel rows along a witness: entry i of each row is scaled
    by epsilon_i and moved to slot sigma(i)."""
    out = []
    for row in basis:
        moved = [0] * len(row)
        for i, (x, e) in enumerate(zip(row, epsilon), start=1):
            moved[sigma(i) - 1] = e * x
        out.append(tuple(moved))
    return tuple(out)


def kernels_equal(first: FanData, second: FanData, witness: IsoWitness,
                  check_witness: bool = True) -> bool:
    """Does the witness carry the first fan's kernel lattice onto the
    second's?

    With `check_witness` (the default) the witness must verify in strict
    mode, since only then is the coordinatewise transport meaningful; pass
    False to probe what a corrupted witness would do to the lattice.
    """
    if check_witness and not verify_witness(
        first, second, witness, DecisionMode.STRICT_TORIC
    ):
        raise ValueError("witness does not verify in strict mode")
    kd1 = kernel_data(first)
    kd2 = kernel_data(second)
    if kd1.rank != kd2.rank or kd1.torsion != kd2.torsion:
        return False
    if not kd1.basis or not kd2.basis:
        return kd1.basis == kd2.basis
    moved = twist_rows(kd1.basis, witness.epsilon, witness.sigma)
    return row_hermite_form(moved) == kd2.basis
