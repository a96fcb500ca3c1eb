"""Exact bigraded Hilbert series of invariants, two independent ways.

The Molien route averages det(I + u*g1)/det(I - q*g0) over the group with
character weights chi(g^{-1}).  The oracle route never looks at Molien: it
projects every bidegree-basis monomial through the Reynolds operator and
takes the exact rank of the resulting matrix.  molien_vs_oracle compares
the two coefficient by coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import BasisTooLarge, DimensionMismatch
from .groups import (
    LinearCharacter,
    MatrixGroup,
    PermGroup,
    Permutation,
    WreathElement,
    build_wreath,
    matrix_group_to_perm_group,
    perm_sign,
    sgn_character,
    trivial_character,
    validate_character,
    wreath_sign,
)
from .linalg import QMatrix, assemble_blocks, charpoly_det, matrix_rank
from .series import Caps, TrigradedSeries, series_add, series_inv, series_mul, series_scale, unipoly_as_series
from .superalgebra import (
    AlgebraSignature,
    SuperPolynomial,
    apply_wreath,
    bidegree_basis,
    coefficient_vector,
)

DEFAULT_BASIS_LIMIT = 5000


@dataclass(frozen=True)
class GroupAction:
    """A finite group acting on n rows of (r0, r1) variables, with a linear
    character selecting the isotypic component to count."""

    signature: AlgebraSignature
    labels: tuple[WreathElement, ...]
    character: LinearCharacter
    name: str = ""

    @property
    def order(self) -> int:
        return len(self.labels)

    @staticmethod
    def from_matrix_group(G: MatrixGroup, character="trivial", name: str = "") -> "GroupAction":
        """Single-row action of a matrix group (n = 1).

        character may be "trivial", "sgn" (sign of the underlying permutation
        action, when the group is realized by permutation matrices), an
        explicit value sequence aligned with element order, or a prebuilt
        LinearCharacter.  Explicit values are validated against the product
        table.
        """
        sig = AlgebraSignature(G.r0, G.r1, 1)
        ident = Permutation.identity(1)
        labels = tuple(WreathElement(ident, (g,)) for g in G.elements)
        if isinstance(character, LinearCharacter):
            chi = character
        elif character == "trivial":
            chi = trivial_character(G.order)
        elif character == "sgn":
            chi = validate_character(_matrix_group_sgn_values(G), G)
        else:
            chi = validate_character(character, G)
        return GroupAction(sig, labels, chi, name=name)

    @staticmethod
    def from_wreath(P: PermGroup, G: MatrixGroup, n: int, flavor: str = "invariant", name: str = "") -> "GroupAction":
        """Action of P[G] on n rows; flavor "invariant" weights every label 1,
        flavor "antiinvariant" weights by sgn(sigma)."""
        if flavor not in ("invariant", "antiinvariant"):
            raise ValueError(f"unknown flavor {flavor!r}")
        sig = AlgebraSignature(G.r0, G.r1, n)
        labels = tuple(build_wreath(P, G, n))
        if flavor == "invariant":
            chi = trivial_character(len(labels))
        else:
            chi = LinearCharacter(tuple(Fraction(wreath_sign(w)) for w in labels))
        return GroupAction(sig, labels, chi, name=name)

    def apply(self, i: int, f: SuperPolynomial) -> SuperPolynomial:
        return apply_wreath(self.labels[i], f)

    def block_matrices(self, i: int) -> tuple[QMatrix, QMatrix]:
        """The label's matrices on the n*r0 even and n*r1 odd variables."""
        return label_block_matrices(self.labels[i], self.signature)


def _matrix_group_sgn_values(G: MatrixGroup) -> list[Fraction]:
    """Sign of the underlying permutation action, read off whichever graded
    part realizes the group by permutation matrices."""
    part = "even" if G.r0 > 0 else "odd"
    P = matrix_group_to_perm_group(G, part=part)
    return [Fraction(perm_sign(p)) for p in P.elements]


def label_block_matrices(w: WreathElement, sig: AlgebraSignature) -> tuple[QMatrix, QMatrix]:
    """Matrices of a wreath label on the n*r0 even and n*r1 odd variables.

    With the row relabeling i -> sigma^{-1}(i), the g_i block lands at block
    position (sigma^{-1}(i), i)."""
    inv = w.sigma.inverse()
    blocks0 = {}
    blocks1 = {}
    for row in range(1, sig.n + 1):
        g = w.gs[row - 1]
        blocks0[(inv(row) - 1, row - 1)] = g.g0
        blocks1[(inv(row) - 1, row - 1)] = g.g1
    return (
        assemble_blocks(sig.n, sig.r0, blocks0),
        assemble_blocks(sig.n, sig.r1, blocks1),
    )


def label_molien_term(w: WreathElement, sig: AlgebraSignature, caps: Caps) -> TrigradedSeries:
    """det(I + u*M1) / det(I - q*M0) for one label, exact within caps."""
    m0, m1 = label_block_matrices(w, sig)
    num = unipoly_as_series(charpoly_det(m1), caps, "u", negate_var=True)
    den = unipoly_as_series(charpoly_det(m0), caps, "q")
    return series_mul(num, series_inv(den))


def super_molien(action: GroupAction, dq: int, du: int | None = None) -> TrigradedSeries:
    """Character-weighted Molien average, exact within caps (0, dq, du).

    du defaults to the full odd dimension n*r1, where the numerator
    det(I + u*g1) is a polynomial of exactly that degree.
    """
    sig = action.signature
    if du is None:
        du = sig.num_odd
    caps = Caps(0, dq, du)
    total = TrigradedSeries.zero(caps)
    for i in range(action.order):
        term = label_molien_term(action.labels[i], sig, caps)
        total = series_add(total, series_scale(term, action.character.at_inverse(i)))
    return series_scale(total, Fraction(1, action.order))


def reynolds_project(action: GroupAction, f: SuperPolynomial) -> SuperPolynomial:
    """(1/|W|) sum over w of chi(w^{-1}) w.f, the projector onto the
    chi-isotypic component."""
    acc = SuperPolynomial.zero(action.signature)
    for i in range(action.order):
        acc = acc + action.apply(i, f).scale(action.character.at_inverse(i))
    return acc.scale(Fraction(1, action.order))


def invariant_dimension_bruteforce(
    action: GroupAction, i: int, j: int, basis_limit: int = DEFAULT_BASIS_LIMIT
) -> int:
    """Exact dimension of the chi-isotypic component in bidegree (i, j),
    computed as the rank of the Reynolds operator on the monomial basis.
    Never consults the Molien series."""
    basis = bidegree_basis(action.signature, i, j)
    if len(basis) > basis_limit:
        raise BasisTooLarge(f"bidegree ({i}, {j}) basis has {len(basis)} monomials, limit {basis_limit}")
    if not basis:
        return 0
    rows = []
    for mono in basis:
        image = reynolds_project(action, SuperPolynomial.monomial(action.signature, mono))
        rows.append(coefficient_vector(image, basis))
    return matrix_rank(QMatrix.from_rows(rows))


def molien_vs_oracle(
    action: GroupAction,
    dq: int,
    du: int | None = None,
    basis_limit: int = DEFAULT_BASIS_LIMIT,
) -> dict:
    """Compare Molien coefficients against brute-force ranks on the full
    bidegree grid i <= dq, j <= du.  Returns a JSON-ready report."""
    if du is None:
        du = action.signature.num_odd
    series = super_molien(action, dq, du)
    agreements = 0
    mismatches = []
    for i in range(dq + 1):
        for j in range(du + 1):
            molien_c = series.coefficient((0, i, j))
            oracle = invariant_dimension_bruteforce(action, i, j, basis_limit=basis_limit)
            if molien_c == oracle:
                agreements += 1
            else:
                mismatches.append(
                    {"i": i, "j": j, "molien": str(molien_c), "oracle": oracle}
                )
    return {"agreements": agreements, "mismatches": mismatches}
