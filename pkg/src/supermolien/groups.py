"""Finite group machinery: permutations, graded matrix groups, wreath elements.

A graded group element carries two matrices, g0 acting on the r0 commuting
variables and g1 on the r1 anticommuting ones.  Wreath elements are labels
(sigma, (g_1..g_n)); their action on the algebra factors through the two
primitive actions in the supercommutative-algebra layer, with the product
law chosen so that applying w1 * w2 equals applying w2's substitution first
and then w1's.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import CapExceeded, DimensionMismatch, NotAPermutationGroup, NotInvertible
from .linalg import QMatrix, qmatrix_det
from .rationals import parse_rational

CLOSURE_CAP = 20000
WREATH_CAP = 200000


class Permutation:
    """Permutation of {1..n} in one-line notation: i maps to images[i-1]."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def n(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(range(1, n + 1))

    @staticmethod
    def from_cycles(n: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)((cyc[0],))):
                images[a - 1] = b
        return Permutation(images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """(self . other)(i) = self(other(i))."""
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return Permutation(self.images[other.images[i - 1] - 1] for i in range(1, self.n + 1))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(inv)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def matrix(self) -> QMatrix:
        """Permutation matrix sending e_j to e_{sigma(j)}."""
        n = self.n
        return QMatrix(
            n, n, [Fraction(int(self.images[j] == i + 1)) for i in range(n) for j in range(n)]
        )


def perm_sign(p: Permutation) -> int:
    inv = 0
    im = p.images
    for i in range(len(im)):
        for j in range(i + 1, len(im)):
            if im[i] > im[j]:
                inv += 1
    return -1 if inv % 2 else 1


def cycle_type(p: Permutation) -> tuple[int, ...]:
    """Cycle lengths, weakly decreasing (a partition of n)."""
    seen = [False] * p.n
    lengths = []
    for start in range(1, p.n + 1):
        if seen[start - 1]:
            continue
        length = 0
        i = start
        while not seen[i - 1]:
            seen[i - 1] = True
            i = p(i)
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


@dataclass(frozen=True)
class GradedGroupElement:
    """A pair of matrices: g0 on the commuting part, g1 on the anticommuting part."""

    g0: QMatrix
    g1: QMatrix

    @staticmethod
    def identity(r0: int, r1: int) -> "GradedGroupElement":
        return GradedGroupElement(QMatrix.identity(r0), QMatrix.identity(r1))

    def __mul__(self, other: "GradedGroupElement") -> "GradedGroupElement":
        return GradedGroupElement(self.g0 * other.g0, self.g1 * other.g1)

    def sort_key(self):
        return (self.g0.entries, self.g1.entries)


def _bfs_closure(identity, generators, cap, multiply):
    """Deterministic closure: BFS over right multiplication by sorted generators."""
    elements = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for e in frontier:
            for g in generators:
                prod = multiply(e, g)
                if prod not in seen:
                    if len(elements) >= cap:
                        raise CapExceeded(f"group closure exceeded cap {cap}")
                    seen.add(prod)
                    elements.append(prod)
                    nxt.append(prod)
        frontier = nxt
    return elements


class MatrixGroup:
    """Finite group of graded matrix pairs, closed and deterministically ordered."""

    __slots__ = ("r0", "r1", "elements", "generators", "_index")

    def __init__(self, r0: int, r1: int, elements: Sequence[GradedGroupElement], generators: Sequence[GradedGroupElement]):
        object.__setattr__(self, "r0", r0)
        object.__setattr__(self, "r1", r1)
        object.__setattr__(self, "elements", tuple(elements))
        object.__setattr__(self, "generators", tuple(generators))
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.elements)})

    def __setattr__(self, name, value):
        raise AttributeError("MatrixGroup is immutable")

    @staticmethod
    def close(r0: int, r1: int, generators: Iterable[GradedGroupElement], cap: int = CLOSURE_CAP) -> "MatrixGroup":
        gens = []
        for g in generators:
            if g.g0.nrows != r0 or g.g0.ncols != r0 or g.g1.nrows != r1 or g.g1.ncols != r1:
                raise DimensionMismatch(
                    f"generator blocks {g.g0.nrows}x{g.g0.ncols}/{g.g1.nrows}x{g.g1.ncols} "
                    f"do not match (r0, r1) = ({r0}, {r1})"
                )
            if qmatrix_det(g.g0) == 0 or qmatrix_det(g.g1) == 0:
                raise NotInvertible("singular generator")
            gens.append(g)
        gens = sorted(set(gens), key=GradedGroupElement.sort_key)
        ident = GradedGroupElement.identity(r0, r1)
        elements = _bfs_closure(ident, gens, cap, lambda a, b: a * b)
        return MatrixGroup(r0, r1, elements, gens)

    @staticmethod
    def trivial(r0: int, r1: int) -> "MatrixGroup":
        return MatrixGroup.close(r0, r1, [])

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, e: GradedGroupElement) -> int:
        return self._index[e]

    @property
    def identity_index(self) -> int:
        return self._index[GradedGroupElement.identity(self.r0, self.r1)]

    def product_index(self, i: int, j: int) -> int:
        return self._index[self.elements[i] * self.elements[j]]

    def inverse_index(self, i: int) -> int:
        e = self.elements[i]
        ident = GradedGroupElement.identity(self.r0, self.r1)
        for j, f in enumerate(self.elements):
            if e * f == ident:
                return j
        raise ValueError("closed group is missing an inverse")  # unreachable

    def to_json_dict(self) -> dict:
        return {
            "r0": self.r0,
            "r1": self.r1,
            "generators": [
                {"g0": g.g0.to_json_rows(), "g1": g.g1.to_json_rows()} for g in self.generators
            ],
        }

    @staticmethod
    def from_json_dict(data: Mapping) -> "MatrixGroup":
        r0, r1 = int(data["r0"]), int(data["r1"])
        gens = [
            GradedGroupElement(QMatrix.from_json_rows(g["g0"]), QMatrix.from_json_rows(g["g1"]))
            for g in data["generators"]
        ]
        return MatrixGroup.close(r0, r1, gens)


class PermGroup:
    """Finite permutation group, closed and deterministically ordered."""

    __slots__ = ("n", "elements", "generators", "_index")

    def __init__(self, n: int, elements: Sequence[Permutation], generators: Sequence[Permutation]):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "elements", tuple(elements))
        object.__setattr__(self, "generators", tuple(generators))
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(self.elements)})

    def __setattr__(self, name, value):
        raise AttributeError("PermGroup is immutable")

    @staticmethod
    def close(n: int, generators: Iterable[Permutation], cap: int = CLOSURE_CAP) -> "PermGroup":
        gens = []
        for p in generators:
            if p.n != n:
                raise DimensionMismatch(f"generator degree {p.n} != {n}")
            gens.append(p)
        gens = sorted(set(gens), key=lambda p: p.images)
        elements = _bfs_closure(Permutation.identity(n), gens, cap, Permutation.compose)
        return PermGroup(n, elements, gens)

    @staticmethod
    def symmetric(n: int) -> "PermGroup":
        if n <= 1:
            return PermGroup.close(max(n, 1), [])
        gens = [Permutation.from_cycles(n, [(1, 2)])]
        if n > 2:
            gens.append(Permutation.from_cycles(n, [tuple(range(1, n + 1))]))
        return PermGroup.close(n, gens)

    @staticmethod
    def cyclic(n: int) -> "PermGroup":
        if n <= 1:
            return PermGroup.close(max(n, 1), [])
        return PermGroup.close(n, [Permutation.from_cycles(n, [tuple(range(1, n + 1))])])

    @staticmethod
    def young(alpha: Sequence[int]) -> "PermGroup":
        """Young subgroup S_alpha inside S_n, n = sum(alpha)."""
        n = sum(alpha)
        gens = []
        offset = 0
        for part in alpha:
            for i in range(offset + 1, offset + part):
                gens.append(Permutation.from_cycles(n, [(i, i + 1)]))
            offset += part
        return PermGroup.close(n, gens)

    @staticmethod
    def trivial(n: int) -> "PermGroup":
        return PermGroup.close(n, [])

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, p: Permutation) -> int:
        return self._index[p]

    @property
    def identity_index(self) -> int:
        return self._index[Permutation.identity(self.n)]

    def product_index(self, i: int, j: int) -> int:
        return self._index[self.elements[i].compose(self.elements[j])]

    def to_json_dict(self) -> dict:
        return {"n": self.n, "generators": [list(p.images) for p in self.generators]}

    @staticmethod
    def from_json_dict(data: Mapping) -> "PermGroup":
        return PermGroup.close(int(data["n"]), [Permutation(g) for g in data["generators"]])


def matrix_group_to_perm_group(G: MatrixGroup, part: str = "even") -> PermGroup:
    """Reinterpret a matrix group whose chosen graded part consists of
    permutation matrices; raises NotAPermutationGroup otherwise."""
    r = G.r0 if part == "even" else G.r1
    perms = []
    for e in G.elements:
        m = e.g0 if part == "even" else e.g1
        images = m.as_permutation_images()
        if images is None:
            raise NotAPermutationGroup(f"element {m!r} is not a permutation matrix")
        perms.append(Permutation(images))
    gen_perms = []
    for g in G.generators:
        m = g.g0 if part == "even" else g.g1
        gen_perms.append(Permutation(m.as_permutation_images()))
    if len(set(perms)) != len(perms):
        raise NotAPermutationGroup("matrix group does not act faithfully by permutations")
    return PermGroup(r, perms, gen_perms)


@dataclass(frozen=True)
class WreathElement:
    """Label (sigma, (g_1..g_n)) for an element of P[G] acting on n rows."""

    sigma: Permutation
    gs: tuple[GradedGroupElement, ...]

    def __post_init__(self):
        if self.sigma.n != len(self.gs):
            raise DimensionMismatch(
                f"permutation degree {self.sigma.n} != {len(self.gs)} row factors"
            )


def wreath_sign(w: WreathElement) -> int:
    """The sign character of P[G]: sgn(sigma), ignoring the G-part."""
    return perm_sign(w.sigma)


def wreath_identity(n: int, r0: int, r1: int) -> WreathElement:
    ident = GradedGroupElement.identity(r0, r1)
    return WreathElement(Permutation.identity(n), (ident,) * n)


def wreath_mul(w1: WreathElement, w2: WreathElement) -> WreathElement:
    """Product law matching action composition: applying the result equals
    applying w2's substitution and then w1's."""
    tau = w2.sigma
    tau_inv = tau.inverse()
    n = tau.n
    gs = tuple(w1.gs[tau_inv(i) - 1] * w2.gs[i - 1] for i in range(1, n + 1))
    return WreathElement(tau.compose(w1.sigma), gs)


def build_wreath(P: PermGroup, G: MatrixGroup, n: int, cap: int = WREATH_CAP) -> list[WreathElement]:
    """All |P| * |G|^n labels of P[G], in deterministic order."""
    if P.n != n:
        raise DimensionMismatch(f"P acts on {P.n} rows, expected {n}")
    total = P.order * G.order**n
    if total > cap:
        raise CapExceeded(f"wreath product has {total} elements, cap is {cap}")
    return [
        WreathElement(sigma, gs)
        for sigma in P.elements
        for gs in itertools.product(G.elements, repeat=n)
    ]


@dataclass(frozen=True)
class LinearCharacter:
    """One-dimensional character: values aligned with a group's element order.

    Rational-valued multiplicative characters on a finite group only take
    the values +1 and -1 (the only finite subgroup of Q* is {+-1}); the
    multiplicativity check below enforces that automatically.
    """

    values: tuple[Fraction, ...]

    def __call__(self, i: int) -> Fraction:
        return self.values[i]

    def at_inverse(self, i: int) -> Fraction:
        # chi(g^{-1}) = 1/chi(g), avoiding any need for inverse lookups
        return 1 / self.values[i]


def validate_character(values: Sequence, group) -> LinearCharacter:
    """Check chi(id) = 1, nonzero values, and multiplicativity on the full
    product table of `group` (anything with elements/identity_index/product_index)."""
    vals = tuple(Fraction(v) for v in values)
    if len(vals) != len(group.elements):
        raise ValueError(f"character has {len(vals)} values for a group of order {len(group.elements)}")
    if any(v == 0 for v in vals):
        raise ValueError("character values must be nonzero")
    if vals[group.identity_index] != 1:
        raise ValueError("character must send the identity to 1")
    order = len(vals)
    for i in range(order):
        for j in range(order):
            if vals[group.product_index(i, j)] != vals[i] * vals[j]:
                raise ValueError(f"character is not multiplicative at pair ({i}, {j})")
    return LinearCharacter(vals)


def trivial_character(order: int) -> LinearCharacter:
    return LinearCharacter((Fraction(1),) * order)


def sgn_character(P: PermGroup) -> LinearCharacter:
    return LinearCharacter(tuple(Fraction(perm_sign(p)) for p in P.elements))


def _wreath_point_perm(sigma: Permutation, gs: Sequence[Permutation], n: int, r: int) -> Permutation:
    """Point (i, p) maps to (sigma(i), g_i(p)), rows flattened row-major."""
    images = [0] * (n * r)
    for i in range(1, n + 1):
        base = (sigma(i) - 1) * r
        gi = gs[i - 1]
        for p in range(1, r + 1):
            images[(i - 1) * r + p - 1] = base + gi(p)
    return Permutation(images)


def perm_group_of_wreath(P: PermGroup, G_perm: PermGroup, n: int, cap: int = WREATH_CAP) -> PermGroup:
    """P[G] realized as permutations of the n*r points (row i, point p)."""
    if P.n != n:
        raise DimensionMismatch(f"P acts on {P.n} rows, expected {n}")
    r = G_perm.n
    total = P.order * G_perm.order**n
    if total > cap:
        raise CapExceeded(f"wreath product has {total} elements, cap is {cap}")
    elements = [
        _wreath_point_perm(sigma, gs, n, r)
        for sigma in P.elements
        for gs in itertools.product(G_perm.elements, repeat=n)
    ]
    assert len(set(elements)) == total  # the imprimitive action is faithful
    ident_p = Permutation.identity(n)
    ident_g = Permutation.identity(r)
    generators = [_wreath_point_perm(s, (ident_g,) * n, n, r) for s in P.generators]
    for h in G_perm.generators:
        for row in range(n):
            gs = [ident_g] * n
            gs[row] = h
            generators.append(_wreath_point_perm(ident_p, gs, n, r))
    return PermGroup(n * r, elements, generators)


def shuffle_reps(a: int, b: int) -> list[Permutation]:
    """Minimal-length coset representatives for S_{(a,b)} in S_{a+b}.

    For each size-a subset S of positions in lex order, values 1..a are
    placed on S increasingly and values a+1..a+b on the complement
    increasingly.  Each rep is increasing on both value blocks.
    """
    n = a + b
    reps = []
    for subset in itertools.combinations(range(1, n + 1), a):
        word = [0] * n
        rest = [p for p in range(1, n + 1) if p not in subset]
        for value, pos in enumerate(subset, start=1):
            word[pos - 1] = value
        for value, pos in enumerate(rest, start=a + 1):
            word[pos - 1] = value
        reps.append(Permutation(word))
    return reps
