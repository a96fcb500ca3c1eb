"""Shuffle and signed-shuffle products on spaces of wreath invariants.

An invariant on a rows times an invariant on b rows is multiplied after
shifting the second factor's rows past the first, then symmetrized over the
minimal coset representatives of the two row blocks.  The resulting product
closes on the (anti)invariant spaces, is associative, supercommutes on
degree-one elements with signs governed by theta-degree parity, and
generates everything in sight from degree one.  Each of those claims has a
verifier here; none of them consults the Hilbert series machinery.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import BasisTooLarge, NotHomogeneous, SignatureMismatch, SuperMolienError
from .groups import (
    GradedGroupElement,
    MatrixGroup,
    PermGroup,
    Permutation,
    WreathElement,
    perm_sign,
    shuffle_reps,
)
from .linalg import EchelonSelector
from .molien import (
    DEFAULT_BASIS_LIMIT,
    GroupAction,
    invariant_dimension_bruteforce,
    reynolds_project,
)
from .superalgebra import (
    AlgebraSignature,
    SuperMonomial,
    SuperPolynomial,
    apply_row_permutation,
    apply_wreath,
    bidegree_basis,
    coefficient_vector,
    super_mul,
)
from .wreath_series import (
    FLAVORS,
    CollationSpec,
    collated_product_series,
    collated_sum_series,
    _require_flavor,
)

__all__ = [
    "InvariantSpaceBasis",
    "invariant_basis",
    "shift_rows",
    "shuffle_product",
    "triple_shuffle",
    "verify_closure",
    "verify_associativity",
    "verify_supercommutation",
    "degree_one_generation_rank",
    "theorem3_check",
    "closure_battery",
    "random_super_polynomial",
    "reynolds_project",
]


def shift_rows(f: SuperPolynomial, offset: int, n_out: int) -> SuperPolynomial:
    """Reembed f into n_out rows with every row index increased by offset."""
    if offset < 0 or f.sig.n + offset > n_out:
        raise ValueError(f"cannot shift {f.sig.n} rows by {offset} into {n_out}")
    sig = AlgebraSignature(f.sig.r0, f.sig.r1, n_out)
    out = {}
    for m, c in f.terms.items():
        xpart = [(r + offset, col, e) for r, col, e in m.xpart]
        theta = [(r + offset, col) for r, col in m.theta]
        out[SuperMonomial(xpart, theta)] = c
    return SuperPolynomial(sig, out)


def shuffle_product(A: SuperPolynomial, B: SuperPolynomial, signed: bool = False) -> SuperPolynomial:
    """Shuffle product of an a-row and a b-row element, on a+b rows.

    B's rows are shifted past A's, the two are multiplied, and the result is
    summed over the minimal representatives of the (a, b) row blocks; the
    signed variant weights each representative by its sign.
    """
    if (A.sig.r0, A.sig.r1) != (B.sig.r0, B.sig.r1):
        raise SignatureMismatch(f"factor signatures {A.sig} and {B.sig} disagree")
    a, b = A.sig.n, B.sig.n
    n = a + b
    core = super_mul(shift_rows(A, 0, n), shift_rows(B, a, n))
    total = SuperPolynomial.zero(core.sig)
    for sigma in shuffle_reps(a, b):
        term = apply_row_permutation(sigma, core)
        if signed:
            term = term.scale(perm_sign(sigma))
        total = total + term
    return total


def _three_block_reps(a: int, b: int, c: int) -> list[Permutation]:
    """Permutations whose inverse is increasing on each of the three value
    blocks 1..a, a+1..a+b, a+b+1..a+b+c, by brute filter."""
    n = a + b + c
    bounds = [(1, a), (a + 1, a + b), (a + b + 1, n)]
    out = []
    for images in itertools.permutations(range(1, n + 1)):
        sigma = Permutation(images)
        inv = sigma.inverse()
        if all(
            inv(v) < inv(v + 1) for lo, hi in bounds for v in range(lo, hi)
        ):
            out.append(sigma)
    return out


def triple_shuffle(
    A: SuperPolynomial, B: SuperPolynomial, C: SuperPolynomial, signed: bool = False
) -> SuperPolynomial:
    """One-shot three-block shuffle; the common value of both associativity
    bracketings, computed from its own set of representatives."""
    if not ((A.sig.r0, A.sig.r1) == (B.sig.r0, B.sig.r1) == (C.sig.r0, C.sig.r1)):
        raise SignatureMismatch("factor signatures disagree")
    a, b, c = A.sig.n, B.sig.n, C.sig.n
    n = a + b + c
    core = super_mul(
        super_mul(shift_rows(A, 0, n), shift_rows(B, a, n)), shift_rows(C, a + b, n)
    )
    total = SuperPolynomial.zero(core.sig)
    for sigma in _three_block_reps(a, b, c):
        term = apply_row_permutation(sigma, core)
        if signed:
            term = term.scale(perm_sign(sigma))
        total = total + term
    return total


@dataclass(frozen=True)
class InvariantSpaceBasis:
    """Exact basis of one bidegree slice of an (anti)invariant space."""

    action: GroupAction
    i: int
    j: int
    elements: tuple[SuperPolynomial, ...]

    @property
    def dimension(self) -> int:
        return len(self.elements)


def invariant_basis(
    action: GroupAction, i: int, j: int, basis_limit: int = DEFAULT_BASIS_LIMIT
) -> InvariantSpaceBasis:
    """Basis of the chi-isotypic component in bidegree (i, j).

    Projects every monomial of the bidegree and keeps a greedy maximal
    independent subset; the count is cross-checked against the projector
    rank computed the blunt way.
    """
    mons = bidegree_basis(action.signature, i, j)
    if len(mons) > basis_limit:
        raise BasisTooLarge(f"bidegree ({i},{j}) has {len(mons)} monomials, limit {basis_limit}")
    sel = EchelonSelector(len(mons))
    kept = []
    for m in mons:
        proj = reynolds_project(action, SuperPolynomial.monomial(action.signature, m))
        if proj.is_zero():
            continue
        if sel.offer(coefficient_vector(proj, mons)):
            kept.append(proj)
    oracle = invariant_dimension_bruteforce(action, i, j, basis_limit)
    if len(kept) != oracle:
        raise SuperMolienError(
            f"greedy basis size {len(kept)} disagrees with projector rank {oracle}"
        )
    return InvariantSpaceBasis(action, i, j, tuple(kept))


def _wreath_generator_labels(n: int, G: MatrixGroup) -> list[tuple[WreathElement, int]]:
    """Generators of the full wreath product on n rows, paired with the sign
    of their row permutation: adjacent row swaps, then each generator of G
    planted in each single row."""
    ident = GradedGroupElement.identity(G.r0, G.r1)
    out = []
    for k in range(1, n):
        sigma = Permutation.from_cycles(n, [(k, k + 1)])
        out.append((WreathElement(sigma, tuple([ident] * n)), -1))
    idp = Permutation.identity(n)
    for g in G.generators:
        for row in range(n):
            gs = [ident] * n
            gs[row] = g
            out.append((WreathElement(idp, tuple(gs)), 1))
    return out


def is_wreath_invariant(f: SuperPolynomial, G: MatrixGroup, flavor: str = "invariant") -> bool:
    """True iff every wreath generator fixes f (or sign-twists it)."""
    _require_flavor(flavor)
    for w, s in _wreath_generator_labels(f.sig.n, G):
        expected = f.scale(s) if flavor == "antiinvariant" else f
        if apply_wreath(w, f) != expected:
            return False
    return True


def verify_closure(
    A: SuperPolynomial, B: SuperPolynomial, G: MatrixGroup, flavor: str = "invariant"
) -> bool:
    """Shuffle two checked (anti)invariants and test the product against
    every generator of the larger wreath product."""
    _require_flavor(flavor)
    if not is_wreath_invariant(A, G, flavor):
        raise ValueError("left factor is not (anti)invariant for its row count")
    if not is_wreath_invariant(B, G, flavor):
        raise ValueError("right factor is not (anti)invariant for its row count")
    prod = shuffle_product(A, B, signed=(flavor == "antiinvariant"))
    return is_wreath_invariant(prod, G, flavor)


def verify_associativity(
    A: SuperPolynomial, B: SuperPolynomial, C: SuperPolynomial, signed: bool = False
) -> bool:
    """Exact equality of the two bracketings of a three-fold shuffle."""
    left = shuffle_product(shuffle_product(A, B, signed), C, signed)
    right = shuffle_product(A, shuffle_product(B, C, signed), signed)
    return left == right


def _theta_degree(f: SuperPolynomial) -> int:
    degs = {j for _, j in f.bidegree_support()}
    if len(degs) > 1:
        raise NotHomogeneous(f"mixed theta-degrees {sorted(degs)}")
    return degs.pop() if degs else 0


def verify_supercommutation(A: SuperPolynomial, B: SuperPolynomial, signed: bool = False) -> bool:
    """Sign rule for one-row elements: swapping the factors costs
    (-1)^(jA*jB) for the plain shuffle and an extra global -1 for the
    signed one, where j is the theta-degree."""
    if A.sig.n != 1 or B.sig.n != 1:
        raise ValueError("supercommutation is a statement about one-row elements")
    sign = (-1) ** (_theta_degree(A) * _theta_degree(B))
    if signed:
        sign = -sign
    return shuffle_product(A, B, signed) == shuffle_product(B, A, signed).scale(sign)


def degree_one_pool(
    G: MatrixGroup, i_max: int, basis_limit: int = DEFAULT_BASIS_LIMIT
) -> list[tuple[tuple[int, int], SuperPolynomial]]:
    """All one-row invariant basis elements with x-degree at most i_max,
    tagged by bidegree.  The constants are included at bidegree (0, 0)."""
    action = GroupAction.from_matrix_group(G)
    pool = []
    for i in range(i_max + 1):
        for j in range(G.r1 + 1):
            for f in invariant_basis(action, i, j, basis_limit).elements:
                pool.append(((i, j), f))
    return pool


def degree_one_generation_rank(
    G: MatrixGroup,
    flavor: str,
    n: int,
    i: int,
    j: int,
    basis_limit: int = DEFAULT_BASIS_LIMIT,
) -> tuple[int, int]:
    """Rank of the span of n-fold shuffles of one-row invariants in bidegree
    (i, j), against the blunt dimension of the target space.

    Returns (spanned, full); generation in degree one predicts equality.
    """
    _require_flavor(flavor)
    if n < 1:
        raise ValueError("need at least one row")
    signed = flavor == "antiinvariant"
    target = bidegree_basis(AlgebraSignature(G.r0, G.r1, n), i, j)
    if len(target) > basis_limit:
        raise BasisTooLarge(f"target bidegree has {len(target)} monomials, limit {basis_limit}")
    pool = degree_one_pool(G, i, basis_limit)
    sel = EchelonSelector(len(target))
    spanned = 0
    for combo in itertools.combinations_with_replacement(range(len(pool)), n):
        isum = sum(pool[k][0][0] for k in combo)
        jsum = sum(pool[k][0][1] for k in combo)
        if (isum, jsum) != (i, j):
            continue
        prod = pool[combo[0]][1]
        for k in combo[1:]:
            prod = shuffle_product(prod, pool[k][1], signed)
        if prod.is_zero():
            continue
        if sel.offer(coefficient_vector(prod, target)):
            spanned += 1
    waction = GroupAction.from_wreath(PermGroup.symmetric(n), G, n, flavor=flavor)
    full = invariant_dimension_bruteforce(waction, i, j, basis_limit)
    return spanned, full


def closure_battery(
    G: MatrixGroup, flavor: str, max_rows: int, max_i: int, basis_limit: int = DEFAULT_BASIS_LIMIT
) -> tuple[int, int]:
    """Exhaustive closure sweep over invariant-basis pairs.

    Covers every row split a + b <= max_rows and every pair of factor
    bidegrees with total x-degree at most max_i.  Returns (checked, failed).
    """
    _require_flavor(flavor)
    bases: dict[tuple[int, int, int], tuple[SuperPolynomial, ...]] = {}

    def basis_for(rows: int, bi: int, bj: int) -> tuple[SuperPolynomial, ...]:
        key = (rows, bi, bj)
        if key not in bases:
            action = GroupAction.from_wreath(PermGroup.symmetric(rows), G, rows, flavor=flavor)
            bases[key] = invariant_basis(action, bi, bj, basis_limit).elements
        return bases[key]

    checked = 0
    failed = 0
    for a in range(1, max_rows):
        for b in range(1, max_rows - a + 1):
            for ia in range(max_i + 1):
                for ib in range(max_i - ia + 1):
                    for ja in range(a * G.r1 + 1):
                        for jb in range(b * G.r1 + 1):
                            for A in basis_for(a, ia, ja):
                                for B in basis_for(b, ib, jb):
                                    checked += 1
                                    if not verify_closure(A, B, G, flavor):
                                        failed += 1
    return checked, failed


def random_super_polynomial(
    rng: random.Random, sig: AlgebraSignature, terms: int = 2, max_exp: int = 2
) -> SuperPolynomial:
    """Small random element with integer coefficients, for seeded batteries."""
    out = SuperPolynomial.zero(sig)
    for _ in range(terms):
        xpart = {}
        for v in sig.even_vars():
            e = rng.randint(0, max_exp)
            if e:
                xpart[v] = e
        theta = sorted(v for v in sig.odd_vars() if rng.random() < 0.5)
        c = rng.choice([-2, -1, 1, 2])
        out = out + SuperPolynomial.monomial(sig, SuperMonomial(xpart, theta), c)
    return out


def theorem3_check(
    G: MatrixGroup, flavor: str, n_max: int, dq: int, basis_limit: int = DEFAULT_BASIS_LIMIT
) -> bool:
    """Desk-scale content of the structure theorem for the shuffle algebra:
    (a) the collated Hilbert series matches its product form, (b) degree-one
    shuffles span every bidegree with n <= n_max, i <= dq, and (c) closure
    and associativity hold on a deterministic sample."""
    _require_flavor(flavor)
    spec = CollationSpec(group=G, n_max=n_max, dq=dq, du=max(1, n_max * G.r1), flavor=flavor)
    if collated_sum_series(spec) != collated_product_series(spec):
        return False
    for n in range(1, n_max + 1):
        for i in range(dq + 1):
            for j in range(n * G.r1 + 1):
                spanned, full = degree_one_generation_rank(G, flavor, n, i, j, basis_limit)
                if spanned != full:
                    return False
    checked, failed = closure_battery(G, flavor, max_rows=2, max_i=min(dq, 2))
    if failed or checked == 0:
        return False
    signed = flavor == "antiinvariant"
    sample = [f for _, f in degree_one_pool(G, min(dq, 2), basis_limit)][:3]
    for A, B, C in itertools.product(sample, repeat=3):
        if not verify_associativity(A, B, C, signed):
            return False
    return True
