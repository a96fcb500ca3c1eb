"""Supercommutative polynomial algebra on n rows of (r0 even, r1 odd) variables.

Monomials are x-exponent maps times a strictly increasing product of odd
(theta) variables; reordering odd factors costs the sign of the permutation
and a repeated odd factor kills the term.  Variables are indexed (row, col),
1-based, ordered lexicographically.

Row permutations act by the relabeling x_i -> x_{sigma^{-1}(i)} (rows move
contravariantly), so apply(sigma, apply(tau, f)) == apply(tau . sigma, f).
Graded matrix elements act within a single row by linear substitution on
columns.  The wreath action is the composite of the two primitives.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DegreeMismatch, DimensionMismatch, SignatureMismatch
from .groups import GradedGroupElement, Permutation, WreathElement
from .rationals import format_rational, parse_rational

XKey = tuple[int, int]  # (row, col)


@dataclass(frozen=True)
class AlgebraSignature:
    """Shape of the algebra: n rows of r0 commuting and r1 anticommuting variables."""

    r0: int
    r1: int
    n: int = 1

    def __post_init__(self):
        # n = 0 is the scalar algebra, the unit for row-shifted products
        if self.r0 < 0 or self.r1 < 0 or self.n < 0:
            raise ValueError(f"bad signature {self}")

    @property
    def num_even(self) -> int:
        return self.n * self.r0

    @property
    def num_odd(self) -> int:
        return self.n * self.r1

    def even_vars(self) -> list[XKey]:
        return [(row, col) for row in range(1, self.n + 1) for col in range(1, self.r0 + 1)]

    def odd_vars(self) -> list[XKey]:
        return [(row, col) for row in range(1, self.n + 1) for col in range(1, self.r1 + 1)]


def normalize_theta(pairs: Iterable[XKey]) -> tuple[tuple[XKey, ...], int]:
    """Sort odd factors into increasing order.

    Returns (sorted_factors, sign) where sign is the parity of the number of
    transpositions used (counted by mergesort) and 0 if a factor repeats.
    """
    seq = [tuple(p) for p in pairs]
    if len(set(seq)) != len(seq):
        return tuple(sorted(seq)), 0

    def sort_count(s):
        if len(s) <= 1:
            return s, 0
        mid = len(s) // 2
        left, li = sort_count(s[:mid])
        right, ri = sort_count(s[mid:])
        merged = []
        inv = li + ri
        i = j = 0
        while i < len(left) and j < len(right):
            if left[i] <= right[j]:
                merged.append(left[i])
                i += 1
            else:
                merged.append(right[j])
                j += 1
                inv += len(left) - i
        merged.extend(left[i:])
        merged.extend(right[j:])
        return merged, inv

    ordered, inversions = sort_count(seq)
    return tuple(ordered), (-1 if inversions % 2 else 1)


class SuperMonomial:
    """Canonical monomial: sorted x-exponents and strictly increasing thetas."""

    __slots__ = ("xpart", "theta")

    def __init__(self, xpart, theta: Iterable[XKey] = ()):
        if isinstance(xpart, Mapping):
            items = [(int(r), int(c), int(e)) for (r, c), e in xpart.items()]
        else:
            items = [(int(r), int(c), int(e)) for (r, c, e) in xpart]
        merged: dict[XKey, int] = {}
        for r, c, e in items:
            if e < 0:
                raise ValueError(f"negative exponent on x[{r},{c}]")
            if e:
                merged[(r, c)] = merged.get((r, c), 0) + e
        theta = tuple(tuple(p) for p in theta)
        if any(theta[i] >= theta[i + 1] for i in range(len(theta) - 1)):
            raise ValueError(f"theta factors not strictly increasing: {theta}")
        object.__setattr__(
            self, "xpart", tuple((r, c, e) for (r, c), e in sorted(merged.items()))
        )
        object.__setattr__(self, "theta", theta)

    def __setattr__(self, name, value):
        raise AttributeError("SuperMonomial is immutable")

    @staticmethod
    def one() -> "SuperMonomial":
        return SuperMonomial({})

    def degrees(self) -> tuple[int, int]:
        return sum(e for _, _, e in self.xpart), len(self.theta)

    def sort_key(self):
        i, j = self.degrees()
        return (i + j, i, self.xpart, self.theta)

    def __eq__(self, other):
        if not isinstance(other, SuperMonomial):
            return NotImplemented
        return self.xpart == other.xpart and self.theta == other.theta

    def __hash__(self):
        return hash((self.xpart, self.theta))

    def __repr__(self):
        xs = "".join(
            f"x[{r},{c}]" + (f"^{e}" if e > 1 else "") for r, c, e in self.xpart
        )
        ts = "".join(f"th[{r},{c}]" for r, c in self.theta)
        return (xs + ts) or "1"


class SuperPolynomial:
    """Finite Q-linear combination of SuperMonomials over a fixed signature."""

    __slots__ = ("sig", "terms")

    def __init__(self, sig: AlgebraSignature, terms: Mapping[SuperMonomial, Fraction] | None = None):
        clean: dict[SuperMonomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c == 0:
                    continue
                for r, col, _ in mono.xpart:
                    if not (1 <= r <= sig.n and 1 <= col <= sig.r0):
                        raise ValueError(f"x[{r},{col}] outside signature {sig}")
                for r, col in mono.theta:
                    if not (1 <= r <= sig.n and 1 <= col <= sig.r1):
                        raise ValueError(f"theta[{r},{col}] outside signature {sig}")
                clean[mono] = c
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SuperPolynomial is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(sig: AlgebraSignature) -> "SuperPolynomial":
        return SuperPolynomial(sig)

    @staticmethod
    def one(sig: AlgebraSignature) -> "SuperPolynomial":
        return SuperPolynomial(sig, {SuperMonomial.one(): Fraction(1)})

    @staticmethod
    def x_var(sig: AlgebraSignature, row: int, col: int) -> "SuperPolynomial":
        return SuperPolynomial(sig, {SuperMonomial({(row, col): 1}): Fraction(1)})

    @staticmethod
    def theta_var(sig: AlgebraSignature, row: int, col: int) -> "SuperPolynomial":
        return SuperPolynomial(sig, {SuperMonomial({}, ((row, col),)): Fraction(1)})

    @staticmethod
    def monomial(sig: AlgebraSignature, mono: SuperMonomial, c=1) -> "SuperPolynomial":
        return SuperPolynomial(sig, {mono: Fraction(c)})

    # -- linear structure ----------------------------------------------------

    def __add__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        _require_same_sig(self, other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return SuperPolynomial(self.sig, out)

    def __sub__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        return self + other.scale(-1)

    def scale(self, c) -> "SuperPolynomial":
        c = Fraction(c)
        return SuperPolynomial(self.sig, {m: c * v for m, v in self.terms.items()})

    def __neg__(self) -> "SuperPolynomial":
        return self.scale(-1)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return self.sig == other.sig and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        items = sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())
        body = " + ".join(f"{format_rational(c)}*{m!r}" for m, c in items[:6]) or "0"
        if len(items) > 6:
            body += " + ..."
        return f"<superpoly {self.sig.r0},{self.sig.r1};n={self.sig.n}: {body}>"

    def bidegree_support(self) -> set[tuple[int, int]]:
        return {m.degrees() for m in self.terms}

    # -- serialization --------------------------------------------------------

    def to_json_dict(self) -> dict:
        items = sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())
        return {
            "sig": {"r0": self.sig.r0, "r1": self.sig.r1, "n": self.sig.n},
            "terms": [
                {
                    "x": [[r, c, e] for r, c, e in m.xpart],
                    "theta": [[r, c] for r, c in m.theta],
                    "c": format_rational(coeff),
                }
                for m, coeff in items
            ],
        }

    @staticmethod
    def from_json_dict(data: Mapping) -> "SuperPolynomial":
        s = data["sig"]
        sig = AlgebraSignature(int(s["r0"]), int(s["r1"]), int(s["n"]))
        terms: dict[SuperMonomial, Fraction] = {}
        for entry in data["terms"]:
            theta, sign = normalize_theta(tuple(p) for p in entry["theta"])
            if sign == 0:
                raise ValueError(f"repeated odd variable in term {entry}")
            mono = SuperMonomial([(r, c, e) for r, c, e in entry["x"]], theta)
            c = sign * parse_rational(entry["c"])
            terms[mono] = terms.get(mono, Fraction(0)) + c
        return SuperPolynomial(sig, terms)


def _require_same_sig(a: SuperPolynomial, b: SuperPolynomial):
    if a.sig != b.sig:
        raise SignatureMismatch(f"{a.sig} != {b.sig}")


def mul_monomials(m1: SuperMonomial, m2: SuperMonomial) -> tuple[SuperMonomial, int]:
    """Product of canonical monomials: merged x-part, m1's thetas before m2's."""
    theta, sign = normalize_theta(m1.theta + m2.theta)
    if sign == 0:
        return SuperMonomial.one(), 0
    xpart = {(r, c): e for r, c, e in m1.xpart}
    for r, c, e in m2.xpart:
        xpart[(r, c)] = xpart.get((r, c), 0) + e
    return SuperMonomial(xpart, theta), sign


def super_mul(f: SuperPolynomial, g: SuperPolynomial) -> SuperPolynomial:
    _require_same_sig(f, g)
    out: dict[SuperMonomial, Fraction] = {}
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            mono, sign = mul_monomials(m1, m2)
            if sign == 0:
                continue
            out[mono] = out.get(mono, Fraction(0)) + sign * c1 * c2
    return SuperPolynomial(f.sig, out)


def apply_row_permutation(sigma: Permutation, f: SuperPolynomial) -> SuperPolynomial:
    """Relabel rows: a variable in row i moves to row sigma^{-1}(i).

    Composition is contravariant:
    apply(sigma, apply(tau, f)) == apply(tau.compose(sigma), f).
    """
    if sigma.n != f.sig.n:
        raise DegreeMismatch(f"permutation degree {sigma.n} != {f.sig.n} rows")
    inv = sigma.inverse()
    out: dict[SuperMonomial, Fraction] = {}
    for mono, c in f.terms.items():
        xpart = [(inv(r), col, e) for r, col, e in mono.xpart]
        theta, sign = normalize_theta((inv(r), col) for r, col in mono.theta)
        # relabeling is injective, so sign is never 0 here
        new = SuperMonomial(xpart, theta)
        out[new] = out.get(new, Fraction(0)) + sign * c
    return SuperPolynomial(f.sig, out)


def apply_graded_element(g: GradedGroupElement, row: int, f: SuperPolynomial) -> SuperPolynomial:
    """Linear substitution within one row:
    x[row,c] -> sum_{c'} g0[c',c] x[row,c'] and likewise theta via g1."""
    sig = f.sig
    if g.g0.nrows != sig.r0 or g.g0.ncols != sig.r0 or g.g1.nrows != sig.r1 or g.g1.ncols != sig.r1:
        raise DimensionMismatch(
            f"element blocks {g.g0.nrows}/{g.g1.nrows} do not match signature ({sig.r0}, {sig.r1})"
        )
    if not (1 <= row <= sig.n):
        raise ValueError(f"row {row} outside 1..{sig.n}")

    x_images: dict[int, SuperPolynomial] = {}
    theta_images: dict[int, SuperPolynomial] = {}
    for c in range(1, sig.r0 + 1):
        x_images[c] = SuperPolynomial(
            sig,
            {
                SuperMonomial({(row, cp): 1}): g.g0.get(cp - 1, c - 1)
                for cp in range(1, sig.r0 + 1)
                if g.g0.get(cp - 1, c - 1) != 0
            },
        )
    for c in range(1, sig.r1 + 1):
        theta_images[c] = SuperPolynomial(
            sig,
            {
                SuperMonomial({}, ((row, cp),)): g.g1.get(cp - 1, c - 1)
                for cp in range(1, sig.r1 + 1)
                if g.g1.get(cp - 1, c - 1) != 0
            },
        )

    total = SuperPolynomial.zero(sig)
    for mono, coeff in f.terms.items():
        # multiply substituted factors in canonical order; untouched factors
        # pass through as a single monomial so signs stay exact
        passive_x = {(r, c): e for r, c, e in mono.xpart if r != row}
        active_x = [(c, e) for r, c, e in mono.xpart if r == row]
        passive_pre = [p for p in mono.theta if p < (row, 0)]
        active_t = [c for r, c in mono.theta if r == row]
        passive_post = [p for p in mono.theta if p > (row, sig.r1 + 1)]
        acc = SuperPolynomial.monomial(sig, SuperMonomial(passive_x, tuple(passive_pre)), coeff)
        for c, e in active_x:
            for _ in range(e):
                acc = super_mul(acc, x_images[c])
        for c in active_t:
            acc = super_mul(acc, theta_images[c])
        if passive_post:
            acc = super_mul(acc, SuperPolynomial.monomial(sig, SuperMonomial({}, tuple(passive_post))))
        total = total + acc
    return total


def apply_wreath(w: WreathElement, f: SuperPolynomial) -> SuperPolynomial:
    """Composite action of a wreath label: per-row substitutions, then the
    row relabeling."""
    if w.sigma.n != f.sig.n:
        raise DegreeMismatch(f"wreath degree {w.sigma.n} != {f.sig.n} rows")
    out = f
    for row in range(1, f.sig.n + 1):
        out = apply_graded_element(w.gs[row - 1], row, out)
    return apply_row_permutation(w.sigma, out)


def _compositions_desc_lex(total: int, nvars: int):
    """Exponent vectors summing to total, in descending lexicographic order."""
    if nvars == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _compositions_desc_lex(total - first, nvars - 1):
            yield (first,) + rest


def bidegree_basis(sig: AlgebraSignature, i: int, j: int) -> list[SuperMonomial]:
    """Monomial basis of the (i, j) bidegree component, deterministically
    ordered: x-exponent vectors in descending lex (major), theta subsets in
    ascending lex (minor)."""
    import itertools

    if i < 0 or j < 0:
        raise ValueError("bidegrees must be nonnegative")
    evars = sig.even_vars()
    ovars = sig.odd_vars()
    if j > len(ovars):
        return []
    out = []
    for xvec in _compositions_desc_lex(i, len(evars)):
        xpart = {v: e for v, e in zip(evars, xvec) if e}
        for tsel in itertools.combinations(ovars, j):
            out.append(SuperMonomial(xpart, tsel))
    return out


def coefficient_vector(f: SuperPolynomial, basis: Sequence[SuperMonomial]) -> list[Fraction]:
    """Coordinates of f in the given monomial basis; raises if f has support
    outside the basis."""
    index = {m: k for k, m in enumerate(basis)}
    vec = [Fraction(0)] * len(basis)
    for mono, c in f.terms.items():
        if mono not in index:
            raise ValueError(f"term {mono!r} outside the given basis")
        vec[index[mono]] = c
    return vec
