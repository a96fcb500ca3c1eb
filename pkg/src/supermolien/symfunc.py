"""Symmetric functions in the power-sum basis: cycle indices and plethysm.

A SymFuncPoly is a finite Q-linear combination of p_lambda over integer
partitions; multiplication concatenates partitions.  Plethysm comes in two
forms: substitution of a concrete trigraded series into every p_r (scaling
all three exponents by r), and composition inside the ring (p_r applied to
another symmetric function scales every part by r).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .groups import LinearCharacter, PermGroup, cycle_type, perm_sign
from .rationals import format_rational, parse_rational
from .series import TrigradedSeries, scale_exponents, series_add, series_mul, series_scale

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    lam = tuple(int(p) for p in parts)
    if any(p <= 0 for p in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {lam}")
    return lam


def _sort_desc(parts: Iterable[int]) -> Partition:
    return tuple(sorted(parts, reverse=True))


class SymFuncPoly:
    """Finite Q-linear combination of power sums p_lambda."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Partition, Fraction] | None = None):
        clean: dict[Partition, Fraction] = {}
        if terms:
            for lam, c in terms.items():
                lam = as_partition(lam)
                c = Fraction(c)
                if c != 0:
                    clean[lam] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SymFuncPoly is immutable")

    @staticmethod
    def zero() -> "SymFuncPoly":
        return SymFuncPoly()

    @staticmethod
    def one() -> "SymFuncPoly":
        return SymFuncPoly({(): Fraction(1)})

    @staticmethod
    def p(r: int) -> "SymFuncPoly":
        return SymFuncPoly({(r,): Fraction(1)})

    def __add__(self, other: "SymFuncPoly") -> "SymFuncPoly":
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, Fraction(0)) + c
        return SymFuncPoly(out)

    def __sub__(self, other: "SymFuncPoly") -> "SymFuncPoly":
        return self + other.scale(-1)

    def scale(self, c) -> "SymFuncPoly":
        c = Fraction(c)
        return SymFuncPoly({lam: c * v for lam, v in self.terms.items()})

    def __neg__(self) -> "SymFuncPoly":
        return self.scale(-1)

    def __mul__(self, other: "SymFuncPoly") -> "SymFuncPoly":
        out: dict[Partition, Fraction] = {}
        for lam, c1 in self.terms.items():
            for mu, c2 in other.terms.items():
                key = _sort_desc(lam + mu)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return SymFuncPoly(out)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, SymFuncPoly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def sorted_items(self) -> list[tuple[Partition, Fraction]]:
        """Terms ordered by degree descending, then lex descending."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def __repr__(self):
        body = " + ".join(
            f"{format_rational(c)}*p{list(lam)}" for lam, c in self.sorted_items()
        )
        return f"SymFuncPoly({body or '0'})"

    def to_json_dict(self) -> dict:
        return {
            "terms": [
                {"lambda": list(lam), "c": format_rational(c)} for lam, c in self.sorted_items()
            ]
        }

    @staticmethod
    def from_json_dict(data: Mapping) -> "SymFuncPoly":
        terms: dict[Partition, Fraction] = {}
        for entry in data["terms"]:
            lam = as_partition(entry["lambda"])
            if lam in terms:
                raise ValueError(f"duplicate partition {lam}")
            terms[lam] = parse_rational(entry["c"])
        return SymFuncPoly(terms)


def cycle_index(P: PermGroup, flavor: str = "plain", character: LinearCharacter | None = None) -> SymFuncPoly:
    """(1/|P|) sum over sigma of weight(sigma) p_{cycle type of sigma}.

    flavor selects the weight: "plain" uses 1, "sgn" uses sgn(sigma), and
    "character" uses chi(sigma^{-1}) for the supplied linear character.
    """
    if flavor == "character":
        if character is None:
            raise ValueError("flavor 'character' needs a character")
    elif flavor not in ("plain", "sgn"):
        raise ValueError(f"unknown flavor {flavor!r}")
    acc: dict[Partition, Fraction] = {}
    for idx, sigma in enumerate(P.elements):
        if flavor == "plain":
            w = Fraction(1)
        elif flavor == "sgn":
            w = Fraction(perm_sign(sigma))
        else:
            w = character.at_inverse(idx)
        lam = cycle_type(sigma)
        acc[lam] = acc.get(lam, Fraction(0)) + w
    inv_order = Fraction(1, P.order)
    return SymFuncPoly({lam: c * inv_order for lam, c in acc.items()})


def omega(f: SymFuncPoly) -> SymFuncPoly:
    """The standard involution: p_r -> (-1)^{r-1} p_r, extended multiplicatively."""
    out: dict[Partition, Fraction] = {}
    for lam, c in f.terms.items():
        sign = (-1) ** (sum(lam) - len(lam))
        out[lam] = sign * c
    return SymFuncPoly(out)


def plethystic_substitute(f: SymFuncPoly, s: TrigradedSeries) -> TrigradedSeries:
    """Substitute a concrete series for the underlying alphabet:
    p_r evaluates to s with all three exponents (t, q, u) scaled by r.

    The output caps are s's caps; supply s at the caps the comparison needs.
    """
    total = TrigradedSeries.zero(s.caps)
    for lam, c in f.terms.items():
        prod = TrigradedSeries.one(s.caps)
        for r in lam:
            prod = series_mul(prod, scale_exponents(s, r))
        total = series_add(total, series_scale(prod, c))
    return total


def plethystic_compose(f: SymFuncPoly, g: SymFuncPoly) -> SymFuncPoly:
    """f[g] inside the ring: p_r[g] multiplies every part of g by r,
    extended multiplicatively over f's parts and linearly over f's terms."""
    total = SymFuncPoly.zero()
    for lam, c in f.terms.items():
        prod = SymFuncPoly.one()
        for r in lam:
            scaled = SymFuncPoly({tuple(r * part for part in mu): cg for mu, cg in g.terms.items()})
            prod = prod * scaled
        total = total + prod.scale(c)
    return total


def hn_en(n: int, kind: str) -> SymFuncPoly:
    """Complete homogeneous h_n (kind "h") or elementary e_n (kind "e"),
    realized as the plain or sgn cycle index of the full symmetric group."""
    if kind not in ("h", "e"):
        raise ValueError(f"kind must be 'h' or 'e', got {kind!r}")
    if n == 0:
        return SymFuncPoly.one()
    P = PermGroup.symmetric(n)
    return cycle_index(P, "plain" if kind == "h" else "sgn")
