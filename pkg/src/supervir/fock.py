"""Graded boson-fermion Fock superspaces over exact scalars.

States are monomials in boson creation modes J_{-m} (m a positive
integer, any multiplicity) and fermion creation modes Phi_{-n} (n a
positive half-odd, each at most once per species).  The inner product is
diagonal on this basis; its diagonal is fixed by the commutation
relations [J_m, J_n] = m delta_{m,-n} and {Phi_m, Phi_n} = delta_{m,-n}
together with a normalized vacuum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator

from .halfint import HalfInt, half
from .scalars import GaussianRational


@dataclass(frozen=True)
class FieldContent:
    """How many boson and fermion species span the space."""

    bosons: int
    fermions: int

    def __post_init__(self):
        if self.bosons < 0 or self.fermions < 0:
            raise ValueError("species counts must be nonnegative")


class ContentMismatch(ValueError):
    """Raised when vectors over different field contents are combined."""


@dataclass(frozen=True)
class FockState:
    """A basis monomial of creation modes applied to the vacuum.

    bosons: per species, the created modes as a descending tuple of
        positive ints (multiset, repeats allowed).
    fermions: per species, strictly descending tuple of positive
        half-odd mode values, stored as odd `twice` integers.
    """

    bosons: tuple[tuple[int, ...], ...]
    fermions: tuple[tuple[int, ...], ...]

    @staticmethod
    def vacuum(content: FieldContent) -> "FockState":
        return FockState(((),) * content.bosons, ((),) * content.fermions)

    @property
    def content(self) -> FieldContent:
        return FieldContent(len(self.bosons), len(self.fermions))

    @property
    def weight(self) -> HalfInt:
        t = 2 * sum(m for species in self.bosons for m in species)
        t += sum(n for species in self.fermions for n in species)
        return half(t)

    @property
    def parity(self) -> int:
        return sum(len(species) for species in self.fermions) % 2

    def sort_key(self):
        return (self.weight.twice, self.bosons, self.fermions)

    def __repr__(self):
        parts = []
        for s, species in enumerate(self.bosons):
            parts.extend(f"J{s}[-{m}]" for m in species)
        for s, species in enumerate(self.fermions):
            parts.extend(f"F{s}[-{t}/2]" for t in species)
        return "|" + " ".join(parts) + ">" if parts else "|0>"


def _boson_partitions(budget: int) -> Iterator[tuple[int, ...]]:
    """Partitions with parts <= budget, descending, by total weight."""

    def rec(remaining: int, max_part: int, acc: list[int]):
        yield tuple(acc)
        for part in range(min(remaining, max_part), 0, -1):
            acc.append(part)
            yield from rec(remaining - part, part, acc)
            acc.pop()

    yield from rec(budget, budget, [])


def _fermion_subsets(budget_twice: int) -> Iterator[tuple[int, ...]]:
    """Strictly descending tuples of odd twice-values with bounded sum."""

    def rec(remaining: int, max_t: int, acc: list[int]):
        yield tuple(acc)
        t = max_t if max_t % 2 else max_t - 1
        while t >= 1:
            if t <= remaining:
                acc.append(t)
                yield from rec(remaining - t, t - 2, acc)
                acc.pop()
            t -= 2

    yield from rec(budget_twice, budget_twice, [])


def enumerate_basis(content: FieldContent, max_weight: HalfInt) -> list[FockState]:
    """Every FockState of weight <= max_weight, in canonical order.

    Canonical order is (weight, boson multisets, fermion mode lists),
    all compared lexicographically, so reports are deterministic.
    """
    if max_weight < 0:
        raise ValueError("max_weight must be nonnegative")
    budget = max_weight.twice

    def per_boson(remaining: int, idx: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if idx == content.bosons:
            yield ()
            return
        for part in _boson_partitions(remaining // 2):
            rest = remaining - 2 * sum(part)
            for tail in per_boson(rest, idx + 1):
                yield (part,) + tail

    def per_fermion(remaining: int, idx: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if idx == content.fermions:
            yield ()
            return
        for subset in _fermion_subsets(remaining):
            rest = remaining - sum(subset)
            for tail in per_fermion(rest, idx + 1):
                yield (subset,) + tail

    states = []
    for bos in per_boson(budget, 0):
        used = 2 * sum(m for sp in bos for m in sp)
        for fer in per_fermion(budget - used, 0):
            states.append(FockState(bos, fer))
    states.sort(key=FockState.sort_key)
    return states


@lru_cache(maxsize=None)
def state_norm_sq(state: FockState) -> Fraction:
    """Squared norm of a basis state: products of m^k * k! over boson modes.

    Fermion modes contribute a factor 1 each.
    """
    result = Fraction(1)
    for species in state.bosons:
        mult: dict[int, int] = {}
        for m in species:
            mult[m] = mult.get(m, 0) + 1
        for m, k in mult.items():
            result *= Fraction(m) ** k * factorial(k)
    return result


class FockVector:
    """A finite linear combination of FockStates with exact coefficients.

    Zero coefficients are never stored.  Instances are treated as
    immutable by convention; all operations return fresh vectors.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[FockState, GaussianRational] | None = None):
        self.terms: dict[FockState, GaussianRational] = {}
        if terms:
            for state, coeff in terms.items():
                coeff = GaussianRational.coerce(coeff)
                if not coeff.is_zero():
                    self.terms[state] = coeff

    @staticmethod
    def basis(state: FockState) -> "FockVector":
        return FockVector({state: GaussianRational(1)})

    @staticmethod
    def vacuum(content: FieldContent) -> "FockVector":
        return FockVector.basis(FockState.vacuum(content))

    @staticmethod
    def zero() -> "FockVector":
        return FockVector()

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "FockVector") -> "FockVector":
        merged = dict(self.terms)
        for state, coeff in other.terms.items():
            acc = merged.get(state)
            total = coeff if acc is None else acc + coeff
            if total.is_zero():
                merged.pop(state, None)
            else:
                merged[state] = total
        out = FockVector.__new__(FockVector)
        out.terms = merged
        return out

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scale(GaussianRational(-1))

    def scale(self, coeff) -> "FockVector":
        coeff = GaussianRational.coerce(coeff)
        if coeff.is_zero():
            return FockVector.zero()
        if coeff.re == 1 and coeff.im == 0:
            return self
        out = FockVector.__new__(FockVector)
        out.terms = {s: c * coeff for s, c in self.terms.items()}
        return out

    def max_weight(self) -> HalfInt:
        """Largest state weight in the support; 0 for the zero vector."""
        if not self.terms:
            return half(0)
        return half(max(s.weight.twice for s in self.terms))

    def states(self) -> Iterable[FockState]:
        return self.terms.keys()

    def coefficient(self, state: FockState) -> GaussianRational:
        return self.terms.get(state, GaussianRational(0))

    def norm_sq(self) -> Fraction:
        """Exact squared norm with respect to the Fock inner product."""
        return sum(
            (c.norm_sq() * state_norm_sq(s) for s, c in self.terms.items()),
            Fraction(0),
        )

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = [f"({c})*{s}" for s, c in sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())]
        return " + ".join(bits)


def inner_product(u: FockVector, v: FockVector) -> GaussianRational:
    """Sesquilinear pairing, conjugate-linear in the first argument.

    Distinct basis states are orthogonal; diagonal entries are
    state_norm_sq.  Raises ContentMismatch if the supports live in
    different spaces.
    """
    contents = {s.content for s in u.states()} | {s.content for s in v.states()}
    if len(contents) > 1:
        raise ContentMismatch(f"incompatible field contents: {contents}")
    small, big = (u, v) if len(u.terms) <= len(v.terms) else (v, u)
    total = GaussianRational(0)
    for state, _ in small.terms.items():
        cu = u.terms.get(state)
        cv = v.terms.get(state)
        if cu is None or cv is None:
            continue
        total = total + cu.conjugate() * cv * state_norm_sq(state)
    return total
