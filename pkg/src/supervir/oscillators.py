"""Mode operators of the free fields as exact endomorphisms.

A ModeOperator is a finite sum of scalar multiples of composition
chains of primitive actions.  Every primitive maps a basis state to a
finite vector, so applying any operator to a finite vector terminates
with an exact result; there is no truncation anywhere.

Primitives:
  * single boson modes J_m and fermion modes Phi_n,
  * the k-th Fourier modes of the four shifted normal powers
    :J^2:, :dPhi Phi:, :J Phi:, :Phi Phi'": (BilinearSpec),
  * the alternating tail sums  sum_{l>=1} (-1)^l A_{m+l}.

Sign convention: a state stores fermion modes per species in strictly
decreasing order, species blocks concatenated left to right; applying a
fermion mode counts the transpositions needed to reach its canonical
slot.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Literal, Optional

from .fock import FockState, FockVector
from .halfint import HalfInt, half
from .scalars import GaussianRational


# ---------------------------------------------------------------------------
# primitive actions on single basis states
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Primitive:
    def act(self, state: FockState) -> tuple[tuple[FockState, GaussianRational], ...]:
        raise NotImplementedError

    @property
    def parity(self) -> int:
        raise NotImplementedError

    @property
    def weight_shift(self) -> Optional[HalfInt]:
        raise NotImplementedError


@lru_cache(maxsize=None)
def _act_cached(prim: _Primitive, state: FockState):
    return prim.act(state)


@dataclass(frozen=True)
class _BosonMode(_Primitive):
    species: int
    m: int

    parity = 0

    @property
    def weight_shift(self) -> HalfInt:
        return half(2 * self.m)

    def act(self, state: FockState):
        if self.species >= len(state.bosons):
            raise ValueError(f"boson species {self.species} out of range")
        modes = state.bosons[self.species]
        m = self.m
        if m == 0:
            return ()
        if m < 0:
            created = -m
            new = tuple(sorted(modes + (created,), reverse=True))
            bos = state.bosons[: self.species] + (new,) + state.bosons[self.species + 1 :]
            return ((FockState(bos, state.fermions), GaussianRational(1)),)
        mult = modes.count(m)
        if mult == 0:
            return ()
        idx = modes.index(m)
        new = modes[:idx] + modes[idx + 1 :]
        bos = state.bosons[: self.species] + (new,) + state.bosons[self.species + 1 :]
        return ((FockState(bos, state.fermions), GaussianRational(Fraction(m * mult))),)


def _fermion_crossings(state: FockState, species: int, position: int) -> int:
    return sum(len(state.fermions[s]) for s in range(species)) + position


@dataclass(frozen=True)
class _FermionMode(_Primitive):
    species: int
    n_twice: int  # odd

    parity = 1

    @property
    def weight_shift(self) -> HalfInt:
        return half(self.n_twice)

    def act(self, state: FockState):
        if self.species >= len(state.fermions):
            raise ValueError(f"fermion species {self.species} out of range")
        modes = state.fermions[self.species]
        t = self.n_twice
        if t < 0:
            created = -t
            if created in modes:
                return ()
            pos = 0
            while pos < len(modes) and modes[pos] > created:
                pos += 1
            sign = -1 if _fermion_crossings(state, self.species, pos) % 2 else 1
            new = modes[:pos] + (created,) + modes[pos:]
        else:
            if t not in modes:
                return ()
            pos = modes.index(t)
            sign = -1 if _fermion_crossings(state, self.species, pos) % 2 else 1
            new = modes[:pos] + modes[pos + 1 :]
        fer = state.fermions[: self.species] + (new,) + state.fermions[self.species + 1 :]
        return ((FockState(state.bosons, fer), GaussianRational(sign)),)


FactorKind = Literal["J", "Phi", "dPhi"]


@dataclass(frozen=True)
class BilinearSpec:
    """The two factors of a shifted normal power, left one first.

    left_kind "dPhi" is the reweighted derivative factor of :dPhi Phi:.
    The four supported shapes are (J,J), (dPhi,Phi), (J,Phi), (Phi,Phi).
    """

    left_kind: FactorKind
    left_species: int
    right_kind: Literal["J", "Phi"]
    right_species: int

    def __post_init__(self):
        shape = (self.left_kind, self.right_kind)
        if shape not in {("J", "J"), ("dPhi", "Phi"), ("J", "Phi"), ("Phi", "Phi")}:
            raise ValueError(f"unsupported bilinear shape {shape}")

    @property
    def left_parity(self) -> int:
        return 0 if self.left_kind == "J" else 1

    @property
    def right_parity(self) -> int:
        return 0 if self.right_kind == "J" else 1

    @property
    def mode_is_integer(self) -> bool:
        return (self.left_parity + self.right_parity) % 2 == 0


def _left_factor_data(spec: BilinearSpec):
    """(cutoff_twice, coefficient(a_twice), primitive factory) for the left slot.

    cutoff is the largest index in the creation branch of the normal
    ordering, on the grading of the underlying unshifted series; the
    boundary terms that the two natural gradings disagree on all carry
    zero operators or zero coefficients.
    """
    if spec.left_kind == "J":
        return -2, lambda t: Fraction(1), lambda t: _BosonMode(spec.left_species, t // 2)
    if spec.left_kind == "Phi":
        return -1, lambda t: Fraction(1), lambda t: _FermionMode(spec.left_species, t)
    # dPhi: coefficient (-a - 1/2) on Phi_a, creation branch a <= -3/2
    return -3, lambda t: Fraction(-t - 1, 2), lambda t: _FermionMode(spec.left_species, t)


def _right_factor(spec: BilinearSpec) -> Callable[[int], _Primitive]:
    if spec.right_kind == "J":
        return lambda t: _BosonMode(spec.right_species, t // 2)
    return lambda t: _FermionMode(spec.right_species, t)


@dataclass(frozen=True)
class _Bilinear(_Primitive):
    spec: BilinearSpec
    k_twice: int

    @property
    def parity(self) -> int:
        return (self.spec.left_parity + self.spec.right_parity) % 2

    @property
    def weight_shift(self) -> HalfInt:
        return half(self.k_twice)

    def act(self, state: FockState):
        spec = self.spec
        k = self.k_twice
        w = state.weight.twice
        cutoff, coeff_of, left_prim = _left_factor_data(spec)
        right_prim = _right_factor(spec)
        koszul = -1 if spec.left_parity and spec.right_parity else 1

        acc: dict[FockState, GaussianRational] = {}

        def add(s, c):
            prev = acc.get(s)
            tot = c if prev is None else prev + c
            if tot.is_zero():
                acc.pop(s, None)
            else:
                acc[s] = tot

        # creation branch: X_a (Y_{k-a} state), a <= cutoff, k - a <= w
        a = cutoff
        while k - a <= w:
            factor = coeff_of(a)
            if factor != 0:
                yprim = right_prim(k - a)
                xprim = left_prim(a)
                for s1, c1 in _act_cached(yprim, state):
                    for s2, c2 in _act_cached(xprim, s1):
                        add(s2, c1 * c2 * factor)
            a -= 2
        # annihilation branch: koszul * Y_{k-a} (X_a state), cutoff < a <= w
        a = cutoff + 2
        while a <= w:
            factor = coeff_of(a)
            if factor != 0:
                xprim = left_prim(a)
                yprim = right_prim(k - a)
                for s1, c1 in _act_cached(xprim, state):
                    for s2, c2 in _act_cached(yprim, s1):
                        add(s2, c1 * c2 * (koszul * factor))
            a += 2
        return tuple(acc.items())


@dataclass(frozen=True)
class _TailSum(_Primitive):
    kind: Literal["J", "Phi"]
    species: int
    m_twice: int

    @property
    def parity(self) -> int:
        return 0 if self.kind == "J" else 1

    weight_shift = None  # mixes weights by construction

    def act(self, state: FockState):
        w = state.weight.twice
        acc: dict[FockState, GaussianRational] = {}
        l = 1
        while self.m_twice + 2 * l <= w:
            t = self.m_twice + 2 * l
            prim = _BosonMode(self.species, t // 2) if self.kind == "J" else _FermionMode(self.species, t)
            sign = -1 if l % 2 else 1
            for s, c in _act_cached(prim, state):
                prev = acc.get(s)
                tot = c * GaussianRational(sign) if prev is None else prev + c * GaussianRational(sign)
                if tot.is_zero():
                    acc.pop(s, None)
                else:
                    acc[s] = tot
            l += 1
        return tuple(acc.items())


# ---------------------------------------------------------------------------
# the operator algebra
# ---------------------------------------------------------------------------


class ModeOperator:
    """A finite sum  sum_i  c_i * P_{i,1} o P_{i,2} o ... of primitives.

    Chains apply right to left.  Each operator carries a parity shift
    and, when all terms shift weight uniformly, a declared weight shift
    (None otherwise, e.g. for tail sums).
    """

    __slots__ = ("terms", "parity", "weight_shift", "_state_cache")

    def __init__(
        self,
        terms: tuple[tuple[GaussianRational, tuple[_Primitive, ...]], ...],
        parity: int,
        weight_shift: Optional[HalfInt],
    ):
        self.terms = terms
        self.parity = parity
        self.weight_shift = weight_shift
        self._state_cache: dict[FockState, FockVector] = {}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "ModeOperator":
        return ModeOperator((), 0, half(0))

    @staticmethod
    def identity() -> "ModeOperator":
        return ModeOperator(((GaussianRational(1), ()),), 0, half(0))

    @staticmethod
    def from_primitive(prim: _Primitive) -> "ModeOperator":
        return ModeOperator(((GaussianRational(1), (prim,)),), prim.parity, prim.weight_shift)

    # -- algebra -------------------------------------------------------------

    def scale(self, coeff) -> "ModeOperator":
        coeff = GaussianRational.coerce(coeff)
        if coeff.is_zero():
            return ModeOperator.zero()
        return ModeOperator(
            tuple((c * coeff, chain) for c, chain in self.terms), self.parity, self.weight_shift
        )

    def __rmul__(self, coeff):
        return self.scale(coeff)

    def __neg__(self):
        return self.scale(-1)

    def __add__(self, other: "ModeOperator") -> "ModeOperator":
        if not self.terms:
            return other
        if not other.terms:
            return self
        if self.parity != other.parity:
            raise ValueError("cannot add operators of different parity")
        shift = self.weight_shift if self.weight_shift == other.weight_shift else None
        return ModeOperator(self.terms + other.terms, self.parity, shift)

    def __sub__(self, other: "ModeOperator") -> "ModeOperator":
        return self + other.scale(-1)

    def compose(self, other: "ModeOperator") -> "ModeOperator":
        """self applied after other."""
        terms = tuple(
            (c1 * c2, chain1 + chain2)
            for c1, chain1 in self.terms
            for c2, chain2 in other.terms
        )
        if self.weight_shift is None or other.weight_shift is None:
            shift = None
        else:
            shift = self.weight_shift + other.weight_shift
        return ModeOperator(terms, (self.parity + other.parity) % 2, shift)

    def __mul__(self, other):
        if isinstance(other, ModeOperator):
            return self.compose(other)
        return self.scale(other)

    def commutator(self, other: "ModeOperator") -> "ModeOperator":
        """The super-commutator: anticommutator when both factors are odd."""
        sign = -1 if (self.parity and other.parity) else 1
        return self.compose(other) - other.compose(self).scale(sign)

    # -- action ---------------------------------------------------------------

    def apply_state(self, state: FockState) -> FockVector:
        cached = self._state_cache.get(state)
        if cached is not None:
            return cached
        total: dict[FockState, GaussianRational] = {}
        for coeff, chain in self.terms:
            vec = {state: coeff}
            for prim in reversed(chain):
                nxt: dict[FockState, GaussianRational] = {}
                for s, c in vec.items():
                    for s2, c2 in _act_cached(prim, s):
                        prev = nxt.get(s2)
                        tot = c * c2 if prev is None else prev + c * c2
                        if tot.is_zero():
                            nxt.pop(s2, None)
                        else:
                            nxt[s2] = tot
                vec = nxt
                if not vec:
                    break
            for s, c in vec.items():
                prev = total.get(s)
                tot = c if prev is None else prev + c
                if tot.is_zero():
                    total.pop(s, None)
                else:
                    total[s] = tot
        result = FockVector(total)
        self._state_cache[state] = result
        return result

    def __call__(self, vec: FockVector) -> FockVector:
        total: dict[FockState, GaussianRational] = {}
        for state, coeff in vec.terms.items():
            for s, c in self.apply_state(state).terms.items():
                prev = total.get(s)
                tot = c * coeff if prev is None else prev + c * coeff
                if tot.is_zero():
                    total.pop(s, None)
                else:
                    total[s] = tot
        out = FockVector.__new__(FockVector)
        out.terms = total
        return out


# ---------------------------------------------------------------------------
# public factories
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def boson_mode(species: int, m: int) -> ModeOperator:
    """The current mode J_m of one boson species; J_0 acts as zero."""
    if species < 0:
        raise ValueError("species index must be nonnegative")
    return ModeOperator.from_primitive(_BosonMode(species, m))


@lru_cache(maxsize=None)
def fermion_mode(species: int, n: HalfInt) -> ModeOperator:
    """The fermion mode Phi_n; n must be half-odd."""
    if species < 0:
        raise ValueError("species index must be nonnegative")
    n = HalfInt(n)
    if n.is_integer:
        raise ValueError(f"fermion mode index must be half-odd, got {n}")
    return ModeOperator.from_primitive(_FermionMode(species, n.twice))


@lru_cache(maxsize=None)
def bilinear_mode(spec: BilinearSpec, k: HalfInt) -> ModeOperator:
    """The k-th Fourier mode of a shifted normal power."""
    k = HalfInt(k)
    if spec.mode_is_integer != k.is_integer:
        raise ValueError(f"mode {k} has the wrong parity for {spec}")
    return ModeOperator.from_primitive(_Bilinear(spec, k.twice))


@lru_cache(maxsize=None)
def tail_sum(kind: Literal["J", "Phi"], species: int, m: HalfInt) -> ModeOperator:
    """The alternating tail  sum_{j<0} (-1)^j A_{m-j}  of one mode family.

    Applied to any finite vector only finitely many terms act, so the
    result is exact.
    """
    m = HalfInt(m)
    if kind == "J" and not m.is_integer:
        raise ValueError("boson tail needs an integer base index")
    if kind == "Phi" and m.is_integer:
        raise ValueError("fermion tail needs a half-odd base index")
    return ModeOperator.from_primitive(_TailSum(kind, species, m.twice))


def circle_derivative_mode(base: Callable[[HalfInt], ModeOperator], n: HalfInt) -> ModeOperator:
    """Mode n of the circle derivative A'(z) = i z d/dz A(z), i.e. -i*n*A_n."""
    n = HalfInt(n)
    return base(n).scale(GaussianRational(0, -1) * GaussianRational(n.as_fraction()))


def scalar_operator(coeff) -> ModeOperator:
    return ModeOperator.identity().scale(coeff)
