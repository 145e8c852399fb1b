"""Concrete mode-operator families realizing the superconformal algebras.

Two families act on boson-fermion Fock spaces:

  * "ns": one boson and one fermion species carry the N=1 algebra
    {L_m, G_n} with central charge c(kappa) = 3/2 + 12 kappa^2.
  * "n2": two bosons and two fermions carry the N=2 algebra
    {L_m, G1_r, G2_s, J_n} with c(kappa) = 3 + 12 kappa^2.

Each family comes in three variants built from the same base fields:

  * "tilde"   -- the one-parameter deformation with purely imaginary
                 shift; a representation but not a unitary one.
  * "bs"      -- the deformation by the alternating tail sums; its
                 modes are not individually symmetric, yet the cyclic
                 module is unitary (the paired adjoint identities hold).
  * "unitary" -- symmetric fields with lowest weight (kappa^2+eta^2)/2
                 (plus omega^2/2 and charge 2*kappa*omega for "n2").

Normalization note: the odd "n2" generators are fixed so that the
anticommutators close on 2*L with the standard central term; the
relation checker in `verify` pins this scale (and all signs).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .fock import FieldContent, FockVector
from .halfint import HalfInt, half
from .oscillators import (
    BilinearSpec,
    ModeOperator,
    bilinear_mode,
    boson_mode,
    fermion_mode,
    scalar_operator,
    tail_sum,
)
from .scalars import GaussianRational, format_rational, parse_rational

FAMILIES = ("ns", "n2")
VARIANTS = ("tilde", "bs", "unitary")

_I = GaussianRational(0, 1)


@dataclass(frozen=True)
class RealizationParams:
    family: str
    variant: str
    kappa: Fraction = Fraction(0)
    eta: Fraction = Fraction(0)
    omega: Fraction = Fraction(0)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.variant != "unitary" and (self.eta or self.omega):
            raise ValueError("eta/omega only parameterize the unitary variant")
        if self.family == "ns" and self.omega:
            raise ValueError("omega only parameterizes the n2 family")

    # -- derived data -----------------------------------------------------

    @property
    def content(self) -> FieldContent:
        return FieldContent(1, 1) if self.family == "ns" else FieldContent(2, 2)

    def central_charge(self) -> Fraction:
        base = Fraction(3, 2) if self.family == "ns" else Fraction(3)
        return base + 12 * self.kappa**2

    def lowest_weight(self) -> Fraction:
        if self.variant != "unitary":
            return Fraction(0)
        return (self.kappa**2 + self.eta**2 + self.omega**2) / 2

    def charge(self) -> Fraction:
        """The J_0 eigenvalue on the cyclic vector (n2 only)."""
        if self.family != "n2":
            raise ValueError("charge is defined for the n2 family only")
        if self.variant != "unitary":
            return Fraction(0)
        return 2 * self.kappa * self.omega

    def is_vacuum_like(self) -> bool:
        """Whether L_{-1} and the G_{-1/2} modes annihilate the cyclic vector."""
        if self.family == "ns":
            return self.lowest_weight() == 0
        return self.lowest_weight() == 0 and self.charge() == 0

    def roles(self) -> tuple[str, ...]:
        return ("L", "G") if self.family == "ns" else ("L", "G1", "G2", "J")

    # -- serialization ------------------------------------------------------

    def to_config(self) -> dict:
        cfg = {"family": self.family, "variant": self.variant, "kappa": format_rational(self.kappa)}
        if self.variant == "unitary":
            cfg["eta"] = format_rational(self.eta)
            if self.family == "n2":
                cfg["omega"] = format_rational(self.omega)
        return cfg

    @staticmethod
    def from_config(cfg: dict) -> "RealizationParams":
        known = {"family", "variant", "kappa", "eta", "omega"}
        unknown = set(cfg) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return RealizationParams(
            family=cfg.get("family", "ns"),
            variant=cfg.get("variant", "unitary"),
            kappa=parse_rational(str(cfg.get("kappa", "0"))),
            eta=parse_rational(str(cfg.get("eta", "0"))),
            omega=parse_rational(str(cfg.get("omega", "0"))),
        )


def role_is_odd(role: str) -> bool:
    return role.startswith("G")


def role_lattice_is_integer(role: str) -> bool:
    return not role_is_odd(role)


# ---------------------------------------------------------------------------
# base fields (the kappa = eta = omega = 0 point, common to all variants)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _ns_base(role: str, index: HalfInt) -> ModeOperator:
    if role == "L":
        m = index
        return bilinear_mode(BilinearSpec("J", 0, "J", 0), m).scale(Fraction(1, 2)) + bilinear_mode(
            BilinearSpec("dPhi", 0, "Phi", 0), m
        ).scale(Fraction(1, 2))
    if role == "G":
        return bilinear_mode(BilinearSpec("J", 0, "Phi", 0), index)
    raise ValueError(f"unknown ns role {role!r}")


@lru_cache(maxsize=None)
def _n2_base(role: str, index: HalfInt) -> ModeOperator:
    if role == "L":
        m = index
        op = bilinear_mode(BilinearSpec("J", 0, "J", 0), m).scale(Fraction(1, 2))
        op = op + bilinear_mode(BilinearSpec("J", 1, "J", 1), m).scale(Fraction(1, 2))
        op = op + bilinear_mode(BilinearSpec("dPhi", 0, "Phi", 0), m).scale(Fraction(1, 2))
        op = op + bilinear_mode(BilinearSpec("dPhi", 1, "Phi", 1), m).scale(Fraction(1, 2))
        return op
    if role == "G1":
        return bilinear_mode(BilinearSpec("J", 0, "Phi", 0), index) - bilinear_mode(
            BilinearSpec("J", 1, "Phi", 1), index
        )
    if role == "G2":
        return bilinear_mode(BilinearSpec("J", 0, "Phi", 1), index) + bilinear_mode(
            BilinearSpec("J", 1, "Phi", 0), index
        )
    if role == "J":
        return bilinear_mode(BilinearSpec("Phi", 0, "Phi", 1), index).scale(-_I)
    raise ValueError(f"unknown n2 role {role!r}")


# ---------------------------------------------------------------------------
# the deformed mode families
# ---------------------------------------------------------------------------


def _check_lattice(role: str, index: HalfInt):
    if role_is_odd(role):
        if index.is_integer:
            raise ValueError(f"role {role} lives on the half-odd lattice, got {index}")
    elif not index.is_integer:
        raise ValueError(f"role {role} lives on the integer lattice, got {index}")


@lru_cache(maxsize=None)
def make_mode(params: RealizationParams, role: str, index: HalfInt) -> ModeOperator:
    """The exact mode operator of one generator of the realized family."""
    index = HalfInt(index)
    if role not in params.roles():
        raise ValueError(f"role {role!r} not in family {params.family!r}")
    _check_lattice(role, index)
    kappa = params.kappa

    if params.family == "ns":
        op = _ns_base(role, index)
        if role == "L":
            m = index.as_int()
            if params.variant == "tilde":
                op = op - (_I * (kappa * (1 + m))) * boson_mode(0, m)
            elif params.variant == "bs":
                op = op - (_I * (kappa * (1 + m))) * boson_mode(0, m)
                op = op - (_I * (2 * kappa)) * tail_sum("J", 0, index)
            else:
                coeff = GaussianRational(params.eta) - _I * (kappa * m)
                op = op + coeff * boson_mode(0, m)
                if m == 0:
                    op = op + scalar_operator(params.lowest_weight())
        else:  # role == "G"
            n = index.as_fraction()
            if params.variant == "tilde":
                op = op - (_I * (kappa * (1 + 2 * n))) * fermion_mode(0, index)
            elif params.variant == "bs":
                op = op - (_I * (kappa * (1 + 2 * n))) * fermion_mode(0, index)
                op = op - (_I * (2 * kappa)) * tail_sum("Phi", 0, index)
            else:
                coeff = GaussianRational(params.eta) - _I * (2 * kappa * n)
                op = op + coeff * fermion_mode(0, index)
        return op

    # family == "n2"; boson species: 0 = "+", 1 = "-"; same for fermions
    op = _n2_base(role, index)
    if role == "L":
        m = index.as_int()
        if params.variant == "tilde":
            op = op - (_I * (kappa * (1 + m))) * boson_mode(1, m)
        elif params.variant == "bs":
            op = op - (_I * (kappa * (1 + m))) * boson_mode(1, m)
            op = op - (_I * (2 * kappa)) * tail_sum("J", 1, index)
        else:
            op = op + GaussianRational(params.omega) * boson_mode(0, m)
            op = op + (GaussianRational(params.eta) - _I * (kappa * m)) * boson_mode(1, m)
            if m == 0:
                op = op + scalar_operator(params.lowest_weight())
    elif role in ("G1", "G2"):
        # G1 corrections ride on the "-" fermion, G2 on the "+" one,
        # with opposite signs.
        n = index.as_fraction()
        ferm = 1 if role == "G1" else 0
        sgn = 1 if role == "G1" else -1
        if params.variant == "tilde":
            op = op + (sgn * _I * (kappa * (1 + 2 * n))) * fermion_mode(ferm, index)
        elif params.variant == "bs":
            op = op + (sgn * _I * (kappa * (1 + 2 * n))) * fermion_mode(ferm, index)
            op = op + (sgn * _I * (2 * kappa)) * tail_sum("Phi", ferm, index)
        else:
            if role == "G1":
                op = op + GaussianRational(params.omega) * fermion_mode(0, index)
                op = op + (-GaussianRational(params.eta) + _I * (2 * kappa * n)) * fermion_mode(1, index)
            else:
                op = op + GaussianRational(params.omega) * fermion_mode(1, index)
                op = op + (GaussianRational(params.eta) - _I * (2 * kappa * n)) * fermion_mode(0, index)
    else:  # role == "J"
        m = index.as_int()
        op = op + GaussianRational(2 * kappa) * boson_mode(0, m)
        if params.variant == "unitary" and m == 0:
            op = op + scalar_operator(params.charge())
    return op


# ---------------------------------------------------------------------------
# cyclic subspace
# ---------------------------------------------------------------------------

Word = tuple[tuple[str, HalfInt], ...]


def realize_word(params: RealizationParams, word: Word) -> FockVector:
    """Apply a word of negative modes, rightmost first, to the vacuum."""
    vec = FockVector.vacuum(params.content)
    for role, index in reversed(word):
        vec = make_mode(params, role, index)(vec)
    return vec


def cyclic_words(params: RealizationParams, max_level: HalfInt) -> list[tuple[Word, FockVector]]:
    """PBW-ordered words in negative generator modes with weight <= max_level.

    Words are paired with the vector they produce from the vacuum.  When
    the cyclic vector is vacuum-like, words ending in L_{-1} or G_{-1/2}
    are discarded; that they indeed annihilate the vacuum is checked
    here rather than assumed.
    """
    from .superalg import family_presentation, pbw_words  # deferred; no cycle at import

    max_level = HalfInt(max_level)
    if max_level < 0:
        raise ValueError("max_level must be nonnegative")
    vacuum_like = params.is_vacuum_like()
    if vacuum_like:
        vac = FockVector.vacuum(params.content)
        for role in params.roles():
            index = half(-2) if role_lattice_is_integer(role) else half(-1)
            if role == "J":
                continue  # J_{-1} does not annihilate the vacuum
            if not make_mode(params, role, index)(vac).is_zero():
                raise AssertionError(f"{role}_{index} was expected to annihilate the vacuum")
    pres = family_presentation(params.family)
    out: list[tuple[Word, FockVector]] = []
    for twice_level in range(0, max_level.twice + 1):
        for word in pbw_words(pres, half(twice_level), drop_vacuum_annihilators=vacuum_like):
            out.append((word, realize_word(params, word)))
    return out
