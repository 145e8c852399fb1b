"""Abstract super-Virasoro presentations and lowest-weight Gram matrices.

A Presentation stores generator families with their mode lattices and
parities plus the structural bracket.  Everything downstream is exact:
vacuum expectations reduce words with the relations and the adjoint rule
A_n^dagger = A_{-n}; Gram matrices are tested for positive
semidefiniteness by pivoted elimination over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .halfint import HalfInt, half
from .scalars import GaussianRational

_I = GaussianRational(0, 1)

# a word is a tuple of (family, index) pairs with negative indices,
# canonically ordered (family blocks in order, labels weakly/strictly
# decreasing within even/odd blocks)
Word = tuple[tuple[str, HalfInt], ...]

BracketTerms = tuple[tuple[str, HalfInt, GaussianRational], ...]


@dataclass(frozen=True)
class GeneratorFamily:
    name: str
    parity: int  # 0 even, 1 odd
    integer_moded: bool


@dataclass(frozen=True)
class LowestWeightData:
    """Central charge, lowest weight, optional charge, and whether the
    cyclic vector is also killed by L_{-1} and the G_{-1/2} modes."""

    c: Fraction
    h: Fraction = Fraction(0)
    q: Optional[Fraction] = None
    vacuum_flag: bool = False

    def __post_init__(self):
        if self.vacuum_flag and (self.h != 0 or (self.q or 0) != 0):
            raise ValueError("vacuum_flag requires h = 0 (and q = 0)")


class Presentation:
    """Generator families plus the structural super-bracket.

    bracket_fn(f1, n1, f2, n2, c) returns (terms, central) where terms
    is a tuple of (family, index, coefficient) and central multiplies
    the identity.
    """

    def __init__(self, name: str, families: tuple[GeneratorFamily, ...], bracket_fn):
        self.name = name
        self.families = families
        self._rank = {fam.name: i for i, fam in enumerate(families)}
        self._parity = {fam.name: fam.parity for fam in families}
        self._integer = {fam.name: fam.integer_moded for fam in families}
        self._bracket_fn = bracket_fn
        self._reduce_cache: dict = {}

    def parity(self, family: str) -> int:
        return self._parity[family]

    def integer_moded(self, family: str) -> bool:
        return self._integer[family]

    def rank(self, family: str) -> int:
        return self._rank[family]

    def bracket(self, f1: str, n1: HalfInt, f2: str, n2: HalfInt, c: Fraction):
        return self._bracket_fn(f1, n1, f2, n2, c)

    def family_pairs(self) -> Iterator[tuple[str, str]]:
        for i, fam1 in enumerate(self.families):
            for fam2 in self.families[i:]:
                yield fam1.name, fam2.name


# ---------------------------------------------------------------------------
# the three presentations
# ---------------------------------------------------------------------------


def _vir_terms(f1, n1, f2, n2, c):
    m, n = n1.as_fraction(), n2.as_fraction()
    terms = (("L", n1 + n2, GaussianRational(m - n)),)
    central = GaussianRational(c * (m**3 - m) / 12) if n1 + n2 == 0 else GaussianRational(0)
    return terms, central


def _ns_bracket(f1, n1, f2, n2, c):
    m, n = n1.as_fraction(), n2.as_fraction()
    zero = GaussianRational(0)
    if (f1, f2) == ("L", "L"):
        return _vir_terms(f1, n1, f2, n2, c)
    if (f1, f2) == ("L", "G"):
        return ((("G", n1 + n2, GaussianRational(m / 2 - n)),), zero)
    if (f1, f2) == ("G", "L"):
        return ((("G", n1 + n2, GaussianRational(m - n / 2)),), zero)
    if (f1, f2) == ("G", "G"):
        central = GaussianRational(c / 3 * (m**2 - Fraction(1, 4))) if n1 + n2 == 0 else zero
        return ((("L", n1 + n2, GaussianRational(2)),), central)
    raise ValueError(f"unknown family pair {(f1, f2)}")


def _n2_bracket(f1, n1, f2, n2, c):
    m, n = n1.as_fraction(), n2.as_fraction()
    zero = GaussianRational(0)
    k = n1 + n2
    pair = (f1, f2)
    if pair == ("L", "L"):
        return _vir_terms(f1, n1, f2, n2, c)
    if f1 == "L" and f2 in ("G1", "G2"):
        return (((f2, k, GaussianRational(m / 2 - n)),), zero)
    if f1 in ("G1", "G2") and f2 == "L":
        return (((f1, k, GaussianRational(m - n / 2)),), zero)
    if pair in (("G1", "G1"), ("G2", "G2")):
        central = GaussianRational(c / 3 * (m**2 - Fraction(1, 4))) if k == 0 else zero
        return ((("L", k, GaussianRational(2)),), central)
    if pair == ("G1", "G2"):
        return ((("J", k, _I * (m - n)),), zero)
    if pair == ("G2", "G1"):
        return ((("J", k, _I * (n - m)),), zero)
    if pair == ("G1", "J"):
        return ((("G2", k, -_I),), zero)
    if pair == ("J", "G1"):
        return ((("G2", k, _I),), zero)
    if pair == ("G2", "J"):
        return ((("G1", k, _I),), zero)
    if pair == ("J", "G2"):
        return ((("G1", k, -_I),), zero)
    if pair == ("L", "J"):
        return ((("J", k, GaussianRational(-n)),), zero)
    if pair == ("J", "L"):
        return ((("J", k, GaussianRational(m)),), zero)
    if pair == ("J", "J"):
        central = GaussianRational(c / 3 * m) if k == 0 else zero
        return ((), central)
    raise ValueError(f"unknown family pair {pair}")


_VIRASORO = Presentation(
    "virasoro", (GeneratorFamily("L", 0, True),), _vir_terms
)
_NS = Presentation(
    "ns",
    (GeneratorFamily("L", 0, True), GeneratorFamily("G", 1, False)),
    _ns_bracket,
)
_N2 = Presentation(
    "n2",
    (
        GeneratorFamily("L", 0, True),
        GeneratorFamily("G1", 1, False),
        GeneratorFamily("G2", 1, False),
        GeneratorFamily("J", 0, True),
    ),
    _n2_bracket,
)


def presentation_virasoro() -> Presentation:
    return _VIRASORO


def presentation_ns() -> Presentation:
    return _NS


def presentation_n2() -> Presentation:
    return _N2


def family_presentation(family: str) -> Presentation:
    if family == "ns":
        return _NS
    if family == "n2":
        return _N2
    if family in ("vir", "virasoro"):
        return _VIRASORO
    raise ValueError(f"unknown algebra family {family!r}")


# ---------------------------------------------------------------------------
# word reduction against a lowest-weight vector
# ---------------------------------------------------------------------------


def _annihilates_vacuum(pres: Presentation, lw: LowestWeightData, fam: str, n: HalfInt) -> bool:
    if n > 0:
        return True
    if not lw.vacuum_flag:
        return False
    if fam == "L" and n == -1:
        return True
    if pres.parity(fam) == 1 and n.twice == -1:
        return True
    return False


def _ok_before(pres: Presentation, g: tuple[str, HalfInt], head: tuple[str, HalfInt]) -> bool:
    """Whether generator g may sit immediately left of head in a PBW word."""
    (f1, n1), (f2, n2) = g, head
    r1, r2 = pres.rank(f1), pres.rank(f2)
    if r1 != r2:
        return r1 < r2
    if pres.parity(f1) == 1:
        return n1 < n2  # strictly decreasing labels
    return n1 <= n2


def _apply_generator(
    pres: Presentation, lw: LowestWeightData, fam: str, n: HalfInt, vec: dict[Word, GaussianRational]
) -> dict[Word, GaussianRational]:
    out: dict[Word, GaussianRational] = {}
    for word, coeff in vec.items():
        for w2, c2 in _reduce(pres, lw, fam, n, word).items():
            tot = out.get(w2, GaussianRational(0)) + coeff * c2
            if tot.is_zero():
                out.pop(w2, None)
            else:
                out[w2] = tot
    return out


def _reduce(
    pres: Presentation, lw: LowestWeightData, fam: str, n: HalfInt, word: Word
) -> dict[Word, GaussianRational]:
    """Normal-order (fam, n) applied to a PBW word acting on the vacuum."""
    key = (lw, fam, n, word)
    cached = pres._reduce_cache.get(key)
    if cached is not None:
        return cached
    one = GaussianRational(1)
    result: dict[Word, GaussianRational]
    if not word:
        if _annihilates_vacuum(pres, lw, fam, n):
            result = {}
        elif n == 0:
            if fam == "L":
                result = {(): GaussianRational(lw.h)} if lw.h else {}
            elif fam == "J":
                q = lw.q or Fraction(0)
                result = {(): GaussianRational(q)} if q else {}
            else:
                raise ValueError(f"odd family {fam} has no zero mode")
        else:
            result = {((fam, n),): one}
    else:
        head = word[0]
        rest = word[1:]
        g = (fam, n)
        if n < 0 and _ok_before(pres, g, head):
            result = {(g,) + word: one}
        elif pres.parity(fam) == 1 and g == head:
            # odd square: A_n A_n = (1/2){A_n, A_n}
            terms, central = pres.bracket(fam, n, fam, n, lw.c)
            result = {}
            restv = {rest: one}
            for f2, n2, cf in terms:
                for w2, c2 in _apply_generator(pres, lw, f2, n2, restv).items():
                    tot = result.get(w2, GaussianRational(0)) + cf * c2 * Fraction(1, 2)
                    if tot.is_zero():
                        result.pop(w2, None)
                    else:
                        result[w2] = tot
            if not central.is_zero():
                cc = central * Fraction(1, 2)
                tot = result.get(rest, GaussianRational(0)) + cc
                if tot.is_zero():
                    result.pop(rest, None)
                else:
                    result[rest] = tot
        else:
            hf, hn = head
            sign = -1 if (pres.parity(fam) and pres.parity(hf)) else 1
            # move g past the head:  g . head = sign * head . g + [g, head]
            moved = _apply_generator(pres, lw, fam, n, {rest: one})
            result = {}
            for w2, c2 in _apply_generator(pres, lw, hf, hn, moved).items():
                cc = c2 * sign
                tot = result.get(w2, GaussianRational(0)) + cc
                if tot.is_zero():
                    result.pop(w2, None)
                else:
                    result[w2] = tot
            terms, central = pres.bracket(fam, n, hf, hn, lw.c)
            restv = {rest: one}
            for f2, n2, cf in terms:
                for w2, c2 in _apply_generator(pres, lw, f2, n2, restv).items():
                    tot = result.get(w2, GaussianRational(0)) + cf * c2
                    if tot.is_zero():
                        result.pop(w2, None)
                    else:
                        result[w2] = tot
            if not central.is_zero():
                tot = result.get(rest, GaussianRational(0)) + central
                if tot.is_zero():
                    result.pop(rest, None)
                else:
                    result[rest] = tot
    pres._reduce_cache[key] = result
    return result


def word_weight(word: Word) -> HalfInt:
    return half(sum(-(idx.twice) for _, idx in word))


def vacuum_expectation(left: Word, right: Word, lw: LowestWeightData, pres: Presentation) -> GaussianRational:
    """<left.vac, right.vac> from the relations and A_n^dagger = A_{-n}."""
    vec: dict[Word, GaussianRational] = {(): GaussianRational(1)}
    for fam, n in reversed(right):
        vec = _apply_generator(pres, lw, fam, n, vec)
        if not vec:
            return GaussianRational(0)
    # the adjoint of the left word reverses the factors, so the adjoint
    # of the leftmost generator acts first
    for fam, n in left:
        vec = _apply_generator(pres, lw, fam, -n, vec)
        if not vec:
            return GaussianRational(0)
    return vec.get((), GaussianRational(0))


# ---------------------------------------------------------------------------
# PBW word enumeration and Gram matrices
# ---------------------------------------------------------------------------


def pbw_words(pres: Presentation, level: HalfInt, *, drop_vacuum_annihilators: bool) -> list[Word]:
    """All PBW words of weight exactly `level`, canonically ordered.

    With drop_vacuum_annihilators, words whose rightmost generator is
    L_{-1} or an odd G_{-1/2} are omitted (they vanish on a vacuum-like
    cyclic vector).
    """
    level = HalfInt(level)
    words: list[Word] = []

    def block(fam_idx: int, remaining: int, acc: list[tuple[str, HalfInt]]):
        if fam_idx == len(pres.families):
            if remaining == 0:
                words.append(tuple(acc))
            return
        fam = pres.families[fam_idx]
        smallest = 2 if fam.integer_moded else 1  # label in twice-units

        def labels(remaining2: int, max_label: int, acc2: list[int]):
            # acc2 holds labels (positive weights, twice-units) already
            # chosen for this family, largest first
            block(fam_idx + 1, remaining2, acc + [(fam.name, half(-lab)) for lab in acc2])
            lab = min(remaining2, max_label)
            if lab % 2 != smallest % 2:
                lab -= 1
            while lab >= smallest:
                acc2.append(lab)
                next_max = lab if fam.parity == 0 else lab - 2
                labels(remaining2 - lab, next_max, acc2)
                acc2.pop()
                lab -= 2

        labels(remaining, remaining, [])

    block(0, level.twice, [])
    if drop_vacuum_annihilators:
        def keep(word: Word) -> bool:
            if not word:
                return True
            fam, n = word[-1]
            if fam == "L" and n == -1:
                return False
            if pres.parity(fam) == 1 and n.twice == -1:
                return False
            return True

        words = [w for w in words if keep(w)]
    words.sort(key=lambda w: tuple((pres.rank(f), -n.twice) for f, n in w))
    return words


@dataclass
class GramMatrix:
    level: HalfInt
    words: list[Word]
    entries: list[list[GaussianRational]]

    def is_hermitian(self) -> bool:
        n = len(self.words)
        return all(
            self.entries[i][j] == self.entries[j][i].conjugate() for i in range(n) for j in range(n)
        )

    @property
    def size(self) -> int:
        return len(self.words)

    def to_serializable(self) -> dict:
        """Report form with every exact value rendered as a string."""
        from .scalars import format_gaussian

        return {
            "level": str(self.level),
            "words": [[f"{fam}({idx})" for fam, idx in word] for word in self.words],
            "entries": [[format_gaussian(e) for e in row] for row in self.entries],
        }


def abstract_gram(pres: Presentation, lw: LowestWeightData, level: HalfInt) -> GramMatrix:
    """Gram matrix of the PBW spanning words at one weight level."""
    level = HalfInt(level)
    words = pbw_words(pres, level, drop_vacuum_annihilators=lw.vacuum_flag)
    entries = [[vacuum_expectation(wi, wj, lw, pres) for wj in words] for wi in words]
    return GramMatrix(level, words, entries)


# ---------------------------------------------------------------------------
# exact positive-semidefiniteness
# ---------------------------------------------------------------------------


@dataclass
class PsdResult:
    psd: bool
    pivots: list[Fraction]
    witness: Optional[list[GaussianRational]] = None

    def witness_value(self, entries: list[list[GaussianRational]]) -> Optional[Fraction]:
        if self.witness is None:
            return None
        n = len(self.witness)
        total = GaussianRational(0)
        for i in range(n):
            for j in range(n):
                total = total + self.witness[i].conjugate() * entries[i][j] * self.witness[j]
        return total.real_part()


def psd_check(gram: GramMatrix | list[list[GaussianRational]]) -> PsdResult:
    """Exact pivoted Hermitian elimination deciding positive semidefiniteness.

    Pivots are the eliminated diagonal entries in pivot order (largest
    remaining diagonal first, ties to the lowest index).  Rank
    deficiency is admissible: zero pivots with identically zero residual
    rows pass.  On failure a witness vector v with <v, Gv> < 0 is
    produced.
    """
    entries = gram.entries if isinstance(gram, GramMatrix) else gram
    n = len(entries)
    a = [[GaussianRational.coerce(entries[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if a[i][j] != a[j][i].conjugate():
                raise ValueError(f"matrix is not Hermitian at ({i},{j})")

    active = list(range(n))
    pivots: list[Fraction] = []
    # elimination history: (pivot_row, {row: multiplier}) in original indices
    history: list[tuple[int, dict[int, GaussianRational]]] = []

    def backtransform(seed: dict[int, GaussianRational]) -> list[GaussianRational]:
        # apply adjoints of the elimination steps in reverse:
        # E = I - sum mult[i] e_i e_p^T  =>  E^dagger v adds -conj(mult[i]) v_i to v_p
        v = dict(seed)
        for p, mults in reversed(history):
            acc = v.get(p, GaussianRational(0))
            for i, mult in mults.items():
                if i in v:
                    acc = acc - mult.conjugate() * v[i]
            if acc.is_zero():
                v.pop(p, None)
            else:
                v[p] = acc
        return [v.get(i, GaussianRational(0)) for i in range(n)]

    while active:
        diag = [(a[i][i].real_part(), i) for i in active]
        best_val = max(d for d, _ in diag)
        best_idx = min(i for d, i in diag if d == best_val)
        if best_val > 0:
            p = best_idx
            d = a[p][p].real_part()
            pivots.append(d)
            active.remove(p)
            mults: dict[int, GaussianRational] = {}
            for i in active:
                if not a[i][p].is_zero():
                    mults[i] = a[i][p] / GaussianRational(d)
            for i in active:
                mi = mults.get(i)
                if mi is None:
                    continue
                for j in active:
                    a[i][j] = a[i][j] - mi * a[p][j]
            for j in active:
                mj = mults.get(j)
                if mj is not None:
                    a[p][j] = GaussianRational(0)
            for i in active:
                a[i][p] = GaussianRational(0)
            history.append((p, mults))
            continue
        # all remaining diagonals <= 0
        negative = [i for d, i in diag if d < 0]
        if negative:
            i = min(negative)
            pivots.append(a[i][i].real_part())
            return PsdResult(False, pivots, backtransform({i: GaussianRational(1)}))
        offdiag = [
            (i, j)
            for ii, i in enumerate(active)
            for j in active[ii + 1 :]
            if not a[i][j].is_zero()
        ]
        if offdiag:
            r, s = offdiag[0]
            b = a[r][s]
            witness = backtransform({r: -b, s: GaussianRational(1)})
            return PsdResult(False, pivots, witness)
        pivots.extend(Fraction(0) for _ in active)
        return PsdResult(True, pivots)
    return PsdResult(True, pivots)


# ---------------------------------------------------------------------------
# unitary discrete series
# ---------------------------------------------------------------------------


def discrete_series(algebra: str, p: int) -> Fraction:
    """Central charge of the p-th member of the unitary discrete series."""
    if p < 2:
        raise ValueError("the discrete series starts at p = 2")
    if algebra in ("vir", "virasoro"):
        return 1 - Fraction(6, p * (p + 1))
    if algebra == "ns":
        return Fraction(3, 2) * (1 - Fraction(8, p * (p + 2)))
    if algebra == "n2":
        return 3 * (1 - Fraction(2, p))
    raise ValueError(f"unknown algebra {algebra!r}")
