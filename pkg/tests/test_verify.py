from fractions import Fraction

import pytest

from supervir.fock import FockVector
from supervir.halfint import half
from supervir.realizations import RealizationParams, make_mode
from supervir.superalg import psd_check
from supervir.verify import (
    borcherds_consistency,
    check_relations,
    check_weak_symmetry,
    fock_pairing_crosscheck,
    gram_freefield,
    measure_central_charge,
    oracle_compare,
    single_mode_symmetry_control,
)


def params(family="ns", variant="unitary", kappa=0, eta=0, omega=0):
    return RealizationParams(family, variant, Fraction(kappa), Fraction(eta), Fraction(omega))


# ---------------------------------------------------------------------------
# relations
# ---------------------------------------------------------------------------


def test_relations_ns_variants():
    for variant in ("tilde", "bs", "unitary"):
        p = params("ns", variant, Fraction(1, 2), Fraction(1) if variant == "unitary" else 0)
        report = check_relations(p, 2, half(4))
        assert report.passed, [e for e in report.entries if not e.ok][:3]


def test_relations_n2():
    p = params("n2", "bs", Fraction(1, 3))
    report = check_relations(p, 1, half(4))
    assert report.passed


def test_relations_window_validation():
    with pytest.raises(ValueError):
        check_relations(params(), 0, half(2))


def test_relation_check_is_discriminating():
    """The commutator really carries the central term: comparing against a
    wrong central charge must fail."""
    p = params("ns", "unitary", Fraction(1, 2))
    lhs = make_mode(p, "L", half(4)).commutator(make_mode(p, "L", half(-4)))
    vac = FockVector.vacuum(p.content)
    right = vac.scale(p.central_charge() / 2 + 4 * p.lowest_weight())
    wrong = vac.scale(Fraction(999) / 2 + 4 * p.lowest_weight())
    assert lhs(vac) == right
    assert lhs(vac) != wrong


# ---------------------------------------------------------------------------
# the diagonal pairing against its adjoint-reduction re-derivation
# ---------------------------------------------------------------------------


def test_fock_pairing_crosscheck():
    from supervir.fock import FieldContent

    assert fock_pairing_crosscheck(FieldContent(1, 1), half(8)).passed
    assert fock_pairing_crosscheck(FieldContent(2, 2), half(5)).passed


def test_fock_pairing_crosscheck_is_discriminating():
    """The reducer really recomputes norms: a wrong diagonal would be caught."""
    from supervir.fock import FieldContent, FockState
    from supervir.verify import _free_pairing

    word = (("J", 0, -2), ("J", 0, -2))  # J_{-1}^2: norm 2, not 1
    assert _free_pairing(word, word) == 2
    word = (("Phi", 0, -3), ("Phi", 0, -1))
    assert _free_pairing(word, word) == 1
    crossed = (("Phi", 0, -1), ("Phi", 0, -3))  # anti-ordered word: sign flips
    assert _free_pairing(word, crossed) == -1


# ---------------------------------------------------------------------------
# central charge and weights
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "family,kappa",
    [("ns", 0), ("ns", Fraction(1, 3)), ("ns", Fraction(1, 2)), ("ns", 1),
     ("n2", 0), ("n2", Fraction(1, 3)), ("n2", Fraction(1, 2)), ("n2", 1)],
)
def test_measured_central_charge(family, kappa):
    for variant in ("tilde", "bs"):
        p = params(family, variant, kappa)
        assert measure_central_charge(p) == p.central_charge()


def test_bs_lowest_weight_conditions():
    for family in ("ns", "n2"):
        p = params(family, "bs", Fraction(1, 2))
        vac = FockVector.vacuum(p.content)
        assert make_mode(p, "L", half(0))(vac).is_zero()
        assert make_mode(p, "L", half(-2))(vac).is_zero()
        for role in p.roles():
            if role.startswith("G"):
                assert make_mode(p, role, half(-1))(vac).is_zero()


# ---------------------------------------------------------------------------
# weak symmetry
# ---------------------------------------------------------------------------


def test_weak_symmetry_pairs_pass():
    pairs = [(half(4), half(0)), (half(2), half(-2)), (half(4), half(-2)),
             (half(3), half(1)), (half(1), half(-1)), (half(3), half(-1))]
    for family in ("ns", "n2"):
        p = params(family, "bs", Fraction(1, 2))
        report = check_weak_symmetry(p, pairs, half(4))
        assert report.passed, [e.detail for e in report.entries if not e.ok][:2]


def test_single_mode_control_fails_symmetry():
    p = params("ns", "bs", Fraction(1, 2))
    report = single_mode_symmetry_control(p, "L", half(2), half(4))
    assert report.expect_failure
    assert report.passed  # i.e. the control found a violation, as it must
    assert report.entries[0].residual > 0
    assert report.entries[0].detail is not None


def test_control_rejects_symmetric_configurations():
    with pytest.raises(ValueError):
        single_mode_symmetry_control(params("ns", "bs", 0), "L", half(2), half(2))
    with pytest.raises(ValueError):
        single_mode_symmetry_control(params("ns", "unitary", Fraction(1, 2)), "L", half(2), half(2))


def test_weak_symmetry_requires_bs():
    with pytest.raises(ValueError):
        check_weak_symmetry(params("ns", "unitary"), [(half(2), half(0))], half(2))


# ---------------------------------------------------------------------------
# Gram matrices and the oracle comparison
# ---------------------------------------------------------------------------


def test_gram_freefield_examples():
    p = params("ns", "unitary")
    g = gram_freefield(p, half(3))
    assert g.size == 1 and g.entries[0][0] == 1
    g = gram_freefield(p, half(0))
    assert g.entries[0][0] == 1
    p = params("ns", "bs", Fraction(1, 2))
    g = gram_freefield(p, half(4))
    assert g.size == 1 and g.entries[0][0] == Fraction(9, 4)  # c/2 at c = 9/2


@pytest.mark.parametrize(
    "family,variant,kappa,eta,omega,levels",
    [
        ("ns", "bs", 0, 0, 0, 6),
        ("ns", "bs", Fraction(1, 3), 0, 0, 6),
        ("ns", "bs", Fraction(1, 2), 0, 0, 6),
        ("ns", "unitary", Fraction(1, 2), Fraction(1, 2), 0, 4),
        ("n2", "bs", Fraction(1, 2), 0, 0, 4),
        ("n2", "unitary", Fraction(1, 2), 0, 1, 3),
        ("n2", "unitary", Fraction(1, 2), 1, 1, 3),
    ],
)
def test_oracle_compare(family, variant, kappa, eta, omega, levels):
    p = params(family, variant, kappa, eta, omega)
    report = oracle_compare(p, half(levels))
    assert report.passed, [e.detail for e in report.entries if not e.ok][:2]


def test_oracle_compare_rejects_tilde_deformation():
    """The non-unitary deformation must NOT match the abstract pairing:
    the comparison is sharp enough to see the failure of symmetry."""
    p = params("ns", "tilde", Fraction(1, 2))
    report = oracle_compare(p, half(4))
    assert not report.passed


def test_freefield_gram_psd():
    for p in (params("ns", "bs", Fraction(1, 2)), params("n2", "unitary", Fraction(1, 2), 0, 1)):
        for twice in range(0, 9 if p.family == "ns" else 5):
            g = gram_freefield(p, half(twice))
            assert psd_check(g).psd, (p.family, twice)


# ---------------------------------------------------------------------------
# mode-commutator consistency
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("kappa", [0, Fraction(1, 3), Fraction(1, 2)])
@pytest.mark.parametrize("mn", [(3, -3), (1, 1), (1, -1), (5, -1)])
def test_borcherds_consistency(kappa, mn):
    p = params("ns", "bs", kappa)
    report = borcherds_consistency(p, half(mn[0]), half(mn[1]), half(6))
    assert report.passed, [e.detail for e in report.entries if not e.ok]


def test_borcherds_requires_vacuum_like():
    with pytest.raises(ValueError):
        borcherds_consistency(params("ns", "unitary", Fraction(1, 2), 1), half(1), half(-1), half(2))
    with pytest.raises(ValueError):
        borcherds_consistency(params("n2", "bs", Fraction(1, 2)), half(1), half(-1), half(2))
