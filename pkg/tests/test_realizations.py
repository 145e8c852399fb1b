from fractions import Fraction

import pytest

from supervir.fock import FockVector, enumerate_basis, inner_product
from supervir.halfint import half, halfint_range
from supervir.oscillators import boson_mode, fermion_mode, tail_sum
from supervir.realizations import RealizationParams, cyclic_words, make_mode, realize_word
from supervir.scalars import GaussianRational

I = GaussianRational(0, 1)


def params(family="ns", variant="unitary", kappa=0, eta=0, omega=0):
    return RealizationParams(family, variant, Fraction(kappa), Fraction(eta), Fraction(omega))


def test_parameter_validation():
    with pytest.raises(ValueError):
        params(variant="bs", eta=1)
    with pytest.raises(ValueError):
        params(family="ns", omega=1)
    with pytest.raises(ValueError):
        RealizationParams("other", "bs")
    with pytest.raises(ValueError):
        make_mode(params("ns"), "J", half(0))
    with pytest.raises(ValueError):
        make_mode(params("ns"), "L", half(1))
    with pytest.raises(ValueError):
        make_mode(params("ns"), "G", half(2))


def test_derived_quantities():
    p = params("ns", "unitary", Fraction(1, 2), Fraction(1, 2))
    assert p.central_charge() == Fraction(9, 2)
    assert p.lowest_weight() == Fraction(1, 4)
    p = params("n2", "unitary", Fraction(1, 2), 0, 1)
    assert p.central_charge() == 6
    assert p.lowest_weight() == Fraction(5, 8)
    assert p.charge() == 1
    assert not p.is_vacuum_like()
    assert params("n2", "bs", Fraction(1, 2)).is_vacuum_like()


def test_config_roundtrip():
    for p in [params("ns", "bs", Fraction(1, 3)), params("n2", "unitary", Fraction(1, 2), 1, 1)]:
        assert RealizationParams.from_config(p.to_config()) == p
    with pytest.raises(ValueError):
        RealizationParams.from_config({"family": "ns", "variant": "bs", "kappa": "1/2", "bogus": "1"})
    with pytest.raises(ValueError):
        RealizationParams.from_config({"family": "ns", "variant": "bs", "kappa": "1/0"})


def test_lowest_weight_examples():
    vac = FockVector.vacuum(params().content)
    assert make_mode(params("ns", "bs", Fraction(1, 2)), "L", half(0))(vac).is_zero()
    got = make_mode(params("ns", "unitary", Fraction(1, 2), Fraction(1, 2)), "L", half(0))(vac)
    assert got == vac.scale(Fraction(1, 4))
    p = params("n2", "unitary", Fraction(1, 2), 0, 1)
    got = make_mode(p, "J", half(0))(FockVector.vacuum(p.content))
    assert got == FockVector.vacuum(p.content).scale(1)


def test_l0_eigenvalues_are_the_weights():
    """Pins the mode sums of the bilinears, in particular the reweighted
    derivative factor: L_0 must act diagonally with the state weight."""
    for family in ("ns", "n2"):
        p = params(family)
        l0 = make_mode(p, "L", half(0))
        for s in enumerate_basis(p.content, half(8)):
            assert l0.apply_state(s) == FockVector.basis(s).scale(s.weight.as_fraction()), s


def test_variants_agree_at_zero_deformation():
    for family in ("ns", "n2"):
        ps = [params(family, v) for v in ("tilde", "bs", "unitary")]
        basis = enumerate_basis(ps[0].content, half(8))
        roles = ps[0].roles()
        for role in roles:
            integer = not role.startswith("G")
            for idx in halfint_range(half(-4), half(4), integer=integer):
                images = [make_mode(p, role, idx) for p in ps]
                for s in basis:
                    ref = images[0].apply_state(s)
                    assert all(op.apply_state(s) == ref for op in images[1:]), (family, role, idx, s)


def test_bs_modes_match_handwritten_formula():
    """The assembled operators agree with the literal deformed mode sums."""
    kappa = Fraction(1, 2)
    p = params("ns", "bs", kappa)
    base = params("ns", "tilde", 0)
    basis = enumerate_basis(p.content, half(8))
    for m in range(-3, 4):
        op = make_mode(p, "L", half(2 * m))
        for s in basis:
            hand = make_mode(base, "L", half(2 * m)).apply_state(s)
            hand = hand + boson_mode(0, m).apply_state(s).scale(-I * (kappa * (1 + m)))
            tail = FockVector.zero()
            l = 1
            while m + l <= s.weight.twice // 2:
                tail = tail + boson_mode(0, m + l).apply_state(s).scale(Fraction(-1) ** l)
                l += 1
            hand = hand + tail.scale(-2 * I * kappa)
            assert op.apply_state(s) == hand, (m, s)
    for nt in range(-5, 6, 2):
        op = make_mode(p, "G", half(nt))
        n = Fraction(nt, 2)
        for s in basis:
            hand = make_mode(base, "G", half(nt)).apply_state(s)
            hand = hand + fermion_mode(0, half(nt)).apply_state(s).scale(-I * (kappa * (1 + 2 * n)))
            hand = hand + tail_sum("Phi", 0, half(nt)).apply_state(s).scale(-2 * I * kappa)
            assert op.apply_state(s) == hand, (nt, s)


def test_unitary_adjoint_identity():
    """A_n^dagger = A_{-n} exactly for the symmetric variant."""
    cases = [
        params("ns", "unitary", Fraction(1, 2), Fraction(1, 3)),
        params("n2", "unitary", Fraction(1, 3), Fraction(1, 2), Fraction(1)),
    ]
    for p in cases:
        basis = enumerate_basis(p.content, half(8 if p.family == "ns" else 6))
        for role in p.roles():
            integer = not role.startswith("G")
            for n in halfint_range(half(-5), half(5), integer=integer):
                up = make_mode(p, role, n)
                down = make_mode(p, role, -n)
                ups = {u: up.apply_state(u) for u in basis}
                downs = {v: down.apply_state(v) for v in basis}
                for u in basis:
                    for v in basis:
                        lhs = inner_product(ups[u], FockVector.basis(v))
                        rhs = inner_product(FockVector.basis(u), downs[v])
                        assert lhs == rhs, (p.family, role, n, u, v)


def test_n2_pairs_satisfy_ns_relations():
    """(L, G1) and (L, G2) each close on the one-supercharge relations."""
    from supervir.superalg import presentation_ns

    pres = presentation_ns()
    p = params("n2", "unitary", Fraction(1, 2))
    c = p.central_charge()
    basis = enumerate_basis(p.content, half(4))
    for gname in ("G1", "G2"):
        translate = {"L": "L", "G": gname}
        for f1, f2 in pres.family_pairs():
            for n1 in halfint_range(half(-4), half(4), integer=pres.integer_moded(f1)):
                for n2 in halfint_range(half(-4), half(4), integer=pres.integer_moded(f2)):
                    a = make_mode(p, translate[f1], n1)
                    b = make_mode(p, translate[f2], n2)
                    comm = a.commutator(b)
                    terms, central = pres.bracket(f1, n1, f2, n2, c)
                    for s in basis:
                        got = comm.apply_state(s)
                        want = FockVector.zero()
                        for fam, idx, cf in terms:
                            want = want + make_mode(p, translate[fam], idx).apply_state(s).scale(cf)
                        if not central.is_zero():
                            want = want + FockVector.basis(s).scale(central)
                        assert got == want, (gname, f1, n1, f2, n2, s)


def test_cyclic_words_examples():
    p = params("ns", "unitary")
    words = cyclic_words(p, half(3))
    assert words[0][0] == () and words[0][1] == FockVector.vacuum(p.content)
    level32 = [(w, v) for w, v in words if sum(-i.twice for _, i in w) == 3]
    assert len(level32) == 1
    word, vec = level32[0]
    assert word == (("G", half(-3)),)
    expected = boson_mode(0, -1)(fermion_mode(0, half(-1))(FockVector.vacuum(p.content)))
    assert vec == expected
    # non-vacuum-like cyclic vectors keep the L_{-1}/G_{-1/2} words
    q = params("ns", "unitary", Fraction(1, 2), Fraction(1, 2))
    words_q = cyclic_words(q, half(1))
    assert (("G", half(-1)),) in [w for w, _ in words_q]
    assert (("G", half(-1)),) not in [w for w, _ in words]


def test_realize_word_matches_mode_application():
    p = params("ns", "bs", Fraction(1, 2))
    word = (("L", half(-4)), ("G", half(-3)))
    vec = realize_word(p, word)
    direct = make_mode(p, "L", half(-4))(make_mode(p, "G", half(-3))(FockVector.vacuum(p.content)))
    assert vec == direct
