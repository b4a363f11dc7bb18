import pytest

from hypermono.algebra.cyc import zeta
from hypermono.algebra.fq import FqMatrix, field
from hypermono.algebra.unity import unity
from hypermono.repkit import Spectrum, closure, m4
from hypermono.stonevn import (
    Extraspecial2Model,
    HeisenbergModel,
    ModelError,
    find_orthogonal_element,
    outer_intertwiner_2,
    outer_intertwiner_odd,
    sp_halves,
    sp_mod1_check,
    ss_extr_enumerate,
    ss_extr_oracle,
    ss_sp_enumerate,
    ss_sp_oracle,
)
from hypermono.weilgl import ExcludedCase, symplectic_group


class TestModels:
    def test_heisenberg_3_1(self):
        m = HeisenbergModel(3, 1)
        assert m.dim == 3 and m.group_order == 27
        assert m.irreducible_certificate()

    def test_heisenberg_5_2(self):
        m = HeisenbergModel(5, 2)
        assert m.dim == 25 and m.group_order == 5**5

    def test_cap(self):
        with pytest.raises(ModelError):
            HeisenbergModel(3, 4)  # 81 > 32

    def test_extraspecial_types(self):
        plus = Extraspecial2Model(2, "+")
        minus = Extraspecial2Model(2, "-")
        assert plus.group.order == 32 == minus.group.order
        # type is read off the quadratic form: number of nonsingular vectors
        assert sum(plus.Q.values()) == 6   # hyperbolic: 6 of 16
        assert sum(minus.Q.values()) == 10  # elliptic: 10 of 16

    def test_eps_multiplicativity(self):
        # composing a plus plane with a minus plane gives the minus form
        mixed = Extraspecial2Model(2, "-")  # built as D8 tensor Q8
        one_plus = Extraspecial2Model(1, "+")
        one_minus = Extraspecial2Model(1, "-")
        assert sum(one_plus.Q.values()) == 1   # (1,1) only
        assert sum(one_minus.Q.values()) == 3  # all nonzero vectors
        # plus(1) x minus(1): Q(u + v) = Q1(u) + Q2(v): count = 1*1 + 1*3 + 3 = ...
        count = sum(
            (one_plus.Q[u] + one_minus.Q[v]) % 2
            for u in one_plus.Q
            for v in one_minus.Q
        )
        assert count == sum(mixed.Q.values())


class TestIntertwiners:
    def test_identity_gives_scalar(self):
        m = HeisenbergModel(3, 1)
        pm = outer_intertwiner_odd(m, FqMatrix.identity(field(3), 2))
        assert pm.mat.is_scalar() is not None

    def test_structure_violation_rejected(self):
        m = HeisenbergModel(3, 1)
        bad = FqMatrix.from_rows(field(3), [[1, 1], [0, 2]])  # det 2, not symplectic
        if not m.preserves_form(bad):
            with pytest.raises(ModelError):
                outer_intertwiner_odd(m, bad)

    def test_projective_representation_property(self):
        """M(g) M(h) equals M(gh) up to a scalar."""
        m = HeisenbergModel(3, 1)
        Sp = symplectic_group(1, 3)
        import itertools

        pairs = list(itertools.islice(itertools.product(Sp.elements[:6], Sp.elements[:6]), 12))
        for g, h in pairs:
            Mg = outer_intertwiner_odd(m, g).mat
            Mh = outer_intertwiner_odd(m, h).mat
            Mgh = outer_intertwiner_odd(m, g * h).mat
            prod = Mg * Mh
            # prod = lambda * Mgh: check proportionality exactly
            ratio = None
            ok = True
            for x, y in zip(prod.data, Mgh.data):
                if y.is_zero() != x.is_zero():
                    ok = False
                    break
                if not y.is_zero():
                    r = x / y
                    if ratio is None:
                        ratio = r
                    elif r != ratio:
                        ok = False
                        break
            assert ok, "intertwiner composition is not projectively multiplicative"

    def test_uniqueness_guard_is_exercised(self):
        m = HeisenbergModel(3, 1)
        g = symplectic_group(1, 3).elements[5]
        pm = outer_intertwiner_odd(m, g)
        assert pm.verify()

    def test_spectrum_rescale_invariance(self):
        m = HeisenbergModel(3, 1)
        F3 = field(3)
        g4 = FqMatrix.from_rows(F3, [[0, 2], [1, 0]])
        pm = outer_intertwiner_odd(m, g4)
        s1 = pm.projective_spectrum()
        s2 = pm.rescale(zeta(12)).projective_spectrum()
        assert s1 == s2

    def test_canonicalization_idempotent(self):
        m = HeisenbergModel(3, 1)
        g4 = FqMatrix.from_rows(field(3), [[0, 2], [1, 0]])
        s = outer_intertwiner_odd(m, g4).projective_spectrum()
        assert s.canonical_rotation() == s


class TestHalves:
    def test_identity_halves_are_degrees(self):
        for (p, n) in [(3, 1), (5, 1), (3, 2)]:
            m = HeisenbergModel(p, n)
            pm = outer_intertwiner_odd(m, FqMatrix.identity(field(p), 2 * n))
            e, o = sp_halves(m, pm)
            q = p
            assert e.rational() == (q**n + 1) // 2
            assert o.rational() == (q**n - 1) // 2

    def test_sp2_3_exhaustive(self):
        m = HeisenbergModel(3, 1)
        Sp = symplectic_group(1, 3)
        checked = 0
        for g in Sp.elements:
            if g.order() % 2 == 1:
                pm = outer_intertwiner_odd(m, g)
                assert sp_mod1_check(m, pm)
                e, o = sp_halves(m, pm)
                assert (e - o).abs2().rational() == 1
                checked += 1
        assert checked == 9  # identity plus the eight 3-elements

    def test_even_order_excluded_from_claim(self):
        # the identity abs2(e - o) = c2 is specific to odd projective order:
        # the central involution (whose intertwiner is the parity operator
        # itself) violates it, which is why the claim carries the precondition
        m = HeisenbergModel(3, 1)
        F3 = field(3)
        minus_one = FqMatrix.scalar(F3, 2, F3.neg[1])
        pm = outer_intertwiner_odd(m, minus_one)
        assert not sp_mod1_check(m, pm)


class TestExtraspecialSpectra:
    def test_c5_minus(self):
        minus = Extraspecial2Model(2, "-")
        g5 = find_orthogonal_element(minus, 5)
        pm = outer_intertwiner_2(minus, g5).odd_projective_rep()
        want = Spectrum.from_multiset([unity(k, 5) for k in range(1, 5)]).canonical_rotation()
        assert pm.projective_spectrum() == want
        assert pm.is_simple()

    def test_c3_plus_block(self):
        plus = Extraspecial2Model(2, "+")
        g = FqMatrix.from_rows(field(2), [[0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 1], [0, 0, 1, 0]])
        pm = outer_intertwiner_2(plus, g).odd_projective_rep()
        want = Spectrum.from_multiset(
            [unity(0, 1), unity(0, 1), unity(1, 3), unity(2, 3)]
        ).canonical_rotation()
        assert pm.projective_spectrum() == want
        assert not pm.is_simple()

    def test_oracle(self):
        rep = ss_extr_oracle(2)
        assert rep["agree"]


class TestEnumerators:
    def test_ss_extr_odd(self):
        assert ss_extr_enumerate(3, 3) == [28]
        assert ss_extr_enumerate(5, 2) == [26]

    def test_ss_extr_p2(self):
        assert ss_extr_enumerate(2, 4) == [17]
        assert sorted(ss_extr_enumerate(2, 5)) == [33, 45, 51]
        assert ss_extr_enumerate(2, 2, override=True) == [5]

    def test_hypothesis_guard(self):
        with pytest.raises(ValueError):
            ss_extr_enumerate(3, 1)

    def test_ss_sp(self):
        types = ss_sp_enumerate(2, 5)
        assert sorted(t.central_order for t in types) == [12, 13]
        types = ss_sp_enumerate(3, 5)
        orders = sorted(t.central_order for t in types)
        assert orders == [62, 63, 78]
        with pytest.raises(ExcludedCase):
            ss_sp_enumerate(2, 3)
        with pytest.raises(ExcludedCase):
            ss_sp_enumerate(3, 3)

    def test_beta_coprimality_claim(self):
        """The two block orders of an admissible (a, b) pair are coprime
        after halving (re-checked arithmetically, not structurally)."""
        from math import gcd

        for q in (3, 5, 7):
            for n in range(2, 8):
                if (n, q) in ((2, 3), (3, 3)):
                    continue
                for cls in ss_sp_enumerate(n, q):
                    if cls.a is not None:
                        x = (q**cls.a + 1) // 2
                        y = (q**cls.b + 1) // 2
                        assert gcd(x, y) == 1, (q, cls.a, cls.b)


class TestSpOracle:
    def test_sp45_battery(self):
        rep = ss_sp_oracle(2, 5)
        assert rep["agree"]
        by_label = {t["torus"]: t for t in rep["types"]}
        assert by_label["T-"]["simple_even"] and by_label["T-"]["simple_odd"]
        assert not by_label["T+"]["simple_even"] and by_label["T+"]["simple_odd"]
        assert not any(rep["negative_controls_simple"].values())

    def test_cap(self):
        with pytest.raises(ModelError):
            ss_sp_oracle(3, 5)


class TestExtensionToFiniteGroup:
    def test_p_c4_closure_m4(self):
        """The 3-dim extraspecial representation extends to an order-4 outer
        element; the resulting 108-element group has fourth moment 3."""
        m = HeisenbergModel(3, 1)
        g4 = FqMatrix.from_rows(field(3), [[0, 2], [1, 0]])
        M0 = outer_intertwiner_odd(m, g4).finite_order_form()
        assert M0.order() == 4
        X = m.rho_matrix((1,), (0,))
        Z = m.rho_matrix((0,), (1,))
        J = closure([X, Z, M0])
        assert J.order == 108
        assert m4(J) == 3
