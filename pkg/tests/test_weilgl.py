from math import gcd

import pytest

from hypermono.algebra.cyc import Cyc
from hypermono.algebra.fq import FqMatrix, field
from hypermono.algebra.unity import unity
from hypermono.repkit import CycMatrix, spectrum as mat_spectrum
from hypermono.weilgl import (
    ExcludedCase,
    WeilCharSpec,
    deleted_perm_spectrum,
    general_linear_group,
    gl_kernel_profile,
    gl_singer,
    gu_block_torus,
    gu_kernel_profile,
    gu_torus_element,
    is_symplectic,
    is_unitary,
    simple_cycle_types,
    sp_torus_element,
    ss_enumerate,
    symplectic_group,
    tau_value,
    the_group,
    unitary_group,
    weil_spectrum,
    zeta_value,
)


class TestCharacterValues:
    def test_tau_identity_values(self):
        F2 = field(2)
        assert tau_value(3, 2, 0, FqMatrix.identity(F2, 3)).rational() == 6
        F3 = field(3)
        assert tau_value(3, 3, 1, FqMatrix.identity(F3, 3)).rational() == 13
        assert tau_value(3, 3, 0, FqMatrix.identity(F3, 3)).rational() == 12

    def test_tau_transvection_gl2_3(self):
        F3 = field(3)
        t = FqMatrix.from_rows(F3, [[1, 1], [0, 1]])
        assert tau_value(2, 3, 1, t).rational() == 1

    def test_tau_degrees_are_weil_degrees(self):
        from hypermono.algebra.numth import is_prime_power

        for (n, q) in [(2, 3), (3, 2), (3, 3), (2, 4)]:
            F = field(*is_prime_power(q))
            ident = FqMatrix.identity(F, n)
            for i in range(1 if q == 2 else q - 1):
                spec = WeilCharSpec("Linear", n, q, i)
                assert tau_value(n, q, i, ident).rational() == spec.degree

    def test_zeta_identity_degrees(self):
        F9 = field(3, 2)
        ident = FqMatrix.identity(F9, 3)
        vals = sorted(int(zeta_value(3, 3, i, ident).rational()) for i in range(4))
        assert vals == [6, 7, 7, 7]
        F4 = field(2, 2)
        assert zeta_value(4, 2, 0, FqMatrix.identity(F4, 4)).rational() == 6

    def test_zeta_central_scaling(self):
        G = unitary_group(2, 3)
        F9 = field(3, 2)
        xi = F9.pow(F9.gen, 2)  # order 4
        z = FqMatrix.scalar(F9, 2, xi)
        assert z in G.index
        for i in range(4):
            v = zeta_value(2, 3, i, z)
            assert v.abs2().rational() == WeilCharSpec("Unitary", 2, 3, i).degree ** 2

    def test_irreducibility_norms(self):
        """The twist-graded Weil constituents are honest irreducibles: their
        characters have norm exactly 1 (this pins the i = 0 normalization)."""
        for (fam, n, q) in [("Linear", 2, 3), ("Linear", 3, 2), ("Unitary", 2, 3)]:
            G = the_group(fam, n, q)
            prof = gl_kernel_profile if fam == "Linear" else gu_kernel_profile
            valf = tau_value if fam == "Linear" else zeta_value
            hi = (1 if q == 2 else q - 1) if fam == "Linear" else q + 1
            for i in range(hi):
                acc = Cyc.from_int(0)
                for g in G.elements:
                    v = valf(n, q, i, g, prof(g, q))
                    acc = acc + v.abs2()
                assert acc.rational() / G.order == 1, (fam, i)


class TestGroups:
    def test_orders(self):
        assert general_linear_group(3, 2).order == 168
        assert general_linear_group(2, 3).order == 48
        assert unitary_group(2, 3).order == 96
        assert symplectic_group(1, 3).order == 24

    def test_membership_forms(self):
        for g in unitary_group(2, 3).elements[:20]:
            assert is_unitary(g, 1)
        for g in symplectic_group(1, 3).elements[:20]:
            assert is_symplectic(g)


class TestTotalWeilIdentities:
    def test_linear_sum_rule(self):
        """sum_i tau^i(g) + 2 = q^dim ker(g-1) on whole small groups."""
        for (n, q) in [(2, 3), (3, 2)]:
            G = general_linear_group(n, q)
            for g in G.elements:
                prof = gl_kernel_profile(g, q)
                total = Cyc.from_int(0)
                for i in range(1 if q == 2 else q - 1):
                    total = total + tau_value(n, q, i, g, prof)
                assert total.rational() + 2 == q ** prof[0]

    def test_unitary_sum_rule(self):
        """sum_i zeta^i(g) = (-1)^n (-q)^dim ker(g-1)."""
        for (n, q) in [(2, 3)]:
            G = unitary_group(n, q)
            for g in G.elements:
                prof = gu_kernel_profile(g, q)
                total = Cyc.from_int(0)
                for i in range(q + 2):
                    if i <= q:
                        total = total + zeta_value(n, q, i, g, prof)
                assert total.rational() == (-1) ** n * (-q) ** prof[0]


class TestTori:
    def test_gl_singer(self):
        assert gl_singer(3, 2).order() == 7
        assert gl_singer(3, 3).order() == 26

    def test_gu_singer(self):
        g = gu_torus_element(3, 3, 28)
        assert g.order() == 28 and is_unitary(g, 1)
        assert g in unitary_group(3, 3).index

    def test_gu_block_torus(self):
        h = gu_block_torus(3, [(2, 8), (1, 4)])
        assert h.order() == 8 and is_unitary(h, 1)

    def test_gu44_t31_central_order(self):
        t = gu_block_torus(4, [(3, 65), (1, 5)])
        assert is_unitary(t, 2)
        # central order: least k with t^k scalar
        F16 = field(2, 4)
        k, x = 1, t
        scalars = {FqMatrix.scalar(F16, 4, F16.pow(F16.gen, j * 3)) for j in range(5)}
        while x not in scalars:
            x = x * t
            k += 1
        assert k == 65

    def test_sp_tori(self):
        tm = sp_torus_element(2, 5, -1)
        assert tm.order() == 26 and is_symplectic(tm)
        tp = sp_torus_element(2, 5, +1)
        assert tp.order() == 24 and is_symplectic(tp)

    def test_singer_spectrum_simple(self):
        s = weil_spectrum(WeilCharSpec("Linear", 3, 3, 1), gl_singer(3, 3))
        assert s.dimension == 13 and s.is_simple()
        g = gu_torus_element(3, 3, 28)
        s = weil_spectrum(WeilCharSpec("Unitary", 3, 3, 1), g)
        assert s.dimension == 7 and s.is_simple()

    def test_non_generator_power_not_simple(self):
        g = gl_singer(3, 3)  # order 26
        h = g ** 2  # order 13 still generates; use a deeper power
        s = weil_spectrum(WeilCharSpec("Linear", 3, 3, 1), g ** 13)  # order 2
        assert not s.is_simple()

    def test_t21_dims(self):
        h = gu_block_torus(3, [(2, 8), (1, 4)])
        assert weil_spectrum(WeilCharSpec("Unitary", 3, 3, 0), h).is_simple()
        assert not weil_spectrum(WeilCharSpec("Unitary", 3, 3, 1), h).is_simple()


class TestGaloisEquivariance:
    def test_conjugate_index_inverts_spectrum(self):
        """zeta^3 is the complex conjugate of zeta^1 at q = 3, so its
        spectrum is the eigenvalue-inverse of the zeta^1 spectrum."""
        for g in [gu_torus_element(3, 3, 28), gu_block_torus(3, [(2, 8), (1, 4)])]:
            s1 = weil_spectrum(WeilCharSpec("Unitary", 3, 3, 1), g)
            s3 = weil_spectrum(WeilCharSpec("Unitary", 3, 3, 3), g)
            inverted = {-u: m for u, m in s1.mult.items()}
            assert dict(s3.mult) == dict(sorted(inverted.items()))

    def test_spectrum_conjugation_invariant(self):
        G = unitary_group(2, 3)
        spec = WeilCharSpec("Unitary", 2, 3, 1)
        g = next(x for x in G.elements if x.order() == 8)
        for h in G.elements[3:6]:
            conj = h * g * h.inverse()
            assert weil_spectrum(spec, conj) == weil_spectrum(spec, g)


class TestEnumerate:
    def test_linear(self):
        types = ss_enumerate("Linear", 3, 5)
        assert len(types) == 1 and types[0].central_order == 31

    def test_unitary_odd(self):
        types = ss_enumerate("Unitary", 3, 3)
        orders = sorted(t.central_order for t in types)
        assert orders == [7, 8]

    def test_unitary_even(self):
        types = ss_enumerate("Unitary", 4, 4)
        by_label = {t.label: t.central_order for t in types}
        assert by_label["Singer"] == 51 and by_label["T_3,1"] == 65

    def test_excluded(self):
        with pytest.raises(ExcludedCase):
            ss_enumerate("Unitary", 3, 2)
        with pytest.raises(ExcludedCase):
            ss_enumerate("Linear", 3, 4)
        with pytest.raises(ExcludedCase):
            ss_enumerate("Unitary", 2, 3)


class TestDeletedPerm:
    def test_examples(self):
        assert deleted_perm_spectrum([8]).is_simple()
        assert deleted_perm_spectrum([5, 3]).is_simple()
        s = deleted_perm_spectrum([4, 4])
        assert s.mult[unity(1, 4)] == 2 and not s.is_simple()

    def test_dimension(self):
        for ct in [(8,), (5, 3), (4, 4), (3, 2, 1)]:
            assert deleted_perm_spectrum(ct).dimension == sum(ct) - 1

    def test_against_matrix_route(self):
        """Combinatorial route vs exact Fourier spectrum of the permutation
        matrix minus the trivial summand (independent dual route)."""
        for ct in [(5,), (3, 2), (4, 1), (2, 2, 1)]:
            n = sum(ct)
            images = []
            base = 0
            for c in ct:
                images.extend([base + ((j + 1) % c) for j in range(c)])
                base += c
            P = CycMatrix.from_rows(
                [[1 if images[j] == i else 0 for j in range(n)] for i in range(n)]
            )
            full = mat_spectrum(P)
            reduced = dict(full.mult)
            reduced[unity(0, 1)] -= 1
            from hypermono.repkit import Spectrum

            assert Spectrum(reduced) == deleted_perm_spectrum(ct)

    def test_simple_types_5_to_10(self):
        for n in range(5, 11):
            got = {tuple(t) for t in simple_cycle_types(n)}
            want = {(n,)} | {
                tuple(sorted((k, n - k), reverse=True)) for k in range(1, n) if gcd(k, n) == 1
            }
            assert got == want
