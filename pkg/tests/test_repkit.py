import pytest

from hypermono.algebra.cyc import Cyc, zeta
from hypermono.algebra.fq import FqMatrix, field
from hypermono.algebra.unity import unity
from hypermono.repkit import (
    CapExceeded,
    CycMatrix,
    Spectrum,
    alt2_character,
    closure,
    inner_product,
    m4,
    simple_spectrum,
    spectrum,
    sym2_character,
)


def perm_matrix(images):
    n = len(images)
    return CycMatrix.from_rows([[1 if images[j] == i else 0 for j in range(n)] for i in range(n)])


def monomial_group(q):
    """The translation/scaling monomial group with the full diagonal p-part."""
    z = zeta(q)
    diag = CycMatrix.from_rows(
        [[(z if (i == j == 0) else (1 if i == j else 0)) for j in range(q)] for i in range(q)]
    )
    T = perm_matrix([(v + 1) % q for v in range(q)])
    gen = 2 if q == 3 else 2  # a generator of (Z/q)* for prime q in {3, 5}
    S = perm_matrix([(gen * v) % q for v in range(q)])
    return closure([diag, T, S])


class TestClosure:
    def test_three_cycle(self):
        G = closure([perm_matrix([1, 2, 0])])
        assert G.order == 3

    def test_sl2_3(self):
        F3 = field(3)
        a = FqMatrix.from_rows(F3, [[0, 2], [1, 0]])
        b = FqMatrix.from_rows(F3, [[1, 1], [0, 1]])
        G = closure([a, b])
        assert G.order == 24
        sizes = sorted(len(c) for c in G.conjugacy_classes())
        assert sizes == [1, 1, 4, 4, 4, 4, 6]

    def test_monomial_model_order(self):
        G = monomial_group(3)
        assert G.order == 162  # 27 * 6

    def test_cap(self):
        F3 = field(3)
        a = FqMatrix.from_rows(F3, [[0, 2], [1, 0]])
        b = FqMatrix.from_rows(F3, [[1, 1], [0, 1]])
        with pytest.raises(CapExceeded):
            closure([a, b], cap=10)

    def test_singular_generator_rejected(self):
        F3 = field(3)
        with pytest.raises(ValueError):
            closure([FqMatrix.from_rows(F3, [[1, 0], [0, 0]])])


class TestSpectrum:
    def test_identity(self):
        s = spectrum(CycMatrix.identity(4))
        assert s.mult == {unity(0, 1): 4}

    def test_diag(self):
        s = spectrum(CycMatrix.from_rows([[1, 0], [0, -1]]))
        assert s.mult == {unity(0, 1): 1, unity(1, 2): 1}

    def test_three_cycle_fourier(self):
        s = spectrum(perm_matrix([1, 2, 0]))
        assert s.mult == {unity(0, 1): 1, unity(1, 3): 1, unity(2, 3): 1}
        assert simple_spectrum(s)

    def test_simple_spectrum_predicate(self):
        assert simple_spectrum(Spectrum({unity(0, 1): 1, unity(1, 2): 1}))
        assert not simple_spectrum(Spectrum({unity(0, 1): 2}))

    def test_power_pushforward(self):
        g = perm_matrix([1, 2, 3, 0])
        s = spectrum(g)
        for k in (2, 3, 5):
            assert s.power_pushforward(k) == spectrum(g**k, order=4)

    def test_multiplicities_sum_to_dim(self):
        for g in monomial_group(3).elements[:40]:
            assert spectrum(g).dimension == 3

    def test_canonical_rotation_idempotent(self):
        s = Spectrum({unity(1, 5): 1, unity(2, 5): 1, unity(3, 5): 1, unity(4, 5): 1})
        c = s.canonical_rotation()
        assert c == c.canonical_rotation()
        assert c.mult == {unity(0, 1): 1, unity(1, 5): 1, unity(2, 5): 1, unity(3, 5): 1}

    def test_non_integral_multiplicity_raises(self):
        # trace data of a non-semisimple (wrong-order) input
        with pytest.raises(ValueError):
            Spectrum.from_power_traces(2, [Cyc.from_int(2), Cyc.from_int(1)])


class TestM4:
    def test_trivial_group(self):
        G = closure([CycMatrix.identity(1)])
        assert m4(G) == 1

    def test_monomial_q3(self):
        G = monomial_group(3)
        assert m4(G) == 3
        # fourth moment 3 comes with an irreducible alternating square and a
        # two-piece symmetric square
        assert inner_product(G, alt2_character(), alt2_character()) == 1
        assert inner_product(G, sym2_character(), sym2_character()) == 2

    def test_m4_conjugation_invariance(self):
        G = monomial_group(3)
        h = G.elements[7]
        hinv = h ** (G.element_order(h) - 1)
        assert m4(G, rep=lambda g: h * g * hinv) == 3
