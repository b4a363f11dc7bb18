from math import gcd

import pytest

from hypermono.algebra.unity import unity
from hypermono.chargeom import DescriptorError, i0_simple, i0_spectrum, parse_charset
from hypermono.constructions import (
    alt2_family,
    parse_image_string,
    sawin,
    special_family,
    table1_data,
    table3_consistency,
    table3_entries,
    table12_data,
)
from hypermono.weilgl import deleted_perm_spectrum


class TestSawin:
    def test_m11_row(self):
        h = sawin(11, 1, 3, "quotient-at-C")
        assert h.type == (11, 3)
        assert h.upstairs == tuple(sorted(parse_charset("Char(11)")))
        assert h.downstairs == tuple(sorted(parse_charset("Char(4)\\{1}")))

    def test_m24_row(self):
        h = sawin(23, 1, 2, "i")
        assert h.type == (23, 2)
        assert h.downstairs == tuple(sorted(parse_charset("Char*(3)")))

    def test_quotient_at_A(self):
        h = sawin(2, 5, 2, "ii")
        assert h.type == (6, 5)
        assert h.upstairs == tuple(sorted(parse_charset("Char(7)\\{1}")))
        assert h.downstairs == tuple(sorted(parse_charset("Char(5)")))

    def test_preconditions(self):
        with pytest.raises(DescriptorError):
            sawin(4, 2, 3, "i")  # gcd != 1
        with pytest.raises(DescriptorError):
            sawin(5, 1, 5, "i")  # p does not divide A+B
        with pytest.raises(DescriptorError):
            sawin(5, 2, 3, "ii")  # p does not divide A

    def test_disjointness_scans(self):
        """Construction succeeds exactly when only the trivial character
        cancels, i.e. when the coprimality/divisibility preconditions hold."""
        for a in range(1, 13):
            for b in range(1, 13):
                if gcd(a, b) != 1:
                    continue
                for p in (2, 3, 5, 7):
                    if (a + b) % p == 0:
                        h = sawin(a, b, p, "i")
                        assert h.D == a + b - 1

    def test_bit_exact_match_to_catalog(self):
        entries = table3_entries()
        assert sawin(11, 1, 3, "i") == entries[2].descriptor
        assert sawin(23, 1, 2, "i") == entries[5].descriptor


class TestAlt2:
    def test_n_cycle_family(self):
        h, grp, ct = alt2_family(7, None, 2)
        assert h.type == (6, 5) and grp == "A7" and ct == [7]
        h, grp, ct = alt2_family(8, None, 3)
        assert grp == "S8" and ct == [8]

    def test_two_cycle_family(self):
        h, grp, ct = alt2_family(8, 3, 2)
        assert grp == "A8" and ct == [5, 3]
        assert i0_spectrum(h) == deleted_perm_spectrum([5, 3])

    def test_n_cycle_spectrum_matches(self):
        h, _, ct = alt2_family(9, None, 2)
        assert i0_spectrum(h) == deleted_perm_spectrum([9])

    def test_w_equals_p_minus_1(self):
        for n in range(5, 31):
            for p in (2, 3, 5, 7, 11, 13):
                if p <= n - 3 and n % p != 0:
                    h, _, _ = alt2_family(n, None, p)
                    assert h.W == p - 1
                    assert i0_simple(h)

    def test_disjointness_fails_exactly_when_p_divides_n(self):
        for n in range(5, 31):
            for p in (2, 3, 5, 7, 11, 13):
                if p > n - 3:
                    continue
                if n % p == 0:
                    with pytest.raises(DescriptorError):
                        alt2_family(n, None, p)
                else:
                    alt2_family(n, None, p)

    def test_exception_routing(self):
        _, grp, _ = alt2_family(12, 1, 3)
        assert grp == "M11"
        _, grp, _ = alt2_family(24, 1, 2)
        assert grp == "M24"
        _, grp, _ = alt2_family(6, 1, 2)
        assert grp == "A5"

    def test_k1_p_power_rejected(self):
        with pytest.raises(DescriptorError):
            alt2_family(9, 1, 3)

    def test_preconditions(self):
        with pytest.raises(DescriptorError):
            alt2_family(8, 2, 2)  # gcd(k, n) != 1
        with pytest.raises(DescriptorError):
            alt2_family(9, 2, 2)  # p does not divide n


class TestSpecialFamilies:
    def test_f_n(self):
        h = special_family("F_N", {"N": 5}, 3)
        assert h.type == (4, 0)
        assert h.upstairs == tuple(sorted(parse_charset("Char(5)\\{1}")))

    def test_g_d(self):
        h = special_family("G_D", {"D": 7, "chi": "1/3"}, 5)
        assert h.type == (7, 1)
        rho = h.downstairs[0]
        assert (7 * rho) == unity(1, 3)

    def test_p_divides_rejected(self):
        with pytest.raises(DescriptorError):
            special_family("F_N", {"N": 6}, 3)
        with pytest.raises(DescriptorError):
            special_family("G_D", {"D": 10, "chi": "1/3"}, 5)


class TestTables:
    def test_row_count_and_battery(self):
        entries = table3_entries()
        assert len(entries) == 19
        rep = table3_consistency()
        assert rep["all_passed"]
        assert len(rep["rows"]) == 19

    def test_every_row_i0_simple(self):
        for e in table3_entries():
            assert i0_simple(e.descriptor), e.group

    def test_expected_p_parts(self):
        expected = {
            ("M11", 3): 9,
            ("M22", 2): 8,
            ("M23", 2): 16,
            ("M24", 2): 64,
            ("J2", 5): 25,
            ("J3", 2): 16,
            ("Ru", 5): 25,
            ("PSU4(3)", 3): 81,
            ("Sp6(2)", 7): 7,
            ("O8+(2)", 7): 7,
            ("PSL3(4)", 3): 9,
            ("G2(3)", 13): 13,
            ("2B2(8)", 13): 13,
        }
        rep = table3_consistency()
        for row in rep["rows"]:
            key = (row["group"], row["p"])
            if key in expected:
                assert row["wild_image_order"] == expected[key], key

    def test_marker_and_status_preserved(self):
        entries = table3_entries()
        assert entries[0].marker == "WS" and entries[1].marker is None  # the two rank-10 rows
        assert entries[2].marker == "WS"
        assert {(e.group, e.marker) for e in entries if e.marker} == {("M11", "WS"), ("M24", "WS")}
        statuses = {e.status for e in entries}
        assert statuses == {"proved", "conjectured"}

    def test_rank_matches_parse(self):
        for e in table3_entries():
            assert e.descriptor.D == e.rank, e.group

    def test_image_string_parser(self):
        assert parse_image_string("3^2:8") == (9, 8)
        assert parse_image_string("7:6") == (7, 6)
        assert parse_image_string("3^(1+4):20") == (None, 20)
        assert parse_image_string("2-group:15") == (None, 15)

    def test_table1_statusmap(self):
        data = table1_data()
        impossible = {(r["S"], r["dim"]) for r in data if r["status"] == "impossible"}
        assert ("M12", 10) in impossible and ("HS", 22) in impossible
        assert ("Sp6(2)", 15) in impossible

    def test_table12_payload(self):
        data = table12_data()
        assert data["table2"]["He"] == {"meo": 42, "min_dim": 51}
        assert data["table1_meo_mindim"]["J2"] == {"meo": 24, "min_dim": 6}
