from __future__ import annotations

import json
from math import gcd

import pytest

from neckslime import (
    Code,
    build_sigma,
    canonicalize,
    count_necklaces,
    enumerate_codes,
    enumerate_necklaces,
    load_riwi_map,
    neck_class,
    prime_bijection,
    riwi_from_pairs,
    riwi_rotation,
    riwi_slime,
    sigma_with_constant,
    verify_riwi,
)


class TestNeckClass:
    def test_shared_orbit(self):
        nc = neck_class(Code((3, 0, 0)))
        assert nc.q == 1
        assert nc.representative == Code((0, 0, 3))
        assert set(nc.members) == {Code((3, 0, 0)), Code((0, 3, 0)), Code((0, 0, 3))}
        assert all(m.weighted_sum() == 0 for m in nc.members)

    def test_members_follow_stride_from_rep(self):
        nc = neck_class(Code((3, 0, 0)))
        assert nc.members == tuple(nc.representative.rotate(i) for i in range(3))

    def test_coprime_singleton(self):
        nc = neck_class(Code((4, 2, 1)))
        assert nc.q == 3 and nc.members == (Code((4, 2, 1)),)

    def test_class_size_is_gcd(self):
        for n, k in [(4, 6), (6, 4), (6, 9), (5, 10)]:
            for f in enumerate_codes(n, k, full_period_only=True):
                assert len(neck_class(f).members) == gcd(n, k)
                break

    def test_low_period_rejected(self):
        with pytest.raises(ValueError):
            neck_class(Code((1, 1, 1)))
        with pytest.raises(ValueError):
            neck_class(Code((2, 0, 2, 0)))


class TestRiwiRotation:
    def test_coprime_required(self):
        with pytest.raises(ValueError):
            riwi_rotation(3, 3)
        with pytest.raises(ValueError):
            riwi_rotation(6, 4)

    def test_shift_on_sample_code(self):
        chi = riwi_rotation(3, 7)
        g = chi.apply(Code((2, 1, 4)))
        assert g.weighted_sum() == 1
        assert chi.invert(g) == Code((2, 1, 4))

    def test_round_trip_everywhere(self):
        chi = riwi_rotation(3, 7)
        for f in enumerate_codes(3, 7):
            assert chi.invert(chi.apply(f)) == f

    def test_descriptor(self):
        assert riwi_rotation(4, 3).descriptor == "rotation"


class TestRiwiSlime:
    def test_odd_prime_required(self):
        with pytest.raises(ValueError):
            riwi_slime(2, 3)
        with pytest.raises(ValueError):
            riwi_slime(9, 4)

    def test_golden_chain(self):
        chi = riwi_slime(3, 3)
        assert chi.apply(Code((3, 0, 0))) == Code((2, 1, 0))
        assert chi.apply(chi.apply(Code((3, 0, 0)))) == Code((1, 2, 0))

    def test_rotation_equivariance_sample(self):
        chi = riwi_slime(3, 3)
        assert chi.apply(Code((3, 0, 0)).rotate(1)) == Code((2, 1, 0)).rotate(1)
        assert chi.apply(Code((0, 0, 3))) == Code((1, 0, 2))


class TestVerifyRiwi:
    def test_slime_3_3(self):
        report = verify_riwi(riwi_slime(3, 3), 3, 3)
        assert report.passed
        assert report.checked == 9  # all full-period codes, every residue
        assert report.failure_count == 0

    def test_rotation_3_7(self):
        report = verify_riwi(riwi_rotation(3, 7), 3, 7)
        assert report.passed and report.checked == 36

    def test_identity_fails_on_shift(self):
        domain = list(enumerate_codes(3, 3, full_period_only=True))
        report = verify_riwi(riwi_from_pairs([(f, f) for f in domain], "identity"), 3, 3)
        assert not report.passed
        assert report.failure_count == 9
        assert all("weighted sum" in msg for msg in report.failures)

    def test_partial_map_fails(self):
        domain = list(enumerate_codes(3, 3, full_period_only=True))
        chi_good = riwi_slime(3, 3)
        pairs = [(f, chi_good.apply(f)) for f in domain[:4]]
        report = verify_riwi(riwi_from_pairs(pairs, "partial"), 3, 3)
        assert not report.passed

    def test_empty_domain_passes(self):
        # no full-period codes sum to 0 unless n = 1
        report = verify_riwi(riwi_slime(5, 3), 5, 0)
        assert report.passed and report.checked == 0

    def test_report_json_shape(self):
        d = verify_riwi(riwi_slime(3, 3), 3, 3).to_json_dict()
        assert list(d) == ["n", "k", "riwi", "checked", "passed", "failure_count", "failures"]
        json.dumps(d)


class TestBuildSigma:
    def test_worked_class(self):
        table = build_sigma(3, 3, riwi_slime(3, 3))
        got = {c: m.canonical for c, m in table.pairs}
        assert got == {
            Code((0, 0, 3)): (0, 0, 3),
            Code((0, 3, 0)): (0, 2, 1),
            Code((3, 0, 0)): (0, 1, 2),
        }

    def test_coprime_case_is_canonicalize(self):
        table = build_sigma(3, 7, riwi_rotation(3, 7))
        assert all(m == canonicalize(c) for c, m in table.pairs)
        assert len(table.pairs) == 12

    def test_covers_full_period_zero_class(self):
        for n, k in [(3, 3), (5, 10), (4, 3), (6, 5)]:
            chi = riwi_slime(n, k) if n % 2 and gcd(n, k) > 1 else riwi_rotation(n, k)
            table = build_sigma(n, k, chi)
            expected = list(enumerate_codes(n, k, t=0, full_period_only=True))
            assert [c for c, _ in table.pairs] == expected

    def test_bijective_onto_full_period_necklaces(self):
        table = build_sigma(5, 10, riwi_slime(5, 10))
        necks = [m for _, m in table.pairs]
        assert len(set(necks)) == len(necks) == 200
        assert set(necks) == set(enumerate_necklaces(5, 10, full_period_only=True))

    def test_unknown_chooser(self):
        with pytest.raises(ValueError):
            build_sigma(3, 3, riwi_slime(3, 3), chooser="median")

    def test_metadata(self):
        table = build_sigma(3, 3, riwi_slime(3, 3), chooser="lexmax")
        assert table.riwi == "slime" and table.chooser == "lexmax"


class TestPrimeBijection:
    def test_worked_3_3(self):
        table = prime_bijection(3, 3)
        assert [(c.entries, m.canonical) for c, m in table.pairs] == [
            ((0, 0, 3), (0, 0, 3)),
            ((0, 3, 0), (0, 2, 1)),
            ((1, 1, 1), (1, 1, 1)),
            ((3, 0, 0), (0, 1, 2)),
        ]

    def test_worked_2_4(self):
        table = prime_bijection(2, 4)
        assert {(c.entries, m.canonical) for c, m in table.pairs} == {
            ((4, 0), (0, 4)),
            ((0, 4), (1, 3)),
            ((2, 2), (2, 2)),
        }

    def test_worked_2_6(self):
        table = prime_bijection(2, 6)
        assert {(c.entries, m.canonical) for c, m in table.pairs} == {
            ((6, 0), (0, 6)),
            ((4, 2), (2, 4)),
            ((2, 4), (3, 3)),
            ((0, 6), (1, 5)),
        }

    def test_n2_odd_content(self):
        table = prime_bijection(2, 3)
        assert table.riwi == "rotation"
        assert {(c.entries, m.canonical) for c, m in table.pairs} == {
            ((1, 2), (1, 2)),
            ((3, 0), (0, 3)),
        }

    def test_n2_even_descriptor(self):
        assert prime_bijection(2, 4).riwi == "custom:n2-parity"

    def test_composite_rejected(self):
        for n in (1, 4, 6, 9):
            with pytest.raises(ValueError):
                prime_bijection(n, 3)

    @pytest.mark.parametrize("n,k", [(2, 0), (2, 7), (3, 0), (3, 6), (3, 7), (5, 5), (5, 10), (7, 4)])
    def test_bijective(self, n, k):
        table = prime_bijection(n, k)
        codes = [c for c, _ in table.pairs]
        necks = [m for _, m in table.pairs]
        assert codes == list(enumerate_codes(n, k, t=0))
        assert len(set(necks)) == len(necks)
        assert set(necks) == set(enumerate_necklaces(n, k))
        assert len(table.pairs) == count_necklaces(n, k)

    def test_pinned_5_10_size(self):
        assert len(prime_bijection(5, 10).pairs) == 201

    def test_constant_pairs_with_constant(self):
        table = prime_bijection(5, 10)
        got = dict(table.pairs)
        assert got[Code((2, 2, 2, 2, 2))].canonical == (2, 2, 2, 2, 2)

    def test_lexmax_chooser_still_bijective(self):
        for n, k in [(3, 3), (5, 10), (2, 6)]:
            table = prime_bijection(n, k, chooser="lexmax")
            necks = [m for _, m in table.pairs]
            assert len(set(necks)) == len(necks)
            assert set(necks) == set(enumerate_necklaces(n, k))


class TestCustomMaps:
    def test_duplicate_source_rejected(self):
        f = Code((3, 0, 0))
        with pytest.raises(ValueError):
            riwi_from_pairs([(f, f), (f, Code((2, 1, 0)))])

    def test_uncovered_apply_raises(self):
        chi = riwi_from_pairs([(Code((3, 0, 0)), Code((2, 1, 0)))])
        with pytest.raises(ValueError):
            chi.apply(Code((0, 3, 0)))
        with pytest.raises(ValueError):
            chi.invert(Code((3, 0, 0)))

    def test_load_round_trip(self, tmp_path):
        chi = riwi_rotation(4, 3)
        rows = [
            {"from": list(f.entries), "to": list(chi.apply(f).entries)}
            for f in enumerate_codes(4, 3, full_period_only=True)
        ]
        path = tmp_path / "rot43.json"
        path.write_text(json.dumps(rows))
        loaded = load_riwi_map(path)
        assert loaded.descriptor == "custom:rot43"
        assert verify_riwi(loaded, 4, 3).passed

    def test_load_rejects_garbage(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"from": [1], "to": [1]}))
        with pytest.raises(ValueError):
            load_riwi_map(path)
        path.write_text(json.dumps([{"src": [1]}]))
        with pytest.raises(ValueError):
            load_riwi_map(path)

    def test_sigma_with_constant_matches_prime_path(self):
        direct = sigma_with_constant(3, 3, riwi_slime(3, 3))
        assert direct.pairs == prime_bijection(3, 3).pairs


class TestTableSerialization:
    def test_json_schema(self):
        d = prime_bijection(3, 3).to_json_dict()
        assert list(d) == ["n", "k", "riwi", "chooser", "pairs"]
        assert d["riwi"] == "slime" and d["chooser"] == "lexmin"
        assert d["pairs"][0] == {"code": [0, 0, 3], "necklace": [0, 0, 3], "word": "BBBWWW"}
        json.dumps(d)

    def test_csv_rows(self):
        rows = prime_bijection(3, 3).to_csv_rows()
        assert rows[0] == ["code", "necklace", "word"]
        assert rows[1] == ["0,0,3", "0,0,3", "BBBWWW"]
        assert len(rows) == 5
