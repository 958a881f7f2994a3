"""T(t, n) counting, the equal-factor characterization, the 2n boundary."""

import pytest

from factorwords import (Budget, OutOfValidityRegion, Word, check_conjecture_2n,
                         check_theorem1, count_T_bruteforce, count_T_closed,
                         counterexample_family, equal_factor_pairs,
                         group_words_by_factors, period, t_table)


class TestBruteForce:
    @pytest.mark.parametrize("t,n,expected", [
        (5, 3, 27), (8, 4, 216), (1, 1, 2), (2, 1, 3), (10, 2, 12),
    ])
    def test_known_cells(self, t, n, expected):
        assert count_T_bruteforce(t, n).value == expected

    def test_diagonal(self):
        for n in (1, 2, 3, 5, 8):
            cell = count_T_bruteforce(n, n)
            assert cell.value == 1 << n and cell.method == "brute"

    def test_validation(self):
        with pytest.raises(ValueError):
            count_T_bruteforce(3, 4)
        with pytest.raises(ValueError):
            count_T_bruteforce(25, 3)

    def test_worker_independence(self):
        a = count_T_bruteforce(12, 4, Budget.default(workers=1))
        b = count_T_bruteforce(12, 4, Budget.default(workers=4))
        assert a.value == b.value


class TestClosedForm:
    @pytest.mark.parametrize("t,n,expected", [
        (7, 4, 114), (9, 5, 474), (5, 3, 27), (11, 6, 1965),
    ])
    def test_known_cells(self, t, n, expected):
        assert count_T_closed(t, n).value == expected

    def test_diagonal_is_power_of_two(self):
        for t in (1, 2, 5, 9):
            assert count_T_closed(t, t).value == 1 << t

    def test_region_enforced(self):
        for t, n in ((8, 4), (3, 4), (12, 5)):
            with pytest.raises(OutOfValidityRegion):
                count_T_closed(t, n)

    def test_matches_brute_on_region_spot(self):
        for n in range(1, 6):
            for t in range(n, 2 * n):
                assert count_T_closed(t, n).value == count_T_bruteforce(t, n).value


class TestEqualFactorPairs:
    def test_known_pair(self):
        pairs = equal_factor_pairs(6, 3)
        hit = [p for p in pairs
               if {str(p.w), str(p.w2)} == {"010110", "011010"}]
        assert len(hit) == 1
        p = hit[0]
        assert p.period_w == p.period_w2 == 5 and p.root_conjugate

    def test_same_length_words_with_same_set(self):
        for p in equal_factor_pairs(6, 3):
            assert p.w != p.w2 and len(p.w) == len(p.w2) == 6

    def test_diagonal_empty(self):
        for t in (1, 3, 5):
            assert equal_factor_pairs(t, t) == []

    def test_boundary_family(self):
        for k in range(3, 7):
            x, y, px, py = counterexample_family(k)
            assert period(x).period == px == k + 1
            assert period(y).period == py == k
            pairs = equal_factor_pairs(2 * k - 1, k - 1)
            hit = [p for p in pairs if {str(p.w), str(p.w2)} == {str(x), str(y)}]
            assert len(hit) == 1
            assert {hit[0].period_w, hit[0].period_w2} == {k, k + 1}


class TestTheorem1:
    def test_in_region_pass(self):
        assert check_theorem1(7, 4).passed
        assert check_theorem1(5, 3).passed

    def test_diagonal_vacuous(self):
        for n in range(1, 11):
            rep = check_theorem1(n, n)
            assert rep.passed and rep.nontrivial_classes == 0

    def test_region_guard(self):
        with pytest.raises(OutOfValidityRegion):
            check_theorem1(7, 3)

    def test_out_of_region_family_flagged(self):
        for k in range(3, 7):
            x, y, _, _ = counterexample_family(k)
            rep = check_theorem1(2 * k - 1, k - 1, allow_out_of_region=True)
            assert not rep.in_region
            assert not rep.forward_ok
            hits = [c for c in rep.counterexamples
                    if c.get("direction") == "forward"
                    and set(c["words"]) == {str(x), str(y)}]
            assert hits

    def test_class_sizes_equal_periods(self):
        # within the region, each non-singleton class has as many words as
        # its members' common period
        for t, n in ((5, 3), (7, 4), (9, 5)):
            k = t - n
            groups = group_words_by_factors(t, n)
            for codes in groups.values():
                if len(codes) < 2:
                    continue
                pis = {period(Word(t, c)).period for c in codes}
                assert len(pis) == 1
                p = pis.pop()
                assert p <= k + 1 and len(codes) == p


class TestConjecture2n:
    def test_small_orders_pass(self):
        for n in range(1, 7):
            assert check_conjecture_2n(n).passed

    def test_known_high_period_pair(self):
        rep = check_conjecture_2n(3)
        hp = [p for p in rep.high_period_pairs if "010110" in p["words"]]
        assert hp and hp[0]["periods"] == [5, 5]
        assert hp[0]["factorizations"] == [{"u": "0", "v": "1", "middle": "01"}]
        # the shape itself always appears ...
        assert not rep.shape_misses
        # ... but the tentative period == n + |u| law already fails here
        assert rep.period_law_misses

    def test_shape_always_found_up_to_six(self):
        for n in range(2, 7):
            assert not check_conjecture_2n(n).shape_misses

    def test_json_shape(self):
        doc = check_conjecture_2n(2).to_json_dict()
        assert doc["passed"] is True
        assert {"n", "t", "pair_count", "period_violations"} <= set(doc)


class TestGroupIdentity:
    def test_excess_accounts_for_the_count(self):
        # sum over classes of (size - 1) is exactly 2^t - T(t, n)
        for t in range(1, 13):
            for n in range(1, min(t, 8) + 1):
                groups = group_words_by_factors(t, n)
                excess = sum(len(v) - 1 for v in groups.values())
                assert (1 << t) - excess == count_T_bruteforce(t, n).value


class TestTable:
    def test_small_table(self):
        tab = t_table(8, 3)
        assert tab.get(5, 3).value == 27 and tab.get(5, 3).method == "both"
        assert tab.get(8, 3).value == 94 and tab.get(8, 3).method == "brute"
        assert tab.get(2, 3) is None
        row1 = [tab.get(t, 1).value for t in range(1, 9)]
        assert row1 == [2, 3, 3, 3, 3, 3, 3, 3]

    def test_emitters(self):
        tab = t_table(6, 2)
        csv = tab.to_csv()
        assert csv.splitlines()[0] == "n\\t,1,2,3,4,5,6"
        assert csv.splitlines()[2] == "2,,4,7,11,12,12"
        md = tab.to_markdown()
        assert md.splitlines()[0].startswith("| n\\t |")
        doc = tab.to_json_dict()
        cells = {(c["t"], c["n"]): c for c in doc["cells"]}
        assert cells[(3, 2)]["method"] == "both"
        assert cells[(6, 2)]["method"] == "brute"
