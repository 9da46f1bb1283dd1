import itertools

import pytest

from qtableaux.characters import d_so, dimension
from qtableaux.shapes import Partition, TooFewRows, partitions_up_to
from qtableaux.tableaux import (
    BOTH,
    NEGATIVE,
    NEITHER,
    POSITIVE,
    Family,
    ShapeNotFull,
    Tableau,
    alphabet,
    classify_even,
    enumerate_tableaux,
    is_admissible,
    is_orthogonal,
    is_semistandard,
    is_symplectic,
    parse_symbol,
    parse_tableau,
    rank_str,
    rank_value,
)

COLUMN = Partition((1, 1))


def column(text, family, n=2):
    return parse_tableau(text, family, n)


class TestSymbols:
    def test_ranks_order_alphabet(self):
        # 1 < 1~ < 2 < 2~ < inf for n = 2
        assert [parse_symbol(s, 2) for s in ("1", "1~", "2", "2~", "inf")] == [1, 2, 3, 4, 5]

    def test_values(self):
        assert rank_value(1, 2) == 1
        assert rank_value(2, 2) == -1
        assert rank_value(3, 2) == 2
        assert rank_value(4, 2) == -2
        assert rank_value(5, 2) == 0  # inf

    def test_strings(self):
        assert [rank_str(r, 2) for r in (1, 2, 3, 4, 5)] == ["1", "1~", "2", "2~", "inf"]

    def test_alphabets(self):
        assert alphabet(Family.GL, 3) == [1, 3, 5]
        assert alphabet(Family.SP, 2) == [1, 2, 3, 4]
        assert alphabet(Family.EVEN_O, 2) == [1, 2, 3, 4]
        assert alphabet(Family.ODD_O, 2) == [1, 2, 3, 4, 5]


class TestRendering:
    def test_column_render(self):
        assert column("1/2~", Family.SP).render() == "1/2~"

    def test_multicolumn_render_roundtrip(self):
        t = parse_tableau("1,2~,inf/2", Family.ODD_O, 2)
        assert t.render() == "1,2~,inf/2"
        assert t.shape.parts == (3, 1)
        assert t.entry(1, 3) == 5

    def test_empty(self):
        t = parse_tableau("-", Family.SP, 2)
        assert t.shape.parts == ()
        assert t.render() == "-"


class TestSemistandard:
    def test_column_increasing(self):
        assert is_semistandard(column("1/2", Family.SP))

    def test_column_decreasing(self):
        assert not is_semistandard(column("2/1", Family.SP))

    def test_row_repeat_allowed(self):
        assert is_semistandard(parse_tableau("1,1", Family.SP, 2))

    def test_column_repeat_rejected(self):
        assert not is_semistandard(column("1/1", Family.SP))


class TestSymplectic:
    def test_row_bound(self):
        assert is_symplectic(column("1/2", Family.SP))
        # row 2 entry 1~ is below the symbol 2
        assert not is_symplectic(column("1/1~", Family.SP))
        assert is_symplectic(column("2/2~", Family.SP))

    def test_top_row_unconstrained(self):
        assert is_symplectic(parse_tableau("2~", Family.SP, 2))


class TestOrthogonal:
    def test_column_one_one_bar_admissible(self):
        assert is_orthogonal(column("1/1~", Family.EVEN_O))

    def test_odd_infinity_column(self):
        assert is_orthogonal(column("2~/inf", Family.ODD_O))

    def test_counts_from_listings(self):
        assert sum(1 for _ in enumerate_tableaux(Family.EVEN_O, COLUMN, 2)) == 6
        assert sum(1 for _ in enumerate_tableaux(Family.ODD_O, COLUMN, 2)) == 10

    def test_missing_support_above_rejected(self):
        # Row (1, 1~) on one row with n = 1: the 1~ would need a 1 above it.
        assert not is_orthogonal(parse_tableau("1,1~", Family.EVEN_O, 1))
        assert is_orthogonal(parse_tableau("1,1", Family.EVEN_O, 1))
        assert is_orthogonal(parse_tableau("1~,1~", Family.EVEN_O, 1))

    def test_pattern_with_support_above_accepted(self):
        # Row 2 is (2, 2~) with the 2~ sitting under a 2, which is exactly
        # what the bound pattern demands, so this one is in.
        t = parse_tableau("1,2/2,2~", Family.EVEN_O, 2)
        assert is_semistandard(t)
        assert is_orthogonal(t)

    def test_pattern_without_support_above_rejected(self):
        # Same counts, but the 2~ sits under a 1 instead of a 2.
        t = parse_tableau("1,1/2,2~", Family.EVEN_O, 2)
        assert is_semistandard(t)
        assert not is_orthogonal(t)

    def test_two_column_count_condition_pair(self):
        # Shape (2,1,1), n = 2: column one holds three entries at most 2~
        # and column two holds one, with the 2~ at the bottom of column one
        # and a 2 atop column two.  The entry above the 2~ must then be 2.
        good = parse_tableau("1,2/2/2~", Family.EVEN_O, 2)
        assert is_semistandard(good)
        assert is_orthogonal(good)
        bad = parse_tableau("1,2/1~/2~", Family.EVEN_O, 2)
        assert is_semistandard(bad)
        assert not is_orthogonal(bad)


class TestInfinity:
    def test_repeats_in_row(self):
        t = parse_tableau("inf,inf", Family.ODD_O, 1)
        assert is_admissible(t)

    def test_no_repeat_in_column(self):
        t = parse_tableau("inf/inf", Family.ODD_O, 2)
        assert not is_semistandard(t)

    def test_infinity_not_allowed_in_even_family(self):
        t = parse_tableau("inf", Family.EVEN_O, 2)
        assert not is_admissible(t)


class TestStats:
    def test_sp_column_one_two(self):
        st = column("1/2", Family.SP).stats()
        assert st.entry_sum == 3
        assert st.r == 2
        assert 2 * st.entry_sum - st.r == 4

    def test_sp_column_two_twobar(self):
        st = column("2/2~", Family.SP).stats()
        assert st.entry_sum == 0
        assert st.r == 0

    def test_odd_column_with_infinity(self):
        st = column("2~/inf", Family.ODD_O).stats()
        assert st.entry_sum == -2
        assert st.r_plus == 0
        assert st.r_minus == 1
        assert 2 * st.entry_sum == -4

    def test_weight_vector(self):
        st = column("1/2~", Family.SP).stats()
        assert st.weight == (1, -1)

    def test_box_count_identity(self):
        for t in enumerate_tableaux(Family.ODD_O, Partition((2, 1)), 2):
            st = t.stats()
            infinities = sum(1 for row in t.rows for x in row if x == 5)
            assert st.r_plus + st.r_minus + infinities == t.shape.size


class TestEnumeration:
    def test_sp_listing(self):
        renders = [t.render() for t in enumerate_tableaux(Family.SP, COLUMN, 2)]
        assert renders == ["1/2", "1/2~", "1~/2", "1~/2~", "2/2~"]

    def test_even_o_listing(self):
        renders = [t.render() for t in enumerate_tableaux(Family.EVEN_O, COLUMN, 2)]
        assert renders == ["1/1~", "1/2", "1/2~", "1~/2", "1~/2~", "2/2~"]

    def test_odd_o_listing(self):
        renders = [t.render() for t in enumerate_tableaux(Family.ODD_O, COLUMN, 2)]
        assert renders == [
            "1/1~", "1/2", "1/2~", "1/inf", "1~/2",
            "1~/2~", "1~/inf", "2/2~", "2/inf", "2~/inf",
        ]

    def test_too_few_rows(self):
        with pytest.raises(TooFewRows):
            list(enumerate_tableaux(Family.SP, Partition((1, 1, 1)), 2))

    def test_gl_small_n_is_empty_not_an_error(self):
        assert list(enumerate_tableaux(Family.GL, Partition((1, 1)), 1)) == []

    def test_empty_shape_has_one_tableau(self):
        for family in (Family.GL, Family.SP, Family.ODD_O, Family.EVEN_O):
            ts = list(enumerate_tableaux(family, Partition(), 2))
            assert len(ts) == 1
            assert ts[0].shape.parts == ()

    def test_lexicographic_order_and_no_duplicates(self):
        for family in (Family.GL, Family.SP, Family.ODD_O, Family.EVEN_O):
            for lam in partitions_up_to(4):
                n = max(2, lam.length)
                seqs = [sum(t.rows, ()) for t in enumerate_tableaux(family, lam, n)]
                assert seqs == sorted(seqs)
                assert len(seqs) == len(set(seqs))

    def test_brute_force_completeness(self):
        # Filtering every raw filling through the predicates must give the
        # same set the pruned search produces.
        for lam in partitions_up_to(5):
            boxes = lam.size
            for family in (Family.GL, Family.SP, Family.ODD_O, Family.EVEN_O):
                n_lo = 1 if family is Family.GL else max(1, lam.length)
                for n in range(n_lo, 4):
                    found = {t.render() for t in enumerate_tableaux(family, lam, n)}
                    expected = set()
                    for filling in itertools.product(alphabet(family, n), repeat=boxes):
                        rows = []
                        pos = 0
                        cheap_ok = True
                        for w in lam.parts:
                            row = filling[pos:pos + w]
                            if any(b < a for a, b in zip(row, row[1:])):
                                cheap_ok = False
                                break
                            rows.append(row)
                            pos += w
                        if not cheap_ok:
                            continue
                        t = Tableau(lam, tuple(rows), family, n)
                        if is_admissible(t):
                            expected.add(t.render())
                    assert found == expected, (family, lam, n)

    def test_symplectic_weight_multiset_symmetric_under_negation(self):
        for lam in partitions_up_to(4):
            for n in range(max(1, lam.length), 4):
                weights = sorted(t.stats().weight for t in enumerate_tableaux(Family.SP, lam, n))
                negated = sorted(tuple(-w for w in wt) for wt in weights)
                assert weights == negated, (lam, n)

    def test_counts_match_closed_form_dimensions(self):
        for lam in partitions_up_to(4):
            for family in (Family.GL, Family.SP, Family.ODD_O, Family.EVEN_O):
                for n in range(max(1, lam.length), 4):
                    count = sum(1 for _ in enumerate_tableaux(family, lam, n))
                    assert count == dimension(family, lam, n), (family, lam, n)


class TestClassification:
    def test_example_classes(self):
        labelled = {t.render(): classify_even(t) for t in enumerate_tableaux(Family.EVEN_O, COLUMN, 2)}
        assert labelled == {
            "1/2": POSITIVE,
            "1~/2~": POSITIVE,
            "2/2~": BOTH,
            "1/2~": NEGATIVE,
            "1~/2": NEGATIVE,
            "1/1~": NEITHER,
        }

    def test_shape_not_full(self):
        t = parse_tableau("1", Family.EVEN_O, 2)
        with pytest.raises(ShapeNotFull):
            classify_even(t)

    def test_single_row_n_one(self):
        assert classify_even(parse_tableau("1", Family.EVEN_O, 1)) == NEGATIVE
        assert classify_even(parse_tableau("1~", Family.EVEN_O, 1)) == POSITIVE

    def test_split_counts_match_half_dimension(self):
        for lam in partitions_up_to(5):
            n = lam.length
            if n == 0 or n > 3:
                continue
            pos = neg = 0
            for t in enumerate_tableaux(Family.EVEN_O, lam, n):
                cls = classify_even(t)
                if cls in (POSITIVE, BOTH):
                    pos += 1
                if cls in (NEGATIVE, BOTH):
                    neg += 1
            assert pos == neg == d_so(lam, n), (lam, n)
