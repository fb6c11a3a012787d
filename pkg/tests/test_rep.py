import pytest

from psing import (
    EmptyPartsError,
    NotPrimeError,
    PartExceedsPrimeError,
    PartNotPositiveError,
    PrimeRangeError,
    RepSyntaxError,
    Representation,
    format_parts,
    invariants,
    is_prime,
    parse_parts_text,
    parse_representation,
    rep_from_text,
)


def naive_weight(parts):
    # double loop, independent of the closed form in the package
    return sum(sum(i for i in range(1, x)) for x in parts)


class TestPrimality:
    def test_small_values(self):
        def by_trial_division(n):
            return n >= 2 and all(n % k for k in range(2, n))

        for n in range(500):
            assert is_prime(n) == by_trial_division(n)

    def test_carmichael_numbers_rejected(self):
        for n in (561, 1105, 1729, 2465, 2821, 6601, 8911):
            assert not is_prime(n)

    def test_large_values(self):
        assert is_prime(2**61 - 1)
        assert not is_prime((2**31 - 1) ** 2)
        assert is_prime(1_000_000_007)
        assert not is_prime(1_000_000_007 * 998_244_353)

    def test_beyond_deterministic_range(self):
        with pytest.raises(PrimeRangeError):
            is_prime(10**25)


class TestParseRepresentation:
    def test_basic(self):
        rep = parse_representation(5, [4])
        assert rep.p == 5
        assert rep.parts == (4,)

    def test_part_exceeds_p(self):
        with pytest.raises(PartExceedsPrimeError):
            parse_representation(5, [6])

    def test_not_prime(self):
        with pytest.raises(NotPrimeError):
            parse_representation(4, [2])

    def test_empty_parts(self):
        with pytest.raises(EmptyPartsError):
            parse_representation(5, [])

    def test_part_not_positive(self):
        with pytest.raises(PartNotPositiveError):
            parse_representation(5, [3, 0])

    def test_canonical_order_and_equality(self):
        a = parse_representation(7, [1, 3, 2, 3])
        b = parse_representation(7, [3, 3, 2, 1])
        assert a.parts == (3, 3, 2, 1)
        assert a == b
        assert hash(a) == hash(b)

    def test_part_equal_to_p_allowed(self):
        assert parse_representation(5, [5]).parts == (5,)


class TestInvariants:
    def test_trivial_part(self):
        assert invariants(parse_representation(7, [1])).D == 0

    def test_full_part(self):
        assert invariants(parse_representation(5, [5])).D == 10

    def test_single_four_over_five(self):
        inv = invariants(parse_representation(5, [4]))
        assert (inv.d, inv.l, inv.codim, inv.D, inv.cm) == (4, 1, 3, 6, False)

    def test_two_twos_over_two(self):
        inv = invariants(parse_representation(2, [2, 2]))
        assert (inv.d, inv.l, inv.codim, inv.D, inv.cm) == (4, 2, 2, 2, True)

    def test_indecomposable_weight_table(self):
        # triangular numbers of size-1: 0, 1, 3, 6, 10
        weights = [invariants(parse_representation(5, [k])).D for k in range(1, 6)]
        assert weights == [0, 1, 3, 6, 10]

    @pytest.mark.parametrize(
        "p,parts",
        [(2, [2, 1, 2]), (5, [4, 3, 3, 1]), (13, [13, 12, 1, 1]), (3, [2])],
    )
    def test_weight_against_double_loop(self, p, parts):
        rep = parse_representation(p, parts)
        assert invariants(rep).D == naive_weight(parts)

    def test_weight_additive_over_concatenation(self):
        a = parse_representation(7, [6, 2])
        b = parse_representation(7, [5, 5, 1])
        both = parse_representation(7, [6, 2, 5, 5, 1])
        assert invariants(both).D == invariants(a).D + invariants(b).D

    def test_weight_zero_iff_all_parts_one(self):
        assert invariants(parse_representation(3, [1, 1, 1])).D == 0
        assert invariants(parse_representation(3, [2, 1])).D != 0

    def test_weight_one_iff_single_two(self):
        assert invariants(parse_representation(3, [2, 1, 1])).D == 1
        assert invariants(parse_representation(3, [2, 2])).D != 1


class TestPartsGrammar:
    def test_single_size(self):
        assert parse_parts_text("4") == [4]

    def test_multiplicities(self):
        assert parse_parts_text("2^3,1^2") == [2, 2, 2, 1, 1]

    def test_whitespace_ignored(self):
        assert parse_parts_text(" 2 ^ 3 , 1 ") == [2, 2, 2, 1]

    def test_empty_string(self):
        with pytest.raises(EmptyPartsError):
            parse_parts_text("   ")

    @pytest.mark.parametrize("text", ["4,", ",4", "2^", "^3", "2^0", "-3", "a", "2^^2"])
    def test_bad_syntax(self, text):
        with pytest.raises((RepSyntaxError, EmptyPartsError)):
            parse_parts_text(text)

    def test_format_parts(self):
        assert format_parts((4,)) == "4"
        assert format_parts((2, 2, 2)) == "2^3"
        assert format_parts((3, 1, 1)) == "3,1^2"

    def test_round_trip(self):
        for parts in [(4,), (2, 2, 2), (3, 1, 1), (5, 4, 4, 2, 1, 1, 1)]:
            text = format_parts(parts)
            assert tuple(sorted(parse_parts_text(text), reverse=True)) == parts

    def test_rep_from_text(self):
        rep = rep_from_text(5, "2^2")
        assert rep == Representation(5, (2, 2))
        with pytest.raises(PartExceedsPrimeError):
            rep_from_text(5, "6")
