import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bernconv import BinarySequence, DomainError, ParseError, from_rational, parse_sequence

HALF = Fraction(1, 2)


def frac_shift(v: Fraction, k: int) -> Fraction:
    """Independent oracle: k-fold doubling mod 1 in exact arithmetic."""
    return (v * 2 ** k) % 1


words = st.text(alphabet="01", min_size=0, max_size=12)
periods = st.text(alphabet="01", min_size=1, max_size=10)


class TestFromRational:
    def test_one_third(self):
        b = from_rational(1, 3)
        assert (b.preperiod, b.period) == ("", "01")

    def test_five_twelfths(self):
        b = from_rational(5, 12)
        assert (b.preperiod, b.period) == ("01", "10")

    def test_eight_fifteenths(self):
        b = from_rational(8, 15)
        assert (b.preperiod, b.period) == ("", "1000")

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            from_rational(3, 0)
        with pytest.raises(DomainError):
            from_rational(5, 5)
        with pytest.raises(DomainError):
            from_rational(-1, 4)

    def test_round_trip_exhaustive_small(self):
        for q in range(2, 129):
            for p in range(q):
                assert from_rational(p, q).value() == Fraction(p, q)


class TestValue:
    def test_pure_period(self):
        assert BinarySequence("", "01").value() == Fraction(1, 3)

    def test_preperiodic(self):
        assert BinarySequence("100", "01").value() == Fraction(13, 24)

    def test_all_ones_edge(self):
        # complement of the zero stream; the single value-1 representative
        assert BinarySequence("", "0").complement().value() == 1


class TestCanonicalForm:
    def test_minimal_period(self):
        assert BinarySequence("", "0101").period == "01"

    def test_preperiod_absorption(self):
        # .0111(01) and .011(10) are the same digit stream
        assert BinarySequence("0111", "01") == BinarySequence("011", "10")

    def test_rotations_are_distinct(self):
        assert BinarySequence("", "01") != BinarySequence("", "10")

    def test_text_round_trip(self):
        for text in ["(01)", "01(10)", "1000(01)", "(1000)", "011(10)"]:
            assert str(parse_sequence(text)) == text

    def test_parse_rejects_garbage(self):
        for bad in ["", "01", "01()", "(012)", "abc"]:
            with pytest.raises(ParseError):
                parse_sequence(bad)


class TestShift:
    def test_doubles_value(self):
        b = from_rational(5, 12)
        assert b.shift(1).value() == frac_shift(Fraction(5, 12), 1) == Fraction(5, 6)

    def test_periodic_cycle(self):
        b = from_rational(1, 3)
        assert b.shift(2) == b

    def test_orbit_of_25_48(self):
        # exact doubling orbit: 25/48 -> 1/24 -> 1/12 -> 1/6 -> 1/3
        b = from_rational(25, 48)
        expected = Fraction(25, 48)
        for k in range(1, 5):
            expected = frac_shift(expected, 1)
            assert b.shift(k).value() == expected
        assert b.shift(4).value() == Fraction(1, 3)

    def test_orbit_finiteness(self):
        for p, q in [(5, 12), (11, 24), (55, 127)]:
            b = from_rational(p, q)
            n = b.orbit_size()
            for k in range(1, 4):
                assert b.shift(n + k * len(b.period)) == b.shift(n)

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            from_rational(1, 3).shift(-1)


class TestComplement:
    def test_one_third(self):
        assert from_rational(1, 3).complement().value() == Fraction(2, 3)

    def test_symmetric_pair(self):
        assert from_rational(11, 24).complement() == from_rational(13, 24)

    def test_involution_random(self):
        rnd = random.Random(7)
        for _ in range(100):
            q = rnd.randint(2, 400)
            p = rnd.randint(0, q - 1)
            b = from_rational(p, q)
            assert b.complement().complement() == b

    def test_value_sum(self):
        for q in range(2, 64):
            for p in range(1, q):
                b = from_rational(p, q)
                assert b.value() + b.complement().value() == 1


class TestItinerary:
    def test_alternating(self):
        assert from_rational(1, 3).is_itinerary() == (True, 1)

    def test_zero_stream(self):
        assert BinarySequence("", "0").is_itinerary() == (False, None)
        assert BinarySequence("1", "0").is_itinerary() == (False, None)

    def test_55_127(self):
        # scan oracle over two periods of 0110111
        window = "0110111" * 2
        runs, best = 1, 1
        for a, b in zip(window, window[1:]):
            runs = runs + 1 if a == b else 1
            best = max(best, runs)
        assert best == 3
        assert from_rational(55, 127).is_itinerary() == (True, 3)


class TestKneading:
    def test_one_third_is_kneading(self):
        assert from_rational(1, 3).is_kneading()

    def test_8_15_is_kneading(self):
        b = from_rational(8, 15)
        # oracle: the shifts are 1/15, 2/15, 4/15, all farther from 1/2
        dists = [abs(frac_shift(Fraction(8, 15), k) - HALF) for k in range(1, 5)]
        assert min(dists) >= abs(Fraction(8, 15) - HALF)
        assert b.is_kneading()

    def test_1_6_is_not(self):
        # its shift 1/3 is nearer to 1/2 than 1/6 is
        assert abs(Fraction(1, 3) - HALF) < abs(Fraction(1, 6) - HALF)
        assert not from_rational(1, 6).is_kneading()

    def test_kneading_of_1_6(self):
        assert from_rational(1, 6).kneading_of() == from_rational(1, 3)

    def test_kneading_fixed_point(self):
        for p, q in [(1, 3), (8, 15), (3, 7), (25, 48)]:
            b = from_rational(p, q)
            assert b.is_kneading()
            assert b.kneading_of() == b

    def test_kneading_of_rejects_non_itinerary(self):
        with pytest.raises(DomainError):
            BinarySequence("01", "0").kneading_of()

    def test_kneading_of_is_kneading(self):
        rnd = random.Random(13)
        done = 0
        while done < 50:
            q = rnd.randint(2, 200)
            p = rnd.randint(1, q - 1)
            b = from_rational(p, q)
            if not b.is_itinerary().is_itinerary:
                continue
            assert b.kneading_of().is_kneading()
            done += 1

    def test_tie_breaks_below_half(self):
        # orbit of 1/6 holds both 1/3 and 2/3 at distance 1/6; pick 1/3
        k = from_rational(1, 6).kneading_of()
        assert k.value() < HALF


@settings(max_examples=150, deadline=None)
@given(pre=words, per=periods)
def test_text_round_trip_property(pre, per):
    b = BinarySequence(pre, per)
    assert parse_sequence(str(b)) == b


@settings(max_examples=150, deadline=None)
@given(p=st.integers(0, 2047), q=st.integers(1, 2048))
def test_round_trip_property(p, q):
    if p < q:
        assert from_rational(p, q).value() == Fraction(p, q)


@settings(max_examples=150, deadline=None)
@given(pre=words, per=periods, i=st.integers(0, 6), j=st.integers(0, 6))
def test_shift_additive_property(pre, per, i, j):
    b = BinarySequence(pre, per)
    assert b.shift(i).shift(j) == b.shift(i + j)
    if b.period != "1":  # the all-ones tail keeps value 1 instead of wrapping to 0
        assert b.shift(i).value() == frac_shift(b.value(), i)


@settings(max_examples=100, deadline=None)
@given(pre=words, per=periods)
def test_complement_flip_property(pre, per):
    b = BinarySequence(pre, per)
    c = b.complement()
    assert c.complement() == b
    assert b.value() + c.value() == 1
    n = b.orbit_size() + 3
    flipped = b.digits(n).translate(str.maketrans("01", "10"))
    assert flipped == c.digits(n)
