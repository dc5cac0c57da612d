import pytest

from frob3.oracle import reachable_table
from frob3.semigroup import (
    NotCoprimeError,
    QuotientDescriptor,
    TwoGenSemigroup,
    fundamental_gaps,
    gaps_two_gen,
    is_fundamental_gap,
    member_quotient,
    member_two_gen,
)


def coprime_pairs(max_a):
    from math import gcd

    return [(a, b) for a in range(3, max_a + 1) for b in range(2, a) if gcd(a, b) == 1]


def test_construction_normalizes_order():
    s = TwoGenSemigroup(3, 5)
    assert (s.a, s.b) == (5, 3)
    assert TwoGenSemigroup(5, 3) == s


def test_construction_rejects_bad_generators():
    with pytest.raises(NotCoprimeError):
        TwoGenSemigroup(6, 4)
    with pytest.raises(ValueError):
        TwoGenSemigroup(5, 5)
    with pytest.raises(ValueError):
        TwoGenSemigroup(0, 3)
    with pytest.raises(ValueError):
        TwoGenSemigroup(5, -3)


def test_member_examples():
    s = TwoGenSemigroup(5, 3)
    assert member_two_gen(s, 0)
    assert member_two_gen(s, 3)
    assert not member_two_gen(s, 7)
    assert member_two_gen(s, 8)
    assert member_two_gen(s, 14)
    # 9 = 2 + 7 is in <7, 2>
    assert member_two_gen(TwoGenSemigroup(7, 2), 9)


def test_member_unit_generator():
    s = TwoGenSemigroup(2, 1)
    assert all(member_two_gen(s, x) for x in range(50))


def test_member_matches_oracle_and_is_symmetric():
    from frob3.modular import mod_inverse

    for a, b in coprime_pairs(60):
        s = TwoGenSemigroup(a, b)
        inv_a = mod_inverse(a, b)
        table = reachable_table((a, b), a * b)
        for x in range(a * b + 1):
            expected = bool(table[x])
            assert member_two_gen(s, x) == expected, (a, b, x)
            # same test with the smaller generator as modulus
            assert (a * (inv_a * x % b) <= x) == expected, (a, b, x)


def test_everything_past_the_frobenius_number_is_a_member():
    for a, b in coprime_pairs(40):
        s = TwoGenSemigroup(a, b)
        g = a * b - a - b
        assert not member_two_gen(s, g)
        assert all(member_two_gen(s, x) for x in range(g + 1, g + 2 * a))


def test_gaps_examples():
    assert gaps_two_gen(TwoGenSemigroup(5, 3)) == [1, 2, 4, 7]
    assert gaps_two_gen(TwoGenSemigroup(3, 2)) == [1]
    assert gaps_two_gen(TwoGenSemigroup(7, 2)) == [1, 3, 5]
    assert gaps_two_gen(TwoGenSemigroup(9, 1)) == []


def test_gap_count_is_half_the_interval():
    # exactly (a-1)(b-1)/2 gaps for coprime a, b
    for a, b in coprime_pairs(40):
        assert len(gaps_two_gen(TwoGenSemigroup(a, b))) == (a - 1) * (b - 1) // 2


def test_fundamental_gaps_examples():
    assert fundamental_gaps(TwoGenSemigroup(5, 3)) == [4, 7]
    assert fundamental_gaps(TwoGenSemigroup(3, 2)) == [1]
    assert fundamental_gaps(TwoGenSemigroup(7, 2)) == [3, 5]
    assert fundamental_gaps(TwoGenSemigroup(2, 1)) == []


def test_is_fundamental_gap_examples():
    s = TwoGenSemigroup(5, 3)
    assert is_fundamental_gap(s, 4)
    assert is_fundamental_gap(s, 7)
    assert not is_fundamental_gap(s, 1)  # gap, but 2 and 3 are gaps too
    assert not is_fundamental_gap(s, 8)  # member


def test_fundamental_gap_multiples_are_members():
    for a, b in coprime_pairs(30):
        s = TwoGenSemigroup(a, b)
        gaps = set(gaps_two_gen(s))
        for x in fundamental_gaps(s):
            assert x in gaps
            assert all(member_two_gen(s, k * x) for k in range(2, a * b // x + 2))
        # and conversely, every non-fundamental gap has a gap multiple
        for x in gaps - set(fundamental_gaps(s)):
            assert 2 * x in gaps or 3 * x in gaps


def test_quotient_examples():
    q = QuotientDescriptor(TwoGenSemigroup(5, 3), 7)
    assert member_quotient(q, 0)
    assert not member_quotient(q, 1)  # 7 is not in <5, 3>
    assert member_quotient(q, 2)  # 14 = 5 + 9
    with pytest.raises(ValueError):
        QuotientDescriptor(TwoGenSemigroup(5, 3), 0)


def test_quotient_matches_direct_membership_for_any_divisor():
    # the divisor need not be coprime to the generators
    for d in range(1, 16):
        q = QuotientDescriptor(TwoGenSemigroup(7, 5), d)
        s = q.base
        for x in range(80):
            assert member_quotient(q, x) == member_two_gen(s, d * x), (d, x)


def test_quotient_by_own_generator_is_everything():
    q = QuotientDescriptor(TwoGenSemigroup(7, 5), 5)
    assert all(member_quotient(q, x) for x in range(100))
