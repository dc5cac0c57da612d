import pytest
from hypothesis import given, strategies as st

from frob3.modular import NotInvertibleError, gcd, mod_inverse, rem, rem_product


def test_rem_examples():
    assert rem(14, 7) == 0
    assert rem(7, 7) == 0
    assert rem(50, 7) == 1
    assert rem(0, 5) == 0
    assert rem(-3, 7) == 4
    assert rem(-14, 7) == 0


def test_rem_rejects_bad_modulus():
    with pytest.raises(ValueError):
        rem(5, 0)
    with pytest.raises(ValueError):
        rem(5, -3)


@given(st.integers(-10**6, 10**6), st.integers(1, 1000))
def test_rem_range_and_congruence(m, n):
    r = rem(m, n)
    assert 0 <= r < n
    assert (m - r) % n == 0
    # floor identity, with floor division rounding toward minus infinity
    assert r == m - (m // n) * n


def test_mod_inverse_examples():
    assert mod_inverse(3, 7) == 5
    assert mod_inverse(5, 3) == 2
    assert mod_inverse(1, 2) == 1
    assert mod_inverse(9, 1) == 0
    with pytest.raises(NotInvertibleError):
        mod_inverse(6, 9)
    with pytest.raises(NotInvertibleError):
        mod_inverse(0, 5)
    with pytest.raises(ValueError):
        mod_inverse(3, 0)


def test_mod_inverse_roundtrip_exhaustive():
    for n in range(1, 501):
        for m in range(n):
            if gcd(m, n) == 1:
                i = mod_inverse(m, n)
                assert 0 <= i < n
                assert i * m % n == 1 % n
                assert mod_inverse(i, n) == m % n
            else:
                with pytest.raises(NotInvertibleError):
                    mod_inverse(m, n)


@given(st.integers(-10**9, 10**9), st.integers(1, 10**6))
def test_mod_inverse_negative_and_large(m, n):
    if gcd(m, n) != 1:
        with pytest.raises(NotInvertibleError):
            mod_inverse(m, n)
    else:
        assert mod_inverse(m, n) * m % n == 1 % n


def test_multiplication_by_coprime_is_bijection():
    for n in range(1, 41):
        for c in range(1, n + 1):
            if gcd(c, n) != 1:
                continue
            image = {rem(c * x, n) for x in range(n)}
            assert image == set(range(n))


def test_rem_product_examples():
    # (10 * 3^-1) mod 7: inverse of 3 is 5, 10 * 5 = 50 = 1 mod 7
    assert rem_product([10], [3], 7) == 1
    assert rem_product([12], [5], 7) == 1
    assert rem_product([3, 5], [2], 7) == 4
    assert rem_product([], [], 5) == 1
    assert rem_product([], [], 1) == 0
    assert rem_product([10], [], 7) == 3
    assert rem_product([-3], [], 7) == 4
    with pytest.raises(NotInvertibleError):
        rem_product([2], [6], 9)


@given(
    st.lists(st.integers(-100, 100), max_size=4),
    st.lists(st.integers(-100, 100), max_size=3),
    st.integers(2, 500),
)
def test_rem_product_matches_naive(factors, inverses, n):
    if any(gcd(v, n) != 1 for v in inverses):
        with pytest.raises(NotInvertibleError):
            rem_product(factors, inverses, n)
        return
    naive = 1
    for f in factors:
        naive *= f
    for v in inverses:
        naive *= mod_inverse(v, n)
    assert rem_product(factors, inverses, n) == naive % n
