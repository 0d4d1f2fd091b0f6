"""Prime context: primality, primitive roots, discrete logs, Bernoulli mod p."""

from fractions import Fraction

import pytest
import sympy

from pisingular import is_prime, new_context, smallest_primitive_root

from conftest import bernoulli_fraction_table


def _sieve(n):
    flags = [True] * (n + 1)
    flags[0] = flags[1] = False
    for i in range(2, int(n**0.5) + 1):
        if flags[i]:
            for j in range(i * i, n + 1, i):
                flags[j] = False
    return flags


def test_is_prime_against_sieve():
    flags = _sieve(2000)
    for n in range(2000 + 1):
        assert is_prime(n) == flags[n], n


def test_is_prime_large_cases():
    assert is_prime(2**31 - 1)
    assert not is_prime(561)  # Carmichael
    assert not is_prime(2**32 + 1)
    assert is_prime(65537)


def test_new_context_examples():
    ctx = new_context(5)
    assert ctx.u == 2
    assert ctx.upow == (1, 2, 4, 3)
    assert ctx.uindex == (-1, 0, 1, 3, 2)
    assert ctx.half == 2

    ctx7 = new_context(7)
    assert ctx7.u == 3
    assert ctx7.index_of(6) == 3

    assert new_context(3).u == 2


def test_new_context_rejects_bad_input():
    with pytest.raises(ValueError, match="odd prime"):
        new_context(9)
    with pytest.raises(ValueError, match="odd prime"):
        new_context(2)
    with pytest.raises(ValueError, match="not a primitive root"):
        new_context(5, u=4)  # order 2
    with pytest.raises(ValueError, match="not a primitive root"):
        new_context(7, u=2)  # order 3


def test_custom_primitive_root_accepted():
    ctx = new_context(7, u=5)
    assert ctx.u == 5
    assert sorted(ctx.upow) == list(range(1, 7))


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 31, 97])
def test_power_table_properties(p):
    ctx = new_context(p)
    # u^i enumerates every nonzero residue exactly once
    assert sorted(ctx.upow) == list(range(1, p))
    # discrete-log inversion round-trips
    for a in range(1, p):
        assert ctx.upow[ctx.index_of(a)] == a
    # conjugation exponent: u^((p-1)/2) = -1
    assert ctx.upow[ctx.half] == p - 1


def test_index_of_rejects_multiples_of_p():
    ctx = new_context(7)
    with pytest.raises(ValueError, match="divisible by p"):
        ctx.index_of(0)
    with pytest.raises(ValueError, match="divisible by p"):
        ctx.index_of(14)


def test_smallest_primitive_root_oracle():
    # brute-force order computation as the oracle
    for p in (3, 5, 7, 11, 13, 23, 41):
        u = smallest_primitive_root(p)
        for cand in range(2, u):
            orders = {pow(cand, k, p) for k in range(1, p)}
            assert len(orders) < p - 1, f"{cand} generates mod {p} but {u} returned"
        assert len({pow(u, k, p) for k in range(1, p)}) == p - 1


def test_bernoulli_known_values():
    assert new_context(5).bernoulli_mod_p(2) == 1  # B_2 = 1/6 = 1 mod 5
    assert new_context(7).bernoulli_mod_p(4) == 3  # B_4 = -1/30 = 3 mod 7
    assert new_context(37).bernoulli_mod_p(32) == 0


def test_bernoulli_against_exact_rational_oracle():
    table = bernoulli_fraction_table(97)
    for p in (5, 7, 11, 13, 17, 19, 37, 59, 67, 97):
        ctx = new_context(p)
        for two_m in range(2, p - 2, 2):
            frac = table[two_m]
            assert frac.denominator % p != 0
            expected = (
                frac.numerator * pow(frac.denominator, -1, p)
            ) % p
            assert ctx.bernoulli_mod_p(two_m) == expected, (p, two_m)


def test_bernoulli_against_sympy():
    for p in (11, 37, 67):
        ctx = new_context(p)
        for two_m in range(2, p - 2, 2):
            frac = Fraction(sympy.Rational(sympy.bernoulli(two_m)))
            expected = (frac.numerator * pow(frac.denominator, -1, p)) % p
            assert ctx.bernoulli_mod_p(two_m) == expected


def test_bernoulli_rejects_bad_index():
    ctx = new_context(7)
    for bad in (1, 3, 0, -2, 6, 8):
        with pytest.raises(ValueError, match="even"):
            ctx.bernoulli_mod_p(bad)


def test_regular_primes_have_no_pairs():
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        assert new_context(p).irregular_pairs() == [], p


def test_irregular_pairs_found():
    assert new_context(37).irregular_pairs() == [32]
    assert new_context(59).irregular_pairs() == [44]
    assert new_context(67).irregular_pairs() == [58]


def test_context_equality_and_hash():
    a, b = new_context(5), new_context(5)
    assert a == b and hash(a) == hash(b)
    assert a != new_context(7)
    assert a != new_context(5, u=3)
