"""Ring arithmetic mod p^K and exact, cross-checked against sympy."""

import numpy as np
import pytest
import sympy

from pisingular import (
    ExactElement,
    RingElement,
    from_integer,
    lam,
    new_context,
    norm_exact,
    zeta,
)

from conftest import random_element, random_unit, seeded

_Z = sympy.symbols("z")


def _sympy_mul_mod_phi(p, a_coeffs, b_coeffs):
    """Oracle: polynomial product reduced mod Phi_p over the integers."""
    phi = sympy.Poly([1] * p, _Z)  # z^(p-1) + ... + 1
    pa = sympy.Poly(list(reversed(list(a_coeffs))), _Z)
    pb = sympy.Poly(list(reversed(list(b_coeffs))), _Z)
    rem = (pa * pb) % phi
    out = [0] * (p - 1)
    for (e,), c in rem.terms():
        out[e] = int(c)
    return tuple(out)


def test_root_power_fold_examples(ctx5):
    K = 2
    assert (zeta(ctx5, K, 2) * zeta(ctx5, K, 3)).coeff_list() == [1, 0, 0, 0]
    # z * z^3 = z^4 = -(1 + z + z^2 + z^3)
    assert (zeta(ctx5, K, 1) * zeta(ctx5, K, 3)).coeff_list() == [24, 24, 24, 24]


def test_square_example_p3():
    ctx = new_context(3)
    e = RingElement(ctx, 1, [1, 1])
    assert (e * e).coeff_list() == [0, 1]  # (1+z)^2 = z mod 3


def test_exact_cube_example():
    x = ExactElement(3, [-1, 2])  # 2z - 1
    assert (x**3).coeffs == (19, 18)


def test_integer_pow_mod_truncation(ctx5):
    assert (from_integer(ctx5, 2, 2) ** 5).coeff_list() == [7, 0, 0, 0]  # 32 mod 25


def test_from_integer_reduces(ctx5):
    assert from_integer(ctx5, 2, -1).coeff_list() == [24, 0, 0, 0]
    assert from_integer(ctx5, 1, 12).coeff_list() == [2, 0, 0, 0]


def test_mul_against_sympy_oracle():
    rng = seeded(101)
    for p in (3, 5, 7, 11):
        ctx = new_context(p)
        for _ in range(20):
            ac = [rng.randrange(-50, 50) for _ in range(p - 1)]
            bc = [rng.randrange(-50, 50) for _ in range(p - 1)]
            expect = _sympy_mul_mod_phi(p, ac, bc)
            got = (ExactElement(p, ac) * ExactElement(p, bc)).coeffs
            assert got == expect
            # modular route agrees after reduction
            K = 2
            rm = RingElement(ctx, K, ac) * RingElement(ctx, K, bc)
            assert rm.coeff_list() == [c % p**K for c in expect]


def test_ring_axioms_random():
    rng = seeded(7)
    for p, K in ((3, 1), (3, 2), (5, 2), (7, 3)):
        ctx = new_context(p)
        for _ in range(15):
            a = random_element(ctx, K, rng)
            b = random_element(ctx, K, rng)
            c = random_element(ctx, K, rng)
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a - a == from_integer(ctx, K, 0)
            assert a + (-a) == from_integer(ctx, K, 0)
            assert a * from_integer(ctx, K, 1) == a


def test_scalar_mul(ctx5):
    a = zeta(ctx5, 2, 1)
    assert (3 * a) == (a * 3) == a + a + a


def test_galois_examples(ctx5):
    K = 2
    z = zeta(ctx5, K)
    assert z.galois_apply(2) == zeta(ctx5, K, 2)
    # z^3 -> z^6 = z
    assert zeta(ctx5, K, 3).galois_apply(2) == z
    with pytest.raises(ValueError, match="nonzero mod p"):
        z.galois_apply(5)


def test_galois_is_ring_automorphism():
    rng = seeded(11)
    for p, K in ((5, 2), (7, 2), (11, 1)):
        ctx = new_context(p)
        for _ in range(10):
            a = random_element(ctx, K, rng)
            b = random_element(ctx, K, rng)
            j = rng.randrange(1, p)
            assert (a * b).galois_apply(j) == a.galois_apply(j) * b.galois_apply(j)
            assert (a + b).galois_apply(j) == a.galois_apply(j) + b.galois_apply(j)


def test_galois_composition_and_order():
    rng = seeded(13)
    for p in (5, 7, 13):
        ctx = new_context(p)
        a = random_element(ctx, 2, rng)
        # sigma_u then sigma_v = sigma_(uv)
        for j, k in ((2, 3), (ctx.u, ctx.u), (p - 1, 2)):
            assert a.galois_apply(j).galois_apply(k) == a.galois_apply(j * k % p)
        # generator has order p-1
        b = a
        for _ in range(p - 1):
            b = b.galois_apply(ctx.u)
        assert b == a
        assert a.conjugate().conjugate() == a


def test_compat_checks(ctx5, ctx7):
    a = from_integer(ctx5, 2, 1)
    with pytest.raises(ValueError, match="incompatible"):
        a + from_integer(ctx5, 1, 1)
    with pytest.raises(ValueError, match="incompatible"):
        a * from_integer(ctx7, 2, 1)
    with pytest.raises(TypeError):
        a + 1
    with pytest.raises(ValueError, match="coefficients"):
        RingElement(ctx5, 2, [1, 2, 3])


def test_invert_examples(ctx5):
    assert zeta(ctx5, 1).invert().coeff_list() == [4, 4, 4, 4]
    assert from_integer(ctx5, 1, 2).invert().coeff_list() == [3, 0, 0, 0]


def test_invert_round_trip_random():
    rng = seeded(17)
    for p, K in ((3, 2), (5, 2), (7, 3), (97, 2)):
        ctx = new_context(p)
        one = from_integer(ctx, K, 1)
        for _ in range(5):
            a = random_unit(ctx, K, rng)
            assert a * a.invert() == one
            assert a ** (-2) == (a.invert()) ** 2


def test_invert_rejects_nonunit(ctx5):
    with pytest.raises(ValueError, match="valuation is 1"):
        lam(ctx5, 2).invert()
    with pytest.raises(ValueError, match="valuation is 4"):
        from_integer(ctx5, 2, 5).invert()


def test_object_dtype_path_large_modulus():
    # 5^13 overflows the int64 product bound; ops fall back to object dtype
    ctx = new_context(5)
    K = 13
    a = RingElement(ctx, K, [5**12 + 3, 1, 2, 5**11])
    assert a.coeffs.dtype == object
    assert a * a.invert() == from_integer(ctx, K, 1)
    b = a * a - a * a
    assert b.is_zero()


def test_truncate(ctx5):
    a = RingElement(ctx5, 2, [7, 24, 0, 13])
    assert a.truncate(1).coeff_list() == [2, 4, 0, 3]
    with pytest.raises(ValueError, match="refine"):
        a.truncate(3)


def test_exact_element_basics():
    a = ExactElement(5, [10**40, -1, 0, 2])
    b = ExactElement.from_integer(5, 3)
    assert (a + b).coeffs[0] == 10**40 + 3
    assert (a - a).coeffs == (0, 0, 0, 0)
    assert (-a).coeffs[1] == 1
    assert (a * 2).coeffs[3] == 4
    assert a.conjugate().conjugate() == a
    with pytest.raises(ValueError, match="mixed primes"):
        a + ExactElement.from_integer(7, 1)
    with pytest.raises(ValueError, match="negative powers"):
        a ** (-1)


def test_exact_reduce_commutes_with_mul():
    rng = seeded(23)
    for p in (5, 7):
        ctx = new_context(p)
        for _ in range(10):
            ac = [rng.randrange(-1000, 1000) for _ in range(p - 1)]
            bc = [rng.randrange(-1000, 1000) for _ in range(p - 1)]
            xa, xb = ExactElement(p, ac), ExactElement(p, bc)
            assert (xa * xb).reduce(ctx, 2) == xa.reduce(ctx, 2) * xb.reduce(ctx, 2)


def test_norm_examples():
    # uniformizer has norm p
    for p in (3, 5, 7, 11):
        coeffs = [-1, 1] + [0] * (p - 3)
        assert norm_exact(ExactElement(p, coeffs)) == p
    assert norm_exact(ExactElement.from_integer(5, 2)) == 16
    assert norm_exact(ExactElement(5, [0, 0, 1, 1])) == 1
    assert norm_exact(ExactElement.from_integer(7, 0)) == 0
    # norm of a root of unity is 1
    z = ExactElement(7, [0, 1, 0, 0, 0, 0])
    assert norm_exact(z) == 1


def test_norm_against_sympy_resultant():
    rng = seeded(29)
    for p in (3, 5, 7):
        phi = sympy.Poly([1] * p, _Z)
        for _ in range(8):
            coeffs = [rng.randrange(-9, 10) for _ in range(p - 1)]
            pa = sympy.Poly(list(reversed(coeffs)), _Z)
            expect = int(sympy.resultant(phi, pa))
            assert norm_exact(ExactElement(p, coeffs)) == expect


def test_norm_multiplicative():
    rng = seeded(31)
    for p in (5, 7):
        for _ in range(6):
            a = ExactElement(p, [rng.randrange(-5, 6) for _ in range(p - 1)])
            b = ExactElement(p, [rng.randrange(-5, 6) for _ in range(p - 1)])
            assert norm_exact(a * b) == norm_exact(a) * norm_exact(b)


def test_norm_rejects_truncated(ctx5):
    with pytest.raises(TypeError, match="ExactElement"):
        norm_exact(from_integer(ctx5, 2, 3))


def test_galois_fixes_norm():
    a = ExactElement(7, [3, -2, 0, 5, 1, 4])
    for j in range(1, 7):
        assert norm_exact(a.galois_apply(j)) == norm_exact(a)


def test_coeffs_are_read_only(ctx5):
    a = zeta(ctx5, 2)
    with pytest.raises(ValueError):
        a.coeffs[0] = 99
    assert not np.any(a.coeffs[2:])
