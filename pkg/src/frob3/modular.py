"""Exact integer remainder arithmetic.

Canonical residues, modular inverses by the extended Euclidean algorithm,
and reduced products of residue factors.  Everything here is pure and
overflow-free (Python integers are unbounded); the point of `rem_product`
is to keep intermediate values below n**2 regardless of expression size.
"""

from math import gcd

__all__ = ["gcd", "rem", "mod_inverse", "rem_product", "NotInvertibleError"]


class NotInvertibleError(ArithmeticError):
    """m has no inverse modulo n, i.e. gcd(m, n) != 1."""


def _check_modulus(n):
    if n < 1:
        raise ValueError(f"modulus must be a positive integer, got {n}")


def rem(m, n):
    """Canonical residue of m modulo n, in [0, n).

    Defined for every integer m (negative included) as the unique member
    of m's congruence class in [0, n); equals m - floor(m / n) * n with
    floor division rounding toward minus infinity.
    """
    _check_modulus(n)
    return m % n


def mod_inverse(m, n):
    """The unique i in [0, n) with i * m == 1 (mod n), via extended Euclid.

    Raises NotInvertibleError unless gcd(m, n) == 1.  For n == 1 every
    congruence holds and the answer is 0.
    """
    _check_modulus(n)
    m = m % n
    # Invariants: old_s * m == old_r (mod n) and s * m == r (mod n).
    old_r, r = m, n
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    if old_r != 1 and n != 1:
        raise NotInvertibleError(f"{m} is not invertible modulo {n} (gcd is {old_r})")
    return old_s % n


def rem_product(factors, inverses, n):
    """Residue mod n of prod(factors) * prod(v**-1 for v in inverses).

    Partial products are reduced modulo n after every multiplication, so
    intermediates never exceed n**2 no matter how many factors there are.
    Raises NotInvertibleError if any inverse does not exist.
    """
    _check_modulus(n)
    acc = 1 % n
    for f in factors:
        acc = acc * f % n
    for v in inverses:
        acc = acc * mod_inverse(v, n) % n
    return acc
