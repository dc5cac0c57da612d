"""Two-generator numerical semigroups.

For coprime generators a > b, membership of x in <a, b> has a closed form:
x is a nonnegative combination of a and b exactly when

    b * ((b^-1 * x) mod a) <= x

and membership in the quotient <a, b> / d ("x such that d*x is in <a, b>")
reduces to the same inequality applied to d * x.  The inverted element is
always the generator b, never the divisor, so the quotient test is valid
for every d >= 1 with no coprimality condition on d.

Gap enumeration walks the finite interval [1, a*b - a - b]; nothing above
a*b - a - b is ever missing.
"""

from dataclasses import dataclass
from functools import cached_property
from math import gcd

from .modular import mod_inverse

__all__ = [
    "TwoGenSemigroup",
    "QuotientDescriptor",
    "member_two_gen",
    "member_quotient",
    "gaps_two_gen",
    "is_fundamental_gap",
    "fundamental_gaps",
    "NotCoprimeError",
]


class NotCoprimeError(ValueError):
    """Generators (or a generator pair of a triple) share a common factor."""


@dataclass(frozen=True)
class TwoGenSemigroup:
    """The numerical semigroup <a, b> for distinct coprime positive generators.

    Constructor accepts the generators in either order and stores a > b.
    """

    a: int
    b: int

    def __post_init__(self):
        a, b = self.a, self.b
        if a < 1 or b < 1:
            raise ValueError(f"generators must be positive, got ({a}, {b})")
        if a == b:
            raise ValueError(f"generators must be distinct, got ({a}, {b})")
        if gcd(a, b) != 1:
            raise NotCoprimeError(f"gcd({a}, {b}) is {gcd(a, b)}, generators must be coprime")
        if a < b:
            object.__setattr__(self, "a", b)
            object.__setattr__(self, "b", a)

    @cached_property
    def inv_b(self):
        """Inverse of the smaller generator modulo the larger one."""
        return mod_inverse(self.b, self.a)


def member_two_gen(s, x):
    """True if x >= 0 is a nonnegative integer combination of s.a and s.b."""
    return s.b * (s.inv_b * x % s.a) <= x


@dataclass(frozen=True)
class QuotientDescriptor:
    """The quotient semigroup {x >= 0 : divisor * x in base}, any divisor >= 1."""

    base: TwoGenSemigroup
    divisor: int

    def __post_init__(self):
        if self.divisor < 1:
            raise ValueError(f"divisor must be positive, got {self.divisor}")

    @cached_property
    def coeff(self):
        """Per-query multiplier (divisor * b^-1) mod a of the closed form."""
        return self.divisor * self.base.inv_b % self.base.a


def member_quotient(q, x):
    """True if q.divisor * x lies in the base semigroup.

    Closed form: ((x * d * b^-1) mod a) * b <= x * d.  The inverse taken is
    of the generator b, so the test needs no coprimality from the divisor.
    """
    return (x * q.coeff % q.base.a) * q.base.b <= x * q.divisor


def gaps_two_gen(s):
    """Sorted list of all positive integers missing from <a, b>."""
    if s.b == 1:
        return []
    bound = s.a * s.b - s.a - s.b
    return [x for x in range(1, bound + 1) if not member_two_gen(s, x)]


def is_fundamental_gap(s, x):
    """True if x is a gap of s whose double and triple are members.

    Every multiple K*x with K >= 2 is then a member as well, since any
    K >= 2 splits as 2*p + 3*q with p, q >= 0.
    """
    return (
        not member_two_gen(s, x)
        and member_two_gen(s, 2 * x)
        and member_two_gen(s, 3 * x)
    )


def fundamental_gaps(s):
    """Sorted list of the gaps of s all of whose proper multiples are members."""
    return [
        x
        for x in gaps_two_gen(s)
        if member_two_gen(s, 2 * x) and member_two_gen(s, 3 * x)
    ]
