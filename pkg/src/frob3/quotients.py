"""First elements of the quotient semigroups of a pairwise-coprime triple.

Throughout, a triple means a1 > a2 > a3 > 1 pairwise coprime, and S_i denotes
the quotient of the semigroup generated by the other two generators by a_i:

    S_i = <a_j, a_k> / a_i = {x >= 0 : x * a_i in <a_j, a_k>}.

tau_{j}(S_i) is the part of S_i strictly between 0 and a_j.  The minimal
multipliers L_i = min(S_i \\ {0}) always satisfy L_i <= min of the other two
generators, so they can be read off these finite sets.  A single enumeration
of tau_2(S_1) (length a2) determines everything else: restricting below a3
gives tau_3(S_1), and the bijection

    mu  ->  (mu * a1 * a_k^-1) mod a_j

maps the complement of tau_j(S_1) in (0, a_j) onto tau_j(S_k) for
{j, k} = {2, 3}.
"""

from dataclasses import dataclass
from math import gcd

from .modular import rem_product
from .semigroup import NotCoprimeError, QuotientDescriptor, TwoGenSemigroup, member_quotient

__all__ = [
    "CoprimeTriple",
    "TauSet",
    "LValues",
    "tau_direct",
    "phi_set",
    "tau_from_correspondence",
    "l_values",
    "iter_coprime_triples",
    "IndexContractError",
]

_OTHERS = {1: (2, 3), 2: (1, 3), 3: (1, 2)}


class IndexContractError(ValueError):
    """A tau set was combined with indices it was not built for."""


@dataclass(frozen=True)
class CoprimeTriple:
    """Pairwise-coprime generators in strictly descending order, all > 1."""

    a1: int
    a2: int
    a3: int

    def __post_init__(self):
        a1, a2, a3 = self.a1, self.a2, self.a3
        if not a1 > a2 > a3 > 1:
            raise ValueError(f"need a1 > a2 > a3 > 1, got ({a1}, {a2}, {a3})")
        for x, y in ((a1, a2), (a1, a3), (a2, a3)):
            if gcd(x, y) != 1:
                raise NotCoprimeError(f"gcd({x}, {y}) is {gcd(x, y)}, generators must be pairwise coprime")

    @classmethod
    def from_unordered(cls, gens):
        """Build from three generators given in any order."""
        a, b, c = sorted(gens, reverse=True)
        return cls(a, b, c)

    def as_tuple(self):
        return (self.a1, self.a2, self.a3)

    def gen(self, i):
        """The generator a_i, i in {1, 2, 3}."""
        return (self.a1, self.a2, self.a3)[i - 1]

    def others(self, i):
        """The two indices besides i, ascending."""
        return _OTHERS[i]

    def quotient(self, i):
        """S_i: the quotient of the complementary pair's semigroup by a_i."""
        j, k = _OTHERS[i]
        return QuotientDescriptor(TwoGenSemigroup(self.gen(j), self.gen(k)), self.gen(i))


@dataclass(frozen=True)
class TauSet:
    """Elements of S_i strictly between 0 and a_j, with provenance.

    i is the quotient index, j the bound index and bound the value a_j.
    Carrying the indices lets the correspondence constructor reject sets
    built for the wrong index pair instead of silently mixing them up.
    """

    values: tuple
    i: int
    j: int
    bound: int

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.i == self.j or not {self.i, self.j} <= {1, 2, 3}:
            raise ValueError(f"indices must be distinct members of {{1, 2, 3}}, got i={self.i} j={self.j}")
        vals = self.values
        if list(vals) != sorted(set(vals)):
            raise ValueError("values must be strictly increasing")
        if vals and not (0 < vals[0] and vals[-1] < self.bound):
            raise ValueError(f"values must lie strictly between 0 and {self.bound}")

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class LValues:
    """Minimal positive elements (L1, L2, L3) of the three quotients.

    L1 > 1 forces L2 > 1 and L3 > 1: L1 > 1 says a1 is not generated by the
    other two, and L2 == 1 would say the opposite of a2, which would make a2
    both a generator and generated, contradicting a1 > a2.
    """

    l1: int
    l2: int
    l3: int

    def __post_init__(self):
        if min(self.l1, self.l2, self.l3) < 1:
            raise ValueError(f"L values must be positive, got {self.as_tuple()}")
        if self.l1 > 1 and (self.l2 == 1 or self.l3 == 1):
            raise ValueError(f"L1 > 1 forces L2 > 1 and L3 > 1, got {self.as_tuple()}")

    def as_tuple(self):
        return (self.l1, self.l2, self.l3)

    def get(self, i):
        return (self.l1, self.l2, self.l3)[i - 1]


def tau_direct(t, i, j):
    """tau_j(S_i): enumerate (0, a_j) with the quotient membership test."""
    if i == j:
        raise ValueError(f"indices must differ, got i=j={i}")
    q = t.quotient(i)
    bound = t.gen(j)
    vals = tuple(x for x in range(1, bound) if member_quotient(q, x))
    return TauSet(vals, i=i, j=j, bound=bound)


def phi_set(t, i, j):
    """tau_j(S_i) together with the endpoints 0 and a_j (always members)."""
    ts = tau_direct(t, i, j)
    return (0, *ts.values, ts.bound)


def tau_from_correspondence(tau1, t, k):
    """tau_j(S_k) from tau_j(S_1) via mu -> (mu * a1 * a_k^-1) mod a_j.

    The map is a bijection of the nonzero residues mod a_j carrying the
    complement of tau_j(S_1) onto tau_j(S_k), so the result always has
    a_j - 1 - len(tau1) elements.  Requires tau1 built for quotient index 1
    and bound index j, where {j, k} = {2, 3}.
    """
    if tau1.i != 1:
        raise IndexContractError(f"need a set for quotient index 1, got index {tau1.i}")
    j = tau1.j
    expected_k = 2 if j == 3 else 3
    if k != expected_k:
        raise IndexContractError(f"target index for bound index {j} must be {expected_k}, got {k}")
    aj = t.gen(j)
    if tau1.bound != aj:
        raise IndexContractError(f"set bound {tau1.bound} does not match a{j} = {aj} of {t.as_tuple()}")
    mult = rem_product([t.a1], [t.gen(k)], aj)
    have = set(tau1.values)
    vals = sorted(mu * mult % aj for mu in range(1, aj) if mu not in have)
    out = TauSet(tuple(vals), i=k, j=j, bound=aj)
    assert len(out) == aj - 1 - len(tau1), "correspondence must be a bijection"
    return out


def l_values(t):
    """Minimal multipliers (L1, L2, L3) from one length-a2 enumeration.

    L_i is the least x >= 1 with x * a_i representable over the other two
    generators; when tau is empty the minimum is the interval bound itself
    (a_j * a_i is always representable).
    """
    tau21 = tau_direct(t, 1, 2)
    tau31 = TauSet(tuple(v for v in tau21.values if v < t.a3), i=1, j=3, bound=t.a3)
    tau32 = tau_from_correspondence(tau31, t, 2)
    tau23 = tau_from_correspondence(tau21, t, 3)
    l1 = min(tau31.values, default=t.a3)
    l2 = min(tau32.values, default=t.a3)
    l3 = min(tau23.values, default=t.a2)
    assert l1 == min(tau21.values, default=t.a2), "L1 must not depend on the bound index"
    return LValues(l1, l2, l3)


def iter_coprime_triples(max_a1):
    """All CoprimeTriple with a1 <= max_a1, ordered by (a1, a2, a3)."""
    for a1 in range(2, max_a1 + 1):
        for a2 in range(2, a1):
            if gcd(a1, a2) != 1:
                continue
            for a3 in range(2, a2):
                if gcd(a1, a3) == 1 and gcd(a2, a3) == 1:
                    yield CoprimeTriple(a1, a2, a3)
