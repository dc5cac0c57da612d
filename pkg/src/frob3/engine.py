"""Frobenius numbers of three-generator numerical semigroups.

For a pairwise-coprime triple a1 > a2 > a3 > 1 with minimal multipliers
L1, L2, L3 (see `frob3.quotients`), the Frobenius number has the closed form

    g = L1*a1 + max(c23 * a3, c32 * a2) - a1 - a2 - a3,
    c23 = (L2 * a2 * a3^-1) mod a1,    c32 = (L3 * a3 * a2^-1) mod a1,

valid for every such triple, including L1 == 1 (where it collapses to the
two-generator value of <a2, a3>).  Degenerate inputs reduce to

    g(a, b) = a*b - a - b        (coprime a, b > 1; -1 if a generator is 1)

and a triple whose pair (a, b) shares a factor d reduces through

    g(d*a, d*b, c) = d * g(a, b, c) + c * (d - 1),

iterated until the triple is pairwise coprime.  The rule is exact even when
the inner value is -1.
"""

from dataclasses import dataclass
from math import gcd

from .modular import rem_product
from .oracle import frobenius_oracle
from .quotients import CoprimeTriple, LValues, l_values
from .semigroup import NotCoprimeError, TwoGenSemigroup, is_fundamental_gap

__all__ = [
    "FrobeniusResult",
    "CoeffPair",
    "sylvester",
    "coeff_pair",
    "frobenius_main",
    "frobenius_johnson_crosscheck",
    "frobenius_fg",
    "frobenius",
    "product_reduction_audit",
    "InvalidGeneratorsError",
    "HypothesisNotMetError",
    "IdentityViolationError",
    "AgreementFailureError",
    "BRANCH_SYLVESTER",
    "BRANCH_MAIN",
    "BRANCH_FG",
    "BRANCH_JOHNSON",
    "BRANCH_REDUCTION",
    "BRANCH_ORACLE",
    "BRANCHES",
]

BRANCH_SYLVESTER = "sylvester"
BRANCH_MAIN = "main_formula"
BRANCH_FG = "fg_corollary"
BRANCH_JOHNSON = "johnson_crosscheck"
BRANCH_REDUCTION = "reduction"
BRANCH_ORACLE = "oracle_fallback"
BRANCHES = frozenset(
    {BRANCH_SYLVESTER, BRANCH_MAIN, BRANCH_FG, BRANCH_JOHNSON, BRANCH_REDUCTION, BRANCH_ORACLE}
)


class InvalidGeneratorsError(ValueError):
    """Input generators outside the domain of the requested computation."""


class HypothesisNotMetError(ValueError):
    """The input does not satisfy the hypothesis of the chosen shortcut."""


class IdentityViolationError(AssertionError):
    """An identity that must hold exactly failed to; indicates a bug."""


class AgreementFailureError(AssertionError):
    """Independent evaluation routes disagreed; indicates a bug."""


@dataclass(frozen=True)
class FrobeniusResult:
    """A Frobenius number plus how it was obtained.

    gens is the input sorted descending; reduction_chain lists the
    (d, absorbed) steps outermost first when gcd reduction was applied.
    """

    value: int
    branch: str
    gens: tuple
    l_values: LValues | None = None
    coefficients: dict | None = None
    reduction_chain: tuple | None = None
    tie: bool = False

    def __post_init__(self):
        if self.branch not in BRANCHES:
            raise ValueError(f"unknown branch {self.branch!r}")
        if self.value < -1:
            raise ValueError(f"Frobenius number can never be below -1, got {self.value}")
        if self.branch == BRANCH_MAIN:
            if self.l_values is None or self.coefficients is None:
                raise ValueError("a main_formula result must carry its L values and coefficients")
            a1, a2, a3 = self.gens
            recomputed = (
                self.l_values.l1 * a1
                + max(self.coefficients["x23"] * a3, self.coefficients["x32"] * a2)
                - a1
                - a2
                - a3
            )
            if recomputed != self.value:
                raise ValueError(f"value {self.value} does not recompute from the coefficients")


def sylvester(a, b):
    """g(a, b) = a*b - a - b for coprime positive a, b; -1 if either is 1."""
    if a < 1 or b < 1:
        raise ValueError(f"generators must be positive, got ({a}, {b})")
    if gcd(a, b) != 1:
        raise NotCoprimeError(f"gcd({a}, {b}) is {gcd(a, b)}, generators must be coprime")
    if a == 1 or b == 1:
        return -1
    return a * b - a - b


@dataclass(frozen=True)
class CoeffPair:
    """Coefficients of L_j*a_j == x_first*a1 + x_second*a_k, with
    x_first in [0, a_k) and x_second in [0, a1)."""

    x_first: int
    x_second: int
    total: int


def coeff_pair(t, j, l=None):
    """Closed-form decomposition of L_j*a_j over (a1, a_k), j in {2, 3}.

    x_first = (L_j*a_j*a1^-1) mod a_k multiplies a1, and
    x_second = (L_j*a_j*a_k^-1) mod a1 multiplies a_k, where k is the other
    of {2, 3}.  The reconstruction is checked exactly and a mismatch raises
    IdentityViolationError.
    """
    if j not in (2, 3):
        raise ValueError(f"j must be 2 or 3, got {j}")
    k = 5 - j
    if l is None:
        l = l_values(t)
    lj = l.get(j)
    a1, aj, ak = t.a1, t.gen(j), t.gen(k)
    x_first = rem_product([lj, aj], [a1], ak)
    x_second = rem_product([lj, aj], [ak], a1)
    if x_first * a1 + x_second * ak != lj * aj:
        raise IdentityViolationError(
            f"{x_first}*{a1} + {x_second}*{ak} != {lj}*{aj} for {t.as_tuple()}"
        )
    return CoeffPair(x_first=x_first, x_second=x_second, total=lj * aj)


def frobenius_main(t, l=None):
    """Closed-form Frobenius number of a pairwise-coprime descending triple."""
    if l is None:
        l = l_values(t)
    a1, a2, a3 = t.as_tuple()
    c23 = rem_product([l.l2, a2], [a3], a1)
    c32 = rem_product([l.l3, a3], [a2], a1)
    term3, term2 = c23 * a3, c32 * a2
    value = l.l1 * a1 + max(term3, term2) - a1 - a2 - a3
    return FrobeniusResult(
        value=value,
        branch=BRANCH_MAIN,
        gens=(a1, a2, a3),
        l_values=l,
        coefficients={"x23": c23, "x32": c32},
        tie=term3 == term2,
    )


def _decompose_unique(total, u, v):
    """The unique (x, y) in N^2 with x*u + y*v == total, by exhaustive scan."""
    found = None
    for x in range(total // u + 1):
        r = total - x * u
        if r % v == 0:
            if found is not None:
                raise AgreementFailureError(f"{total} = x*{u} + y*{v} has multiple solutions")
            found = (x, r // v)
    if found is None:
        raise AgreementFailureError(f"{total} = x*{u} + y*{v} has no solution")
    return found


def frobenius_johnson_crosscheck(t, l=None):
    """Evaluate g from each of the three index choices and demand agreement.

    For each i, L_i*a_i decomposes uniquely as x_ij*a_j + x_ik*a_k over the
    other two generators, and

        g = L_i*a_i + max(x_jk * a_k, x_kj * a_j) - (a1 + a2 + a3)

    must give the same value for i = 1, 2, 3.  Decompositions are found by
    scan, then checked against the closed-form coefficients for i in {2, 3}.
    Requires every L_i > 1; raises AgreementFailureError on any disagreement.
    """
    if l is None:
        l = l_values(t)
    if min(l.as_tuple()) == 1:
        raise HypothesisNotMetError(f"all L values must exceed 1, got {l.as_tuple()}")
    gens = t.as_tuple()
    x = {}
    for i in (1, 2, 3):
        j, k = t.others(i)
        xj, xk = _decompose_unique(l.get(i) * t.gen(i), t.gen(j), t.gen(k))
        x[i, j], x[i, k] = xj, xk
    for j in (2, 3):
        cp = coeff_pair(t, j, l)
        if (cp.x_first, cp.x_second) != (x[j, 1], x[j, 5 - j]):
            raise AgreementFailureError(
                f"scan coefficients {(x[j, 1], x[j, 5 - j])} != closed form "
                f"{(cp.x_first, cp.x_second)} for j={j} on {gens}"
            )
    values = []
    for i in (1, 2, 3):
        j, k = t.others(i)
        values.append(
            l.get(i) * t.gen(i) + max(x[j, k] * t.gen(k), x[k, j] * t.gen(j)) - sum(gens)
        )
    if len(set(values)) != 1:
        raise AgreementFailureError(f"index choices disagree on {gens}: {values}")
    coefficients = {f"x{i}{j}": x[i, j] for (i, j) in sorted(x)}
    return FrobeniusResult(
        value=values[0], branch=BRANCH_JOHNSON, gens=gens, l_values=l, coefficients=coefficients
    )


def frobenius_fg(t, check=False):
    """Frobenius number when a1 is a fundamental gap of <a2, a3>:

        g = max((a1*a2^-1 mod a3) * a2, (a1*a3^-1 mod a2) * a3) - a2 - a3

    with the two residues equal to L2 and L3.  Raises HypothesisNotMetError
    when a1 is not a fundamental gap of <a2, a3> (L1 == 2 alone is not
    enough).  With check=True the identities behind the shortcut are
    verified against the general machinery.
    """
    a1, a2, a3 = t.as_tuple()
    s = TwoGenSemigroup(a2, a3)
    if not is_fundamental_gap(s, a1):
        raise HypothesisNotMetError(f"{a1} is not a fundamental gap of <{a2}, {a3}>")
    x2 = rem_product([a1], [a2], a3)
    x3 = rem_product([a1], [a3], a2)
    term2, term3 = x2 * a2, x3 * a3
    value = max(term2, term3) - a2 - a3
    l = None
    if check:
        l = l_values(t)
        assert l.l1 == 2, f"a fundamental gap a1 must have L1 == 2, got {l.l1}"
        assert (l.l2, l.l3) == (x2, x3), f"L closed forms {(x2, x3)} != {(l.l2, l.l3)}"
        for j in (2, 3):
            cp = coeff_pair(t, j, l)
            assert cp.x_first == 1, f"first coefficient must be 1, got {cp.x_first}"
            assert cp.x_second * t.gen(5 - j) == l.get(j) * t.gen(j) - a1
    return FrobeniusResult(
        value=value,
        branch=BRANCH_FG,
        gens=(a1, a2, a3),
        l_values=l,
        coefficients={"x2": x2, "x3": x3},
        tie=term2 == term3,
    )


def _dispatch(ordered):
    # ordered: descending 3-tuple of positive ints with overall gcd 1.
    # Returns (value, branch, chain, l, coefficients, tie).
    if 1 in ordered:
        return -1, BRANCH_SYLVESTER, (), None, None, False
    distinct = tuple(sorted(set(ordered), reverse=True))
    if len(distinct) == 2:
        return sylvester(distinct[0], distinct[1]), BRANCH_SYLVESTER, (), None, None, False
    assert len(distinct) == 3, "a repeated-value triple with gcd 1 has two distinct values"
    a, b, c = distinct
    for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
        d = gcd(x, y)
        if d > 1:
            sub = tuple(sorted((x // d, y // d, z), reverse=True))
            value, _, chain, _, _, _ = _dispatch(sub)
            return d * value + z * (d - 1), BRANCH_REDUCTION, ((d, z), *chain), None, None, False
    t = CoprimeTriple(a, b, c)
    l = l_values(t)
    r = frobenius_main(t, l)
    return r.value, BRANCH_MAIN, (), l, r.coefficients, r.tie


def _validated_descending(gens):
    gens = tuple(gens)
    if len(gens) != 3:
        raise InvalidGeneratorsError(f"need exactly 3 generators, got {len(gens)}")
    if any(not isinstance(g, int) or g < 1 for g in gens):
        raise InvalidGeneratorsError(f"generators must be positive integers, got {gens}")
    g_all = gcd(gcd(gens[0], gens[1]), gens[2])
    if g_all != 1:
        raise InvalidGeneratorsError(f"gcd is {g_all}")
    return tuple(sorted(gens, reverse=True))


def frobenius(gens, method="auto"):
    """Frobenius number of any three positive generators with overall gcd 1.

    Sorts descending, strips duplicates, and dispatches: a unit generator
    or a surviving pair goes through the two-generator formula, a pairwise
    coprime triple through the closed form, and a shared pair factor d
    through g(d*a, d*b, c) = d*g(a, b, c) + c*(d - 1) until coprime.
    method="oracle" bypasses all of that and brute-forces the answer.
    """
    ordered = _validated_descending(gens)
    if method == "oracle":
        return FrobeniusResult(value=frobenius_oracle(ordered), branch=BRANCH_ORACLE, gens=ordered)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    value, branch, chain, l, coefficients, tie = _dispatch(ordered)
    return FrobeniusResult(
        value=value,
        branch=branch,
        gens=ordered,
        l_values=l,
        coefficients=coefficients,
        reduction_chain=chain or None,
        tie=tie,
    )


def product_reduction_audit(gens):
    """Audit the product form of the gcd reduction against ground truth.

    The product form predicts g(a1, a2, a3) = d12*d23*d31 * g(b1, b2, b3)
    where d_ij = gcd(a_i, a_j) and a_i = b_i * d_ij * d_ik.  It is wrong in
    general (e.g. (9, 6, 4): product form -6, true value 11), which is why
    it lives behind an audit entry point instead of inside `frobenius`.
    Returns a dict with the product-form value, the iterated-rule value,
    the brute-force value, and whether the product form matched.
    """
    ordered = _validated_descending(gens)
    a1, a2, a3 = ordered
    d12, d23, d31 = gcd(a1, a2), gcd(a2, a3), gcd(a3, a1)
    b = (a1 // (d12 * d31), a2 // (d12 * d23), a3 // (d23 * d31))
    product_value = d12 * d23 * d31 * frobenius(b).value
    iterated_value = frobenius(ordered).value
    oracle_value = frobenius_oracle(ordered)
    return {
        "gens": list(ordered),
        "d": [d12, d23, d31],
        "b": list(b),
        "product_value": product_value,
        "iterated_value": iterated_value,
        "oracle_value": oracle_value,
        "match": product_value == oracle_value,
    }
