import pytest

from frob3.engine import (
    BRANCH_FG,
    BRANCH_JOHNSON,
    BRANCH_MAIN,
    BRANCH_ORACLE,
    BRANCH_REDUCTION,
    BRANCH_SYLVESTER,
    FrobeniusResult,
    HypothesisNotMetError,
    InvalidGeneratorsError,
    coeff_pair,
    frobenius,
    frobenius_fg,
    frobenius_johnson_crosscheck,
    frobenius_main,
    product_reduction_audit,
    sylvester,
)
from frob3.oracle import frobenius_oracle
from frob3.quotients import CoprimeTriple, iter_coprime_triples, l_values
from frob3.semigroup import NotCoprimeError, TwoGenSemigroup, is_fundamental_gap


def test_sylvester_examples():
    assert sylvester(3, 5) == 7
    assert sylvester(5, 3) == 7
    assert sylvester(2, 3) == 1
    assert sylvester(1, 9) == -1
    assert sylvester(9, 1) == -1
    assert sylvester(1, 1) == -1
    with pytest.raises(NotCoprimeError):
        sylvester(4, 6)
    with pytest.raises(ValueError):
        sylvester(0, 3)


def test_sylvester_matches_oracle():
    from math import gcd

    for a in range(2, 30):
        for b in range(2, a):
            if gcd(a, b) == 1:
                assert sylvester(a, b) == frobenius_oracle((a, b))


def test_coeff_pair_examples():
    t = CoprimeTriple(7, 5, 3)
    cp2 = coeff_pair(t, 2)
    # L2*a2 = 2*5 = 10 = 1*7 + 1*3
    assert (cp2.x_first, cp2.x_second, cp2.total) == (1, 1, 10)
    cp3 = coeff_pair(t, 3)
    # L3*a3 = 4*3 = 12 = 1*7 + 1*5
    assert (cp3.x_first, cp3.x_second, cp3.total) == (1, 1, 12)
    with pytest.raises(ValueError):
        coeff_pair(t, 1)


def test_coeff_pair_identity_holds_everywhere():
    for t in iter_coprime_triples(30):
        l = l_values(t)
        for j in (2, 3):
            k = 5 - j
            cp = coeff_pair(t, j, l)
            assert cp.x_first * t.a1 + cp.x_second * t.gen(k) == l.get(j) * t.gen(j)
            assert 0 <= cp.x_first < t.gen(k)
            assert 0 <= cp.x_second < t.a1


def test_main_formula_examples():
    assert frobenius_main(CoprimeTriple(7, 5, 3)).value == 4
    assert frobenius_main(CoprimeTriple(11, 9, 7)).value == 26
    assert frobenius_main(CoprimeTriple(13, 11, 9)).value == 43
    assert frobenius_main(CoprimeTriple(9, 8, 5)).value == 12
    assert frobenius_main(CoprimeTriple(11, 7, 3)).value == 8
    # L1 == 1 collapses to the two-generator value of <a2, a3>
    assert frobenius_main(CoprimeTriple(5, 3, 2)).value == 1
    assert frobenius_main(CoprimeTriple(35, 3, 2)).value == 1


def test_main_formula_result_fields():
    r = frobenius_main(CoprimeTriple(7, 5, 3))
    assert r.branch == BRANCH_MAIN
    assert r.gens == (7, 5, 3)
    assert r.l_values.as_tuple() == (2, 2, 4)
    assert r.coefficients == {"x23": 1, "x32": 1}
    assert r.tie is False


def test_main_formula_matches_oracle():
    for t in iter_coprime_triples(35):
        assert frobenius_main(t).value == frobenius_oracle(t.as_tuple()), t


def test_johnson_crosscheck_examples():
    r = frobenius_johnson_crosscheck(CoprimeTriple(7, 5, 3))
    assert r.value == 4
    assert r.branch == BRANCH_JOHNSON
    assert r.coefficients["x23"] == 1
    assert frobenius_johnson_crosscheck(CoprimeTriple(13, 11, 9)).value == 43
    with pytest.raises(HypothesisNotMetError):
        frobenius_johnson_crosscheck(CoprimeTriple(5, 3, 2))  # L1 == 1


def test_johnson_agrees_with_main_formula():
    for t in iter_coprime_triples(30):
        l = l_values(t)
        if min(l.as_tuple()) > 1:
            assert frobenius_johnson_crosscheck(t, l).value == frobenius_main(t, l).value, t


def test_fg_shortcut_examples():
    r = frobenius_fg(CoprimeTriple(7, 5, 3), check=True)
    assert r.value == 4
    assert r.branch == BRANCH_FG
    assert r.coefficients == {"x2": 2, "x3": 4}  # equal to (L2, L3)
    assert r.l_values.as_tuple() == (2, 2, 4)


def test_fg_shortcut_requires_fundamental_gap():
    # (9, 8, 5): 9 is a gap of <8, 5> and L1 == 2, but 27 is not a member,
    # so 9 is not a fundamental gap and the shortcut must refuse
    with pytest.raises(HypothesisNotMetError):
        frobenius_fg(CoprimeTriple(9, 8, 5))
    # (7, 6, 5): L1 == 3, 14 is not in <6, 5>
    with pytest.raises(HypothesisNotMetError):
        frobenius_fg(CoprimeTriple(7, 6, 5))
    # (5, 3, 2): a1 is a member of <3, 2>, not a gap at all
    with pytest.raises(HypothesisNotMetError):
        frobenius_fg(CoprimeTriple(5, 3, 2))


def test_fg_shortcut_matches_oracle_on_its_domain():
    hits = 0
    for t in iter_coprime_triples(30):
        if is_fundamental_gap(TwoGenSemigroup(t.a2, t.a3), t.a1):
            r = frobenius_fg(t, check=True)
            assert r.value == frobenius_oracle(t.as_tuple()), t
            assert r.l_values.l1 == 2
            hits += 1
    assert hits > 50  # the domain is not vacuous


def test_dispatcher_examples():
    assert frobenius((7, 5, 3)).value == 4
    assert frobenius((3, 5, 7)).value == 4
    r = frobenius((4, 6, 9))
    assert (r.value, r.branch) == (11, BRANCH_REDUCTION)
    assert r.reduction_chain == ((3, 4), (2, 3))
    assert r.gens == (9, 6, 4)
    assert r.l_values is None
    r = frobenius((6, 10, 15))
    assert (r.value, r.reduction_chain) == (29, ((5, 6), (3, 2)))
    assert frobenius((1, 17, 30)).value == -1
    assert frobenius((1, 17, 30)).branch == BRANCH_SYLVESTER
    r = frobenius((6, 6, 5))
    assert (r.value, r.branch) == (19, BRANCH_SYLVESTER)
    assert frobenius((2, 5, 7)).value == 3


def test_dispatcher_rejects_bad_input():
    with pytest.raises(InvalidGeneratorsError):
        frobenius((2, 4, 6))
    with pytest.raises(InvalidGeneratorsError):
        frobenius((2, 4))
    with pytest.raises(InvalidGeneratorsError):
        frobenius((0, 5, 7))
    with pytest.raises(InvalidGeneratorsError):
        frobenius((3.0, 5, 7))
    with pytest.raises(ValueError):
        frobenius((7, 5, 3), method="fancy")


def test_dispatcher_oracle_method():
    r = frobenius((7, 5, 3), method="oracle")
    assert (r.value, r.branch) == (4, BRANCH_ORACLE)
    assert frobenius((4, 6, 9), method="oracle").value == 11


def test_dispatcher_matches_oracle_including_reductions():
    from math import gcd

    for a in range(1, 25):
        for b in range(1, a + 1):
            for c in range(1, b + 1):
                if gcd(gcd(a, b), c) != 1:
                    continue
                assert frobenius((a, b, c)).value == frobenius_oracle((a, b, c)), (a, b, c)


def test_result_validation():
    with pytest.raises(ValueError):
        FrobeniusResult(value=4, branch="made_up", gens=(7, 5, 3))
    with pytest.raises(ValueError):
        FrobeniusResult(value=-2, branch=BRANCH_MAIN, gens=(7, 5, 3))
    good = frobenius_main(CoprimeTriple(7, 5, 3))
    with pytest.raises(ValueError):
        FrobeniusResult(
            value=good.value + 1,
            branch=BRANCH_MAIN,
            gens=good.gens,
            l_values=good.l_values,
            coefficients=good.coefficients,
        )
    with pytest.raises(ValueError):
        FrobeniusResult(value=good.value, branch=BRANCH_MAIN, gens=good.gens)


def test_product_reduction_audit():
    audit = product_reduction_audit((4, 6, 9))
    assert audit["gens"] == [9, 6, 4]
    assert audit["d"] == [3, 2, 1]
    assert audit["product_value"] == -6
    assert audit["iterated_value"] == 11
    assert audit["oracle_value"] == 11
    assert audit["match"] is False
    # on a pairwise coprime triple the product form degenerates to the formula
    assert product_reduction_audit((7, 5, 3))["match"] is True
