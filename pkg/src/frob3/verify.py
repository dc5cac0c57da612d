"""Exhaustive property sweeps behind the `verify` subcommand.

Every property pits a closed form against the brute-force oracle (or two
derivations against each other) over an enumerated domain and reports each
disagreement with the offending input.  Sweeps are deterministic: domains
are enumerated in a fixed order and results are merged in task order, so
the report is identical regardless of the number of worker processes.

The "paper-reduction" property audits the product form of the gcd
reduction, which is known to be wrong on parts of its domain; it is never
run unless explicitly requested, and requesting it is expected to fail.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd

from .engine import (
    coeff_pair,
    frobenius,
    frobenius_fg,
    frobenius_johnson_crosscheck,
    frobenius_main,
    product_reduction_audit,
    sylvester,
)
from .modular import mod_inverse
from .oracle import L_oracle, frobenius_oracle, reachable_table, tau_oracle
from .quotients import iter_coprime_triples, l_values, tau_direct, tau_from_correspondence
from .semigroup import TwoGenSemigroup, is_fundamental_gap, member_quotient, member_two_gen

__all__ = ["run_verify", "SweepReport", "PROPERTY_ORDER", "DEFAULT_PROPERTIES", "REDUCTION_CAP"]

PROPERTY_ORDER = (
    "membership",
    "quotient-membership",
    "correspondence",
    "l-values",
    "coeff-identity",
    "main-formula",
    "johnson",
    "fundamental-gap",
    "reduction",
    "paper-reduction",
)
DEFAULT_PROPERTIES = PROPERTY_ORDER[:8]
REDUCTION_CAP = 40


def _fail(failures, name, item, detail):
    failures.append({"property": name, "input": list(item), "detail": detail})


def _check_membership(pair, failures):
    a, b = pair
    s = TwoGenSemigroup(a, b)
    inv_a = mod_inverse(a, b)
    expected = reachable_table((a, b), a * b)
    for x in range(a * b + 1):
        got = member_two_gen(s, x)
        swapped = a * (inv_a * x % b) <= x
        if got != swapped or got != bool(expected[x]):
            _fail(failures, "membership", pair,
                  f"x={x}: modulus-{a} test {got}, modulus-{b} test {swapped}, oracle {bool(expected[x])}")
            return


def _check_quotient_membership(t, failures):
    a1 = t.a1
    for i in (1, 2, 3):
        q = t.quotient(i)
        ai = t.gen(i)
        j, k = t.others(i)
        table = reachable_table((t.gen(j), t.gen(k)), a1 * ai)
        for x in range(a1 + 1):
            if member_quotient(q, x) != bool(table[x * ai]):
                _fail(failures, "quotient-membership", t.as_tuple(),
                      f"i={i} x={x}: closed form {member_quotient(q, x)}, oracle {bool(table[x * ai])}")
                return


def _check_correspondence(t, failures):
    item = t.as_tuple()
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            if i == j:
                continue
            direct = tau_direct(t, i, j)
            expected = tuple(tau_oracle(t, i, j))
            if direct.values != expected:
                _fail(failures, "correspondence", item,
                      f"tau({i},{j}) direct {direct.values} != oracle {expected}")
                return
    tau21 = tau_direct(t, 1, 2)
    tau31 = tau_direct(t, 1, 3)
    restricted = tuple(v for v in tau21.values if v < t.a3)
    if tau31.values != restricted:
        _fail(failures, "correspondence", item,
              f"restriction {restricted} != direct tau(1,3) {tau31.values}")
        return
    for tau1, k in ((tau31, 2), (tau21, 3)):
        mapped = tau_from_correspondence(tau1, t, k)
        direct = tau_direct(t, k, tau1.j)
        if mapped.values != direct.values:
            _fail(failures, "correspondence", item,
                  f"mapped tau({k},{tau1.j}) {mapped.values} != direct {direct.values}")
            return
        if len(mapped) != tau1.bound - 1 - len(tau1):
            _fail(failures, "correspondence", item,
                  f"cardinality {len(mapped)} != {tau1.bound} - 1 - {len(tau1)}")
            return


def _check_l_values(t, failures):
    l = l_values(t)
    expected = tuple(L_oracle(t, i) for i in (1, 2, 3))
    if l.as_tuple() != expected:
        _fail(failures, "l-values", t.as_tuple(), f"closed form {l.as_tuple()} != oracle {expected}")
        return
    bounds = (t.a3, t.a3, t.a2)
    for i in (1, 2, 3):
        if not 1 <= l.get(i) <= bounds[i - 1]:
            _fail(failures, "l-values", t.as_tuple(), f"L{i}={l.get(i)} outside [1, {bounds[i - 1]}]")
            return


def _check_coeff_identity(t, failures):
    l = l_values(t)
    for j in (2, 3):
        k = 5 - j
        try:
            cp = coeff_pair(t, j, l)
        except AssertionError as exc:
            _fail(failures, "coeff-identity", t.as_tuple(), str(exc))
            return
        if not (0 <= cp.x_first < t.gen(k) and 0 <= cp.x_second < t.a1):
            _fail(failures, "coeff-identity", t.as_tuple(),
                  f"j={j}: coefficients ({cp.x_first}, {cp.x_second}) out of range")
            return


def _check_main_formula(t, failures):
    r = frobenius_main(t)
    expected = frobenius_oracle(t.as_tuple())
    if r.value != expected:
        _fail(failures, "main-formula", t.as_tuple(), f"formula {r.value} != oracle {expected}")
        return
    l = r.l_values
    if l.l1 == 1 and (r.value != sylvester(t.a2, t.a3) or (l.l2, l.l3) != (t.a3, t.a2)):
        _fail(failures, "main-formula", t.as_tuple(),
              f"L1=1 degenerate case: g={r.value}, L={l.as_tuple()}")


def _check_johnson(t, failures):
    l = l_values(t)
    if min(l.as_tuple()) == 1:
        return False
    try:
        r = frobenius_johnson_crosscheck(t, l)
    except AssertionError as exc:
        _fail(failures, "johnson", t.as_tuple(), str(exc))
        return True
    main = frobenius_main(t, l)
    if r.value != main.value:
        _fail(failures, "johnson", t.as_tuple(), f"crosscheck {r.value} != main formula {main.value}")
    return True


def _check_fundamental_gap(t, failures):
    l = l_values(t)
    if l.l1 != 2:
        return False
    item = t.as_tuple()
    a1 = t.a1
    for j in (2, 3):
        cp = coeff_pair(t, j, l)
        if cp.x_first != 1 or cp.x_second * t.gen(5 - j) != l.get(j) * t.gen(j) - a1:
            _fail(failures, "fundamental-gap", item,
                  f"j={j}: L1=2 identities fail, got ({cp.x_first}, {cp.x_second})")
            return True
    if is_fundamental_gap(TwoGenSemigroup(t.a2, t.a3), a1):
        try:
            r = frobenius_fg(t, check=True)
        except AssertionError as exc:
            _fail(failures, "fundamental-gap", item, str(exc))
            return True
        expected = frobenius_oracle(item)
        if r.value != expected or r.value != frobenius_main(t, l).value:
            _fail(failures, "fundamental-gap", item, f"shortcut {r.value} != oracle {expected}")
    return True


def _check_reduction(m, failures):
    got = frobenius(m).value
    expected = frobenius_oracle(m)
    if got != expected:
        _fail(failures, "reduction", m, f"iterated rule {got} != oracle {expected}")


def _check_paper_reduction(m, failures):
    audit = product_reduction_audit(m)
    if not audit["match"]:
        _fail(failures, "paper-reduction", m,
              f"product form {audit['product_value']} != oracle {audit['oracle_value']} "
              f"(d={audit['d']}, b={audit['b']})")


def _coprime_pairs(max_a):
    return [(a, b) for a in range(3, max_a + 1) for b in range(2, a) if gcd(a, b) == 1]


def _reduction_triples(max_gen):
    out = []
    for a in range(1, max_gen + 1):
        for b in range(1, a + 1):
            for c in range(1, b + 1):
                if gcd(gcd(a, b), c) != 1:
                    continue
                if gcd(a, b) == 1 and gcd(a, c) == 1 and gcd(b, c) == 1:
                    continue
                out.append((a, b, c))
    return out


def _run_chunk(task):
    name, chunk = task
    failures = []
    count = 0
    for item in chunk:
        if name == "membership":
            _check_membership(item, failures)
            count += 1
        elif name == "quotient-membership":
            _check_quotient_membership(item, failures)
            count += 1
        elif name == "correspondence":
            _check_correspondence(item, failures)
            count += 1
        elif name == "l-values":
            _check_l_values(item, failures)
            count += 1
        elif name == "coeff-identity":
            _check_coeff_identity(item, failures)
            count += 1
        elif name == "main-formula":
            _check_main_formula(item, failures)
            count += 1
        elif name == "johnson":
            count += _check_johnson(item, failures)
        elif name == "fundamental-gap":
            count += _check_fundamental_gap(item, failures)
        elif name == "reduction":
            _check_reduction(item, failures)
            count += 1
        elif name == "paper-reduction":
            _check_paper_reduction(item, failures)
            count += 1
        else:
            raise ValueError(f"unknown property {name!r}")
    return name, count, failures


@dataclass
class SweepReport:
    """Outcome of one verify run; serialization never includes timing."""

    max_a1: int
    properties: dict
    failures: list = field(default_factory=list)
    duration: float = 0.0

    @property
    def ok(self):
        return not self.failures

    def to_dict(self):
        return {
            "max_a1": self.max_a1,
            "properties": dict(self.properties),
            "failures": list(self.failures),
            "ok": self.ok,
        }

    def to_text(self):
        lines = [f"verify: max_a1={self.max_a1}"]
        for name, count in self.properties.items():
            lines.append(f"  {name:<22} {count:>7} checked")
        for f in self.failures:
            lines.append(f"  FAIL {f['property']} {tuple(f['input'])}: {f['detail']}")
        lines.append(f"result: {'PASS' if self.ok else f'FAIL ({len(self.failures)} failures)'}")
        return "\n".join(lines)


def _chunked(seq, pieces):
    size = max(1, -(-len(seq) // pieces)) if seq else 1
    return [seq[i : i + size] for i in range(0, len(seq), size)]


def run_verify(max_a1, properties=None, jobs=1):
    """Sweep the requested properties up to max_a1 and collect failures.

    Pair and triple domains are bounded by max_a1; the two reduction
    domains are additionally capped at generators <= REDUCTION_CAP.
    """
    if max_a1 < 0:
        raise ValueError(f"max_a1 must be nonnegative, got {max_a1}")
    names = list(properties) if properties is not None else list(DEFAULT_PROPERTIES)
    for name in names:
        if name not in PROPERTY_ORDER:
            raise ValueError(f"unknown property {name!r}")
    pairs = _coprime_pairs(max_a1)
    triples = list(iter_coprime_triples(max_a1))
    reductions = _reduction_triples(min(max_a1, REDUCTION_CAP))
    domains = {name: triples for name in PROPERTY_ORDER}
    domains["membership"] = pairs
    domains["reduction"] = reductions
    domains["paper-reduction"] = reductions

    tasks = []
    for name in names:
        for chunk in _chunked(domains[name], max(1, jobs * 4)):
            if chunk:
                tasks.append((name, chunk))
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_chunk, tasks))
    else:
        results = [_run_chunk(task) for task in tasks]

    counts = {name: 0 for name in names}
    failures = []
    for name, count, fails in results:
        counts[name] += count
        failures.extend(fails)
    return SweepReport(max_a1=max_a1, properties=counts, failures=failures)
