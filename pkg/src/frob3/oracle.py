"""Brute-force ground truth for representability questions.

Everything here is coin-change reachability on an explicit table of the
interval [0, bound], stored as a Python int bitmask (bit v set iff v is a
sum of generators).  There are no modular inverses and no closed forms in
this module, which is the point: it is the independent check the closed
forms are tested against.

Each call builds its own table; nothing is shared or cached.
"""

from math import gcd

__all__ = [
    "representable",
    "reachable_table",
    "frobenius_oracle",
    "L_oracle",
    "tau_oracle",
    "normalize_generators",
    "InvalidGeneratorsError",
]


class InvalidGeneratorsError(ValueError):
    """Generator set unusable for the requested query."""


def normalize_generators(gens):
    """Sorted duplicate-free tuple of positive generators."""
    out = tuple(sorted(set(gens)))
    if not out:
        raise InvalidGeneratorsError("need at least one generator")
    if out[0] < 1:
        raise InvalidGeneratorsError(f"generators must be positive, got {out[0]}")
    return out


def _reach_bits(gens, bound):
    # Bit v of the result is 1 iff v in [0, bound] is a sum of generators.
    # Doubling the shift adds each generator 1, 2, 4, ... times, which
    # reaches every multiple inside [0, bound] in O(log bound) passes.
    mask = (1 << (bound + 1)) - 1
    bits = 1
    for g in gens:
        step = g
        while step <= bound:
            bits |= (bits << step) & mask
            step <<= 1
    return bits


_BYTE_BITS = [tuple(byte >> k & 1 for k in range(8)) for byte in range(256)]


def reachable_table(gens, bound):
    """List of 0/1 flags for v in [0, bound]: 1 iff v is a sum of generators."""
    gens = normalize_generators(gens)
    if bound < 0:
        raise ValueError(f"bound must be nonnegative, got {bound}")
    bits = _reach_bits(gens, bound)
    out = []
    for byte in bits.to_bytes(bound // 8 + 1, "little"):
        out.extend(_BYTE_BITS[byte])
    del out[bound + 1 :]
    return out


def representable(gens, n):
    """True if n is a nonnegative integer combination of the generators.

    Plain reachability on [0, n]; any gcd and any number of generators.
    """
    gens = normalize_generators(gens)
    if n < 0:
        return False
    return bool(_reach_bits(gens, n) >> n & 1)


def frobenius_oracle(gens):
    """Largest integer not representable, or -1 when all of them are.

    Requires the generators' overall gcd to be 1 (otherwise no largest
    non-representable integer exists).  The table is built out to the
    smallest product of two coprime generators, past which membership never
    turns off again; when no coprime pair exists the bound doubles until
    the top run of min(gens) consecutive values is fully reachable, which
    certifies the table is complete.
    """
    gens = normalize_generators(gens)
    g_all = 0
    for g in gens:
        g_all = gcd(g_all, g)
    if g_all != 1:
        raise InvalidGeneratorsError(f"gcd is {g_all}")
    if gens[0] == 1:
        return -1
    bound = None
    for idx, a in enumerate(gens):
        for b in gens[idx + 1 :]:
            if gcd(a, b) == 1 and (bound is None or a * b < bound):
                bound = a * b
    if bound is None:
        bound = gens[0] * gens[1]
    smallest = gens[0]
    while True:
        bits = _reach_bits(gens, bound)
        window = ((1 << smallest) - 1) << (bound - smallest + 1)
        if bits & window == window:
            break
        bound *= 2
    full = (1 << (bound + 1)) - 1
    return (~bits & full).bit_length() - 1


def L_oracle(t, i):
    """Least x >= 1 with x * a_i a sum of the other two generators of t.

    t carries descending pairwise-coprime generators (a1, a2, a3); the
    answer is at most min of the complementary pair.
    """
    gens = (t.a1, t.a2, t.a3)
    ai = gens[i - 1]
    pair = tuple(g for n, g in enumerate(gens, 1) if n != i)
    limit = min(pair)
    bits = _reach_bits(pair, limit * ai)
    for x in range(1, limit + 1):
        if bits >> (x * ai) & 1:
            return x
    raise AssertionError("unreachable: min(pair) * a_i is always a sum")


def tau_oracle(t, i, j):
    """Elements x in (0, a_j) with x * a_i a sum of the other two generators."""
    if i == j:
        raise ValueError(f"indices must differ, got i=j={i}")
    gens = (t.a1, t.a2, t.a3)
    ai, aj = gens[i - 1], gens[j - 1]
    pair = tuple(g for n, g in enumerate(gens, 1) if n != i)
    bits = _reach_bits(pair, (aj - 1) * ai)
    return [x for x in range(1, aj) if bits >> (x * ai) & 1]
