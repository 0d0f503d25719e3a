#!/usr/bin/env python3
"""Generate OEIS-style b-file fixtures for the carryless sequences.

This is a from-scratch implementation of carryless arithmetic mod 10,
deliberately sharing no code or algorithms with the Rust crates so it
can serve as a differential oracle: numbers are plain Python ints,
addition and multiplication work schoolbook-style on decimal digits,
and primality goes through a separate GF(2)/GF(5) polynomial layer.

Every sequence is anchored against frozen known prefixes (asserted
below) before anything is written. Output goes to
crates/carryless-cli/fixtures/b<number>.txt in standard b-file format.
"""

import itertools
import os
import sys

TERMS = 250

# ---------------------------------------------------------------- core ops


def cadd(a: int, b: int) -> int:
    """Digitwise sum mod 10, no carries."""
    out, place = 0, 1
    while a or b:
        out += ((a % 10 + b % 10) % 10) * place
        a //= 10
        b //= 10
        place *= 10
    return out


def cneg(a: int) -> int:
    out, place = 0, 1
    while a:
        out += ((10 - a % 10) % 10) * place
        a //= 10
        place *= 10
    return out


def cmul(a: int, b: int) -> int:
    """Schoolbook product: one shifted digit-scaled row per digit of b,
    rows combined with cadd."""
    out, shift = 0, 0
    while b:
        d = b % 10
        row, place = 0, 10**shift
        aa = a
        while aa:
            row += (aa % 10 * d % 10) * place
            aa //= 10
            place *= 10
        out = cadd(out, row)
        b //= 10
        shift += 1
    return out


def digits(n: int):
    """Little-endian decimal digits, empty for 0."""
    ds = []
    while n:
        ds.append(n % 10)
        n //= 10
    return ds


# ------------------------------------------------- polynomial layer (CRT)
# A number corresponds to the pair of its digit strings read mod 2 and
# mod 5; primality is irreducibility of one component while the other
# stays a unit. Polynomials are little-endian tuples with no trailing
# zeros.


def trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def pair_of(n: int):
    ds = digits(n)
    return trim(d % 2 for d in ds), trim(d % 5 for d in ds)


def poly_mul(p, q, m):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = (out[i + j] + a * b) % m
    return trim(out)


def monic_polys(m, deg):
    for lower in itertools.product(range(m), repeat=deg):
        yield trim(lower + (1,))


def _divides(g, f, m):
    r = list(f)
    inv = pow(g[-1], -1, m)
    while True:
        r = list(trim(r))
        if len(r) < len(g):
            break
        c = r[-1] * inv % m
        off = len(r) - len(g)
        for i, gc in enumerate(g):
            r[off + i] = (r[off + i] - c * gc) % m
    return not trim(r)


def _irreducible_slow(f, m):
    deg = len(f) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for g in monic_polys(m, d):
            if _divides(g, f, m):
                return False
    return True


def is_cprime(n: int) -> bool:
    f2, f5 = pair_of(n)
    if len(f2) == 1 and f2[0] == 1 and len(f5) >= 2:
        return _irreducible_slow(f5, 5)
    if len(f5) == 1 and len(f2) >= 2:
        return _irreducible_slow(f2, 2)
    return False


def moebius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def divisors_of(n: int):
    return [d for d in range(1, n + 1) if n % d == 0]


def prime_count_formula(k: int) -> int:
    m = k - 1
    total = sum(moebius(m // d) * (2**d + 5**d) for d in divisors_of(m))
    assert total % m == 0
    return 4 * total // m


def square_count_formula(k: int) -> int:
    if k == 1:
        return 5
    if k % 2 == 0:
        return 0
    e = (k - 3) // 2
    return 45 * 10**e + 2**e


# ------------------------------------------------------------- sequences


def doubles(n_terms):
    return [cadd(n, n) for n in range(n_terms)]


def squares(n_terms):
    return [cmul(n, n) for n in range(n_terms)]


def cubes(n_terms):
    return [cmul(cmul(n, n), n) for n in range(n_terms)]


def mapped(n_terms, base, table):
    out = []
    for k in range(n_terms):
        if k == 0:
            out.append(0)
            continue
        ds = []
        while k:
            ds.append(table[k % base])
            k //= base
        out.append(int("".join(str(d) for d in reversed(ds))))
    return out


def evenish_seq(n_terms):
    return mapped(n_terms, 5, [0, 2, 4, 6, 8])


def fiveish_seq(n_terms):
    return mapped(n_terms, 2, [0, 5])


def zero_divisor_seq(n_terms):
    pool = set(evenish_seq(n_terms + 1)) | set(fiveish_seq(n_terms + 1))
    return sorted(pool)[:n_terms]


def class_n_seq(n_terms):
    out, n = [], 0
    while len(out) < n_terms:
        n += 1
        ds = digits(n)
        if any(d % 2 for d in ds) and any(d % 5 for d in ds):
            out.append(n)
    return out


def primes_seq(n_terms):
    out, n = [], 9
    while len(out) < n_terms:
        n += 1
        if is_cprime(n):
            out.append(n)
    return out


def prime_counts(n_terms):
    return [prime_count_formula(k) for k in range(2, 2 + n_terms)]


def square_counts(n_terms):
    return [square_count_formula(k) for k in range(1, 1 + n_terms)]


def distinct_squares(n_terms):
    # a k-digit root always squares to 2k-1 digits, so roots below 10^3
    # cover every square below 10^5
    pool = sorted({cmul(n, n) for n in range(1000)})
    assert len(pool) == 1 + 5 + 46 + 452
    return pool[:n_terms]


def triangular(n_terms):
    out, t = [], 0
    for n in range(n_terms):
        t = cadd(t, n)
        out.append(t)
    return out


def partitions(n_terms):
    # counts[s] = number of subsets of {1..n} with carryless sum s;
    # term n is counts[n] with parts bounded by n
    counts = {0: 1}
    out = []
    for n in range(n_terms):
        if n > 0:
            for s, c in list(counts.items()):
                t = cadd(s, n)
                counts[t] = counts.get(t, 0) + c
        out.append(counts.get(n, 0))
    return out


def mult_table(n_terms):
    out = []
    for diag in itertools.count():
        for i in range(diag + 1):
            out.append(cmul(i, diag - i))
            if len(out) == n_terms:
                return out


def fibonacci(n_terms):
    out, a, b = [], 0, 1
    for _ in range(n_terms):
        out.append(a)
        a, b = b, cadd(a, b)
    return out


def powers_of_two(n_terms):
    out, v = [], 1
    for _ in range(n_terms):
        out.append(v)
        v = cmul(v, 2)
    return out


# (a_number, offset, generator)
REGISTRY = [
    ("A004520", 0, doubles),
    ("A059729", 0, squares),
    ("A014263", 1, evenish_seq),
    ("A169964", 1, fiveish_seq),
    ("A169884", 1, zero_divisor_seq),
    ("A169968", 1, class_n_seq),
    ("A169887", 1, primes_seq),
    ("A169962", 2, prime_counts),
    ("A169963", 1, square_counts),
    ("A169889", 1, distinct_squares),
    ("A169885", 0, cubes),
    ("A169890", 0, triangular),
    ("A169973", 0, partitions),
    ("A059692", 0, mult_table),
    ("A003893", 0, fibonacci),
    ("A000689", 0, powers_of_two),
]


# --------------------------------------------------------------- anchors


def check_anchors():
    assert cadd(785, 376) == 51
    assert cmul(643, 59) == 417
    assert cneg(702) == 308
    assert cadd(650, cneg(702)) == 958
    assert cmul(4, 5005505553) == 2
    assert cmul(9, cneg(8)) == 8
    assert cmul(cmul(23, cmul(23, 23)), cmul(51, cmul(51, 52))) == 1234
    assert cmul(2, cmul(69, cmul(69, 69))) == 2468
    assert cmul(5, cmul(51, 51)) == 505
    assert cmul(56, 65) == 10
    assert cmul(51, 61) == 11
    assert cmul(cmul(21, 29), cmul(51, 59)) == 101

    assert doubles(12) == [0, 2, 4, 6, 8, 0, 2, 4, 6, 8, 20, 22]
    assert squares(10) == [0, 1, 4, 9, 6, 5, 6, 9, 4, 1]
    assert triangular(11) == [0, 1, 3, 6, 0, 5, 1, 8, 6, 5, 15]
    assert fibonacci(10) == [0, 1, 1, 2, 3, 5, 8, 3, 1, 4]
    assert powers_of_two(9) == [1, 2, 4, 8, 6, 2, 4, 8, 6]
    assert zero_divisor_seq(10) == [0, 2, 4, 5, 6, 8, 20, 22, 24, 26]
    assert class_n_seq(5) == [1, 3, 7, 9, 10]
    assert mult_table(10) == [0, 0, 0, 0, 1, 0, 0, 2, 2, 0]
    assert distinct_squares(6) == [0, 1, 4, 5, 6, 9]
    assert partitions(4) == [1, 1, 1, 2]

    expected_two_digit = [
        21, 23, 25, 27, 29, 41, 43, 45, 47, 49, 51, 52, 53, 54,
        56, 57, 58, 59, 61, 63, 65, 67, 69, 81, 83, 85, 87, 89,
    ]
    assert primes_seq(28) == expected_two_digit
    assert prime_counts(4) == [28, 44, 168, 612]
    assert square_counts(5) == [5, 0, 46, 0, 452]

    # differential check on the prime test: a number with both pair
    # components nonzero is composite iff it is a product of two
    # non-units of the same or smaller length
    units = {1, 3, 7, 9}
    products = set()
    for a in range(2, 1000):
        if a in units:
            continue
        for b in range(a, 1000):
            if b in units:
                continue
            p = cmul(a, b)
            if p < 1000:
                products.add(p)
    brute = [
        n
        for n in range(10, 1000)
        if any(d % 2 for d in digits(n))
        and any(d % 5 for d in digits(n))
        and n not in products
    ]
    assert brute == [p for p in primes_seq(72) if p < 1000]


# ----------------------------------------------------------------- main


def main():
    check_anchors()
    out_dir = os.path.join(
        os.path.dirname(os.path.abspath(__file__)),
        "..",
        "crates",
        "carryless-cli",
        "fixtures",
    )
    os.makedirs(out_dir, exist_ok=True)
    for a_number, offset, gen in REGISTRY:
        values = gen(TERMS)
        assert len(values) == TERMS
        path = os.path.join(out_dir, f"b{a_number[1:]}.txt")
        with open(path, "w") as fh:
            for i, v in enumerate(values):
                fh.write(f"{offset + i} {v}\n")
        print(f"wrote {path} ({TERMS} terms)")


if __name__ == "__main__":
    sys.exit(main())
