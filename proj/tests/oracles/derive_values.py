#!/usr/bin/env python3
"""Independent brute-force oracles for values frozen into the C++ tests.

Nothing here shares code with the library; each value is produced by direct
enumeration or direct summation with Python integers / fractions.
"""
from fractions import Fraction
from itertools import product
from math import isqrt
import sympy


def q1_numerals(n):
    return sum(1 for p in range(-n, n + 1) for q in range(-n, n + 1) if q != 0)


def subsets(size):
    return sum(1 for _ in product((0, 1), repeat=size))


def direct_s(n):
    q = 2 * n + 1
    return sum(q**k * k for k in range(1, n + 1))


def upper_direct(n):
    return 2 * n * direct_s(n)


def upper_formula(n):
    q = 2 * n + 1
    return Fraction(q * (q**n * (2 * n * n - 1) + 1), 2 * n)


def tuples(n, k):
    rng = range(-n, n + 1)
    return sum(1 for t in product(rng, repeat=k + 1) if t[0] != 0)


def witnesses(n, k):
    roots = set()
    z = sympy.Symbol("z")
    for m in range(-n, n + 1):
        roots |= set(sympy.solve(z - m, z))
    for m in range(1, n + 1):
        roots |= set(sympy.solve(z**2 + m, z))
    for p in list(sympy.primerange(2, 10**4))[:k]:
        roots |= set(sympy.solve(z**2 - p, z))
    return len(roots)


def long_division_terminates(steps):
    # 1 / (x + 1) with x = grossone, descending exponents: quotient x^-1 - x^-2 + ...
    rem = {0: Fraction(1)}
    div = {1: Fraction(1), 0: Fraction(1)}
    quot = []
    for _ in range(steps):
        if not rem:
            return True, quot
        e = max(rem)
        c = rem[e] / div[1]
        quot.append((e - 1, c))
        for de, dc in div.items():
            rem[e - 1 + de] = rem.get(e - 1 + de, 0) - c * dc
            if rem[e - 1 + de] == 0:
                del rem[e - 1 + de]
    return not rem, quot


if __name__ == "__main__":
    print("q1 numerals n=5:", q1_numerals(5))
    print("subsets of 20:", subsets(20))
    print("S direct n=5:", direct_s(5), "upper n=5:", upper_direct(5))
    print("upper n=1,2:", upper_direct(1), upper_direct(2), upper_formula(1), upper_formula(2))
    print("upper direct == formula 1..50:", all(upper_direct(n) == upper_formula(n) for n in range(1, 51)))
    print("upper n=20:", upper_direct(20))
    print("tuples (n=2,k=2):", tuples(2, 2), "(n=1,k=3):", tuples(1, 3))
    print("geometric q=2n+1 lo=0 hi=n-1 at n=3:", sum((7)**k for k in range(0, 3)))
    print("sum_k_qk q=2 N=3:", sum(2**k * k for k in range(1, 4)))
    print("witness n=1,k=0:", witnesses(1, 0), "n=4,k=0:", witnesses(4, 0), "n=3,k=2:", witnesses(3, 2))
    print("1/(G1+1) terminates in 10 steps:", long_division_terminates(10))
    print("evens in 1..10:", sum(1 for x in range(1, 11) if x % 2 == 0))
    print("squares in 1..10:", sum(1 for x in range(1, 11) if isqrt(x) ** 2 == x))
    print("N minus five in 1..120:", sum(1 for x in range(1, 121) if x not in {3, 5, 10, 23, 114}))
    print("binary [0,1] 3 digits:", sum(1 for i in range(2) for f in range(8) if i * 8 + f <= 8))
    print("(2n+1)^n vs n^100 at 10,100,1000:", [(2 * n + 1) ** n > n**100 for n in (10, 100, 1000)])
    print("lower < upper at 10,100,1000:", [4 * n + 1 < upper_formula(n) for n in (10, 100, 1000)])
