"""High-precision oracle for the closed-form constants frozen into the unit tests.

Run: python3 tests/oracles/entropy_values.py
"""
from mpmath import mp, mpf, log

mp.dps = 40


def H(x):
    x = mpf(x)
    if x == 0 or x == 1:
        return mpf(0)
    return -(x * log(x, 2) + (1 - x) * log(1 - x, 2))


def smin_gaussian(b):
    b = sorted((mpf(v) for v in b), reverse=True)
    n = len(b) // 2
    total = H((1 + b[0]) / 2)
    for j in range(1, n):
        total += H((1 + b[2 * j - 1] * b[2 * j]) / 2)
    return total


def smin_even(b):
    b = sorted((mpf(v) for v in b), reverse=True)
    n = len(b) // 2
    return sum(H((1 + b[2 * j] * b[2 * j + 1]) / 2) for j in range(n))


values = {
    "H(0.8)": H("0.8"),
    "H(0.725)": H("0.725"),
    "H(0.95)": H("0.95"),
    "H(0.75)": H("0.75"),
    "H(0.625)": H("0.625"),
    "smin_even(0.9,0.5)": smin_even(["0.9", "0.5"]),
    "smin_gaussian(n=3,b=0.5)": smin_gaussian(["0.5"] * 6),
    "c1_gaussian(n=3,b=0.5)": 3 - smin_gaussian(["0.5"] * 6),
    "4H(0.8)": 4 * H("0.8"),
    "4H(0.9)": 4 * H("0.9"),
    "4H(0.7)": 4 * H("0.7"),
    "4H(0.6)": 4 * H("0.6"),
}
for k, v in values.items():
    print(f"{k:28s} {mp.nstr(v, 20)}")
