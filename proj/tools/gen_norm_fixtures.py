#!/usr/bin/env python3
"""Regenerates corpus/norm_fixtures.json.

Each fixture is built from a spectral curve that splits into rational sheets
eta = a_i(w). Divisors are placed on the sheets and the expected base-divisor
norm is computed here, directly from the sheet data, so the library result is
checked against arithmetic done outside the library. Run from the repo root.
"""
import json
import random
from fractions import Fraction

random.seed(0x6E6F726D)

# Polynomials in w as ascending Fraction lists; [] is zero.


def wtrim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def wadd(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return wtrim(out)


def wneg(a):
    return [-c for c in a]


def wmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return wtrim(out)


def weval(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


# Polynomials in eta with w-polynomial coefficients, ascending.


def emul(p, q):
    out = [[] for _ in range(len(p) + len(q) - 1)]
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] = wadd(out[i + j], wmul(x, y))
    return out


def sheet_product(sheets):
    p = [[Fraction(1)]]
    for a in sheets:
        p = emul(p, [wneg(a), [Fraction(1)]])
    return p


def frs(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def spectral_json(p):
    n = len(p) - 1
    assert p[-1] == [Fraction(1)]
    return {"n": n, "coeffs": [[frs(c) for c in p[k]] for k in range(n - 1, -1, -1)]}


def rnd_frac(num=6, den=3):
    return Fraction(random.randint(-num, num), random.randint(1, den))


def rnd_sheet(max_deg=2):
    d = random.randint(0, max_deg)
    return wtrim([rnd_frac() for _ in range(d + 1)])


def distinct_sheets(k, max_deg=2):
    out = []
    while len(out) < k:
        s = rnd_sheet(max_deg)
        if all(s != t for t in out):
            out.append(s)
    return out


def sigma_sheets(pairs, with_zero=False):
    out = []
    while len(out) < 2 * pairs:
        a = rnd_sheet()
        if not a:
            continue
        na = wneg(a)
        if a != na and all(a != t and na != t for t in out):
            out.extend([a, na])
    if with_zero:
        out.append([])
    return out


def fiber_fixture(label, sheets, w0):
    return {
        "label": label,
        "p": spectral_json(sheet_product(sheets)),
        "w0": frs(w0),
        "expected_norm": [{"w": frs(w0), "mult": len(sheets)}],
    }


def divisor_fixture(label, sheets, picks):
    support = {}
    for w0, i, m in picks:
        pt = (w0, weval(sheets[i], w0))
        support[pt] = support.get(pt, 0) + m
    support = {k: v for k, v in support.items() if v != 0}
    base = {}
    for (w0, _), m in support.items():
        base[w0] = base.get(w0, 0) + m
    base = {k: v for k, v in base.items() if v != 0}
    return {
        "label": label,
        "p": spectral_json(sheet_product(sheets)),
        "points": [
            {"w": frs(w), "eta": frs(e), "mult": m} for (w, e), m in sorted(support.items())
        ],
        "expected_norm": [{"w": frs(w), "mult": m} for w, m in sorted(base.items())],
    }


def random_picks(sheets, bases=3, allow_negative=True):
    picks = []
    n = len(sheets)
    for _ in range(random.randint(1, bases)):
        w0 = rnd_frac(5, 2)
        for i in random.sample(range(n), random.randint(1, n)):
            m = random.choice([-2, -1, 1, 1, 2, 3]) if allow_negative else random.randint(1, 3)
            picks.append((w0, i, m))
    return picks


def main():
    fixtures = []

    for k in range(15):
        n = [2, 3, 4][k % 3]
        sigma = k < 6
        sheets = (
            sigma_sheets(n // 2, with_zero=n % 2 == 1) if sigma else distinct_sheets(n)
        )
        w0 = rnd_frac(5, 2)
        kind = "sigma-symmetric" if sigma else "generic"
        fixtures.append(fiber_fixture(f"fiber {kind} n={n} #{k + 1}", sheets, w0))
    for k in range(15, 27):
        n = [2, 3, 4][k % 3]
        sheets = distinct_sheets(n, max_deg=1)
        fixtures.append(fiber_fixture(f"fiber affine sheets n={n} #{k + 1}", sheets, rnd_frac(4, 1)))
    # a fiber where two sheets collide at the chosen base point
    a = [Fraction(1), Fraction(1)]
    b = [Fraction(3), Fraction(0)]  # equal values at w = 2
    fixtures.append(fiber_fixture("fiber with a double point", [a, b, [Fraction(-1)]], Fraction(2)))

    while len(fixtures) < 50:
        n = random.choice([2, 3, 4])
        sheets = distinct_sheets(n)
        fixtures.append(fiber_fixture(f"fiber generic n={n} #{len(fixtures) + 1}", sheets, rnd_frac(5, 2)))

    count = 0
    while count < 29:
        n = [2, 3, 4][count % 3]
        sigma = count % 2 == 0
        sheets = (
            sigma_sheets(n // 2, with_zero=n % 2 == 1) if sigma else distinct_sheets(n)
        )
        picks = random_picks(sheets)
        fx = divisor_fixture(
            f"divisor {'sigma-symmetric' if sigma else 'generic'} n={n} #{count + 1}", sheets, picks
        )
        if not fx["points"]:
            continue
        fixtures.append(fx)
        count += 1
    # norms that cancel entirely: opposite multiplicities on the two sheets
    sheets = [[Fraction(2), Fraction(1)], [Fraction(-1)]]
    fixtures.append(divisor_fixture(
        "divisor with cancelling norm",
        sheets,
        [(Fraction(1), 0, 2), (Fraction(1), 1, -2), (Fraction(-3), 0, 1), (Fraction(-3), 1, -1)],
    ))

    doc = {"description": "base-divisor norms on rationally split spectral curves", "fixtures": fixtures}
    with open("corpus/norm_fixtures.json", "w") as f:
        json.dump(doc, f, indent=1)
        f.write("\n")
    print(f"{len(fixtures)} fixtures")


if __name__ == "__main__":
    main()
