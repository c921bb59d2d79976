#!/usr/bin/env python3
"""Independent oracle for the frozen values in tests/frozen.hpp.

Brute force and exact fractions only; shares no code with the C++ library.
Run: python3 tests/oracles/gen_frozen.py > tests/frozen.hpp
"""
from fractions import Fraction
from math import floor


def inv_brute(a, p):
    return next(b for b in range(1, p) if (a * b) % p == 1)


def squares(p):
    return sorted({(x * x) % p for x in range(1, p)})


def cz_crossings(s):
    # Robbin-Salamon count for t -> exp(2 pi i s t): every crossing has sign sign(s),
    # endpoints weigh 1, interior crossings weigh 2.
    s = Fraction(s)
    if s == 0:
        raise ValueError("degenerate constant path")
    sign = 1 if s > 0 else -1
    a = abs(s)
    interior = sum(1 for n in range(1, floor(a) + 1) if n < a)
    end = 1 if a.denominator == 1 else 0
    return sign * (1 + 2 * interior + end)


def pants_brute(p, q, max_di, max_k):
    # homotopy condition k0 [g0] + kInf [gInf] = 0 with [gInf] = q [g0]
    out = []
    for k in range(1, max_k + 1):
        for k0 in range(1, p * (max_di + k + 1)):
            for kinf in range(1, p * (max_di + k + 1)):
                if k0 % p == 0 or kinf % p == 0:
                    continue
                if (k0 + q * kinf) % p:
                    continue
                d = k0 + kinf - p * k
                if d <= 0 or d % p == 0:
                    continue
                di = d // p
                if di > max_di:
                    continue
                out.append((d % p, di, k, k0, kinf))
    return sorted(out)


def pants_index(p, q, k0, kinf, k):
    v = inv_brute(q, p)
    mu_inf = cz_crossings(Fraction(kinf * (1 - q), p))
    mu_0 = cz_crossings(Fraction(k0 * (1 - v), p))
    d = k0 + kinf - p * k
    val = mu_inf + mu_0 + Fraction(2, p) * (d + k0 * v + kinf * q) - 2 * k + 2
    assert val.denominator == 1
    return int(val)


def classes(p):
    qs = range(1, p)
    sq = set(squares(p))
    diffeo = lambda a, b: b % p in {a % p, (-a) % p, inv_brute(a, p), (-inv_brute(a, p)) % p}
    homot = lambda a, b: (a * b) % p in sq or (-a * b) % p in sq

    def partition(rel):
        parts = []
        for a in qs:
            for part in parts:
                if rel(part[0], a):
                    part.append(a)
                    break
            else:
                parts.append([a])
        return parts

    return partition(diffeo), partition(homot)


def cpp_list(xs):
    return "{" + ", ".join(str(x) for x in xs) + "}"


def main():
    print("// Generated by tests/oracles/gen_frozen.py. Do not edit by hand.")
    print("#pragma once\n\n#include <array>\n#include <cstdint>\n#include <vector>\n")
    print("namespace frozen {\n")
    print("struct InvRow { std::int64_t p, a, inv; };")
    rows = [(p, a, inv_brute(a, p)) for p in (5, 7, 11, 13) for a in range(1, p)]
    print("inline const std::vector<InvRow> kInverses = {")
    for r in rows:
        print("    {%d, %d, %d}," % r)
    print("};\n")

    print("struct SquareRow { std::int64_t p; std::vector<std::int64_t> squares; };")
    print("inline const std::vector<SquareRow> kSquares = {")
    for p in (5, 7, 11, 13, 17):
        print("    {%d, %s}," % (p, cpp_list(squares(p))))
    print("};\n")

    print("struct CzRow { std::int64_t p, q, k, mu_inf, mu_0; };")
    print("inline const std::vector<CzRow> kCz = {")
    for p, q in ((5, 2), (7, 3), (11, 4), (13, 5)):
        v = inv_brute(q, p)
        for k in range(1, 2 * p + 1):
            if k % p == 0:
                continue
            print("    {%d, %d, %d, %d, %d}," % (p, q, k, cz_crossings(Fraction(k * (1 - q), p)),
                                               cz_crossings(Fraction(k * (1 - v), p))))
    print("};\n")

    print("struct PantsRow { std::int64_t r, d_I, k, k0, kInf, index; };")
    print("struct PantsTable { std::int64_t p, q, max_di, max_k; std::vector<PantsRow> rows; };")
    print("inline const std::vector<PantsTable> kPants = {")
    for p, q, mdi, mk in ((5, 2, 1, 2), (7, 3, 1, 1), (11, 5, 0, 1)):
        print("    {%d, %d, %d, %d, {" % (p, q, mdi, mk))
        for (r, di, k, k0, kinf) in pants_brute(p, q, mdi, mk):
            print("        {%d, %d, %d, %d, %d, %d}," % (r, di, k, k0, kinf, pants_index(p, q, k0, kinf, k)))
        print("    }},")
    print("};\n")

    print("struct ClassRow { std::int64_t p; std::vector<std::vector<std::int64_t>> diffeo, homotopy; };")
    print("inline const std::vector<ClassRow> kClasses = {")
    for p in (5, 7, 11, 13):
        d, h = classes(p)
        print("    {%d, {%s}, {%s}}," % (p, ", ".join(cpp_list(x) for x in d), ", ".join(cpp_list(x) for x in h)))
    print("};\n")

    print("}  // namespace frozen")


if __name__ == "__main__":
    main()
