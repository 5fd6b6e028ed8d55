#!/usr/bin/env python3
"""Classical (q = 1) dimensions mu_j of gr_j of the global differential
operators on the flag variety of SL2, computed as operators on the Verma
module M_0 with basis f^k v (h f^k = -2k f^k, e f^k = -k(k-1) f^(k-1)).

r_j is the rank of the span of the operators f^a h^b e^c with a + b + c <= j,
viewed as matrices on a truncation of M_0; mu_j = r_j - r_(j-1).
"""
import argparse
from fractions import Fraction


def op_matrix(a, b, c, n):
    # f^a h^b e^c on span{f^k v : k < n}, entries keyed (row, col)
    out = {}
    for k in range(n):
        coef = Fraction(1)
        m = k
        for _ in range(c):
            coef *= -m * (m - 1)
            m -= 1
            if coef == 0:
                break
        if coef == 0:
            continue
        coef *= (-2 * m) ** b
        if coef == 0 or m + a >= n:
            continue
        out[(m + a, k)] = coef
    return out


def rank(rows):
    rows = [dict(r) for r in rows if r]
    pivots = {}
    r = 0
    for row in rows:
        row = dict(row)
        while row:
            key = min(row)
            if key not in pivots:
                pivots[key] = row
                r += 1
                break
            p = pivots[key]
            f = row[key] / p[key]
            for k, v in p.items():
                nv = row.get(k, 0) - f * v
                if nv == 0:
                    row.pop(k, None)
                else:
                    row[k] = nv
    return r


def rank_up_to(j, n):
    mats = [op_matrix(a, b, d - a - b, n) for d in range(j + 1) for a in range(d + 1) for b in range(d - a + 1)]
    return rank(mats)


def mu(jmax):
    out = []
    prev = 0
    for j in range(jmax + 1):
        n = 4 * j + 6
        r = rank_up_to(j, n)
        if r != rank_up_to(j, n + 4):
            raise SystemExit(f"rank at j={j} not stable in the truncation")
        out.append(r - prev)
        prev = r
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-j", type=int, default=6)
    ap.add_argument("-o", "--output")
    args = ap.parse_args()
    lines = ["# j mu_j  (A1, classical, operators on M_0)"]
    lines += [f"{j} {m}" for j, m in enumerate(mu(args.max_j))]
    text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        print(text, end="")


if __name__ == "__main__":
    main()
