#!/usr/bin/env python3
"""Brute-force reference values for the C++ tests.

Everything here is recomputed from first principles with different methods
from the library: continued fractions instead of convex hulls, exhaustive
factorisation for irreducible sections, support functions for divisors and
subset enumeration for spanning trees and stability.

    python3 tests/oracles/oracle.py > tests/oracles/frozen.json
"""

import itertools
import json
import math
import sys

MAX_R = 12
EXTRA = [(21, 13)]


def groups():
    out = [(1, 0)]
    for r in range(2, MAX_R + 1):
        out += [(r, a) for a in range(1, r) if math.gcd(r, a) == 1]
    return out + [g for g in EXTRA if g[0] > MAX_R]


def resolution(r, a):
    if r == 1:
        return [], [(1, 0), (0, 1)]
    ainv = pow(a, -1, r)
    coeffs, n0, n1 = [], r, ainv
    while n1 > 0:
        c = -(-n0 // n1)
        coeffs.append(c)
        n0, n1 = n1, c * n1 - n0
    alpha, beta = [0, 1], [r, ainv]
    for c in coeffs:
        alpha.append(c * alpha[-1] - alpha[-2])
        beta.append(c * beta[-1] - beta[-2])
    return coeffs, list(zip(beta, alpha))


def char(r, a, b, c):
    return (b + a * c) % r


def minimal(points):
    pts = set(points)
    return sorted(p for p in pts
                  if not any(q != p and q[0] <= p[0] and q[1] <= p[1] for q in pts))


def monomials_of(r, a, rho, bound):
    return [(b, c) for b in range(bound + 1) for c in range(bound + 1)
            if char(r, a, b, c) == rho]


def invariants(r, a):
    return minimal(m for m in monomials_of(r, a, 0, r) if m != (0, 0))


def specials(r, a):
    return sorted(rho for rho in range(1, r)
                  if len(minimal(monomials_of(r, a, rho, 2 * r))) == 2)


def support(r, a, rho, pairs):
    """min over monomials of degree rho of b*beta_k + c*alpha_k, per ray."""
    mons = monomials_of(r, a, rho, r)
    return [min(b * be + c * al for b, c in mons) for be, al in pairs]


def special_quiver(r, a, pairs):
    ell = len(pairs) - 2
    deg = [pairs[i][1] % r for i in range(ell + 1)]
    vertex = {d: i for i, d in enumerate(deg)}
    phi = [support(r, a, d, pairs) for d in deg]

    def homs(i, j):
        rho = (deg[j] - deg[i]) % r
        return {m for m in monomials_of(r, a, rho, r) if m != (0, 0)}

    hom = {(i, j): homs(i, j) for i in range(ell + 1) for j in range(ell + 1)}
    arrows = []
    for (i, j), ms in hom.items():
        for m in ms:
            split = False
            for k in range(ell + 1):
                for m1 in hom[(i, k)]:
                    m2 = (m[0] - m1[0], m[1] - m1[1])
                    if m2 in hom[(k, j)]:
                        split = True
                        break
                if split:
                    break
            if split:
                continue
            label = []
            for k, (be, al) in enumerate(pairs):
                num = m[0] * be + m[1] * al + phi[i][k] - phi[j][k]
                assert num % r == 0 and num >= 0
                label.append(num // r)
            arrows.append((i, j, m[0], m[1], label))
    arrows.sort()
    assert all(vertex[deg[j]] == j for j in range(ell + 1))
    return arrows


def spanning_trees(n, arrows):
    edges = [(t, h) for t, h, *_ in arrows]
    trees = []
    for combo in itertools.combinations(range(len(edges)), n - 1):
        heads = [edges[e][1] for e in combo]
        if any(edges[e][0] == edges[e][1] for e in combo):
            continue
        if 0 in heads or len(set(heads)) != n - 1:
            continue
        seen, frontier = {0}, [0]
        while frontier:
            v = frontier.pop()
            for e in combo:
                if edges[e][0] == v and edges[e][1] not in seen:
                    seen.add(edges[e][1])
                    frontier.append(edges[e][1])
        if len(seen) == n:
            trees.append(sorted(list(arrows[e][:4]) for e in combo))
    return sorted(trees)


def semistable_equals_stable(n, arrows):
    theta = [-(n - 1)] + [1] * (n - 1)
    edges = [(t, h) for t, h, *_ in arrows]
    for mask in range(1 << len(edges)):
        stable, semistable = True, True
        for S in range(1, (1 << n) - 1):
            closed = all(not (mask >> e & 1) or not (S >> t & 1) or (S >> h & 1)
                         for e, (t, h) in enumerate(edges))
            if not closed:
                continue
            w = sum(theta[v] for v in range(n) if S >> v & 1)
            if w < 0:
                semistable = stable = False
            elif w == 0:
                stable = False
        if semistable and not stable:
            return False
    return True


def chart_generators(r, a, pairs):
    ell = len(pairs) - 2
    out = []
    for j in range(ell + 1):
        row = []
        for rho in range(r):
            mons = monomials_of(r, a, rho, r)
            key = lambda m, k: m[0] * pairs[k][0] + m[1] * pairs[k][1]
            best = [m for m in mons
                    if all(key(m, k) <= key(n, k) for n in mons for k in (j, j + 1))]
            assert len(set(best)) == 1
            row.append(list(best[0]))
        out.append(row)
    return out


def main():
    records = []
    for r, a in groups():
        coeffs, pairs = resolution(r, a)
        ell = len(coeffs)
        arrows = special_quiver(r, a, pairs)
        rec = {
            "r": r,
            "a": a,
            "ell": ell,
            "coeffs": coeffs,
            "pairs": [list(p) for p in pairs],
            "invariants": [list(m) for m in invariants(r, a)],
            "specials": specials(r, a),
            "arrows": [[t, h, b, c, lab] for t, h, b, c, lab in arrows],
            "trees": spanning_trees(ell + 1, arrows),
            "chart_generators": chart_generators(r, a, pairs),
        }
        if ell <= 3 and len(arrows) <= 12:
            rec["semistable_equals_stable"] = semistable_equals_stable(ell + 1, arrows)
        records.append(rec)
        print(f"{r} {a}", file=sys.stderr)
    json.dump({"groups": records}, sys.stdout, separators=(",", ":"))
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
