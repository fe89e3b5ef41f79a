#!/usr/bin/env python3
"""Recompute the frozen reference values in tests/data/derived_values.json.

Everything here is plain brute force over explicit tables and shares no code
with the C++ library: rings are (elements, add, mul, zero, one) built from
scratch, morphisms are found by trying every additive map on a basis.
"""
import itertools
import json
import sys
from pathlib import Path


class Ring:
    def __init__(self, elems, add, mul, zero, one):
        self.elems = list(elems)
        self.add = add
        self.mul = mul
        self.zero = zero
        self.one = one


def zmod(n):
    return Ring(range(n), lambda a, b: (a + b) % n, lambda a, b: (a * b) % n, 0, 1 % n)


def gf4():
    # c0 + c1*w with w^2 = w + 1; index c0 + 2*c1.
    def mul(a, b):
        a0, a1, b0, b1 = a & 1, a >> 1, b & 1, b >> 1
        c0 = (a0 * b0 + a1 * b1) % 2
        c1 = (a0 * b1 + a1 * b0 + a1 * b1) % 2
        return c0 + 2 * c1
    return Ring(range(4), lambda a, b: a ^ b, mul, 0, 1)


def product(r, s):
    n = len(s.elems)
    def split(x):
        return divmod(x, n)
    def add(x, y):
        (a, b), (c, d) = split(x), split(y)
        return r.add(a, c) * n + s.add(b, d)
    def mul(x, y):
        (a, b), (c, d) = split(x), split(y)
        return r.mul(a, c) * n + s.mul(b, d)
    return Ring(range(len(r.elems) * n), add, mul, r.zero * n + s.zero, r.one * n + s.one)


def m2f2():
    # Entries (a, b; c, d), index 8a + 4b + 2c + d.
    def unpack(x):
        return (x >> 3) & 1, (x >> 2) & 1, (x >> 1) & 1, x & 1
    def pack(a, b, c, d):
        return 8 * (a % 2) + 4 * (b % 2) + 2 * (c % 2) + (d % 2)
    def mul(x, y):
        a, b, c, d = unpack(x)
        e, f, g, h = unpack(y)
        return pack(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    return Ring(range(16), lambda x, y: x ^ y, mul, 0, 9)


def units(r):
    return sorted(x for x in r.elems if any(r.mul(x, y) == r.one and r.mul(y, x) == r.one for y in r.elems))


def regular(r):
    zd = set()
    for x in r.elems:
        for y in r.elems:
            if y != r.zero and (r.mul(x, y) == r.zero or r.mul(y, x) == r.zero):
                zd.add(x)
    return sorted(x for x in r.elems if x not in zd)


def neg(r, x):
    return next(y for y in r.elems if r.add(x, y) == r.zero)


def jacobson(r):
    u = set(units(r))
    return sorted(x for x in r.elems
                  if all(r.add(r.one, r.mul(r.mul(a, x), b)) in u for a in r.elems for b in r.elems))


def generated_ideal(r, gens):
    s = {r.zero}
    frontier = list(gens)
    while frontier:
        x = frontier.pop()
        if x in s:
            continue
        s.add(x)
        for y in list(s):
            frontier.append(r.add(x, y))
        frontier.append(neg(r, x))
        for a in r.elems:
            frontier.append(r.mul(a, x))
            frontier.append(r.mul(x, a))
    return frozenset(s)


def ideals(r):
    # Breadth-first over "ideal plus one more element"; every ideal arises
    # from {0} by adding its members one at a time.
    zero = generated_ideal(r, [])
    found = {zero}
    frontier = [zero]
    while frontier:
        i = frontier.pop()
        for x in r.elems:
            if x in i:
                continue
            j = generated_ideal(r, list(i) + [x])
            if j not in found:
                found.add(j)
                frontier.append(j)
    return sorted((sorted(i) for i in found), key=lambda i: (len(i), i))


def additive_basis(r):
    # Small greedy generating set of the additive group: each new generator
    # is the element of largest order outside the current span.
    def span(gens):
        s = {r.zero}
        frontier = [r.zero]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = r.add(x, g)
                if y not in s:
                    s.add(y)
                    frontier.append(y)
        return s
    gens = [r.one]
    while len(span(gens)) < len(r.elems):
        cur = span(gens)
        gens.append(next(x for x in r.elems if x not in cur))
    return gens, span


def morphisms(r, s):
    """All unital ring morphisms r -> s, by trying every image of a basis."""
    gens, _ = additive_basis(r)
    out = []
    for images in itertools.product(s.elems, repeat=len(gens)):
        if images[0] != s.one:
            continue
        # Extend additively along all sums of generators; reject clashes.
        f = {r.zero: s.zero}
        frontier = [r.zero]
        ok = True
        while frontier and ok:
            x = frontier.pop()
            for g, gi in zip(gens, images):
                y = r.add(x, g)
                fy = s.add(f[x], gi)
                if y in f:
                    if f[y] != fy:
                        ok = False
                        break
                else:
                    f[y] = fy
                    frontier.append(y)
        if not ok:
            continue
        if all(f[r.mul(a, b)] == s.mul(f[a], f[b]) for a in r.elems for b in r.elems):
            out.append(tuple(f[x] for x in r.elems))
    return out


def realized_pairs(r, targets):
    pairs = set()
    for s in targets:
        us = set(units(s))
        for f in morphisms(r, s):
            ker = tuple(x for x in r.elems if f[x] == s.zero)
            m = tuple(x for x in r.elems if f[x] in us)
            pairs.add((ker, m))
    return sorted(pairs, key=lambda p: (len(p[0]), p[0], len(p[1]), p[1]))


def main():
    z2, z3, z4, z6, z9 = zmod(2), zmod(3), zmod(4), zmod(6), zmod(9)
    f4 = gf4()
    m2 = m2f2()
    z2z2 = product(z2, z2)
    z2z3 = product(z2, z3)
    targets = [zmod(n) for n in range(2, 13)] + [f4, z2z2, z2z3, m2]

    f4_to_m2 = morphisms(f4, m2)
    values = {
        "gf4_units": len(units(f4)),
        "z2xz3_units": units(z2z3),
        "z2xz2_proper_ideals": len(ideals(z2z2)) - 1,
        "m2f2_size": len(m2.elems),
        "m2f2_units": len(units(m2)),
        "m2f2_ideals": len(ideals(m2)),
        "z6_regular": regular(z6),
        "z4_jacobson": jacobson(z4),
        "z6_jacobson": jacobson(z6),
        "z6_ideals": len(ideals(z6)),
        "z4_ideals": len(ideals(z4)),
        "gf4_to_m2f2_morphisms": len(f4_to_m2),
        "gf4_to_m2f2_all_injective": all(len(set(f)) == 4 for f in f4_to_m2),
        "z6_to_z2_morphisms": len(morphisms(z6, z2)),
        "z2_to_z3_morphisms": len(morphisms(z2, z3)),
        "hom_z6": [[list(a), list(m)] for a, m in realized_pairs(z6, targets)],
        "hom_z4": [[list(a), list(m)] for a, m in realized_pairs(z4, targets)],
        "hom_z2xz2_size": len(realized_pairs(z2z2, targets)),
        "hom_m2f2": [[list(a), list(m)] for a, m in realized_pairs(m2, targets)],
        # Hom-bar(Z/n) has one element per proper ideal plus the top.
        "hom_bar_z4xz9": len(ideals(product(z4, z9))),
        "hom_bar_z4": len(ideals(z4)),
        "hom_bar_z9": len(ideals(z9)),
        # F_2 is a field, so S (x)_F2 S/F2 has F_2-dimension 2 * 1.
        "gf2_gf4_tensor_order": 2 ** (2 * (2 - 1)),
        "z6_ass_1_3": sorted(x for x in z6.elems if any(z6.mul(t, x) == 0 for t in (1, 3))),
        "crt_idempotent": next(e for e in z6.elems if e % 2 == 1 and e % 3 == 0),
    }
    text = json.dumps(values, indent=2, sort_keys=True) + "\n"
    if len(sys.argv) > 1:
        Path(sys.argv[1]).write_text(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()
