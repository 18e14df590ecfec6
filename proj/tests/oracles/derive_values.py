#!/usr/bin/env python3
"""Independent re-derivation of the hard-coded expectations in the C++ tests.

Plain Python with exact rational arithmetic; shares no code with the library.
Run it and compare its printout with the constants frozen in tests/unit and
tests/acceptance.
"""
from fractions import Fraction
from itertools import combinations, permutations, product

# Graphs: (weights dict in vertex order, list of directed edges)
D_PATH = ({"x1": 2, "x2": 3, "y1": 1, "y2": 1},
          [("y1", "x1"), ("x1", "x2"), ("x2", "y2")])
D_WHISKERED = ({"x1": 2, "x2": 2, "x3": 1, "x4": 1, "y1": 1, "y2": 1, "y3": 1, "y4": 1},
          [("x1", "y1"), ("x2", "x1"), ("x1", "x4"), ("y2", "x2"), ("x2", "x3"),
           ("x2", "x4"), ("x3", "y3"), ("x3", "x4"), ("y4", "x4")])
D_BIP = ({"x1": 2, "x2": 2, "x3": 1, "x4": 1, "y1": 1, "y2": 1, "y3": 1, "y4": 2},
         [("y1", "x1"), ("x1", "y2"), ("x1", "y3"), ("y4", "x1"), ("y2", "x2"),
          ("x2", "y3"), ("y3", "x3"), ("x4", "y4")])


def normalized(g):
    w, e = g
    w = dict(w)
    for v in w:
        has_in = any(b == v for _, b in e)
        has_out = any(a == v for a, _ in e)
        if not (has_in and has_out):
            w[v] = 1
    return w, e


# Monomials are dicts var -> exponent (frozen as sorted tuples).
def mono(d):
    return tuple(sorted((k, v) for k, v in d.items() if v))


def divides(a, b):
    db = dict(b)
    return all(db.get(k, 0) >= e for k, e in a)


def minimalize(gens):
    gens = sorted(set(gens), key=lambda m: (sum(e for _, e in m), m))
    out = []
    for g in gens:
        if not any(divides(h, g) for h in out):
            out.append(g)
    return out


def edge_ideal(g):
    w, e = normalized(g)
    return minimalize([mono({a: 1, b: w[b]}) if a != b else mono({a: 1 + w[b]}) for a, b in e])


def polarize(gens):
    out = []
    for m in gens:
        d = {}
        for v, k in m:
            for j in range(1, k + 1):
                d[f"{v}_{j}"] = 1
        out.append(mono(d))
    return minimalize(out)


def minimal_covers(edges, verts):
    covers = []
    verts = sorted(verts)
    for r in range(len(verts) + 1):
        for c in combinations(verts, r):
            s = set(c)
            if all(s & set(e) for e in edges) and not any(set(k) <= s for k in covers):
                covers.append(c)
    return [set(c) for c in covers]


def show(sets):
    return sorted("{" + ", ".join(sorted(s)) + "}" for s in sets)


def base(var):
    return var.rsplit("_", 1)[0]


# ---------------------------------------------------------------- covers
def polarized_covers(g):
    pol = polarize(edge_ideal(g))
    verts = {v for m in pol for v, _ in m}
    edges = [[v for v, _ in m] for m in pol]
    return pol, minimal_covers(edges, verts)


def strong_covers(g):
    """Covers of the underlying graph that are minimal or whose L3 vertices
    each receive an edge from a weight >= 2 vertex of L2 or L3."""
    w, e = normalized(g)
    verts = list(w)
    und = [{a, b} for a, b in e]
    minimal = minimal_covers(und, verts)
    nbr = {v: {a for a, b in e if b == v} | {b for a, b in e if a == v} for v in verts}
    out = []
    for r in range(len(verts) + 1):
        for c in combinations(verts, r):
            C = set(c)
            if not all(C & edge for edge in und):
                continue
            L1 = {x for x in C if any(a == x and b not in C for a, b in e)}
            L3 = {x for x in C if nbr[x] <= C}
            L2 = C - L1 - L3
            if C in minimal:
                out.append((C, L1, L2, L3, True))
                continue
            ok = all(any(b == x and a in (L2 | L3) and w[a] >= 2 for a, b in e) for x in L3)
            if ok:
                out.append((C, L1, L2, L3, False))
    return out


# ---------------------------------------------------------------- homology
def rank(rows):
    m = [list(map(Fraction, r)) for r in rows]
    rk, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rk < len(m) and col < ncols:
        piv = next((i for i in range(rk, len(m)) if m[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for i in range(len(m)):
            if i != rk and m[i][col] != 0:
                f = m[i][col] / m[rk][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rk])]
        rk += 1
        col += 1
    return rk


def faces_of(facets):
    fs = set()
    for f in facets:
        f = tuple(sorted(f))
        for r in range(len(f) + 1):
            fs.update(combinations(f, r))
    return fs


def reduced_homology(facets):
    """Ranks of H~_i for i = -1 .. dim, as a list indexed by i + 1."""
    fs = faces_of(facets)
    if not fs:
        return []
    top = max(len(f) for f in fs)
    by = {k: sorted(f for f in fs if len(f) == k) for k in range(top + 1)}
    ranks = {}
    for k in range(1, top + 1):
        idx = {f: i for i, f in enumerate(by[k - 1])}
        rows = []
        for f in by[k]:
            row = [0] * len(by[k - 1])
            for p in range(k):
                row[idx[f[:p] + f[p + 1:]]] = (-1) ** p
            rows.append(row)
        ranks[k] = rank(rows) if rows and by[k - 1] else 0
    out = []
    for k in range(top + 1):
        out.append(len(by[k]) - ranks.get(k, 0) - ranks.get(k + 1, 0))
    return out


def link(facets, sigma):
    s = set(sigma)
    return [tuple(sorted(set(f) - s)) for f in facets if s <= set(f)]


def maximal(sets):
    sets = [frozenset(s) for s in sets]
    return [s for s in set(sets) if not any(s < t for t in sets)]


def reisner_cm(facets):
    for sigma in faces_of(facets):
        lk = maximal(link(facets, sigma))
        d = max(len(f) for f in lk) - 1
        h = reduced_homology(lk)
        if any(h[i + 1] for i in range(-1, d)):
            return False
    return True


def complex_of(pol):
    verts = sorted({v for m in pol for v, _ in m})
    edges = [[v for v, _ in m] for m in pol]
    covers = minimal_covers(edges, verts)
    return verts, [tuple(sorted(set(verts) - c)) for c in covers]


def depth_by_links(facets):
    best = None
    for sigma in faces_of(facets):
        h = reduced_homology(maximal(link(facets, sigma)))
        for i, r in enumerate(h):
            if r:
                cand = len(sigma) + (i - 1) + 1
                best = cand if best is None else min(best, cand)
    return best


def oracle(gens, orig_vars):
    pol = polarize(gens)
    verts, facets = complex_of(pol)
    extra = len(verts) - len(orig_vars)
    return reisner_cm(facets), depth_by_links(facets) - extra, max(len(f) for f in facets) - extra


def vars_of(gens):
    return sorted({v for m in gens for v, _ in m})


# ---------------------------------------------------------------- colon
def colon_brute(gens, var, maxdeg):
    vs = vars_of(gens)
    found = []
    for exps in product(range(maxdeg + 1), repeat=len(vs)):
        if sum(exps) > maxdeg:
            continue
        f = {v: e for v, e in zip(vs, exps) if e}
        fy = dict(f)
        fy[var] = fy.get(var, 0) + 1
        if any(divides(g, mono(fy)) for g in gens):
            found.append(mono(f))
    return minimalize(found)


def render(m):
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in m) or "1"


# ---------------------------------------------------------------- matching orders
def cm_orders(xs, ys, edges):
    E = {frozenset(e) for e in edges}
    out = []
    for perm in permutations(ys):
        pairs = list(zip(xs, perm))
        if not all(frozenset(p) in E for p in pairs):
            continue
        for order in permutations(range(len(pairs))):
            P = [pairs[i] for i in order]
            ok = all(frozenset((P[i][0], P[j][1])) not in E or i <= j
                     for i in range(len(P)) for j in range(len(P)))
            ok = ok and all(frozenset((P[i][0], P[k][1])) in E
                            for i in range(len(P)) for j in range(len(P)) for k in range(len(P))
                            if frozenset((P[i][0], P[j][1])) in E and frozenset((P[j][0], P[k][1])) in E)
            if ok:
                out.append(P)
    return out


def main():
    print("== D_path")
    pol, covers = polarized_covers(D_PATH)
    print("I^pol:", [render(m) for m in pol])
    print("covers", len(covers), show(covers))
    print("dual degrees", sorted(len(c) for c in covers))
    prim = {frozenset(base(v) for v in c) for c in covers}
    prim = sorted(prim, key=lambda s: (len(s), sorted(s)))
    print("primes (depolarized)", show(prim))
    sc = strong_covers(D_PATH)
    for C, L1, L2, L3, m in sc:
        print("  strong", show([C]), "L1", show([L1]), "L2", show([L2]), "L3", show([L3]), "minimal" if m else "")
    print("strong-cover primes", show([s[0] for s in sc]))
    print("minimal covers of G", show([s[0] for s in sc if s[4]]))
    print("free variables (one generator each):",
          sorted(v for v in vars_of(edge_ideal(D_PATH))
                 if sum(1 for m in edge_ideal(D_PATH) if v in dict(m)) == 1))
    verts, facets = complex_of(pol)
    print("facet sizes", sorted(len(f) for f in facets))
    cm, depth, dim = oracle(edge_ideal(D_PATH), vars_of(edge_ideal(D_PATH)))
    print("CM", cm, "depth", depth, "dim", dim)
    bumped = [mono({**dict(m), "y1": dict(m)["y1"] + 3}) if "y1" in dict(m) else m for m in edge_ideal(D_PATH)]
    print("bumped y1 by 3:", [render(m) for m in bumped])
    cm_b, depth_b, dim_b = oracle(bumped, vars_of(bumped))
    print("bumped CM", cm_b, "depth", depth_b, "dim", dim_b)

    print("== D_whiskered")
    pol, covers = polarized_covers(D_WHISKERED)
    print("cover count", len(covers), "sizes", sorted({len(c) for c in covers}))
    cm, depth, dim = oracle(edge_ideal(D_WHISKERED), vars_of(edge_ideal(D_WHISKERED)))
    print("CM", cm, "depth", depth, "dim", dim)
    w1 = (dict(D_WHISKERED[0], x1=1), D_WHISKERED[1])
    print("with w(x1)=1: CM", oracle(edge_ideal(w1), vars_of(edge_ideal(w1)))[0])

    print("== D_bip")
    gens = edge_ideal(D_BIP)
    print("I:", [render(m) for m in gens])
    cm, depth, dim = oracle(gens, vars_of(gens))
    print("CM", cm, "depth", depth, "dim", dim)
    sc = strong_covers(D_BIP)
    print("primes", show([s[0] for s in sc]), "heights", sorted({len(s[0]) for s in sc}))
    print("(I : y4) brute force deg<=4:", [render(m) for m in colon_brute(gens, "y4", 4)])
    w3 = (dict(D_BIP[0], y4=3), D_BIP[1])
    print("w(y4)=3: CM", oracle(edge_ideal(w3), vars_of(edge_ideal(w3)))[0])
    re = (D_BIP[0], [("x1", "y4") if e == ("y4", "x1") else e for e in D_BIP[1]])
    print("y4->x1 reversed: CM", oracle(edge_ideal(re), vars_of(edge_ideal(re)))[0])

    print("== homology")
    print("triangle boundary", reduced_homology([("a", "b"), ("b", "c"), ("a", "c")]))
    print("two points", reduced_homology([("a",), ("b",)]))
    print("C4 facets", reduced_homology([("x1", "x2"), ("y1", "y2")]))

    print("== K22 matching orders", cm_orders(["x1", "x2"], ["y1", "y2"],
                                              [("x1", "y1"), ("x1", "y2"), ("x2", "y1"), ("x2", "y2")]))
    print("== D_bip matching orders", cm_orders(["x1", "x2", "x3", "x4"], ["y1", "y2", "y3", "y4"],
                                                [e for e in D_BIP[1]]))


if __name__ == "__main__":
    main()
