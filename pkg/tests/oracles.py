"""Independent oracles and randomized input generators for the test suite.

Everything here deliberately avoids the package's own arithmetic paths:
the factor search works on plain coefficient lists, the rank-2 closure
oracle runs on sympy rational functions, and the generators only call
back into the package to reject invalid samples.
"""

from __future__ import annotations

import math
from itertools import product

from clusterkit.constructions import CartanMatrix
from clusterkit.seeds import ExchangeMatrix, SeedProfile, validate


# ---------------------------------------------------------------------------
# brute-force factor search for X^d + 1 over the integers
# ---------------------------------------------------------------------------


def _poly_divides(f: list[int], g: list[int]) -> bool:
    """Whether monic g divides f; ascending coefficient lists over Z."""
    rem = list(f)
    dg = len(g) - 1
    while True:
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dg or not rem:
            break
        c = rem[-1]
        shift = len(rem) - 1 - dg
        for j, gc in enumerate(g):
            rem[shift + j] -= c * gc
    return not rem


def xd_plus_one_reducible_bruteforce(d: int) -> bool:
    """Exhaustive search for a monic integer factor of X^d + 1.

    All complex roots have modulus one, so the coefficient of X^j in a
    monic degree-k factor is bounded by C(k, k - j); the constant term
    divides 1 and the values at +-1 divide the values of X^d + 1 there.
    By the Gauss lemma this decides reducibility over the rationals.
    """
    f = [1] + [0] * (d - 1) + [1]
    f_at_minus1 = 0 if d % 2 else 2
    for k in range(1, d // 2 + 1):
        mid_bounds = [math.comb(k, k - j) for j in range(1, k)]
        for c0 in (1, -1):
            for mid in product(*[range(-b, b + 1) for b in mid_bounds]):
                g = [c0, *mid, 1]
                g1 = sum(g)
                if g1 == 0 or 2 % g1:
                    continue
                if f_at_minus1:
                    gm1 = sum(c * (-1) ** i for i, c in enumerate(g))
                    if gm1 == 0 or f_at_minus1 % gm1:
                        continue
                if _poly_divides(f, g):
                    return True
    return False


# ---------------------------------------------------------------------------
# naive rational-function closure oracle for rank-2 seeds
# ---------------------------------------------------------------------------


def rank2_closure_bruteforce(b: int, c: int, max_seeds: int = 200):
    """Exhaust the rank-2 exchange graph with sympy rational functions.

    Returns (variable_count, cluster_count, closed).  Mutation follows
    the exchange relation directly on symbolic expressions; for a 2 x 2
    matrix the matrix mutation is plain negation.
    """
    import sympy

    v1, v2 = sympy.symbols("v1 v2")
    initial = ((v1, v2), ((0, b), (-c, 0)))

    def canon(expr):
        return sympy.srepr(sympy.cancel(sympy.together(expr)))

    def key(state):
        cluster, mat = state
        return (tuple(canon(v) for v in cluster), mat)

    def mutate(state, k):
        cluster, mat = state
        col = (mat[0][k], mat[1][k])
        m1 = sympy.Integer(1)
        m2 = sympy.Integer(1)
        for i in (0, 1):
            if col[i] > 0:
                m1 *= cluster[i] ** col[i]
            elif col[i] < 0:
                m2 *= cluster[i] ** (-col[i])
        new = sympy.cancel((m1 + m2) / cluster[k])
        out = list(cluster)
        out[k] = new
        return (tuple(out), tuple(tuple(-x for x in row) for row in mat))

    seen = {key(initial)}
    order = [initial]
    frontier = [initial]
    closed = True
    while frontier:
        nxt = []
        for state in frontier:
            for k in (0, 1):
                child = mutate(state, k)
                ck = key(child)
                if ck in seen:
                    continue
                if len(seen) >= max_seeds:
                    closed = False
                    frontier = []
                    nxt = []
                    break
                seen.add(ck)
                order.append(child)
                nxt.append(child)
            else:
                continue
            break
        frontier = nxt
    variables = {canon(v) for cluster, _ in order for v in cluster}
    clusters = {frozenset(canon(v) for v in cluster) for cluster, _ in order}
    return len(variables), len(clusters), closed


# ---------------------------------------------------------------------------
# randomized inputs
# ---------------------------------------------------------------------------


def random_valid_matrix(rng, max_n: int = 4, max_m: int = 6, bound: int = 3) -> ExchangeMatrix:
    """A validated random exchange matrix with entries in [-bound, bound]."""
    while True:
        n = rng.randint(1, max_n)
        m = rng.randint(max(2, n), max_m)
        p = rng.randint(n, m)
        d = [rng.choice((1, 2, 3)) for _ in range(n)]
        rows = [[0] * n for _ in range(m)]
        for i in range(n):
            for j in range(i + 1, n):
                t = rng.randint(-1, 1)
                rows[i][j] = d[j] * t
                rows[j][i] = -d[i] * t
        for i in range(n, m):
            rows[i] = [rng.randint(-bound, bound) for _ in range(n)]
        B = ExchangeMatrix(rows, SeedProfile(n, p, m))
        if not validate(B):
            return B


def random_cartan(rng, max_n: int = 4, bound: int = 3) -> CartanMatrix:
    """A random generalized Cartan matrix whose attached seed is connected."""
    from clusterkit.constructions import acyclic_seed_from_cartan
    from clusterkit.seeds import InvalidSeed

    while True:
        n = rng.randint(1, max_n)
        c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        if rng.random() < 0.5:
            for i in range(n):
                for j in range(i + 1, n):
                    c[i][j] = c[j][i] = rng.randint(-bound, 0)
        else:
            d = [rng.choice((1, 2, 3)) for _ in range(n)]
            for i in range(n):
                for j in range(i + 1, n):
                    t = rng.choice((-1, 0))
                    c[i][j] = d[j] * t
                    c[j][i] = d[i] * t
        try:
            cm = CartanMatrix(c)
            acyclic_seed_from_cartan(cm)
        except (ValueError, InvalidSeed):
            continue
        return cm


def catalan(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)
