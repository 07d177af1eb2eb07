"""Shared test helpers: reference Seifert matrices, random unimodular
matrices, random S-equivalence moves, and the fixture data pool."""

from knotcolour import classify, invariants, surface_data

TREFOIL_L = ((-1, 1), (0, -1))
TREFOIL_R = ((1, 0), (-1, 1))
FIG8_L = ((1, 1), (0, -1))
FIG8_R = ((-1, 0), (-1, 1))


def rand_unimodular(rng, n, ops=6):
    """Product of random elementary column operations; det is +-1."""
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(ops):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        t = rng.choice((-2, -1, 1, 2))
        for r in range(n):
            U[r][j] += t * U[r][i]
    return tuple(tuple(r) for r in U)


def invariant_triple(data):
    return (invariants.su(data).coords,
            invariants.cu(data).coords,
            invariants.vector_class(data).coords)


def random_move(rng, data):
    kind = rng.randrange(3)
    if kind == 0:
        return surface_data.lambda1(data, rand_unimodular(rng, data.size))
    c = [rng.randrange(-3, 4) for _ in range(data.size)]
    return surface_data.lambda2(data, c, 1 if kind == 1 else 2)


def move_pool(d6, d10, a4, c2_35):
    """Valid base data over the four move-invariance groups."""
    pool = []
    t = classify.metacyclic_table(2, 3, 2)
    pool += [t.entries[0].data, t.entries[1].data]
    t = classify.metacyclic_table(2, 5, 4)
    pool += [t.entries[0].data, t.entries[2].data]
    t = classify.a4_representatives()
    by_name = {e.name: e.data for e in t.entries}
    pool += [by_name["3_1^l"], by_name["4_1^l"], by_name["3_1^l#4_1^l"]]
    t = classify.rank2_diag_table(2, 3, 5, 2, 4)
    pool += [e.data for e in t.entries if (e.k, e.l) in ((1, 1), (2, 4))]
    assert {d.spec for d in pool} == {d6, d10, a4, c2_35}
    return pool


def lift_pool(d6, d10, d14, c3z7, a4, c2_33, c2_35, c3_55):
    """Valid data over every m in {2, 3} fixture group, for the
    lift-stability sweep."""
    pool = list(move_pool(d6, d10, a4, c2_35))
    t = classify.metacyclic_table(2, 7, 6)
    pool += [t.entries[1].data]
    t = classify.metacyclic_table(3, 7, 2)
    pool += [t.entries[0].data]
    t = classify.a4_representatives()
    by_name = {e.name: e.data for e in t.entries}
    pool += [by_name["3_1^l#3_1^l"], by_name["4_1^l#4_1^r"]]
    t = classify.rank2_diag_table(2, 3, 3, 2, 2)
    pool += [next(e.data for e in t.entries if e.name == "g1"),
             next(e.data for e in t.entries if e.name == "g2")]
    t = classify.rank2_nondiag_table(3, 5, ((0, 1), (4, 4)))
    pool += [next(e.data for e in t.entries if e.name == "g1"),
             next(e.data for e in t.entries if e.name == "g2")]
    specs = {d.spec for d in pool}
    assert specs == {d6, d10, d14, c3z7, a4, c2_33, c2_35, c3_55}
    return pool
