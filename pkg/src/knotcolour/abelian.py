"""Finite metabelian colouring groups G = C_m |x A and the wedge algebra of A.

A = Z/n_1 x ... x Z/n_r with all n_i >= 2. The cyclic generator t acts on A
through an integer matrix in the *column* convention: t.a has coordinates
action @ a, with entry (i, j) read mod n_i (the modulus of the target
coordinate). Sources that write the action on row vectors should pass the
transpose.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import gcd

from ._intlin import identity, mat_pow, smith_diagonal
from .errors import (
    BadParameters,
    FixedPoints,
    GroupMismatch,
    NotInvertible,
    NotOrderM,
)

_CLOSURE_LIMIT = 10_000


@dataclass(frozen=True)
class GroupSpec:
    """Validated by make_group; direct construction performs no checks.

    Direct construction is deliberate for abelian-only carriers: some
    order tuples (e.g. (4, 6)) admit no fixed-point-free action at all,
    yet the wedge layer only ever reads .orders.
    """

    m: int
    orders: tuple
    action: tuple

    @property
    def rank(self):
        return len(self.orders)


@dataclass(frozen=True)
class GroupElement:
    spec: GroupSpec
    coords: tuple

    def __post_init__(self):
        orders = self.spec.orders
        if len(self.coords) != len(orders):
            raise BadParameters(
                f"coordinate length {len(self.coords)} != rank {len(orders)}")
        object.__setattr__(
            self, "coords",
            tuple(int(c) % n for c, n in zip(self.coords, orders)))


def make_group(m, orders, action):
    """Validating factory for GroupSpec.

    Checks, in order: well-formedness of the parameters, that the action
    is a homomorphism for the given orders, N^m = I on A, invertibility
    of the action, and invertibility of action - id (no nonzero fixed
    points).
    """
    if not isinstance(m, int) or m < 1:
        raise BadParameters(f"m must be a positive integer, got {m!r}")
    orders = tuple(int(n) for n in orders)
    if not orders:
        raise BadParameters("orders must be nonempty")
    if any(n < 2 for n in orders):
        raise BadParameters(f"every cyclic order must be >= 2, got {orders}")
    r = len(orders)
    if len(action) != r or any(len(row) != r for row in action):
        raise BadParameters(f"action must be {r}x{r}")
    # homomorphism compatibility: n_j * column j must vanish, i.e.
    # n_i | action[i][j] * n_j
    for i in range(r):
        for j in range(r):
            if (int(action[i][j]) * orders[j]) % orders[i] != 0:
                raise BadParameters(
                    f"action entry ({i},{j}) is not compatible with orders "
                    f"{orders[i]}, {orders[j]}")
    N = [[int(action[i][j]) % orders[i] for j in range(r)] for i in range(r)]
    Nm = mat_pow(N, m)
    for i in range(r):
        for j in range(r):
            if (Nm[i][j] - (1 if i == j else 0)) % orders[i] != 0:
                raise NotOrderM(f"action^{m} != identity on A (entry {i},{j})")
    spec = GroupSpec(m, orders, tuple(tuple(row) for row in N))
    cols = [tuple(N[i][j] for i in range(r)) for j in range(r)]
    if not _coords_generate(spec, tuple(sorted(set(cols)))):
        raise NotInvertible("action is not an automorphism of A")
    cols1 = [tuple((N[i][j] - (1 if i == j else 0)) % orders[i]
                   for i in range(r)) for j in range(r)]
    if not _coords_generate(spec, tuple(sorted(set(cols1)))):
        raise FixedPoints("action - id is singular on A")
    return spec


def element(spec, coords):
    return GroupElement(spec, tuple(coords))


def zero(spec):
    return GroupElement(spec, (0,) * spec.rank)


def _same_spec(*elems):
    s = elems[0].spec
    for e in elems[1:]:
        if e.spec != s:
            raise GroupMismatch("elements belong to different group specs")
    return s


def add(a, b):
    s = _same_spec(a, b)
    return GroupElement(s, tuple(x + y for x, y in zip(a.coords, b.coords)))


def neg(a):
    return GroupElement(a.spec, tuple(-x for x in a.coords))


def sub(a, b):
    s = _same_spec(a, b)
    return GroupElement(s, tuple(x - y for x, y in zip(a.coords, b.coords)))


def mul(k, a):
    """Integer multiple k.a, reduced mod each factor order."""
    return GroupElement(a.spec, tuple(k * x for x in a.coords))


def act(a):
    """t.a: apply the action matrix once."""
    N = a.spec.action
    r = a.spec.rank
    return GroupElement(
        a.spec,
        tuple(sum(N[i][j] * a.coords[j] for j in range(r)) for i in range(r)))


def act_pow(a, j):
    """t^j.a for any integer j (the action has order dividing m)."""
    out = a
    for _ in range(j % a.spec.m):
        out = act(out)
    return out


def group_order(spec):
    n = 1
    for k in spec.orders:
        n *= k
    return n


def elements(spec):
    """All of A in lexicographic coordinate order."""
    return [GroupElement(spec, c) for c in product(*[range(n) for n in spec.orders])]


@lru_cache(maxsize=None)
def _coords_generate(spec, coord_tuples):
    """Whether the given coordinate tuples generate A.

    Closure walk when |A| is small, Smith normal form of the stacked
    relation matrix otherwise.
    """
    if not coord_tuples:
        return False
    r = spec.rank
    if group_order(spec) <= _CLOSURE_LIMIT:
        seen = {(0,) * r}
        frontier = [(0,) * r]
        gens = list(coord_tuples)
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = tuple((c + d) % n for c, d, n in zip(cur, g, spec.orders))
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return len(seen) == group_order(spec)
    stacked = [[g[i] for g in coord_tuples]
               + [spec.orders[i] if j == i else 0 for j in range(r)]
               for i in range(r)]
    diag = smith_diagonal(stacked)
    return all(d == 1 for d in diag[:r])


def generates(elems, spec=None):
    """True iff the listed elements generate A as a group."""
    if elems:
        found = _same_spec(*elems)
        if spec is not None and spec != found:
            raise GroupMismatch("elements do not belong to the given spec")
        spec = found
    if spec is None or not elems:
        return False
    return _coords_generate(spec, tuple(sorted({e.coords for e in elems})))


# ---------------------------------------------------------------------------
# wedge algebra — depends only on spec.orders


def pair_indices(spec):
    return tuple(combinations(range(spec.rank), 2))


def triple_indices(spec):
    return tuple(combinations(range(spec.rank), 3))


def pair_orders(spec):
    return tuple(gcd(spec.orders[i], spec.orders[j]) for i, j in pair_indices(spec))


def triple_orders(spec):
    return tuple(gcd(gcd(spec.orders[i], spec.orders[j]), spec.orders[k])
                 for i, j, k in triple_indices(spec))


@dataclass(frozen=True)
class WedgeElement2:
    """Element of A ^ A, coordinates over the basis s_i ^ s_j, i < j."""

    spec: GroupSpec
    coords: tuple

    def __post_init__(self):
        mods = pair_orders(self.spec)
        if len(self.coords) != len(mods):
            raise BadParameters("wrong number of wedge coordinates")
        object.__setattr__(
            self, "coords",
            tuple(int(c) % n for c, n in zip(self.coords, mods)))

    def __add__(self, other):
        if other.spec != self.spec:
            raise GroupMismatch("wedge elements over different specs")
        return WedgeElement2(
            self.spec, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return WedgeElement2(self.spec, tuple(-a for a in self.coords))

    def is_zero(self):
        return all(c == 0 for c in self.coords)


@dataclass(frozen=True)
class WedgeElement3:
    """Element of A ^ A ^ A over the basis s_i ^ s_j ^ s_k, i < j < k."""

    spec: GroupSpec
    coords: tuple

    def __post_init__(self):
        mods = triple_orders(self.spec)
        if len(self.coords) != len(mods):
            raise BadParameters("wrong number of wedge coordinates")
        object.__setattr__(
            self, "coords",
            tuple(int(c) % n for c, n in zip(self.coords, mods)))

    def __add__(self, other):
        if other.spec != self.spec:
            raise GroupMismatch("wedge elements over different specs")
        return WedgeElement3(
            self.spec, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return WedgeElement3(self.spec, tuple(-a for a in self.coords))

    def is_zero(self):
        return all(c == 0 for c in self.coords)


def wedge2_zero(spec):
    return WedgeElement2(spec, (0,) * len(pair_indices(spec)))


def wedge3_zero(spec):
    return WedgeElement3(spec, (0,) * len(triple_indices(spec)))


def wedge2(a, b):
    """a ^ b with coordinate (i, j) equal to a_i b_j - a_j b_i mod gcd(n_i, n_j)."""
    s = _same_spec(a, b)
    return WedgeElement2(
        s, tuple(a.coords[i] * b.coords[j] - a.coords[j] * b.coords[i]
                 for i, j in pair_indices(s)))


def wedge3(a, b, c):
    """a ^ b ^ c via the 3x3 coordinate determinants mod the triple gcds."""
    s = _same_spec(a, b, c)
    out = []
    for i, j, k in triple_indices(s):
        ai, aj, ak = a.coords[i], a.coords[j], a.coords[k]
        bi, bj, bk = b.coords[i], b.coords[j], b.coords[k]
        ci, cj, ck = c.coords[i], c.coords[j], c.coords[k]
        out.append(ai * (bj * ck - bk * cj)
                   - aj * (bi * ck - bk * ci)
                   + ak * (bi * cj - bj * ci))
    return WedgeElement3(s, tuple(out))


def wedge2_scale(k, w):
    return WedgeElement2(w.spec, tuple(k * c for c in w.coords))


def wedge3_scale(k, w):
    return WedgeElement3(w.spec, tuple(k * c for c in w.coords))


# ---------------------------------------------------------------------------
# homology bound and cyclic orders


def h3_order(spec):
    """|H_3(A; Z)| by iterated Kunneth: the product of all n_i, all
    pairwise gcds, and all triple gcds. Accepts a GroupSpec or a bare
    iterable of cyclic orders (only the orders matter).
    """
    orders = spec.orders if isinstance(spec, GroupSpec) else tuple(spec)
    out = 1
    for n in orders:
        out *= n
    for a, b in combinations(orders, 2):
        out *= gcd(a, b)
    for a, b, c in combinations(orders, 3):
        out *= gcd(gcd(a, b), c)
    return out


def additive_order(k, n):
    """Order of k in Z/nZ."""
    if n < 1:
        raise BadParameters(f"modulus must be positive, got {n}")
    return n // gcd(k % n, n)


# ---------------------------------------------------------------------------
# JSON interchange


def group_to_json(spec):
    return {
        "m": spec.m,
        "orders": list(spec.orders),
        "action": [list(row) for row in spec.action],
    }


def group_from_json(obj):
    return make_group(obj["m"], obj["orders"], obj["action"])


def unsafe_spec(orders, m=1):
    """Raw abelian-only carrier: GroupSpec with the identity action and no
    factory validation. Intended for the wedge layer over order tuples
    that admit no fixed-point-free action; do not feed to su/cu.
    """
    orders = tuple(int(n) for n in orders)
    return GroupSpec(m, orders, tuple(tuple(row) for row in identity(len(orders))))
