"""Surface data: Seifert matrices paired with colouring vectors.

Validation, lexicographic colouring enumeration, the two S-equivalence
moves and their inverses, symplectic reduction of the intersection form,
connect sums, and the word-length normal form for colouring vectors.

Matrices are tuples of int tuples; colouring vectors are tuples of
GroupElement. The empty 0x0 datum is permitted (it can never validate
over a nontrivial A, but keeps connect sums total).
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import lcm

from . import abelian
from ._intlin import (
    det,
    identity,
    inverse_unimodular,
    mat_mul,
    mat_vec,
    solve_mod,
    transpose,
)
from .errors import (
    BadParameters,
    BudgetExceeded,
    GroupMismatch,
    InternalInconsistency,
    InvalidData,
    NonGenerating,
    NotSymplecticable,
    NotUnimodular,
    PatternMismatch,
)


def _as_matrix(matrix):
    rows = tuple(tuple(int(x) for x in row) for row in matrix)
    size = len(rows)
    if any(len(row) != size for row in rows):
        raise BadParameters("matrix must be square")
    return rows


def _check_seifert(matrix, err=BadParameters):
    rows = _as_matrix(matrix)
    size = len(rows)
    if size % 2 != 0:
        raise err(f"Seifert matrix size must be even, got {size}")
    if size:
        S = [[rows[i][j] - rows[j][i] for j in range(size)] for i in range(size)]
        d = det(S)
        if d != 1:
            raise err(f"det(M - M^T) = {d}, expected 1")
    return rows


@dataclass(frozen=True)
class SurfaceData:
    spec: abelian.GroupSpec
    matrix: tuple
    vector: tuple

    def __post_init__(self):
        rows = _check_seifert(self.matrix)
        object.__setattr__(self, "matrix", rows)
        vec = tuple(self.vector)
        if len(vec) != len(rows):
            raise BadParameters(
                f"vector length {len(vec)} != matrix size {len(rows)}")
        for v in vec:
            if not isinstance(v, abelian.GroupElement):
                raise BadParameters("vector entries must be GroupElement")
            if v.spec != self.spec:
                raise GroupMismatch("vector entry over a different spec")
        object.__setattr__(self, "vector", vec)

    @property
    def size(self):
        return len(self.matrix)

    @property
    def genus(self):
        return len(self.matrix) // 2


def make_data(spec, matrix, coords):
    """SurfaceData from raw coordinate rows (one row per vector entry)."""
    return SurfaceData(spec, matrix,
                       tuple(abelian.element(spec, c) for c in coords))


@dataclass(frozen=True)
class ValidationReport:
    generates: bool
    equation_holds: bool
    genus_ok: bool
    valid: bool


def _mat_apply(M, vec, spec):
    """Integer matrix acting entrywise on a tuple of group elements."""
    out = []
    for i in range(len(M)):
        acc = abelian.zero(spec)
        for j, v in enumerate(vec):
            if M[i][j]:
                acc = abelian.add(acc, abelian.mul(M[i][j], v))
        out.append(acc)
    return tuple(out)


@lru_cache(maxsize=None)
def _s_inverse(matrix):
    # S = M^T - M, the form used by the redundant check V = S^-1 M (t-1)V
    size = len(matrix)
    S = [[matrix[j][i] - matrix[i][j] for j in range(size)] for i in range(size)]
    return tuple(tuple(row) for row in inverse_unimodular(S))


@lru_cache(maxsize=None)
def _min_generators(spec):
    """Minimal size of a generating set of A: the maximum over primes p of
    the number of cyclic factors p divides."""
    primes = set()
    for n in spec.orders:
        d, m = 2, n
        while d * d <= m:
            if m % d == 0:
                primes.add(d)
                while m % d == 0:
                    m //= d
            d += 1
        if m > 1:
            primes.add(m)
    best = 0
    for p in primes:
        best = max(best, sum(1 for n in spec.orders if n % p == 0))
    return best


def validate(data):
    """Full validity check: entries generate A, the colouring equation
    M^T V = M (t.V) holds, and the size admits the rank of A. The
    equivalent reduced form V = S^-1 M (t-1)V is recomputed as a
    cross-check and any disagreement raises InternalInconsistency.
    """
    spec, M, V = data.spec, data.matrix, data.vector
    size = len(M)
    tV = tuple(abelian.act(v) for v in V)
    lhs = _mat_apply(transpose(M), V, spec) if size else ()
    rhs = _mat_apply(M, tV, spec) if size else ()
    equation = lhs == rhs
    # redundant form
    if size:
        w = tuple(abelian.sub(t, v) for t, v in zip(tV, V))
        u = _mat_apply(M, w, spec)
        smvv = _mat_apply(_s_inverse(M), u, spec) == V
    else:
        smvv = True
    if smvv != equation:
        raise InternalInconsistency(
            "direct colouring equation and S^-1 M (t-1)V form disagree")
    gen = abelian.generates(list(V), spec)
    genus_ok = size >= _min_generators(spec)
    return ValidationReport(gen, equation, genus_ok,
                            gen and equation and genus_ok)


def enumerate_colourings(matrix, spec, budget=10 ** 7):
    """All colouring vectors V with validate((matrix, V)).valid, in
    lexicographic coordinate order."""
    M = _check_seifert(matrix)
    size = len(M)
    total = abelian.group_order(spec) ** size
    if total > budget:
        raise BudgetExceeded(f"{total} candidate vectors exceed budget {budget}")
    elems = abelian.elements(spec)
    act_of = {e.coords: abelian.act(e).coords for e in elems}
    orders = spec.orders
    r = len(orders)
    out = []
    for combo in product(elems, repeat=size):
        ok = True
        for i in range(size):
            for c in range(r):
                lhs = sum(M[j][i] * combo[j].coords[c] for j in range(size))
                rhs = sum(M[i][j] * act_of[combo[j].coords][c] for j in range(size))
                if (lhs - rhs) % orders[c]:
                    ok = False
                    break
            if not ok:
                break
        if ok and validate(SurfaceData(spec, M, combo)).valid:
            out.append(tuple(combo))
    return out


# ---------------------------------------------------------------------------
# S-equivalence moves


def lambda1(data, U):
    """Unimodular congruence: (M, V) -> (U^T M U, U^-1 V)."""
    size = data.size
    Ur = _as_matrix(U)
    if len(Ur) != size:
        raise BadParameters(f"U must be {size}x{size}")
    d = det(Ur)
    if d not in (1, -1):
        raise NotUnimodular(f"det U = {d}")
    Uinv = inverse_unimodular(Ur)
    M2 = mat_mul(mat_mul(transpose(Ur), [list(r) for r in data.matrix]), Ur)
    V2 = _mat_apply(Uinv, data.vector, data.spec)
    return SurfaceData(data.spec, tuple(tuple(r) for r in M2), V2)


def _lambda2_tail(spec, vector, c, variant):
    """The appended vector entries (0; y) for the chosen variant."""
    acc = abelian.zero(spec)
    for ci, v in zip(c, vector):
        if ci:
            acc = abelian.add(acc, abelian.mul(ci, v))
    if variant == 1:
        # (t-1)/t . a = a - t^-1.a
        y = abelian.sub(acc, abelian.act_pow(acc, -1))
    else:
        y = abelian.sub(abelian.act(acc), acc)
    return (abelian.zero(spec), y)


def lambda2(data, c, variant):
    """Stabilization: grow the matrix by two rows/columns in one of the two
    patterns and append the transported vector entries."""
    size = data.size
    c = tuple(int(x) for x in c)
    if len(c) != size:
        raise BadParameters(f"c must have length {size}")
    if variant not in (1, 2):
        raise BadParameters(f"variant must be 1 or 2, got {variant!r}")
    M = data.matrix
    rows = [list(M[i]) + [c[i], 0] for i in range(size)]
    if variant == 1:
        rows.append(list(c) + [0, -1])
        rows.append([0] * size + [0, 0])
    else:
        rows.append(list(c) + [0, 0])
        rows.append([0] * size + [1, 0])
    tail = _lambda2_tail(data.spec, data.vector, c, variant)
    return SurfaceData(data.spec, tuple(tuple(r) for r in rows),
                       data.vector + tail)


def lambda2_inverse(data):
    """Undo a lambda2 stabilization; PatternMismatch when the last two
    rows/columns (or vector entries) do not match either pattern."""
    size = data.size
    if size < 2:
        raise PatternMismatch("no stabilized block to remove")
    M = data.matrix
    inner = size - 2
    col_c = tuple(M[i][inner] for i in range(inner))
    row_c = tuple(M[inner][j] for j in range(inner))
    if col_c != row_c:
        raise PatternMismatch("penultimate row/column are not symmetric")
    if any(M[i][inner + 1] for i in range(inner)) or \
            any(M[inner + 1][j] for j in range(inner)):
        raise PatternMismatch("last row/column must vanish off the corner")
    corner = (M[inner][inner], M[inner][inner + 1],
              M[inner + 1][inner], M[inner + 1][inner + 1])
    if corner == (0, -1, 0, 0):
        variant = 1
    elif corner == (0, 0, 1, 0):
        variant = 2
    else:
        raise PatternMismatch(f"corner {corner} matches neither pattern")
    base_vec = data.vector[:inner]
    expect = _lambda2_tail(data.spec, base_vec, col_c, variant)
    if data.vector[inner:] != expect:
        raise PatternMismatch("vector entries do not match the stabilization")
    inner_rows = tuple(tuple(M[i][j] for j in range(inner)) for i in range(inner))
    return SurfaceData(data.spec, inner_rows, base_vec)


# ---------------------------------------------------------------------------
# symplectic reduction


def symplectic_reduce(matrix):
    """Unimodular P with P^T (M - M^T) P the g-fold block sum of
    [[0, -1], [1, 0]]. Deterministic: the smallest-index pair with a
    +-1 entry is the pivot; otherwise gcd-reduction column operations
    are applied first.
    """
    M = _check_seifert(matrix, err=NotSymplecticable)
    size = len(M)
    S = [[M[i][j] - M[j][i] for j in range(size)] for i in range(size)]
    P = identity(size)

    def colop(dst, src, t):
        # congruence: column and matching row
        for i in range(size):
            S[i][dst] += t * S[i][src]
        for j in range(size):
            S[dst][j] += t * S[src][j]
        for i in range(size):
            P[i][dst] += t * P[i][src]

    def swap(i, j):
        if i == j:
            return
        for row in S:
            row[i], row[j] = row[j], row[i]
        S[i], S[j] = S[j], S[i]
        for row in P:
            row[i], row[j] = row[j], row[i]

    for b in range(0, size, 2):
        while True:
            pivot = None
            for i in range(b, size):
                for j in range(i + 1, size):
                    if abs(S[i][j]) == 1:
                        pivot = (i, j)
                        break
                if pivot:
                    break
            if pivot:
                break
            # gcd-reduction: use the smallest nonzero entry to shrink its row
            best = None
            for i in range(b, size):
                for j in range(i + 1, size):
                    if S[i][j] and (best is None or abs(S[i][j]) < abs(S[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                raise NotSymplecticable("form is degenerate on the remaining block")
            i0, j0 = best
            progressed = False
            for j in range(b, size):
                if j != j0 and j != i0 and S[i0][j] and abs(S[i0][j]) >= abs(S[i0][j0]):
                    colop(j, j0, -(S[i0][j] // S[i0][j0]))
                    progressed = True
            if not progressed:
                raise NotSymplecticable("gcd reduction stalled; form not unimodular")
        i, j = pivot
        swap(b, i)
        j = i if j == b else j
        swap(b + 1, j)
        if S[b][b + 1] == 1:
            swap(b, b + 1)
        # S[b][b+1] == -1, S[b+1][b] == 1; clear the rest of the two rows
        for k in range(b + 2, size):
            if S[b][k]:
                colop(k, b + 1, S[b][k])
            if S[b + 1][k]:
                colop(k, b, -S[b + 1][k])
    # certify
    for i in range(size):
        for j in range(size):
            want = 0
            if i == j + 1 and i % 2 == 1:
                want = 1
            if j == i + 1 and j % 2 == 1:
                want = -1
            if S[i][j] != want:
                raise NotSymplecticable("reduction failed to reach block form")
    return tuple(tuple(row) for row in P)


def standard_matrix(g):
    """The 2g x 2g matrix with M - M^T already in standard block form."""
    size = 2 * g
    rows = [[0] * size for _ in range(size)]
    for b in range(g):
        rows[2 * b + 1][2 * b] = 1
    return tuple(tuple(r) for r in rows)


# ---------------------------------------------------------------------------
# sums and normal forms


def connect_sum(d1, d2):
    if d1.spec != d2.spec:
        raise GroupMismatch("connect sum requires a common group spec")
    n1, n2 = d1.size, d2.size
    rows = [list(d1.matrix[i]) + [0] * n2 for i in range(n1)]
    rows += [[0] * n1 + list(d2.matrix[i]) for i in range(n2)]
    return SurfaceData(d1.spec, tuple(tuple(r) for r in rows),
                       d1.vector + d2.vector)


def canonical_vector(w):
    """The explicit inverse of the class map: for each basis pair (i, j)
    with coefficient c emit c adjacent pairs (s_i; s_j), then trailing
    pairs (0; s_k) for every factor k."""
    spec = w.spec
    r = spec.rank

    def basis(i):
        return abelian.element(spec, tuple(1 if t == i else 0 for t in range(r)))

    out = []
    for idx, (i, j) in enumerate(abelian.pair_indices(spec)):
        for _ in range(w.coords[idx]):
            out.append(basis(i))
            out.append(basis(j))
    for k in range(r):
        out.append(abelian.zero(spec))
        out.append(basis(k))
    return tuple(out)


@dataclass(frozen=True)
class ShortenResult:
    data: SurfaceData
    moves: tuple


def apply_moves(data, moves):
    """Replay a recorded move list (as produced by shorten_vector)."""
    cur = data
    for move in moves:
        if move[0] == "lambda1":
            cur = lambda1(cur, move[1])
        elif move[0] == "lambda2":
            cur = lambda2(cur, move[1], move[2])
        else:
            raise BadParameters(f"unknown move tag {move[0]!r}")
    return cur


@lru_cache(maxsize=None)
def _word_lengths(spec, basis_coords):
    """Word length of every element of A over the symmetric generating set
    {+-b}. Breadth-first walk; A is finite."""
    gens = []
    for b in basis_coords:
        gens.append(b)
        gens.append(tuple((-x) % n for x, n in zip(b, spec.orders)))
    dist = {(0,) * spec.rank: 0}
    frontier = [(0,) * spec.rank]
    while frontier:
        nxt = []
        for cur in frontier:
            for g in gens:
                cand = tuple((a + b) % n for a, b, n in zip(cur, g, spec.orders))
                if cand not in dist:
                    dist[cand] = dist[cur] + 1
                    nxt.append(cand)
        frontier = nxt
    return dist


def _block_unimodular(size, entries):
    """Identity with the given (i, j) -> value entries written in."""
    U = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
    for (i, j), val in entries.items():
        U[i][j] = val
    return tuple(tuple(r) for r in U)


def shorten_vector(data, ordered_basis):
    """Drive every vector entry into {0} u {+-b : b in basis} by recorded
    lambda moves.

    Greedy loop: while some entry has word length > 1, take a longest one
    (rotating it into the odd slot of its pair if needed), stabilize with
    a lambda2 whose new band carries a length-shortening generator b, and
    slide the band into place with three symplectic transvections. Each
    round strictly shrinks the multiset of per-pair excess word lengths,
    so the loop terminates.
    """
    spec = data.spec
    basis = tuple(ordered_basis)
    for b in basis:
        if not isinstance(b, abelian.GroupElement) or b.spec != spec:
            raise GroupMismatch("basis entries must lie in the data's group")
    if not abelian.generates(list(basis), spec):
        raise NonGenerating("ordered basis does not generate A")
    if not validate(data).valid:
        raise InvalidData("shorten_vector needs valid surface data")
    if abelian.group_order(spec) > 10 ** 6:
        raise BudgetExceeded("word-length table over A would be too large")

    dist = _word_lengths(spec, tuple(b.coords for b in basis))
    exponent = lcm(*spec.orders)
    gen_seq = []
    for b in basis:
        gen_seq.append(b)
        gen_seq.append(abelian.neg(b))

    NmI = [[(spec.action[i][j] - (1 if i == j else 0))
            for j in range(spec.rank)] for i in range(spec.rank)]

    moves = []
    cur = data

    def record_l1(U):
        nonlocal cur
        cur = lambda1(cur, U)
        moves.append(("lambda1", U))

    while True:
        lens = [dist[v.coords] for v in cur.vector]
        top = max(lens, default=0)
        if top <= 1:
            break
        odd = [q for q in range(1, cur.size, 2) if lens[q] == top]
        if not odd:
            p = lens.index(top)  # an even slot; rotate the pair
            record_l1(_block_unimodular(
                cur.size, {(p, p): 0, (p, p + 1): -1,
                           (p + 1, p): 1, (p + 1, p + 1): 0}))
            continue
        q = odd[0]
        v = cur.vector[q]
        b = next(g for g in gen_seq if dist[abelian.add(v, g).coords] < top)
        # lambda2 with (t-1).(sum c_i v_i) = b, i.e. sum c_i v_i = (t-1)^-1 b
        w = solve_mod(NmI, list(b.coords), list(spec.orders))
        if w is None:
            raise InternalInconsistency("t - 1 is not invertible on A")
        w = [x % n for x, n in zip(w, spec.orders)]
        cols = [[v2.coords[i] for v2 in cur.vector] for i in range(spec.rank)]
        c = solve_mod(cols, w, list(spec.orders))
        if c is None:
            raise InternalInconsistency("valid data stopped generating A")
        # c only matters mod the exponent of A; keep the new band small
        c = [x % exponent for x in c]
        sz = cur.size
        cur = lambda2(cur, c, 2)
        moves.append(("lambda2", tuple(c), 2))
        # slide the new band: v_q += b, then move the partner into the band
        record_l1(_block_unimodular(sz + 2, {(q, sz + 1): -1}))
        record_l1(_block_unimodular(sz + 2, {(sz, q - 1): 1}))
        record_l1(_block_unimodular(
            sz + 2, {(sz, sz): 0, (sz, sz + 1): -1,
                     (sz + 1, sz): 1, (sz + 1, sz + 1): 0}))
    return ShortenResult(cur, tuple(moves))


# ---------------------------------------------------------------------------
# JSON interchange


def data_to_json(data):
    return {
        "group": abelian.group_to_json(data.spec),
        "seifert": [list(row) for row in data.matrix],
        "vector": [list(v.coords) for v in data.vector],
    }


def data_from_json(obj):
    spec = abelian.group_from_json(obj["group"])
    return make_data(spec, obj["seifert"], obj["vector"])
