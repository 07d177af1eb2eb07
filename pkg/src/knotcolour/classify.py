"""Base-knot tables for the four worked families: metacyclic groups,
rank-2 abelian kernels with diagonal and non-diagonal action, and the
alternating group A4.

Each table carries the emitted surface data together with the invariant
values (su, cu, s), the bordism upper bound (h3_order of the kernel) and
the proven lower bound. Observations that deviate from the expected
count formulas are recorded in the table's notes rather than asserted.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from . import abelian, invariants, surface_data
from .errors import (
    BadParameters,
    InternalInconsistency,
    InvalidData,
    NotA4,
    NotOrderM,
    NotInvertible,
    FixedPoints,
    UnsupportedM,
)

TREFOIL_CLASS = "trefoil_class"
FIGURE8_CLASS = "figure8_class"


@dataclass(frozen=True)
class FamilyEntry:
    k: object
    l: object
    i: object
    name: str
    data: surface_data.SurfaceData
    su: abelian.GroupElement
    cu: abelian.GroupElement
    s: abelian.WedgeElement2


@dataclass(frozen=True)
class FamilyTable:
    family: str
    group: abelian.GroupSpec
    entries: tuple
    upper_bound: int
    lower_bound: object
    notes: tuple


def _inv(a, n):
    try:
        return pow(a % n, -1, n)
    except ValueError:
        raise BadParameters(f"{a} is not invertible mod {n}") from None


def _entry(spec, k, l, i, name, matrix, coords):
    data = surface_data.make_data(spec, matrix, coords)
    if not surface_data.validate(data).valid:
        raise InternalInconsistency(f"family entry {name} failed validation")
    return FamilyEntry(k, l, i, name, data,
                       invariants.su(data), invariants.cu(data),
                       invariants.vector_class(data))


def _distinctness_note(entries):
    pairs = set((e.s, e.su) for e in entries)
    if len(pairs) != len(entries):
        return [f"only {len(pairs)} distinct (s, su) pairs among "
                f"{len(entries)} entries"]
    return []


def metacyclic_table(m, n, xi):
    """The k-twist family over C_m acting on Z/n by the unit xi:
    M_k = [[a + kn, 0], [1, 1]], V = (s; x s) with x = xi/(1-xi) and
    a the minimal natural congruent to -xi/(1-xi)^2."""
    if not (isinstance(m, int) and isinstance(n, int) and m >= 1 and n >= 2):
        raise BadParameters("need integers m >= 1, n >= 2")
    xi = xi % n
    if gcd(xi, n) != 1 or gcd(xi - 1, n) != 1:
        raise BadParameters("xi and xi - 1 must be units mod n")
    if pow(xi, m, n) != 1 % n:
        raise BadParameters(f"xi^{m} != 1 mod {n}")
    spec = abelian.make_group(m, (n,), ((xi,),))
    x = (xi * _inv(1 - xi, n)) % n
    a = (-xi * _inv((1 - xi) ** 2, n)) % n
    entries = []
    for k in range(1, n + 1):
        entries.append(_entry(spec, k, None, None, f"F{k}",
                              ((a + k * n, 0), (1, 1)), ((1,), (x,))))
    lower = abelian.additive_order(2 * (1 - pow(xi, -3, n)), n)
    notes = _distinctness_note(entries)
    return FamilyTable("metacyclic", spec, tuple(entries),
                       abelian.h3_order(spec), lower, tuple(notes))


def rank2_diag_table(m, n1, n2, xi1, xi2):
    """Families over A = Z/n1 x Z/n2 with diagonal action (xi1, xi2).

    Genus-1 classes (s1; i s2), i = 1..gcd-1, exist only when the single
    off-diagonal entry x can satisfy x = xi1/(1-xi1) mod n1 and
    x = 1/(xi2-1) mod n2 simultaneously; the genus-2 (s1;0;s2;0) family
    always exists.
    """
    if not all(isinstance(v, int) for v in (m, n1, n2)) or m < 1 \
            or n1 < 2 or n2 < 2:
        raise BadParameters("need integers m >= 1, n1, n2 >= 2")
    xi1, xi2 = xi1 % n1, xi2 % n2
    for xi, n in ((xi1, n1), (xi2, n2)):
        if gcd(xi, n) != 1 or gcd(xi - 1, n) != 1:
            raise BadParameters("each xi and xi - 1 must be units")
        if pow(xi, m, n) != 1 % n:
            raise BadParameters(f"xi^{m} != 1 mod {n}")
    spec = abelian.make_group(m, (n1, n2), ((xi1, 0), (0, xi2)))
    g = gcd(n1, n2)
    entries = []
    notes = []

    x1 = (xi1 * _inv(1 - xi1, n1)) % n1
    x2_g1 = _inv(xi2 - 1, n2)
    if g == 1:
        notes.append("gcd(n1, n2) = 1: no genus-1 classes")
    elif x1 % g != x2_g1 % g:
        notes.append("no genus-1 classes: the congruences for x "
                     "have no common solution")
    else:
        x = next(v for v in range(n1 * n2 // g + 1)
                 if v % n1 == x1 and v % n2 == x2_g1)
        for i in range(1, g):
            if gcd(i, n2) != 1:
                notes.append(f"i={i} skipped: i s2 does not generate Z/{n2}")
                continue
            for k in range(1, n1 + 1):
                for l in range(1, n2 + 1):
                    entries.append(_entry(
                        spec, k, l, i, "g1",
                        ((k * n1, x), (x + 1, l * n2)),
                        ((1, 0), (0, i))))

    x2 = (xi2 * _inv(1 - xi2, n2)) % n2
    for k in range(1, n1 + 1):
        for l in range(1, n2 + 1):
            entries.append(_entry(
                spec, k, l, None, "g2",
                ((k * n1, x1, 0, 0),
                 (x1 + 1, 0, 0, 0),
                 (0, 0, l * n2, x2),
                 (0, 0, x2 + 1, 0)),
                ((1, 0), (0, 0), (0, 1), (0, 0))))

    lower = (abelian.additive_order(2 * (1 - pow(xi1, -3, n1)), n1),
             abelian.additive_order(2 * (1 - pow(xi2, -3, n2)), n2))
    notes.extend(_distinctness_note(entries))
    return FamilyTable("rank2diag", spec, tuple(entries),
                       abelian.h3_order(spec), lower, tuple(notes))


def nondiag_lower_bound(m, n, N):
    """Additive order of 6(1 + N22 + N22^2 - N21^2) mod n; only the m = 3
    case has a proven bound."""
    if m != 3:
        raise UnsupportedM(f"lower bound formula only covers m = 3, got {m}")
    n21, n22 = N[1][0] % n, N[1][1] % n
    return abelian.additive_order(6 * (1 + n22 + n22 * n22 - n21 * n21), n)


def _n22_lift(n, n22, xt):
    """Minimal integer congruent to N22 mod n with 1 - 2 xt + xt N22' = 0
    mod n (the corner congruence of the genus-1 display)."""
    cand = n22 % n
    for _ in range(n * n):
        if (1 - 2 * xt + xt * cand) % n == 0:
            return cand
        cand += n
    raise BadParameters("no lift of N22 satisfies the corner congruence")


def rank2_nondiag_table(m, n, N):
    """Families over A = (Z/n)^2 where the action matrix is the companion
    form [[0, 1], [N21, N22]] (in the row convention phi(s1) = s2).

    Genus-1 classes (s1; i s2) exist only when N21 = -1 mod n; the genus-2
    (s1;0;s2;0) family always exists. The emitted integer matrices carry
    the unique det-exact lifts of the displayed residues.
    """
    if not (isinstance(m, int) and isinstance(n, int) and m >= 1 and n >= 2):
        raise BadParameters("need integers m >= 1, n >= 2")
    rows = tuple(tuple(int(x) for x in row) for row in N)
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise BadParameters("N must be 2x2")
    if rows[0] != (0, 1):
        raise BadParameters("N must be in companion form [[0, 1], [N21, N22]]")
    n21, n22 = rows[1][0] % n, rows[1][1] % n
    if gcd(n21, n) != 1 or gcd((1 - n21 - n22) % n, n) != 1:
        raise BadParameters("N and N - I must be invertible mod n")
    xi = _inv(1 - n21 - n22, n)
    try:
        # stored action is the transpose of the row-convention matrix
        spec = abelian.make_group(m, (n, n), ((0, n21), (1, n22)))
    except (NotOrderM, NotInvertible, FixedPoints) as e:
        raise BadParameters(f"companion action rejected: {e}") from None
    entries = []
    notes = []
    xt = xi % n

    if (n21 + 1) % n == 0:
        _n22_lift(n, n22, xt)  # the display's congruence must be satisfiable
        for i in range(1, n):
            if gcd(i, n) != 1:
                notes.append(f"i={i} skipped: i s2 does not generate Z/{n}")
                continue
            ii = _inv(i, n)
            for k in range(1, n + 1):
                for l in range(1, n + 1):
                    entries.append(_entry(
                        spec, k, l, i, "g1",
                        (((xi * i) % n + k * n, -xt),
                         (1 - xt, (xi * ii) % n + l * n)),
                        ((1, 0), (0, i))))
    else:
        notes.append("no genus-1 classes: N21 != -1 mod n")

    p = (n21 * xi) % n
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            entries.append(_entry(
                spec, k, l, None, "g2",
                ((k * n, p, 0, p),
                 (p + 1, 0, xt, 0),
                 (0, xt, l * n, xt - 1),
                 (p, 0, xt, 0)),
                ((1, 0), (0, 0), (0, 1), (0, 0))))

    try:
        lower = nondiag_lower_bound(m, n, rows)
    except UnsupportedM:
        lower = None
        notes.append(f"no proven lower bound for m = {m}")

    g1 = [e for e in entries if e.name == "g1"]
    if g1:
        formula = n * sum(n // gcd(n, j) for j in range(1, n))
        seen = len(set(e.su for e in g1))
        if seen != formula:
            notes.append(f"genus-1 su takes {seen} distinct values; the "
                         f"expected count formula gives {formula}")
    g2 = [e for e in entries if e.name == "g2"]
    formula = n * abelian.additive_order(n22 - n21 + 1, n)
    seen = len(set(e.su for e in g2))
    if seen != formula:
        notes.append(f"genus-2 su takes {seen} distinct values; the "
                     f"expected count formula gives {formula}")
    notes.extend(_distinctness_note(entries))
    return FamilyTable("rank2nondiag", spec, tuple(entries),
                       abelian.h3_order(spec), lower, tuple(notes))


# ---------------------------------------------------------------------------
# A4


@lru_cache(maxsize=None)
def a4_spec():
    """C_3 acting on (Z/2)^2 by the companion matrix: the A4 colouring
    target."""
    return abelian.make_group(3, (2, 2), ((0, 1), (1, 1)))


_A4_MATRICES = (
    ("3_1^l", ((-1, 1), (0, -1))),
    ("3_1^r", ((1, 0), (-1, 1))),
    ("4_1^l", ((1, 1), (0, -1))),
    ("4_1^r", ((-1, 0), (-1, 1))),
)

_A4_SUMS = (("3_1^l", "3_1^l"), ("3_1^l", "4_1^l"),
            ("3_1^l", "4_1^r"), ("4_1^l", "4_1^r"))


def _lex_coloured(spec, matrix):
    """First colouring in lex order whose symplectic class is nonzero."""
    for vec in surface_data.enumerate_colourings(matrix, spec):
        data = surface_data.SurfaceData(spec, matrix, vec)
        if not invariants.vector_class(data).is_zero():
            return data
    raise InternalInconsistency("no colouring with nonzero class found")


@lru_cache(maxsize=None)
def a4_representatives():
    """The four genus-1 knots 3_1^l, 3_1^r, 4_1^l, 4_1^r and the four
    connect sums that exhaust the bordism classes."""
    spec = a4_spec()
    base = {}
    entries = []
    for name, matrix in _A4_MATRICES:
        data = _lex_coloured(spec, matrix)
        base[name] = data
        entries.append(FamilyEntry(None, None, None, name, data,
                                   invariants.su(data), invariants.cu(data),
                                   invariants.vector_class(data)))
    for nm1, nm2 in _A4_SUMS:
        data = surface_data.connect_sum(base[nm1], base[nm2])
        if not surface_data.validate(data).valid:
            raise InternalInconsistency(f"{nm1}#{nm2} failed validation")
        entries.append(FamilyEntry(None, None, None, f"{nm1}#{nm2}", data,
                                   invariants.su(data), invariants.cu(data),
                                   invariants.vector_class(data)))
    notes = _distinctness_note(entries)
    return FamilyTable("a4", spec, tuple(entries),
                       abelian.h3_order(spec), 2, tuple(notes))


@lru_cache(maxsize=None)
def _a4_reference_cu():
    table = a4_representatives()
    by_name = {e.name: e for e in table.entries}
    return by_name["3_1^l"].cu, by_name["4_1^l"].cu


def a4_class(data):
    """Which of the two rho-equivalence classes valid A4 data sits in,
    decided by cu."""
    if data.spec != a4_spec():
        raise NotA4("data is not coloured by the A4 spec")
    if not surface_data.validate(data).valid:
        raise InvalidData("a4_class needs valid surface data")
    cu_tref, cu_fig8 = _a4_reference_cu()
    value = invariants.cu(data)
    if value == cu_fig8:
        return FIGURE8_CLASS
    if value == cu_tref:
        return TREFOIL_CLASS
    raise InternalInconsistency(f"cu value {value} matches neither class")


def a4_sum_class(c1, c2):
    """The connect-sum group law on the two classes: figure8 is the
    identity and trefoil # trefoil = figure8."""
    for c in (c1, c2):
        if c not in (TREFOIL_CLASS, FIGURE8_CLASS):
            raise BadParameters(f"unknown class tag {c!r}")
    if (c1 == TREFOIL_CLASS) != (c2 == TREFOIL_CLASS):
        return TREFOIL_CLASS
    return FIGURE8_CLASS
