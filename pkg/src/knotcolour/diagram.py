"""Diagram-level colouring oracle.

PD-coded knot diagrams, the coset quandle of G = C_m x| A, and exhaustive
enumeration of quandle colourings with the basepoint convention that the
base arc carries the coset t (A-part zero). Counts from this module are
independent of the Seifert-matrix pipeline, which makes them a useful
cross-check.

A crossing is (sign, (a, b, c, d)): the under-strand enters at arc a and
leaves at arc c, the over-strand is arc b (= d, one arc passes over).
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import count

from . import abelian
from .errors import BadParameters, BudgetExceeded, GroupMismatch


@dataclass(frozen=True)
class Diagram:
    crossings: tuple
    base_arc: int

    def __post_init__(self):
        norm = []
        for cr in self.crossings:
            sign, arcs = cr
            arcs = tuple(int(x) for x in arcs)
            if sign not in (1, -1):
                raise BadParameters(f"crossing sign must be +-1, got {sign!r}")
            if len(arcs) != 4:
                raise BadParameters("crossing needs four arc ids")
            if arcs[1] != arcs[3]:
                raise BadParameters(
                    "over-strand arc must repeat in slots 2 and 4")
            norm.append((sign, arcs))
        object.__setattr__(self, "crossings", tuple(norm))
        under_count = {}
        ids = set()
        for sign, (a, b, c, _) in self.crossings:
            ids.update((a, b, c))
            under_count[a] = under_count.get(a, 0) + 1
            under_count[c] = under_count.get(c, 0) + 1
        for arc in ids:
            if under_count.get(arc, 0) != 2:
                raise BadParameters(
                    f"arc {arc} has {under_count.get(arc, 0)} under-strand "
                    "endpoints, expected 2")
        if len(self.crossings) != len(ids):
            raise BadParameters(
                f"{len(self.crossings)} crossings but {len(ids)} arcs; "
                "not a one-component diagram")
        if self.base_arc not in ids:
            raise BadParameters(f"base arc {self.base_arc} not in diagram")

    @property
    def arcs(self):
        ids = set()
        for _, (a, b, c, _) in self.crossings:
            ids.update((a, b, c))
        return tuple(sorted(ids))


@dataclass
class QuandleColouring:
    labels: dict


def quandle_op(a, b, spec):
    """Label of the outgoing under-arc: a * b = phi(a - b) + b."""
    if a.spec != spec or b.spec != spec:
        raise GroupMismatch("quandle operands must lie in the given spec")
    return abelian.add(abelian.act(abelian.sub(a, b)), b)


def quandle_op_inverse(x, b, spec):
    """The unique a with quandle_op(a, b) = x: phi^-1(x - b) + b."""
    if x.spec != spec or b.spec != spec:
        raise GroupMismatch("quandle operands must lie in the given spec")
    return abelian.add(abelian.act_pow(abelian.sub(x, b), -1), b)


def _surjective(labels, spec):
    # subgroup of G generated by the cosets t.a_i equals G iff the
    # phi-orbits of the labels generate A (base label is zero)
    orbit = []
    for lab in labels:
        cur = lab
        for _ in range(spec.m):
            orbit.append(cur)
            cur = abelian.act(cur)
    return abelian.generates(orbit, spec)


def enumerate_diagram_colourings(diagram, spec, budget=10 ** 7):
    """All colourings with base arc labelled zero, every crossing relation
    satisfied, and the labels generating G; in lexicographic label order
    over the non-base arcs (ascending arc id)."""
    arcs = diagram.arcs
    if abelian.group_order(spec) ** len(arcs) > budget:
        raise BudgetExceeded(
            f"{abelian.group_order(spec) ** len(arcs)} assignments exceed "
            f"budget {budget}")
    order = [diagram.base_arc] + [a for a in arcs if a != diagram.base_arc]
    index_of = {a: i for i, a in enumerate(order)}
    # check each crossing as soon as its last arc gets a label
    ready = {i: [] for i in range(len(order))}
    for sign, (a, b, c, _) in diagram.crossings:
        ready[max(index_of[a], index_of[b], index_of[c])].append((sign, a, b, c))
    elems = abelian.elements(spec)
    zero = abelian.zero(spec)
    labels = {}
    out = []

    def consistent(depth):
        for sign, a, b, c in ready[depth]:
            if sign > 0:
                want = quandle_op(labels[a], labels[b], spec)
            else:
                want = quandle_op_inverse(labels[a], labels[b], spec)
            if labels[c] != want:
                return False
        return True

    def walk(depth):
        if depth == len(order):
            if _surjective(list(labels.values()), spec):
                out.append(QuandleColouring(dict(labels)))
            return
        arc = order[depth]
        for e in ([zero] if depth == 0 else elems):
            labels[arc] = e
            if consistent(depth):
                walk(depth + 1)
            del labels[arc]

    walk(0)
    return out


# ---------------------------------------------------------------------------
# diagram builders


def braid_closure(word, strands):
    """Close a braid word (letters +-1..+-(strands-1), sigma_i positive
    when the strand at position i crosses over position i+1) and relabel
    arcs canonically by first occurrence."""
    if not isinstance(strands, int) or strands < 2:
        raise BadParameters("need an integer strand count >= 2")
    word = tuple(word)
    for letter in word:
        if not isinstance(letter, int) or letter == 0 \
                or abs(letter) >= strands:
            raise BadParameters(f"braid letter {letter!r} out of range")
    arc_at = list(range(strands))
    fresh = count(strands)
    crossings = []
    for letter in word:
        i = abs(letter) - 1
        new = next(fresh)
        if letter > 0:
            over, under_in = arc_at[i], arc_at[i + 1]
            crossings.append((1, under_in, over, new))
            arc_at[i], arc_at[i + 1] = new, over
        else:
            over, under_in = arc_at[i + 1], arc_at[i]
            crossings.append((-1, under_in, over, new))
            arc_at[i], arc_at[i + 1] = over, new
    total = next(fresh)
    parent = list(range(total))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in range(strands):
        parent[find(arc_at[p])] = find(p)
    canon = {}
    for x in range(total):
        canon.setdefault(find(x), len(canon))
    return Diagram(tuple((s, (canon[find(a)], canon[find(b)],
                              canon[find(c)], canon[find(b)]))
                         for s, a, b, c in crossings), canon[find(0)])


def _shift(word, offset):
    return tuple(x + offset if x > 0 else x - offset for x in word)


@lru_cache(maxsize=None)
def catalog():
    """Built-in diagrams: the unknot (one kink), both trefoils, both
    figure-eight chiralities, and the connect sums the A4 table needs.
    Sums are closures of concatenated braids sharing one strand."""
    tl = (-1, -1, -1)
    tr = (1, 1, 1)
    fl = (1, -2, 1, -2)
    fr = (-1, 2, -1, 2)
    return {
        "unknot": braid_closure((1,), 2),
        "3_1^l": braid_closure(tl, 2),
        "3_1^r": braid_closure(tr, 2),
        "4_1^l": braid_closure(fl, 3),
        "4_1^r": braid_closure(fr, 3),
        "3_1^l#3_1^l": braid_closure(tl + _shift(tl, 1), 3),
        "3_1^l#4_1^l": braid_closure(tl + _shift(fl, 1), 4),
        "3_1^l#4_1^r": braid_closure(tl + _shift(fr, 1), 4),
        "4_1^l#4_1^r": braid_closure(fl + _shift(fr, 2), 5),
    }


# ---------------------------------------------------------------------------
# JSON interchange


def diagram_to_json(d):
    return {
        "crossings": [{"sign": s, "arcs": list(arcs)}
                      for s, arcs in d.crossings],
        "base_arc": d.base_arc,
    }


def diagram_from_json(obj):
    try:
        crossings = tuple((cr["sign"], tuple(cr["arcs"]))
                          for cr in obj["crossings"])
        base = obj["base_arc"]
    except (KeyError, TypeError) as e:
        raise BadParameters(f"malformed diagram JSON: {e}") from None
    return Diagram(crossings, base)
