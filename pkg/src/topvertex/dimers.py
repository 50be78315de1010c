"""Finite hexagonal dimer graphs with diagonal edge weights.

Vertices are the unit triangles of a triangular lattice, black ones
pointing one way and white ones the other: black (a,b) has corners
(a,b), (a+1,b), (a+1,b+1) and white (a,b) has corners (a,b), (a,b+1),
(a+1,b+1). The window of side N keeps the triangles whose corners (a,b)
satisfy |a| <= N, |b| <= N, |a-b| <= N, which leaves 6N^2 vertices.
Each white (a,b) touches black (a,b) through the edge of weight
q^(N-1-b), and touches black (a,b+1) and black (a-1,b) through edges of
weight 1, so the weighted edges are constant along diagonals and grow
from 0 on the bottom-right diagonal up to 2N-2... (2N-1 diagonals in
all). Matchings of the window correspond to boxed plane partitions;
their weights are N^2(N-1)/2 plus the box count.

Boundary positions carry half-integer labels (2k-1)/2, k = 1..N, with a
positive and a negative side in each of three sectors; two layouts are
supported, one for the box-counting correspondence and one for the
stable-pairs correspondence. Labels are stored by (sector, sign, k).
"""

from __future__ import annotations

from .errors import LabelOutOfRange, Unmatchable
from .partitions import maya
from .qseries import QSeries, from_terms, qs_truncate, qs_zero, scale_monomial
from .regions import maya_bound, renorm_constant

BLACK = "b"
WHITE = "w"


def in_window(v, n: int) -> bool:
    kind, a, b = v
    if not (-n <= a <= n - 1 and -n <= b <= n - 1):
        return False
    if kind == BLACK:
        return -n <= a - b <= n - 1
    if kind == WHITE:
        return -n + 1 <= a - b <= n
    raise ValueError(f"bad vertex kind {kind!r}")


def adjacent(v):
    """The three lattice neighbors, present or not."""
    kind, a, b = v
    if kind == BLACK:
        return ((WHITE, a, b), (WHITE, a, b - 1), (WHITE, a + 1, b))
    return ((BLACK, a, b), (BLACK, a, b + 1), (BLACK, a - 1, b))


def edge_exponent(white, black, n: int) -> int:
    """q-exponent of the edge between a white and a black vertex."""
    if white[1:] == black[1:]:
        return n - 1 - white[2]
    return 0


def boundary_vertex(n: int, convention: str, sector: int, sign: int, k: int):
    """The boundary vertex carrying label (2k-1)/2 on the given side."""
    if not 1 <= k <= n:
        raise LabelOutOfRange(f"label index {k} outside 1..{n}")
    if convention == "dt":
        if sector == 1:
            return (BLACK, n - 1, k - 1) if sign > 0 else (WHITE, n - k, -k)
        if sector == 2:
            return (BLACK, -k, n - k) if sign > 0 else (WHITE, k - 1, n - 1)
        if sector == 3:
            return (BLACK, k - n - 1, -n) if sign > 0 else (WHITE, -n, k - n - 1)
    elif convention == "pt":
        if sector == 1:
            return (BLACK, k - n - 1, k - 1) if sign > 0 else (WHITE, -n, -k)
        if sector == 2:
            return (BLACK, -k, -n) if sign > 0 else (WHITE, k - 1, k - 1 - n)
        if sector == 3:
            return (BLACK, n - 1, n - k) if sign > 0 else (WHITE, n - k, n - 1)
    else:
        raise ValueError(f"unknown convention {convention!r}")
    raise ValueError(f"sector must be 1, 2 or 3, got {sector}")


class HoneycombGraph:
    __slots__ = ("n", "convention", "removed")

    def __init__(self, n: int, convention: str = "dt", removed=frozenset()):
        if n < 1:
            raise ValueError("window side must be at least 1")
        if convention not in ("dt", "pt"):
            raise ValueError(f"unknown convention {convention!r}")
        removed = frozenset(removed)
        for v in removed:
            if not in_window(v, n):
                raise ValueError(f"removed vertex {v} outside the window")
        self.n = n
        self.convention = convention
        self.removed = removed

    def has(self, v) -> bool:
        return in_window(v, self.n) and v not in self.removed

    def vertices(self) -> list:
        out = []
        n = self.n
        for kind in (BLACK, WHITE):
            for a in range(-n, n):
                for b in range(-n, n):
                    v = (kind, a, b)
                    if self.has(v):
                        out.append(v)
        return out

    def neighbors(self, v) -> list:
        return [u for u in adjacent(v) if self.has(u)]

    def with_removed(self, extra) -> "HoneycombGraph":
        return HoneycombGraph(
            self.n, self.convention, self.removed | frozenset(extra)
        )

    def boundary_label(self, sector: int, sign: int, k: int):
        return boundary_vertex(self.n, self.convention, sector, sign, k)

    def __repr__(self):
        return (
            f"HoneycombGraph(n={self.n}, convention={self.convention!r}, "
            f"removed={len(self.removed)})"
        )


def build_h(n: int, convention: str = "dt") -> HoneycombGraph:
    return HoneycombGraph(n, convention)


def remove_for_maya(h: HoneycombGraph, mu) -> HoneycombGraph:
    """Delete the labelled boundary vertices given by each leg's bead set."""
    if h.convention != "dt":
        raise ValueError("maya removal uses the box-counting layout")
    gone = set()
    for sector, m in enumerate(mu, start=1):
        positives, holes = maya(m)
        for p in positives:
            k = (p + 1) // 2
            if k > h.n:
                raise LabelOutOfRange(
                    f"bead {p}/2 in sector {sector} exceeds window {h.n}"
                )
            gone.add(boundary_vertex(h.n, "dt", sector, +1, k))
        for p in holes:
            k = (1 - p) // 2
            if k > h.n:
                raise LabelOutOfRange(
                    f"hole {p}/2 in sector {sector} exceeds window {h.n}"
                )
            gone.add(boundary_vertex(h.n, "dt", sector, -1, k))
    return h.with_removed(gone)


def _column_layers(g: HoneycombGraph) -> list[list]:
    """Vertex layers ordered so every edge joins consecutive layers.

    White vertices of diagonal c = b - a link to black vertices of the
    same diagonal (weighted edges) and of diagonal c + 1 (unit edges).
    """
    n = g.n

    def col(kind, c):
        lo, hi = max(-n, -n - c), min(n - 1, n - 1 - c)
        out = []
        for a in range(lo, hi + 1):
            v = (kind, a, a + c)
            if g.has(v):
                out.append(v)
        return out

    layers = [col(WHITE, -n)]
    for c in range(-n + 1, n):
        layers.append(col(BLACK, c))
        layers.append(col(WHITE, c))
    layers.append(col(BLACK, n))
    return layers


def _back_edges(q, prev_index, n):
    """Neighbors of q in the previous layer, with edge exponents."""
    kind, a, b = q
    if kind == BLACK:
        cands = (((WHITE, a, b - 1), 0), ((WHITE, a + 1, b), 0))
    else:
        cands = (((BLACK, a, b), n - 1 - b),)
    return [(prev_index[p], e) for p, e in cands if p in prev_index]


def dimer_z(g: HoneycombGraph) -> QSeries:
    """Exact weighted matching sum; the zero polynomial if unmatchable."""
    states = {0: {0: 1}}
    prev_index: dict = {}
    for layer in _column_layers(g):
        cur = {(pmask, 0): poly for pmask, poly in states.items()}
        for j, q in enumerate(layer):
            nxt: dict = {}
            links = _back_edges(q, prev_index, g.n)
            for (pmask, qmask), poly in cur.items():
                key = (pmask, qmask | (1 << j))
                acc = nxt.setdefault(key, {})
                for e, c in poly.items():
                    acc[e] = acc.get(e, 0) + c
                for idx, exp in links:
                    bit = 1 << idx
                    if pmask & bit:
                        key = (pmask ^ bit, qmask)
                        acc = nxt.setdefault(key, {})
                        for e, c in poly.items():
                            acc[e + exp] = acc.get(e + exp, 0) + c
            cur = nxt
        states = {}
        for (pmask, qmask), poly in cur.items():
            if pmask == 0:
                acc = states.setdefault(qmask, {})
                for e, c in poly.items():
                    acc[e] = acc.get(e, 0) + c
        prev_index = {v: j for j, v in enumerate(layer)}
    return from_terms(states.get(0, {}), exact=True)


def minimal_matching_weight(g: HoneycombGraph) -> int:
    """Smallest exponent over all matchings; raises if there are none."""
    states = {0: 0}
    prev_index: dict = {}
    for layer in _column_layers(g):
        cur = {(pmask, 0): w for pmask, w in states.items()}
        for j, q in enumerate(layer):
            nxt: dict = {}
            links = _back_edges(q, prev_index, g.n)
            for (pmask, qmask), w in cur.items():
                key = (pmask, qmask | (1 << j))
                if w < nxt.get(key, w + 1):
                    nxt[key] = w
                for idx, exp in links:
                    bit = 1 << idx
                    if pmask & bit:
                        key = (pmask ^ bit, qmask)
                        if w + exp < nxt.get(key, w + exp + 1):
                            nxt[key] = w + exp
            cur = nxt
        states = {}
        for (pmask, qmask), w in cur.items():
            if pmask == 0 and w < states.get(qmask, w + 1):
                states[qmask] = w
        prev_index = {v: j for j, v in enumerate(layer)}
    if 0 not in states:
        raise Unmatchable("graph has no perfect matching")
    return states[0]


def enumerate_matchings(g: HoneycombGraph) -> list[frozenset]:
    """Every perfect matching, as a frozenset of (white, black) edges.

    Backtracking on the most constrained black vertex; intended for
    small windows where the full list is wanted.
    """
    blacks = [v for v in g.vertices() if v[0] == BLACK]
    whites = [v for v in g.vertices() if v[0] == WHITE]
    if len(blacks) != len(whites):
        return []
    out: list[frozenset] = []
    free_blacks = set(blacks)
    used_whites: set = set()
    acc: list = []

    def options(bv):
        return [w for w in g.neighbors(bv) if w not in used_whites]

    def rec():
        if not free_blacks:
            out.append(frozenset(acc))
            return
        bv = min(free_blacks, key=lambda v: (len(options(v)), v))
        free_blacks.discard(bv)
        for w in options(bv):
            used_whites.add(w)
            acc.append((w, bv))
            rec()
            acc.pop()
            used_whites.discard(w)
        free_blacks.add(bv)

    rec()
    return out


def matching_weight(matching, n: int) -> int:
    return sum(edge_exponent(w, b, n) for w, b in matching)


def dt_via_dimers(mu, n: int) -> QSeries:
    """Matching sum of the window with leg labels removed, shifted so the
    leading term sits at the shared valuation; reliable window N - M."""
    m_bound = maya_bound(mu)
    if n < m_bound:
        raise LabelOutOfRange(f"window {n} below the leg bound {m_bound}")
    z = dimer_z(remove_for_maya(build_h(n, "dt"), mu))
    if z.is_zero():
        return qs_zero(exact=True)
    renorm = renorm_constant(mu)
    shifted = scale_monomial(z, -(z.valuation + renorm))
    return qs_truncate(shifted, -renorm + (n - m_bound))


def kuo_condensation_check(g: HoneycombGraph, a, b, c, d) -> bool:
    """Exact two-by-two trade identity for four boundary-face vertices,
    alternating in color along their common face as a, b, c, d."""
    from .errors import BadNodeChoice

    for v in (a, b, c, d):
        if not g.has(v):
            raise BadNodeChoice(f"vertex {v} not in the graph")
    if len({a, b, c, d}) != 4:
        raise BadNodeChoice("the four vertices must be distinct")
    if not (a[0] == c[0] == BLACK and b[0] == d[0] == WHITE) and not (
        a[0] == c[0] == WHITE and b[0] == d[0] == BLACK
    ):
        raise BadNodeChoice("colors must alternate a, b, c, d")
    from .qseries import qs_mul

    z = dimer_z(g)
    z_abcd = dimer_z(g.with_removed({a, b, c, d}))
    z_ab = dimer_z(g.with_removed({a, b}))
    z_cd = dimer_z(g.with_removed({c, d}))
    z_ad = dimer_z(g.with_removed({a, d}))
    z_bc = dimer_z(g.with_removed({b, c}))
    lhs = qs_mul(z, z_abcd)
    rhs_terms = qs_mul(z_ab, z_cd).terms()
    for e, coeff in qs_mul(z_ad, z_bc).terms().items():
        rhs_terms[e] = rhs_terms.get(e, 0) + coeff
    return lhs.terms() == {e: c2 for e, c2 in rhs_terms.items() if c2 != 0}


def _rotation_neighbors(v, n: int) -> list:
    """Present neighbors in counterclockwise angular order."""
    kind, a, b = v
    if kind == BLACK:
        cands = [(WHITE, a, b), (WHITE, a, b - 1), (WHITE, a + 1, b)]
    else:
        cands = [(BLACK, a - 1, b), (BLACK, a, b), (BLACK, a, b + 1)]
    return [u for u in cands if in_window(u, n)]


def boundary_cycle(n: int) -> list:
    """Vertices of the outer face of the full window, in cyclic order."""
    start = (WHITE, -n, -n)
    first = (BLACK, -n, -n + 1)
    cycle = [start]
    u, v = start, first
    while v != start:
        cycle.append(v)
        rot = _rotation_neighbors(v, n)
        w = rot[rot.index(u) - 1]
        u, v = v, w
    return cycle


def faces(n: int) -> list[tuple[int, int]]:
    """Lattice points interior to the window, one per hexagonal face."""
    out = []
    for a in range(-n + 1, n):
        for b in range(-n + 1, n):
            if abs(a - b) <= n - 1:
                out.append((a, b))
    return out


def face_cycle(f) -> list:
    """The six vertices around a face, in cyclic order."""
    a, b = f
    return [
        (BLACK, a, b),
        (WHITE, a, b),
        (BLACK, a - 1, b),
        (WHITE, a - 1, b - 1),
        (BLACK, a - 1, b - 1),
        (WHITE, a, b - 1),
    ]


def face_of_cell(cell) -> tuple[int, int]:
    x, y, z = cell
    return (x - z, y - z)


def graph_to_json(g: HoneycombGraph) -> dict:
    edges = []
    for v in g.vertices():
        if v[0] != WHITE:
            continue
        for u in g.neighbors(v):
            edges.append([list(v), list(u), edge_exponent(v, u, g.n)])
    return {
        "n": g.n,
        "convention": g.convention,
        "removed": sorted(map(list, g.removed)),
        "edges": sorted(edges),
    }
