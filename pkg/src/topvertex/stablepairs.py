"""Stable-pairs counting through pairs of box sets on the leg regions.

A pair (A, B) keeps A inside the negative legs and the triple cells, B
inside the double and triple cells. Gravity acts along (1,1,1): a box
forces every front neighbor that stays inside its own support region, so
both sets are closed under pushing forward. The labelling set of a pair
breaks into face-connected components; a component touching the negative
leg of sector i, or double cells away from sector i, belongs to sector i,
a component touching no such evidence stays free, and touching two
sectors at once is a conflict that excludes the pair from the count.
"""

from __future__ import annotations

from .qseries import QSeries
from .regions import (
    I_MINUS,
    III,
    classify,
    cylinder_axes,
    front_neighbors,
    renorm_constant,
    two_three_cells,
)

FREE = "free"


def _in_a_region(w, mu) -> bool:
    tag = classify(w, mu)
    return tag == I_MINUS or tag == III


def _in_b_region(w, mu) -> bool:
    tag = classify(w, mu)
    return tag == III or tag.startswith("II(")


def _forward_closed(boxes, region, mu) -> bool:
    for w in boxes:
        for f in front_neighbors(w):
            if f not in boxes and region(f, mu):
                return False
    return True


def is_ab_config(a_boxes, b_boxes, mu) -> bool:
    """Membership plus forward closure of both box sets."""
    a_set, b_set = set(a_boxes), set(b_boxes)
    if not all(_in_a_region(w, mu) for w in a_set):
        return False
    if not all(_in_b_region(w, mu) for w in b_set):
        return False
    return _forward_closed(a_set, _in_a_region, mu) and _forward_closed(
        b_set, _in_b_region, mu
    )


def labelling_set(a_boxes, b_boxes, mu) -> frozenset:
    """Negative boxes of A, double cells missing from B, and the
    triple cells carried by exactly one of the two sets."""
    a_set, b_set = set(a_boxes), set(b_boxes)
    two, three = two_three_cells(mu)
    out = {w for w in a_set if classify(w, mu) == I_MINUS}
    out |= two - b_set
    out |= three & (a_set ^ b_set)
    return frozenset(out)


def _face_components(cells) -> list[frozenset]:
    """Connected components under shared-face adjacency, by least cell."""
    left = set(cells)
    comps = []
    while left:
        seed = min(left)
        comp = {seed}
        queue = [seed]
        left.discard(seed)
        while queue:
            w = queue.pop()
            for n in front_neighbors(w) + tuple(
                (w[0] - d[0], w[1] - d[1], w[2] - d[2])
                for d in ((1, 0, 0), (0, 1, 0), (0, 0, 1))
            ):
                if n in left:
                    left.discard(n)
                    comp.add(n)
                    queue.append(n)
        comps.append(frozenset(comp))
    return sorted(comps, key=lambda c: min(c))


class LabelConflict:
    """A labelling-set component touching two different sectors.

    A normal outcome, not an exception: the pair simply does not count.
    """

    __slots__ = ("component", "sectors")

    def __init__(self, component, sectors):
        self.component = frozenset(component)
        self.sectors = frozenset(sectors)

    def __repr__(self):
        inside = ",".join(str(s) for s in sorted(self.sectors))
        return f"LabelConflict(sectors={{{inside}}})"


class ComponentLabelling:
    """Sector or free tags for the components of a labelling set."""

    __slots__ = ("components",)

    def __init__(self, components):
        self.components = tuple(
            sorted(
                ((frozenset(c), tag) for c, tag in components),
                key=lambda item: min(item[0]),
            )
        )

    @property
    def free_count(self) -> int:
        return sum(1 for _, tag in self.components if tag == FREE)

    def component_of(self, cell):
        for cells, tag in self.components:
            if cell in cells:
                return cells, tag
        raise KeyError(cell)

    def __eq__(self, other):
        if not isinstance(other, ComponentLabelling):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        inside = ", ".join(
            f"{sorted(cells)}:{tag}" for cells, tag in self.components
        )
        return f"ComponentLabelling({inside})"


def ab_label(a_boxes, b_boxes, mu):
    """Tag every labelling-set component, or report the first conflict."""
    tagged = []
    for comp in _face_components(labelling_set(a_boxes, b_boxes, mu)):
        sectors = set()
        for w in comp:
            tag = classify(w, mu)
            if tag == I_MINUS:
                sectors.add(cylinder_axes(w, mu)[0])
            elif tag.startswith("II("):
                sectors.add(int(tag[3]))
        if len(sectors) > 1:
            return LabelConflict(comp, sectors)
        tagged.append((comp, sectors.pop() if sectors else FREE))
    return ComponentLabelling(tagged)


class BoxConfig:
    """A finite box set whose marked triple cells carry sector or free tags.

    boxes is the union of the two sets of a pair, unlabelled the triple
    cells held by both. size counts unlabelled cells twice.
    """

    __slots__ = ("boxes", "unlabelled", "labels")

    def __init__(self, boxes, unlabelled, labels):
        self.boxes = frozenset(boxes)
        self.unlabelled = frozenset(unlabelled)
        self.labels = dict(labels)

    @property
    def size(self) -> int:
        return len(self.boxes) + len(self.unlabelled)

    @property
    def free_count(self) -> int:
        return len({v for v in self.labels.values() if not isinstance(v, int)})

    def _key(self):
        return (self.boxes, self.unlabelled, frozenset(self.labels.items()))

    def __eq__(self, other):
        if not isinstance(other, BoxConfig):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (
            f"BoxConfig(boxes={sorted(self.boxes)}, "
            f"unlabelled={sorted(self.unlabelled)})"
        )


def chi_top(pi: BoxConfig) -> int:
    """Each free component doubles the configuration count."""
    return 2 ** pi.free_count


def reconstruct_pi(a_boxes, b_boxes, mu):
    """The labelled box set of a pair, or the conflict that blocks it."""
    lab = ab_label(a_boxes, b_boxes, mu)
    if isinstance(lab, LabelConflict):
        return lab
    a_set, b_set = set(a_boxes), set(b_boxes)
    _, three = two_three_cells(mu)
    labels = {}
    for w in three & (a_set ^ b_set):
        cells, tag = lab.component_of(w)
        labels[w] = tag if tag != FREE else (FREE, cells)
    return BoxConfig(a_set | b_set, a_set & b_set, labels)


def project_base(a_boxes, b_boxes, mu):
    """Move every triple cell held only by B over to A; idempotent."""
    a_set, b_set = set(a_boxes), set(b_boxes)
    _, three = two_three_cells(mu)
    move = three & (b_set - a_set)
    return frozenset(a_set | move), frozenset(b_set - move)


def _graded_closed_sets(pool, region, mu, s_max: int) -> list[list[frozenset]]:
    """Forward-closed subsets of the pool, graded by size 0..s_max.

    Every such set shrinks by removing a coordinate-sum-minimal box, so
    growing by single closure-respecting additions reaches all of them.
    """
    grades = [[frozenset()]]
    seen = {frozenset()}
    for _ in range(s_max):
        layer = set()
        for cur in grades[-1]:
            for w in pool:
                if w in cur:
                    continue
                if all(
                    f in cur or not region(f, mu) for f in front_neighbors(w)
                ):
                    nxt = cur | {w}
                    if nxt not in seen:
                        seen.add(nxt)
                        layer.add(nxt)
        grades.append(sorted(layer, key=lambda s: sorted(s)))
    return grades


def _a_pool(mu, s_max: int) -> set:
    """Triple cells plus leg cells at depth up to s_max.

    Forward closure links every negative box to the surface of its leg,
    so depth beyond the box budget is unreachable.
    """
    _, three = two_three_cells(mu)
    pool = set(three)
    for axis, m in enumerate(mu, start=1):
        for v in range(len(m)):
            for u in range(m[v]):
                for d in range(1, s_max + 1):
                    if axis == 1:
                        pool.add((-d, u, v))
                    elif axis == 2:
                        pool.add((v, -d, u))
                    else:
                        pool.add((u, v, -d))
    return pool


def enumerate_box_pairs(mu, s_max: int) -> list[tuple[frozenset, frozenset]]:
    """All valid pairs with at most s_max boxes, conflicts included."""
    if s_max < 0:
        raise ValueError("s_max must be nonnegative")
    two, three = two_three_cells(mu)
    a_grades = _graded_closed_sets(_a_pool(mu, s_max), _in_a_region, mu, s_max)
    b_grades = _graded_closed_sets(two | three, _in_b_region, mu, s_max)
    pairs = []
    for size_a in range(s_max + 1):
        for size_b in range(s_max + 1 - size_a):
            for a_set in a_grades[size_a]:
                for b_set in b_grades[size_b]:
                    pairs.append((a_set, b_set))
    pairs.sort(key=lambda p: (len(p[0]) + len(p[1]), sorted(p[0]), sorted(p[1])))
    return pairs


def enumerate_ab(mu, s_max: int) -> list[tuple[frozenset, frozenset]]:
    """The pairs whose labelling succeeds, graded by total box count."""
    return [
        (a_set, b_set)
        for a_set, b_set in enumerate_box_pairs(mu, s_max)
        if not isinstance(ab_label(a_set, b_set, mu), LabelConflict)
    ]


def pt_vertex(mu, trunc: int) -> QSeries:
    """The stable-pairs vertex as a series truncated at exponent trunc."""
    val = -renorm_constant(mu)
    if trunc < val:
        raise ValueError(f"truncation {trunc} below valuation {val}")
    k_max = trunc - val
    counts = [0] * (k_max + 1)
    for a_set, b_set in enumerate_ab(mu, k_max):
        counts[len(a_set) + len(b_set)] += 1
    return QSeries(val, counts, trunc)


def ab_to_json(a_boxes, b_boxes, mu) -> dict:
    """Serializable view of a pair and its labelling."""
    out = {
        "a": sorted(map(list, a_boxes)),
        "b": sorted(map(list, b_boxes)),
    }
    lab = ab_label(a_boxes, b_boxes, mu)
    if isinstance(lab, LabelConflict):
        out["conflict"] = sorted(lab.sectors)
    else:
        out["labelling"] = [
            {"cells": sorted(map(list, cells)), "tag": tag}
            for cells, tag in lab.components
        ]
    return out
