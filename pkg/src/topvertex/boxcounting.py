"""The box-counting vertex: order ideals asymptotic to three partition legs.

A configuration is the minimal cell set I^+ u II u III plus finitely many
extra boxes, the whole being downward closed inside the first octant. Its
weight is (number of extra boxes) - |II| - 2|III|, so the generating series
has valuation -|II| - 2|III| with a unique minimal configuration.
"""

from __future__ import annotations

from .errors import InvalidIdeal
from .qseries import QSeries
from .regions import back_neighbors, cylinder_axes, maya_bound, region_stats


def in_base(w, mu) -> bool:
    """Membership in the minimal configuration I^+ u II u III."""
    return min(w) >= 0 and bool(cylinder_axes(w, mu))


def _initial_addables(mu) -> frozenset:
    """Cells addable to the minimal configuration; they all fit in [0, M]^3."""
    m_bound = maya_bound(mu)
    out = set()
    for x in range(m_bound + 1):
        for y in range(m_bound + 1):
            for z in range(m_bound + 1):
                w = (x, y, z)
                if in_base(w, mu):
                    continue
                if all(min(n) < 0 or in_base(n, mu) for n in back_neighbors(w)):
                    out.add(w)
    return frozenset(out)


def is_valid_extra(extra, mu) -> bool:
    """extra boxes are in-octant, off the base, and base u extra is an ideal."""
    extra = set(extra)
    for w in extra:
        if min(w) < 0 or in_base(w, mu):
            return False
        for n in back_neighbors(w):
            if min(n) >= 0 and not in_base(n, mu) and n not in extra:
                return False
    return True


def pp_weight(extra, mu) -> int:
    """Renormalised weight |extra| - |II| - 2|III| of a configuration."""
    if not is_valid_extra(extra, mu):
        raise InvalidIdeal(f"not an asymptotic configuration over {mu}")
    two, three, _ = region_stats(mu)
    return len(extra) - two - 2 * three


def enumerate_asymptotic_pp(mu, k_max: int) -> list[int]:
    """Counts of configurations with k extra boxes, k = 0..k_max."""
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    counts = [1]
    layer = {frozenset()}
    seeds = _initial_addables(mu)
    for _ in range(k_max):
        nxt = set()
        for extra in layer:
            candidates = set(seeds)
            for (x, y, z) in extra:
                candidates.update({(x + 1, y, z), (x, y + 1, z), (x, y, z + 1)})
            candidates.difference_update(extra)
            for w in candidates:
                ok = True
                for n in back_neighbors(w):
                    if min(n) >= 0 and n not in extra and not in_base(n, mu):
                        ok = False
                        break
                if ok:
                    nxt.add(extra | {w})
        layer = nxt
        counts.append(len(layer))
    return counts


def dt_vertex(mu, trunc: int) -> QSeries:
    """The box-counting vertex as a series truncated at exponent trunc."""
    two, three, _ = region_stats(mu)
    val = -(two + 2 * three)
    if trunc < val:
        raise ValueError(f"truncation {trunc} below valuation {val}")
    counts = enumerate_asymptotic_pp(mu, trunc - val)
    return QSeries(val, counts, trunc)
