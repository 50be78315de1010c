"""Cells of Z^3 and the leg-cylinder region decomposition for a partition triple.

A cell (u,v) lies in the diagram of mu when 0 <= u < mu_{v+1} (u runs along
rows, v picks the row). The three leg cylinders read their diagram
coordinates cyclically: Cyl_1 frees x with (u,v) = (y,z), Cyl_2 frees y with
(u,v) = (z,x), Cyl_3 frees z with (u,v) = (x,y).
"""

from __future__ import annotations

from .partitions import part

AXES = (1, 2, 3)

# tags
I_PLUS = "I+"
I_MINUS = "I-"
III = "III"
OUTSIDE = "outside"


def II(i: int) -> str:
    return f"II({i})"


def in_diagram(u: int, v: int, mu) -> bool:
    return u >= 0 and v >= 0 and u < part(mu, v + 1)


def in_cylinder(w, i: int, mu_i) -> bool:
    """Membership of cell w in the axis-i leg cylinder of mu_i."""
    x, y, z = w
    if i == 1:
        return in_diagram(y, z, mu_i)
    if i == 2:
        return in_diagram(z, x, mu_i)
    if i == 3:
        return in_diagram(x, y, mu_i)
    raise ValueError(f"axis must be 1, 2 or 3, got {i}")


def cylinder_axes(w, mu) -> tuple[int, ...]:
    """The axes whose cylinders contain w."""
    return tuple(i for i in AXES if in_cylinder(w, i, mu[i - 1]))


def back_neighbors(w):
    x, y, z = w
    return ((x - 1, y, z), (x, y - 1, z), (x, y, z - 1))


def front_neighbors(w):
    x, y, z = w
    return ((x + 1, y, z), (x, y + 1, z), (x, y, z + 1))


def classify(w, mu) -> str:
    """Region tag of a cell: III, II(i), I+, I-, or outside."""
    axes = cylinder_axes(w, mu)
    if min(w) < 0:
        return I_MINUS if axes else OUTSIDE
    if len(axes) == 3:
        return III
    if len(axes) == 2:
        (missing,) = set(AXES) - set(axes)
        return II(missing)
    if len(axes) == 1:
        return I_PLUS
    return OUTSIDE


def maya_bound(mu) -> int:
    """Smallest M with all parts and lengths of the triple at most M."""
    out = 0
    for m in mu:
        if m:
            out = max(out, m[0], len(m))
    return out


def finite_regions(mu) -> tuple[dict[str, set], int]:
    """Scan the cube holding II and III; returns ({tag: cells}, M)."""
    m_bound = maya_bound(mu)
    found: dict[str, set] = {III: set(), II(1): set(), II(2): set(), II(3): set()}
    for x in range(m_bound):
        for y in range(m_bound):
            for z in range(m_bound):
                tag = classify((x, y, z), mu)
                if tag in found:
                    found[tag].add((x, y, z))
    return found, m_bound


def two_three_cells(mu) -> tuple[set, set]:
    """(II, III) as cell sets."""
    found, _ = finite_regions(mu)
    return found[II(1)] | found[II(2)] | found[II(3)], found[III]


def region_stats(mu) -> tuple[int, int, int]:
    """(|II|, |III|, M)."""
    found, m_bound = finite_regions(mu)
    two = sum(len(found[II(i)]) for i in AXES)
    return two, len(found[III]), m_bound


def renorm_constant(mu) -> int:
    """|II| + 2|III|: the weight offset shared by both vertex normalisations."""
    two, three, _ = region_stats(mu)
    return two + 2 * three
