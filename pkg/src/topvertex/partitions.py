"""Integer partitions, their charged bead diagrams, and the three surgeries.

Partitions are tuples of weakly decreasing positive integers; () is empty.
Bead positions are half-integers stored doubled (as odd ints), so the value
7/2 is stored as 7 and -1/2 as -1.
"""

from __future__ import annotations

from .errors import EmptyPartition


def check_partition(mu) -> tuple[int, ...]:
    """Normalise mu to a tuple, dropping trailing zeros; reject bad shapes."""
    mu = tuple(int(p) for p in mu)
    while mu and mu[-1] == 0:
        mu = mu[:-1]
    for i, p in enumerate(mu):
        if p <= 0:
            raise ValueError(f"parts must be positive, got {p} at index {i}")
        if i and mu[i - 1] < p:
            raise ValueError(f"parts must be weakly decreasing, got {mu}")
    return mu


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse a comma-separated partition; '' and '0' both mean empty."""
    text = text.strip()
    if text in ("", "0"):
        return ()
    return check_partition(int(tok) for tok in text.split(","))


def format_partition(mu) -> str:
    return ",".join(str(p) for p in mu) if mu else "0"


def part(mu, i: int) -> int:
    """mu_i with 1-based index, zero past the end."""
    return mu[i - 1] if 1 <= i <= len(mu) else 0


def conjugate(mu) -> tuple[int, ...]:
    mu = tuple(mu)
    if not mu:
        return ()
    cols = []
    for j in range(1, mu[0] + 1):
        cols.append(sum(1 for p in mu if p >= j))
    return tuple(cols)


def diagonal(mu) -> int:
    """Side of the largest square fitting in the diagram (0 for empty)."""
    d = 0
    for i, p in enumerate(mu, start=1):
        if p >= i:
            d = i
        else:
            break
    return d


def diagonal_s(mu) -> int:
    """Largest i with mu_i >= i - 1; equals diagonal or diagonal + 1, and 1 on empty."""
    ds = 1
    i = 1
    while part(mu, i) >= i - 1:
        ds = i
        i += 1
        if i > len(mu) + 1:
            break
    # i = 1 always qualifies (mu_1 >= 0)
    return max(ds, 1)


def maya(mu, charge: int = 0) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Bead positions of mu at the given charge, split about zero.

    The bead set is {mu_t - t + 1/2 + charge : t >= 1}. Returns
    (positives, negative holes), each sorted descending, doubled.
    Positives are the beads above zero; negative holes are the
    negative half-integers where no bead sits. The charge is
    len(positives) - len(holes).
    """
    mu = tuple(mu)
    beads = set()
    t_max = len(mu) + abs(charge) + 2
    for t in range(1, t_max + 1):
        beads.add(2 * part(mu, t) - 2 * t + 1 + 2 * charge)
    # below t_max the beads continue through every odd value
    tail_top = 2 * part(mu, t_max) - 2 * t_max + 1 + 2 * charge
    positives = tuple(sorted((b for b in beads if b > 0), reverse=True))
    holes = []
    x = -1
    while x > tail_top:
        if x not in beads:
            holes.append(x)
        x -= 2
    return positives, tuple(holes)


def partition_of_maya(positives, holes) -> tuple[tuple[int, ...], int]:
    """Inverse of maya: rebuild (mu, charge) from doubled bead data."""
    positives = tuple(sorted(positives, reverse=True))
    holes = tuple(sorted(holes, reverse=True))
    for x in positives:
        if x <= 0 or x % 2 == 0:
            raise ValueError(f"positive beads must be positive odd ints, got {x}")
    for x in holes:
        if x >= 0 or x % 2 == 0:
            raise ValueError(f"holes must be negative odd ints, got {x}")
    if len(set(positives)) != len(positives) or len(set(holes)) != len(holes):
        raise ValueError("bead positions must be distinct")
    charge = len(positives) - len(holes)
    hole_set = set(holes)
    floor = min(holes) if holes else -1
    beads = list(positives)
    x = -1
    while x >= floor:
        if x not in hole_set:
            beads.append(x)
        x -= 2
    # beyond the deepest hole every negative position holds a bead
    mu = []
    for t, s in enumerate(sorted(beads, reverse=True), start=1):
        p = (s - 1 - 2 * charge) // 2 + t
        if (s - 1 - 2 * charge) % 2 != 0:
            raise ValueError("bead parity inconsistent with charge")
        if p < 0:
            raise ValueError("bead data does not encode a partition")
        mu.append(p)
    while mu and mu[-1] == 0:
        mu.pop()
    tail = len(beads) + 1
    if part(mu, tail) != 0 and len(mu) >= tail:
        raise ValueError("bead data does not terminate")
    return check_partition(mu), charge


def mu_r(mu) -> tuple[int, ...]:
    """Row surgery: drop the smallest positive bead and recentre.

    On diagrams: add one to the first d-1 rows and delete row d,
    where d is the diagonal.
    """
    mu = tuple(mu)
    if not mu:
        raise EmptyPartition("row surgery needs a nonempty partition")
    d = diagonal(mu)
    out = [mu[i] + 1 for i in range(d - 1)]
    out.extend(mu[d:])
    return check_partition(out)


def mu_c(mu) -> tuple[int, ...]:
    """Column surgery: fill the highest negative hole and recentre.

    On diagrams: subtract one from every part >= d, then insert a part
    d - 1 just after the last row of length >= d.
    """
    mu = tuple(mu)
    if not mu:
        raise EmptyPartition("column surgery needs a nonempty partition")
    d = diagonal(mu)
    i_d = sum(1 for p in mu if p >= d)
    out = [p - 1 if p >= d else p for p in mu]
    out.insert(i_d, d - 1)
    return check_partition(out)


def mu_rc(mu) -> tuple[int, ...]:
    """Both surgeries at once: remove the principal hook at the diagonal cell.

    Equivalently drop the smallest positive bead and fill the highest
    negative hole.
    """
    mu = tuple(mu)
    if not mu:
        raise EmptyPartition("hook surgery needs a nonempty partition")
    d = diagonal(mu)
    out = list(mu[: d - 1])
    for p in mu[d - 1 :]:
        out.append(min(p, d - 1))
    return check_partition(out)


def constant_k(mu1, mu2) -> int:
    """1 + mu1_d1 - d1 + mu2'_d2 - d2 with d_i the diagonals; both nonempty."""
    mu1, mu2 = tuple(mu1), tuple(mu2)
    if not mu1 or not mu2:
        raise EmptyPartition("the recursion constant needs nonempty partitions")
    d1 = diagonal(mu1)
    d2 = diagonal(mu2)
    mu2c = conjugate(mu2)
    return 1 + part(mu1, d1) - d1 + part(mu2c, d2) - d2


def surgery_identities(mu) -> dict[str, bool]:
    """Structural identities tying the surgeries together, for one nonempty mu.

    Returns a named boolean per identity so a failing one is visible.
    """
    mu = check_partition(mu)
    if not mu:
        raise EmptyPartition("identities are stated for nonempty partitions")
    d = diagonal(mu)
    ell = len(mu)
    muc = mu_c(mu)
    mur = mu_r(mu)
    murc = mu_rc(mu)
    conj = conjugate(mu)
    sp, sm = maya(mu)
    i_d = sum(1 for p in mu if p >= d)
    out = {}
    out["size_r"] = sum(mur) == sum(mu) + d - 1 - part(mu, d)
    out["len_r"] = len(mur) == ell - 1
    out["diag_r"] = (diagonal(mur) == d) == (part(mu, d + 1) == d)
    out["max_hole"] = max(sm) == 2 * d - 2 * i_d - 1
    if d > 1:
        out["len_c"] = len(muc) == ell + 1
    elif mu[0] > 1:
        out["len_c"] = len(muc) == 1
    else:
        out["len_c"] = len(muc) == 0
    out["part_c"] = part(muc, d + 1) == d - 1 if d > 1 else True
    out["diag_c"] = (diagonal(muc) == d) == (part(mu, d) > d)
    out["diag_s_c"] = diagonal_s(muc) == d
    out["conj_c"] = conjugate(muc) == mu_r(conj)
    out["conj_r"] = conjugate(mur) == mu_c(conj)
    csp, csm = maya(conj)
    out["conj_beads"] = set(csp) == {-x for x in sm} and set(csm) == {-x for x in sp}
    out["size_c"] = sum(muc) == sum(mu) - part(conj, d) + d - 1
    out["size_alt"] = sum(mur) - sum(mu) + sum(muc) - sum(murc) == -1
    out["conj_rc"] = mu_rc(conj) == conjugate(murc)
    out["diag_rc"] = diagonal(murc) == d - 1
    interleave = all(
        part(murc, i) == part(muc, i) + 1 if i <= d - 1 else part(murc, i) == part(muc, i + 1)
        for i in range(1, len(murc) + 2)
    )
    out["rc_from_c"] = interleave
    out["len_rc"] = (len(murc) == ell) == (d > 1)
    out["diag_s_range"] = (diagonal_s(mu) == d + 1) == (part(mu, d + 1) == d)
    out["bead_counts"] = len(sp) == d and len(sm) == d
    rsp, rsm = maya(mur, charge=-1)
    out["beads_r"] = set(rsp) == set(sp) - {min(sp)} and set(rsm) == set(sm)
    csp2, csm2 = maya(muc, charge=1)
    out["beads_c"] = set(csp2) == set(sp) and set(csm2) == set(sm) - {max(sm)}
    rcsp, rcsm = maya(murc, charge=0)
    out["beads_rc"] = set(rcsp) == set(sp) - {min(sp)} and set(rcsm) == set(sm) - {max(sm)}
    return out
