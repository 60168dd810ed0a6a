"""Exact minimum hitting set over small bitmask families (branch and bound)."""

from __future__ import annotations


def popcount(x: int) -> int:
    return x.bit_count()


def packing_lower_bound(sets: list[int]) -> int:
    """Size of a greedy family of pairwise disjoint sets (smallest first)."""
    used = 0
    count = 0
    for s in sorted(sets, key=popcount):
        if not s & used:
            used |= s
            count += 1
    return count


def _search(sets: list[int], chosen: int, banned: int, budget: int, failed: dict) -> int | None:
    avail = []
    for s in sets:
        if s & chosen:
            continue
        a = s & ~banned
        if not a:
            return None
        avail.append(a)
    if not avail:
        return chosen
    if budget <= 0:
        return None
    key = (chosen, banned)
    if failed.get(key, -1) >= budget:
        return None
    avail.sort(key=popcount)
    used = 0
    lb = 0
    for a in avail:
        if not a & used:
            used |= a
            lb += 1
            if lb > budget:
                failed[key] = budget
                return None
    # branch on the smallest un-hit set; earlier elements are banned in later branches
    pick = avail[0]
    local_banned = banned
    while pick:
        bit = pick & -pick
        pick ^= bit
        found = _search(sets, chosen | bit, local_banned, budget - 1, failed)
        if found is not None:
            return found
        local_banned |= bit
    failed[key] = budget
    return None


class HittingSetSolver:
    """Incremental exact solver: sets can be added between solves.

    Failed search states stay failed when sets are added (the family only
    gets harder to hit), so the memo is kept across calls.
    """

    def __init__(self, sets=(), lower: int = 0):
        self.family: list[int] = []
        self.lower = lower
        self._failed: dict = {}
        self.add(sets)

    def add(self, sets) -> None:
        for s in sorted(set(sets), key=lambda x: (popcount(x), x)):
            if s == 0:
                raise ValueError("cannot hit an empty set")
            if any(t & s == t for t in self.family):
                continue
            # drop supersets: hitting the subset hits them too
            self.family = [t for t in self.family if t & s != s]
            self.family.append(s)
        self.family.sort(key=lambda x: (popcount(x), x))

    def solve(self) -> tuple[int, int]:
        k = max(self.lower, packing_lower_bound(self.family))
        while True:
            found = _search(self.family, 0, 0, k, self._failed)
            if found is not None:
                self.lower = k
                return popcount(found), found
            k += 1


def min_hitting_set(sets: list[int], lower: int = 0) -> tuple[int, int]:
    """Smallest element mask meeting every set in ``sets``.

    ``lower`` is a known lower bound on the optimum (e.g. from a previous,
    smaller family).  Among optimal answers the search prefers low elements.
    Returns ``(size, mask)``.
    """
    return HittingSetSolver(sets, lower).solve()
