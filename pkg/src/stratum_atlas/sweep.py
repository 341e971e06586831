"""Deterministic enumeration of canonical signatures."""

from __future__ import annotations

from typing import Iterator

from .stratum import Signature, violations


def enumerate_signatures(max_sings: int, max_deg: int, genus: int | None = None) -> Iterator[Signature]:
    """All valid signatures with at most ``max_sings`` entries of absolute value at most ``max_deg``.

    Order: by number of singularities, then lexicographically descending
    degree tuples. Each multiset is produced once. With ``genus`` set, only
    degree sums equal to ``2*genus - 2`` are visited.
    """
    if max_sings < 1 or max_deg < 1:
        return
    values = [n for n in range(max_deg, -max_deg - 1, -1) if n != 0]
    target = None if genus is None else 2 * genus - 2

    def extend(prefix: list[int], start: int, remaining: int, total: int):
        if remaining == 0:
            if target is None or total == target:
                yield tuple(prefix)
            return
        for t in range(start, len(values)):
            v = values[t]
            if target is not None:
                # every further entry is <= v and >= -max_deg
                if total + v * remaining < target:
                    break
                if total + v - max_deg * (remaining - 1) > target:
                    continue
            prefix.append(v)
            yield from extend(prefix, t, remaining - 1, total + v)
            prefix.pop()

    for r in range(1, max_sings + 1):
        for degrees in extend([], 0, r, 0):
            if not violations(degrees):
                yield Signature(degrees)
