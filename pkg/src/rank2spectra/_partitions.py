from __future__ import annotations

from typing import Iterator


def bounded_partitions(count: int, total: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """Yield every non-increasing tuple of ``count`` integers in ``[lo, hi]`` summing to ``total``.

    Tuples come out in descending lexicographic order.
    """
    if count < 0:
        return
    if count == 0:
        if total == 0:
            yield ()
        return
    prefix: list[int] = []

    def rec(k: int, remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if k == 0:
            if remaining == 0:
                yield tuple(prefix)
            return
        # the first of the k parts is the largest, so it is >= ceil(remaining / k)
        first_min = max(lo, -((-remaining) // k))
        first_max = min(cap, remaining - (k - 1) * lo)
        for part in range(first_max, first_min - 1, -1):
            prefix.append(part)
            yield from rec(k - 1, remaining - part, part)
            prefix.pop()

    yield from rec(count, total, hi)
