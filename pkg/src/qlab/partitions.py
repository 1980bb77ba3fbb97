"""Brute-force partition enumeration and statistics.

Every quantity here is computed by direct enumeration of the objects being
counted, with no series machinery involved, so this module serves as the
independent oracle for the generating-function side of the package.

Covered statistics, per weight n:

* p(n) and the rank classification (rank = largest part minus number of
  parts): counts of partitions with even rank, odd rank, and positive odd
  rank.
* spt(n): total number of smallest parts over all partitions of n.
* Two-color (red/blue) partitions with an even smallest part 2m where red
  parts are even and confined to the interval (2m, 4m], their count, their
  explicit lists, and their smallest-part count; plus the odd-smallest-part
  variant.
* Partitions in which every odd part is less than twice the smallest part.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

#: Largest weight accepted by the enumerators (about 1e6 partitions at 60).
DEFAULT_CAP = 60

BLUE = "blue"
RED = "red"


class CapExceeded(Exception):
    """The requested weight is beyond the configured enumeration cap."""


class InvalidPartition(Exception):
    """A partition value object violates its invariants."""


Partition = Tuple[int, ...]


class ColoredPart(NamedTuple):
    value: int
    color: str


@dataclass(frozen=True)
class TwoColorPartition:
    """A partition into red and blue parts, stored in canonical order.

    Canonical order is descending by value with blue before red at equal
    value, which makes lists of these objects reproducible.
    """

    parts: Tuple[ColoredPart, ...]

    @staticmethod
    def of(parts: Sequence[Tuple[int, str]]) -> "TwoColorPartition":
        ordered = tuple(
            ColoredPart(v, c)
            for v, c in sorted(parts, key=lambda p: (-p[0], p[1]))
        )
        return TwoColorPartition(ordered)

    @property
    def weight(self) -> int:
        return sum(p.value for p in self.parts)

    @property
    def smallest(self) -> int:
        return min(p.value for p in self.parts)

    def smallest_multiplicity(self) -> int:
        s = self.smallest
        return sum(1 for p in self.parts if p.value == s)

    def validate(self, odd_smallest: bool = False) -> None:
        """Check the color/interval invariants; raise InvalidPartition if broken.

        With ``odd_smallest=False`` the smallest part must be an even blue
        value 2m, red values even in (2m, 4m], blue values >= 2m.  With
        ``odd_smallest=True`` the smallest part is an odd blue value 2m+1
        and the red interval is the same (2m, 4m].
        """
        if not self.parts:
            raise InvalidPartition("two-color partition has no parts")
        s = self.smallest
        if odd_smallest:
            if s % 2 == 0:
                raise InvalidPartition(f"smallest part {s} is even")
            m = (s - 1) // 2
        else:
            if s % 2 == 1:
                raise InvalidPartition(f"smallest part {s} is odd")
            m = s // 2
        if not any(p.value == s and p.color == BLUE for p in self.parts):
            raise InvalidPartition("smallest part is not blue")
        for v, color in self.parts:
            if color == BLUE:
                if v < s:
                    raise InvalidPartition(f"blue part {v} below smallest {s}")
            elif color == RED:
                if v % 2 or not (2 * m < v <= 4 * m):
                    raise InvalidPartition(
                        f"red part {v} outside the even interval ({2*m}, {4*m}]"
                    )
            else:
                raise InvalidPartition(f"unknown color {color!r}")


class RankStats(NamedTuple):
    total: int
    even: int
    odd: int
    odd_positive: int


@dataclass(frozen=True)
class StatRow:
    """All enumerated statistics for one weight."""

    n: int
    p: int
    even_rank: int
    odd_rank: int
    odd_positive_rank: int
    two_color: int
    two_color_odd: int
    spt: int
    spt_two_color: int
    odd_part_bounded: int


def _check_cap(n: int, cap: int) -> None:
    if n < 1:
        raise ValueError(f"weight must be positive, got {n}")
    if n > cap:
        raise CapExceeded(f"weight {n} exceeds enumeration cap {cap}")


def iter_partitions(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Yield all partitions of n with parts <= max_part, largest-first order."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(max_part, n)
    for first in range(top, 0, -1):
        for rest in iter_partitions(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int, cap: int = DEFAULT_CAP) -> List[Partition]:
    """All partitions of n, each exactly once, in deterministic order."""
    _check_cap(n, cap)
    return list(iter_partitions(n))


def rank(parts: Sequence[int]) -> int:
    """Largest part minus number of parts."""
    if not parts:
        raise InvalidPartition("rank of the empty partition is undefined here")
    if any(p < 1 for p in parts):
        raise InvalidPartition(f"parts must be positive: {parts}")
    return max(parts) - len(parts)


def rank_stats(n: int, cap: int = DEFAULT_CAP) -> RankStats:
    """Classify all partitions of n by rank parity and sign."""
    _check_cap(n, cap)
    total = even = odd = odd_pos = 0
    for parts in iter_partitions(n):
        total += 1
        r = parts[0] - len(parts)
        if r % 2 == 0:
            even += 1
        else:
            odd += 1
            if r > 0:
                odd_pos += 1
    return RankStats(total, even, odd, odd_pos)


def rank_histogram(n: int, cap: int = DEFAULT_CAP) -> dict:
    """Map rank value -> number of partitions of n with that rank."""
    _check_cap(n, cap)
    hist: dict = {}
    for parts in iter_partitions(n):
        r = parts[0] - len(parts)
        hist[r] = hist.get(r, 0) + 1
    return hist


def spt(n: int, cap: int = DEFAULT_CAP) -> int:
    """Total multiplicity of the smallest part over all partitions of n."""
    _check_cap(n, cap)
    total = 0
    for parts in iter_partitions(n):
        smallest = parts[-1]
        i = len(parts) - 1
        while i >= 0 and parts[i] == smallest:
            total += 1
            i -= 1
    return total


def count_omega_interpretation(n: int, cap: int = DEFAULT_CAP) -> int:
    """Partitions of n in which each odd part is less than twice the smallest part."""
    _check_cap(n, cap)
    count = 0
    for parts in iter_partitions(n):
        bound = 2 * parts[-1]
        if all(v % 2 == 0 or v < bound for v in parts):
            count += 1
    return count


# ----------------------------------------------------------------------
# two-color partitions


def _iter_red_multisets(values: Sequence[int], budget: int) -> Iterator[Tuple[int, ...]]:
    """Multisets over ``values`` (descending tuples) with sum <= budget."""
    if not values:
        yield ()
        return
    head, tail = values[0], values[1:]
    max_copies = budget // head
    for copies in range(max_copies + 1):
        for rest in _iter_red_multisets(tail, budget - copies * head):
            yield (head,) * copies + rest


def _iter_blue_min(
    rest: int, smallest: int, max_part: Optional[int] = None
) -> Iterator[Partition]:
    # partitions of rest with all parts in [smallest, max_part]
    if rest == 0:
        yield ()
        return
    top = rest if max_part is None else min(max_part, rest)
    for first in range(top, smallest - 1, -1):
        for tail in _iter_blue_min(rest - first, smallest, first):
            yield (first,) + tail


def iter_g_partitions(n: int, cap: int = DEFAULT_CAP) -> Iterator[TwoColorPartition]:
    """Two-color partitions of n with even smallest part, canonical order per m."""
    _check_cap(n, cap)
    for m in range(1, n // 2 + 1):
        smallest = 2 * m
        red_values = tuple(range(4 * m, 2 * m, -2))
        for reds in _iter_red_multisets(red_values, n - smallest):
            rest = n - smallest - sum(reds)
            for blues in _iter_blue_min(rest, smallest):
                parts = (
                    [(v, RED) for v in reds]
                    + [(v, BLUE) for v in blues]
                    + [(smallest, BLUE)]
                )
                yield TwoColorPartition.of(parts)


def iter_gprime_partitions(n: int, cap: int = DEFAULT_CAP) -> Iterator[TwoColorPartition]:
    """Two-color partitions of n with odd smallest part 2m+1, red even in (2m, 4m]."""
    _check_cap(n, cap)
    for m in range((n - 1) // 2 + 1):
        smallest = 2 * m + 1
        red_values = tuple(range(4 * m, 2 * m, -2))
        for reds in _iter_red_multisets(red_values, n - smallest):
            rest = n - smallest - sum(reds)
            for blues in _iter_blue_min(rest, smallest):
                parts = (
                    [(v, RED) for v in reds]
                    + [(v, BLUE) for v in blues]
                    + [(smallest, BLUE)]
                )
                yield TwoColorPartition.of(parts)


def count_G(n: int, cap: int = DEFAULT_CAP) -> int:
    """Number of two-color partitions of n with even smallest part."""
    return sum(1 for _ in iter_g_partitions(n, cap))


def list_G(n: int, cap: int = DEFAULT_CAP) -> List[TwoColorPartition]:
    """Explicit sorted list of the partitions counted by count_G."""
    found = list(iter_g_partitions(n, cap))
    found.sort(key=lambda t: tuple((-p.value, p.color) for p in t.parts))
    return found


def count_Gprime(n: int, cap: int = DEFAULT_CAP) -> int:
    """Number of two-color partitions of n with odd smallest part."""
    return sum(1 for _ in iter_gprime_partitions(n, cap))


def sptG(n: int, cap: int = DEFAULT_CAP) -> int:
    """Total smallest-part multiplicity over the partitions counted by count_G."""
    return sum(t.smallest_multiplicity() for t in iter_g_partitions(n, cap))


# ----------------------------------------------------------------------
# aggregated table


def stat_row(n: int, cap: int = DEFAULT_CAP) -> StatRow:
    """Compute every oracle statistic for weight n and assert the tautologies."""
    stats = rank_stats(n, cap)
    row = StatRow(
        n=n,
        p=stats.total,
        even_rank=stats.even,
        odd_rank=stats.odd,
        odd_positive_rank=stats.odd_positive,
        two_color=count_G(n, cap),
        two_color_odd=count_Gprime(n, cap),
        spt=spt(n, cap),
        spt_two_color=sptG(n, cap),
        odd_part_bounded=count_omega_interpretation(n, cap),
    )
    if row.p != row.even_rank + row.odd_rank:
        raise InvalidPartition(f"rank parity classes do not add up at n={n}")
    if row.odd_rank != 2 * row.odd_positive_rank:
        raise InvalidPartition(f"odd ranks are not sign-symmetric at n={n}")
    return row


def stat_table(max_n: int, cap: int = DEFAULT_CAP) -> List[StatRow]:
    """Oracle statistics for every weight 1..max_n."""
    return [stat_row(n, cap) for n in range(1, max_n + 1)]
