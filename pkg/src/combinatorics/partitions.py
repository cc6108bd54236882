"""
Partitions, skew shapes, conjugation, the (p,q)-hook condition
and the highest weight map F -> F#.
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple


@dataclass(frozen=True)
class Partition:
    """Young diagram stored as weakly decreasing parts without trailing zeros."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 0 for x in parts):
            raise ValueError(f"Partition parts must be nonnegative, got {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"Partition parts must be weakly decreasing, got {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        """
        Parse the comma-separated encoding, e.g. "5,4,3,3,3,3,2".

        Args:
            text: Encoded partition; empty string is the empty partition

        Returns:
            Parsed Partition
        """
        text = text.strip()
        if text in ("", "()", "0"):
            return cls(())
        try:
            parts = tuple(int(x) for x in text.split(","))
        except ValueError:
            raise ValueError(f"Cannot parse partition from {text!r}")
        return cls(parts)

    def size(self) -> int:
        return sum(self.parts)

    def depth(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """1-based row length; zero past the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def boxes(self) -> List[Tuple[int, int]]:
        return [(i + 1, j + 1) for i, row in enumerate(self.parts) for j in range(row)]

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.parts)


@dataclass(frozen=True)
class SkewShape:
    """Skew diagram outer/inner with inner contained in outer."""

    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        if not contains(self.outer, self.inner):
            raise ValueError(f"Inner shape ({self.inner}) is not contained in ({self.outer})")

    def boxes(self) -> List[Tuple[int, int]]:
        """Boxes of the skew diagram in row-major order, 1-based."""
        return [
            (i, j)
            for i in range(1, self.outer.depth() + 1)
            for j in range(self.inner.part(i) + 1, self.outer.part(i) + 1)
        ]

    def size(self) -> int:
        return self.outer.size() - self.inner.size()

    def transpose(self) -> "SkewShape":
        return SkewShape(conjugate(self.outer), conjugate(self.inner))

    def __contains__(self, box: Tuple[int, int]) -> bool:
        i, j = box
        return self.inner.part(i) < j <= self.outer.part(i)

    def __str__(self) -> str:
        if self.inner.depth() == 0:
            return f"({self.outer})"
        return f"({self.outer})/({self.inner})"


@dataclass(frozen=True)
class HookWeight:
    """Highest weight (f#_1, ..., f#_{p+q}) attached to a hook partition."""

    entries: Tuple[int, ...]
    p: int
    q: int

    def __post_init__(self):
        if len(self.entries) != self.p + self.q:
            raise ValueError(f"HookWeight needs {self.p + self.q} entries, got {len(self.entries)}")
        even, odd = self.even(), self.odd()
        if any(even[i] < even[i + 1] for i in range(len(even) - 1)) or any(
            odd[i] < odd[i + 1] for i in range(len(odd) - 1)
        ):
            raise ValueError(f"HookWeight blocks must be weakly decreasing: {self}")

    def even(self) -> Tuple[int, ...]:
        return self.entries[: self.p]

    def odd(self) -> Tuple[int, ...]:
        return self.entries[self.p:]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.even())) + "; " + ",".join(map(str, self.odd())) + ")"


def conjugate(P: Partition) -> Partition:
    if P.depth() == 0:
        return Partition(())
    return Partition(tuple(sum(1 for x in P.parts if x >= j) for j in range(1, P.parts[0] + 1)))


def in_hook(P: Partition, p: int, q: int) -> bool:
    if p < 0 or q < 0:
        raise ValueError(f"Hook sizes must be nonnegative, got p={p}, q={q}")
    return P.part(p + 1) <= q


def in_hook_depth(P: Partition, n: int, p: int, q: int) -> bool:
    """Membership in the set of (p,q)-hook partitions of depth at most n."""
    return P.depth() <= n and in_hook(P, p, q)


def sharp(P: Partition, p: int, q: int) -> HookWeight:
    """
    Highest weight F# of the irreducible polynomial gl(p|q)-module L^F.

    Args:
        P: Partition in the (p,q)-hook
        p, q: Even and odd ranks

    Returns:
        HookWeight with entries f_1..f_p; max(f'_1 - p, 0)..max(f'_q - p, 0)
    """
    if not in_hook(P, p, q):
        raise ValueError(f"Partition ({P}) is not in the ({p},{q})-hook")
    conj = conjugate(P)
    even = tuple(P.part(i) for i in range(1, p + 1))
    odd = tuple(max(conj.part(j) - p, 0) for j in range(1, q + 1))
    return HookWeight(even + odd, p, q)


def contains(outer: Partition, inner: Partition) -> bool:
    return all(inner.part(i) <= outer.part(i) for i in range(1, inner.depth() + 1))


def partitions_of(size: int, max_part: Optional[int] = None, max_depth: Optional[int] = None) -> List[Partition]:
    """All partitions of size, parts bounded by max_part, at most max_depth rows (reverse lex order)."""
    if max_part is None:
        max_part = size
    if max_depth is None:
        max_depth = size
    result: List[Partition] = []

    def extend(remaining: int, cap: int, prefix: Tuple[int, ...]):
        if remaining == 0:
            result.append(Partition(prefix))
            return
        if len(prefix) == max_depth:
            return
        for part in range(min(cap, remaining), 0, -1):
            extend(remaining - part, part, prefix + (part,))

    extend(size, max_part, ())
    return result


def partitions_between(inner: Partition, outer: Partition, size: Optional[int] = None) -> List[Partition]:
    """
    Partitions E with inner ⊆ E ⊆ outer, optionally of a fixed size, in lexicographic order.
    """
    rows = outer.depth()
    result: List[Partition] = []

    def extend(i: int, prefix: Tuple[int, ...], total: int):
        if i > rows:
            if size is None or total == size:
                result.append(Partition(prefix))
            return
        cap = outer.part(i) if i == 1 else min(outer.part(i), prefix[-1])
        for part in range(inner.part(i), cap + 1):
            if size is not None:
                if total + part > size:
                    break
                # rows below can add at most part per row within outer
                room = sum(min(part, outer.part(k)) for k in range(i + 1, rows + 1))
                if total + part + room < size:
                    continue
            extend(i + 1, prefix + (part,), total + part)

    extend(1, (), 0)
    return result
