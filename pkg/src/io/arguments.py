"""
Parsing of the command-line text encodings for partitions and contents.
"""

from dataclasses import dataclass
from typing import Optional

from src.combinatorics.partitions import Partition
from src.combinatorics.tableaux import Content


def parse_partition(text: Optional[str]) -> Optional[Partition]:
    return None if text is None else Partition.from_string(text)


def parse_content(text: Optional[str]) -> Optional[Content]:
    return None if text is None else Content.from_string(text)


@dataclass
class RunConfig:
    """Resolved arguments of one CLI invocation."""

    command: str
    F: Optional[Partition] = None
    D: Optional[Partition] = None
    E: Optional[Partition] = None
    alpha: Optional[Content] = None
    beta: Optional[Content] = None
    n: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None
    r: Optional[int] = None
    s: Optional[int] = None
    to: str = "pair"
    format: str = "json"
    max_size: Optional[int] = None

    @classmethod
    def from_namespace(cls, args) -> "RunConfig":
        return cls(
            command=args.command,
            F=parse_partition(args.F),
            D=parse_partition(args.D),
            E=parse_partition(args.E),
            alpha=parse_content(args.alpha),
            beta=parse_content(args.beta),
            n=args.n,
            p=args.p,
            q=args.q,
            r=args.r,
            s=args.s,
            to=args.to,
            format=args.format,
            max_size=args.max_size,
        )

    def require(self, *names: str):
        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            raise ValueError(f"{self.command} needs --{' --'.join(missing)}")

    def resolved_n(self) -> int:
        """n defaults to the depth of F."""
        if self.n is not None:
            return self.n
        return self.F.depth() if self.F is not None else 0

    @property
    def rprime(self) -> int:
        return self.p - self.r

    @property
    def sprime(self) -> int:
        return self.q - self.s

    def check_split(self):
        self.require("p", "q", "r", "s")
        if not (0 <= self.r <= self.p and 0 <= self.s <= self.q):
            raise ValueError(f"Need 0 <= r <= p and 0 <= s <= q, got r={self.r} s={self.s} p={self.p} q={self.q}")
