"""Sequences over {0,...,k}, families of sequences, and reduced-word components.

A sequence is a plain tuple of small integers; positions are 1-indexed
throughout (position i of x is x[i-1]).  The empty sequence () is a valid
value of length 0, so deletion shadows of length-1 families are total.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import comb

Seq = tuple[int, ...]


def validate_sequence(x: Seq, k: int) -> None:
    """Raise ValueError unless x is a valid sequence over {0,...,k}."""
    if k < 1:
        raise ValueError(f"alphabet ceiling k must be >= 1, got {k}")
    for i, e in enumerate(x, start=1):
        if not (0 <= e <= k):
            raise ValueError(f"entry {e} at position {i} not in [0, {k}]")


def reduced(x: Seq) -> Seq:
    """The reduced word of x: all zero coordinates removed, order preserved."""
    return tuple(e for e in x if e != 0)


def positions_of(x: Seq, value: int) -> frozenset[int]:
    """R_value(x): the 1-indexed positions of x that hold `value`."""
    return frozenset(i for i, e in enumerate(x, start=1) if e == value)


def zero_count(x: Seq) -> int:
    return sum(1 for e in x if e == 0)


def rank(x: Seq) -> int:
    """Sum of the entries of x."""
    return sum(x)


def low_count(x: Seq, r: int) -> int:
    """Number of coordinates of x with value <= r."""
    return sum(1 for e in x if e <= r)


@dataclass(frozen=True)
class SequenceStats:
    """Derived statistics of one sequence: rank, value counts, low counts."""

    sequence: Seq
    rank: int
    zero_count: int
    value_counts: tuple[tuple[int, int], ...]  # (value, count), counts > 0

    def count(self, value: int) -> int:
        """w_value(x)."""
        return dict(self.value_counts).get(value, 0)

    def positions(self, value: int) -> frozenset[int]:
        """R_value(x)."""
        return positions_of(self.sequence, value)

    def low_count(self, r: int) -> int:
        """Number of coordinates <= r; equals len(x) once r reaches max(x)."""
        return sum(c for v, c in self.value_counts if v <= r)


def stats(x: Seq) -> SequenceStats:
    counts = Counter(x)
    return SequenceStats(
        sequence=x,
        rank=sum(x),
        zero_count=counts.get(0, 0),
        value_counts=tuple(sorted(counts.items())),
    )


@dataclass(frozen=True)
class Family:
    """A finite set of equal-length sequences over a common alphabet {0,...,k}."""

    n: int
    k: int
    members: frozenset[Seq]

    @classmethod
    def of(cls, n: int, k: int, seqs) -> "Family":
        members = frozenset(tuple(s) for s in seqs)
        if k < 1:
            raise ValueError(f"alphabet ceiling k must be >= 1, got {k}")
        if n < 0:
            raise ValueError(f"length n must be >= 0, got {n}")
        for s in members:
            if len(s) != n:
                raise ValueError(f"member {s} has length {len(s)}, expected {n}")
            validate_sequence(s, k)
        return cls(n=n, k=k, members=members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x) -> bool:
        return tuple(x) in self.members

    def __iter__(self):
        # Iteration follows the <= order for reproducible output.
        from .orders import leq_key

        return iter(sorted(self.members, key=lambda s: leq_key(s, self.k)))


def full_universe(n: int, k: int):
    """All (k+1)^n sequences, in base-(k+1) encoding order."""
    return itertools.product(range(k + 1), repeat=n)


def place_label(label: Seq, zeros: frozenset[int], n: int) -> Seq:
    """The sequence of length n with zeros at `zeros` and `label` elsewhere."""
    out = []
    it = iter(label)
    for i in range(1, n + 1):
        out.append(0 if i in zeros else next(it))
    return tuple(out)


@dataclass(frozen=True)
class Component:
    """All length-n sequences sharing one reduced word (one connected component)."""

    label: Seq
    n: int
    k: int

    @property
    def zero_count(self) -> int:
        return self.n - len(self.label)

    def size(self) -> int:
        return comb(self.n, self.zero_count) if len(self.label) <= self.n else 0

    def members(self) -> frozenset[Seq]:
        zc = self.zero_count
        return frozenset(
            place_label(self.label, frozenset(zs), self.n)
            for zs in itertools.combinations(range(1, self.n + 1), zc)
        )


def component_of(x: Seq, k: int) -> Component:
    return Component(label=reduced(x), n=len(x), k=k)


def components(n: int, k: int, zero_count_i: int) -> list[Component]:
    """All components of the level with exactly `zero_count_i` zeros, <=_c order."""
    from .orders import c_key

    if not (0 <= zero_count_i <= n):
        raise ValueError(f"zero count {zero_count_i} not in [0, {n}]")
    labels = sorted(
        itertools.product(range(1, k + 1), repeat=n - zero_count_i),
        key=lambda s: c_key(s, k),
    )
    return [Component(label=s, n=n, k=k) for s in labels]
