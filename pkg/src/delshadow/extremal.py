"""Compression operators, set-system calculus, and the closed-form minimum shadow.

The minimum delta-shadow for a family of given size is attained by an initial
segment of the <= order: levels fill bottom-up (fewest zeros first), within a
level components fill whole in <=_c order, and the single partial component is
a colex initial segment of zero-position sets.  Its shadow size therefore
splits into full-component terms plus one partial-component term counted by
`ones_count_colex`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .orders import c_key, colex_combinations, colex_initial_positions, initial_segment_leq
from .seqcore import Component, Family, Seq, low_count, place_label, reduced, zero_count


# ---------------------------------------------------------------------------
# Set systems on [n]


@dataclass(frozen=True)
class SetSystem:
    """A family of r-subsets of [n]."""

    n: int
    r: int
    sets: frozenset[frozenset[int]]

    @classmethod
    def of(cls, n: int, r: int, sets) -> "SetSystem":
        sets = frozenset(frozenset(s) for s in sets)
        for s in sets:
            if len(s) != r:
                raise ValueError(f"set {sorted(s)} has size {len(s)}, expected {r}")
            if not s <= set(range(1, n + 1)):
                raise ValueError(f"set {sorted(s)} not a subset of [{n}]")
        return cls(n=n, r=r, sets=sets)

    def __len__(self) -> int:
        return len(self.sets)


def ones_count(system: SetSystem) -> int:
    """Number of member sets containing the element 1."""
    return sum(1 for s in system.sets if 1 in s)


def complement_system(system: SetSystem) -> SetSystem:
    """Complement every member set within [n]; uniform of size n - r."""
    ground = frozenset(range(1, system.n + 1))
    return SetSystem.of(system.n, system.n - system.r, (ground - s for s in system.sets))


def ones_count_colex(n: int, r: int, m: int) -> int:
    """|A_1| for A the colex initial segment of r-subsets of [n] of size m.

    Counting recursion over the colex block structure: sets with maximum j form
    a block of C(j-1, r-1), and within a block the sets are rest + {j} with
    rest running over a colex initial segment of [j-1]^(r-1).
    """
    if not (0 <= m <= comb(n, r)):
        raise ValueError(f"size {m} not in [0, C({n},{r})={comb(n, r)}]")
    if m == 0 or r == 0:
        return 0
    total = 0
    remaining = m
    for j in range(r, n + 1):
        block = comb(j - 1, r - 1)
        take = min(remaining, block)
        if j == 1:
            total += take  # the single set {1}
        elif take == block:
            total += comb(j - 2, r - 2) if r >= 2 else 0
        else:
            total += ones_count_colex(j - 1, r - 1, take)
        remaining -= take
        if remaining == 0:
            break
    return total


@dataclass(frozen=True)
class SegmentDescriptor:
    """A colex segment: initial segment of length `upper` minus one of length `lower`."""

    n: int
    r: int
    lower: int
    upper: int

    def __post_init__(self):
        if not (0 <= self.lower <= self.upper <= comb(self.n, self.r)):
            raise ValueError(
                f"need 0 <= lower <= upper <= C({self.n},{self.r}), "
                f"got lower={self.lower}, upper={self.upper}"
            )

    def __len__(self) -> int:
        return self.upper - self.lower


def segment_realize(d: SegmentDescriptor) -> SetSystem:
    """The set system of the colex segment described by d."""
    sets = list(itertools.islice(colex_combinations(d.n, d.r), d.lower, d.upper))
    return SetSystem.of(d.n, d.r, sets)


def segment_ones_count(d: SegmentDescriptor) -> int:
    """|A_1| of a colex segment, by differencing the initial-segment counts."""
    return ones_count_colex(d.n, d.r, d.upper) - ones_count_colex(d.n, d.r, d.lower)


def co_initial_ones_count(n: int, r: int, m: int) -> int:
    """|A_1| of the final colex segment of size m (full layer minus an initial one)."""
    return comb(n - 1, r - 1) - ones_count_colex(n, r, comb(n, r) - m)


# ---------------------------------------------------------------------------
# Compression


def _validate_compress_words(s: Seq, t: Seq, n: int, k: int) -> None:
    for w in (s, t):
        if 0 in w:
            raise ValueError(f"component label {w} must be zero-free")
        if len(w) > n:
            raise ValueError(f"component label {w} longer than n={n}")
        if any(e > k for e in w):
            raise ValueError(f"component label {w} exceeds alphabet ceiling {k}")
    if len(s) == len(t):
        # Mass packs into C_s first; any distinct same-length pair is valid.
        if s == t:
            raise ValueError("labels must be distinct")
    elif len(t) != len(s) - 1:
        raise ValueError(
            f"labels must have equal length or len(t) = len(s) - 1, "
            f"got len(s)={len(s)}, len(t)={len(t)}"
        )


def compress(a: Family, s: Seq, t: Seq) -> Family:
    """The s,t-compression: pack A's mass in C_s u C_t into C_s first, then C_t,
    each as a colex initial segment of zero-position sets."""
    s, t = tuple(s), tuple(t)
    _validate_compress_words(s, t, a.n, a.k)
    in_s = [x for x in a.members if reduced(x) == s]
    in_t = [x for x in a.members if reduced(x) == t]
    q = len(in_s) + len(in_t)
    cap_s = comb(a.n, a.n - len(s))
    fill_s = min(q, cap_s)
    fill_t = q - fill_s
    out = set(a.members) - set(in_s) - set(in_t)
    for zeros in colex_initial_positions(a.n, a.n - len(s), fill_s):
        out.add(place_label(s, zeros, a.n))
    for zeros in colex_initial_positions(a.n, a.n - len(t), fill_t):
        out.add(place_label(t, zeros, a.n))
    return Family.of(a.n, a.k, out)


def potential_v(a: Family) -> int:
    """Sum over members of their zero count; strictly drops on effective
    cross-level compressions."""
    return sum(zero_count(x) for x in a.members)


def potential_w(a: Family) -> int:
    """Sum over members of the <=_c index of their component within its level;
    strictly drops on effective same-level compressions."""
    index: dict[Seq, int] = {}
    for zc in range(a.n + 1):
        labels = sorted(
            itertools.product(range(1, a.k + 1), repeat=a.n - zc),
            key=lambda lab: c_key(lab, a.k),
        )
        for j, lab in enumerate(labels, start=1):
            index[lab] = j
    return sum(index[reduced(x)] for x in a.members)


def _level_labels(n: int, k: int, zc: int) -> list[Seq]:
    return sorted(
        itertools.product(range(1, k + 1), repeat=n - zc),
        key=lambda lab: c_key(lab, k),
    )


def canonicalize(a: Family) -> Family:
    """Compress A to the initial segment of <= of the same size."""
    return canonicalize_with_potentials(a)[0]


def _colex_pack(a: Family) -> Family:
    """Replace each component intersection by a colex initial segment of the
    same size (the within-component replacement; never grows the shadow)."""
    counts: dict[Seq, int] = {}
    for x in a.members:
        counts[reduced(x)] = counts.get(reduced(x), 0) + 1
    out: set[Seq] = set()
    for label, count in counts.items():
        for zeros in colex_initial_positions(a.n, a.n - len(label), count):
            out.add(place_label(label, zeros, a.n))
    return Family.of(a.n, a.k, out)


def canonicalize_with_potentials(a: Family) -> tuple[Family, list[int], list[int]]:
    """Colex-pack each component, run cross-level compressions to a fixpoint,
    then same-level compressions to a fixpoint.

    Once every component intersection is a colex initial segment, each
    effective cross-level pass moves mass to a lower level (v drops) and each
    effective same-level pass moves mass to a <=_c-earlier component (w drops);
    both potentials are non-negative integers, so the passes terminate.

    Returns (result, v_trace, w_trace) where the traces hold the potential at
    the start and after every effective pass of the respective phase.
    """
    n, k = a.n, a.k
    a = _colex_pack(a)
    v_trace = [potential_v(a)]
    if n > 0:
        # Cross-level passes: levels descending, labels <=_c-descending.
        changed = True
        while changed:
            changed = False
            for zc in range(n, 0, -1):
                for s in reversed(_level_labels(n, k, zc - 1)):
                    for t in reversed(_level_labels(n, k, zc)):
                        b = compress(a, s, t)
                        if b.members != a.members:
                            a = b
                            changed = True
            if changed:
                v_trace.append(potential_v(a))

    w_trace = [potential_w(a)]
    if n > 0 and k > 1:
        # Same-level passes (a level with a single label has no pairs).
        changed = True
        while changed:
            changed = False
            for zc in range(n, -1, -1):
                labels = _level_labels(n, k, zc)
                for i, s in enumerate(labels):
                    for t in labels[i + 1:]:
                        b = compress(a, s, t)
                        if b.members != a.members:
                            a = b
                            changed = True
            if changed:
                w_trace.append(potential_w(a))

    return a, v_trace, w_trace


# ---------------------------------------------------------------------------
# Closed-form minimum shadow and canonical families


def min_delta_shadow_size(n: int, k: int, m: int) -> int:
    """|delta B| for B the size-m initial segment of <= on {0,...,k}^n.

    Full components of the level with i zeros contribute C(n-1, i-1) each
    (nothing at i = 0); the single partial component contributes its
    Lemma-4 count ones_count_colex(n, i, q).
    """
    if not (0 <= m <= (k + 1) ** n):
        raise ValueError(f"size {m} not in [0, {(k + 1) ** n}]")
    total = 0
    remaining = m
    for i in range(n + 1):
        n_components = k ** (n - i)
        comp_size = comb(n, i)
        per_full = 0 if i == 0 else comb(n - 1, i - 1)
        full = min(n_components, remaining // comp_size)
        total += full * per_full
        remaining -= full * comp_size
        if remaining == 0:
            break
        if full < n_components:
            # Exactly one partial component, by construction of the <= order.
            total += ones_count_colex(n, i, remaining)
            remaining = 0
            break
    assert remaining == 0
    return total


def family_l_leq(n: int, k: int, r_del: int, s: int) -> Family:
    """All sequences with at most s coordinates of value <= r_del."""
    if not (0 <= s <= n):
        raise ValueError(f"level bound {s} not in [0, {n}]")
    if not (0 <= r_del <= k):
        raise ValueError(f"deletion radius {r_del} not in [0, {k}]")
    return Family.of(
        n, k,
        (x for x in itertools.product(range(k + 1), repeat=n) if low_count(x, r_del) <= s),
    )


def family_b_rt(n: int, k: int, r: int, t: int) -> Family:
    """All sequences with at most r zeros and all coordinates in {0,...,t}."""
    if not (0 <= r <= k and 0 <= t <= k):
        raise ValueError(f"need 0 <= r, t <= {k}, got r={r}, t={t}")
    return Family.of(
        n, k,
        (x for x in itertools.product(range(t + 1), repeat=n) if zero_count(x) <= r),
    )


def family_a_t(n: int, k: int, t: int) -> Family:
    """The cube {0,...,t-1}^n inside {0,...,k}^n."""
    if not (1 <= t <= k):
        raise ValueError(f"need 1 <= t <= {k}, got t={t}")
    return Family.of(n, k, itertools.product(range(t), repeat=n))


def canonical_family(kind: str, **params) -> Family:
    """Dispatch on kind: 'lleq' (level union), 'brt' (bounded zeros and values),
    'at' (sub-cube)."""
    builders = {"lleq": family_l_leq, "brt": family_b_rt, "at": family_a_t}
    if kind not in builders:
        raise ValueError(f"unknown family kind {kind!r}; expected one of {sorted(builders)}")
    return builders[kind](**params)


def level_size(n: int, k: int, r_del: int, i: int) -> int:
    """Size of the level {x : exactly i coordinates have value <= r_del}."""
    return comb(n, i) * (r_del + 1) ** i * (k - r_del) ** (n - i)


def l_leq_shadow_size(n: int, k: int, r_del: int, s: int) -> int:
    """Closed form for |delta_r L_{<=s}(n)|: the union of the image levels."""
    return sum(
        comb(n - 1, i - 1) * (r_del + 1) ** (i - 1) * (k - r_del) ** (n - i)
        for i in range(1, s + 1)
    )


def prop10_lower_bound(a: Family, r_del: int) -> Fraction:
    """The exact rational lower bound sum(s * |A_s|) / (n * (r_del + 1)) on
    |delta_r A|, where A_s collects members with exactly s low coordinates."""
    if a.n < 1:
        raise ValueError("bound needs n >= 1")
    weighted = sum(low_count(x, r_del) for x in a.members)
    return Fraction(weighted, a.n * (r_del + 1))
