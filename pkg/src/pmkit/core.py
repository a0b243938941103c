"""Integer polymatroids as dense rank tables on small labeled ground sets.

A k-polymatroid is a function rho on subsets of a finite ground set E with
rho(empty) = 0, rho monotone and submodular, and rho({e}) <= k for every
element. Tables are stored dense: subsets are bitmasks where bit i is the
i-th ground label, so lookups are O(1) and |E| <= 6 keeps everything tiny.

RankTable values are immutable after construction and safe to share across
threads. The declared bound k is stored explicitly: duality and the clone
expansion depend on it, and it may exceed every singleton rank.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import config
from .errors import (
    DuplicateLabel,
    ExceedsK,
    GroundMismatch,
    InvalidParams,
    LabelCollision,
    MalformedInput,
    MixedK,
    NotMonotone,
    NotNormalized,
    NotSubmodular,
    SearchBudgetExceeded,
    TooLarge,
    TooManyElements,
    UnknownElement,
)

Labels = tuple[str, ...]


def subset_name(labels: Sequence[str], mask: int) -> str:
    """Comma-joined member labels in ground order; empty string for the empty set."""
    return ",".join(labels[i] for i in range(len(labels)) if mask >> i & 1)


def mask_of(labels: Sequence[str], names: Iterable[str]) -> int:
    mask = 0
    for name in names:
        try:
            mask |= 1 << labels.index(name)
        except ValueError:
            raise UnknownElement(f"element {name!r} is not in the ground set",
                                 element=name, ground=list(labels)) from None
    return mask


def _check_ground(labels: Labels) -> None:
    if len(set(labels)) != len(labels):
        raise DuplicateLabel("ground labels must be distinct", ground=list(labels))
    if len(labels) > config.max_elements():
        raise TooManyElements(
            f"ground set has {len(labels)} elements; limit is {config.max_elements()} "
            "(override with PMKIT_MAX_ELEMENTS)",
            size=len(labels))
    for name in labels:
        if not isinstance(name, str) or name == "" or "," in name:
            raise MalformedInput("labels must be nonempty strings without commas",
                                 label=name)


def _check_axioms(labels: Labels, k: int, ranks: Sequence[int]) -> None:
    """Raise the first violated axiom, with witness subsets.

    Monotonicity is checked on covers and submodularity on pairs
    (A+{e}, A+{f}); both local forms are equivalent to the full
    quantifier versions.
    """
    n = len(labels)
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise MalformedInput("k must be a nonnegative integer", k=k)
    if len(ranks) != 1 << n:
        raise MalformedInput(
            f"expected {1 << n} rank entries, got {len(ranks)}", entries=len(ranks))
    for mask, value in enumerate(ranks):
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise MalformedInput("ranks must be nonnegative integers",
                                 subset=subset_name(labels, mask), value=value)
    if ranks[0] != 0:
        raise NotNormalized("rank of the empty set must be 0", value=ranks[0])
    for mask in range(1, 1 << n):
        for i in range(n):
            if mask >> i & 1 and ranks[mask ^ (1 << i)] > ranks[mask]:
                raise NotMonotone(
                    "rank decreases from "
                    f"{{{subset_name(labels, mask ^ (1 << i))}}} to {{{subset_name(labels, mask)}}}",
                    a=subset_name(labels, mask ^ (1 << i)), b=subset_name(labels, mask))
    for mask in range(1 << n):
        free = [i for i in range(n) if not mask >> i & 1]
        for i, j in itertools.combinations(free, 2):
            a, b = mask | 1 << i, mask | 1 << j
            if ranks[a] + ranks[b] < ranks[a | b] + ranks[mask]:
                raise NotSubmodular(
                    f"rank({{{subset_name(labels, a)}}}) + rank({{{subset_name(labels, b)}}}) "
                    f"< rank(union) + rank(intersection)",
                    a=subset_name(labels, a), b=subset_name(labels, b))
    for i in range(n):
        if ranks[1 << i] > k:
            raise ExceedsK(f"rank of {{{labels[i]}}} exceeds k={k}",
                           element=labels[i], value=ranks[1 << i])


class RankTable:
    """A validated k-polymatroid. Construction always checks the axioms."""

    __slots__ = ("labels", "k", "ranks")

    def __init__(self, labels: Iterable[str], k: int, ranks: Iterable[int]):
        labels = tuple(labels)
        ranks = tuple(ranks)
        _check_ground(labels)
        _check_axioms(labels, k, ranks)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "ranks", ranks)

    @classmethod
    def _trusted(cls, labels: Labels, k: int, ranks: tuple[int, ...]) -> "RankTable":
        """Skip axiom checks; callers guarantee validity by construction."""
        table = object.__new__(cls)
        object.__setattr__(table, "labels", labels)
        object.__setattr__(table, "k", k)
        object.__setattr__(table, "ranks", ranks)
        return table

    def __setattr__(self, name, value):
        raise AttributeError("RankTable is immutable")

    def __reduce__(self):
        return (RankTable, (self.labels, self.k, self.ranks))

    # -- basics ---------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def rank(self, mask: int) -> int:
        return self.ranks[mask]

    def rank_of(self, names: Iterable[str]) -> int:
        return self.ranks[mask_of(self.labels, names)]

    @property
    def total_rank(self) -> int:
        return self.ranks[self.full_mask]

    def singleton_ranks(self) -> tuple[int, ...]:
        return tuple(self.ranks[1 << i] for i in range(len(self.labels)))

    def nullity(self) -> int:
        """|E| - rho(E); may be negative for non-matroid polymatroids."""
        return len(self.labels) - self.total_rank

    def __eq__(self, other) -> bool:
        return (isinstance(other, RankTable)
                and self.labels == other.labels
                and self.k == other.k
                and self.ranks == other.ranks)

    def __hash__(self) -> int:
        return hash((self.labels, self.k, self.ranks))

    def __repr__(self) -> str:
        body = ", ".join(f"{subset_name(self.labels, m) or 'empty'}:{r}"
                         for m, r in enumerate(self.ranks))
        return f"RankTable(k={self.k}, {body})"

    # -- minors ---------------------------------------------------------

    def delete(self, names: Iterable[str]) -> "RankTable":
        """Restrict to the complement: ranks are copied on remaining subsets."""
        gone = mask_of(self.labels, names)
        keep = [i for i in range(len(self.labels)) if not gone >> i & 1]
        labels = tuple(self.labels[i] for i in keep)
        ranks = tuple(self.ranks[_spread(mask, keep)] for mask in range(1 << len(keep)))
        return RankTable._trusted(labels, self.k, ranks)

    def contract(self, names: Iterable[str]) -> "RankTable":
        """rho'(Y) = rho(X + Y) - rho(X) on the complement of X."""
        gone = mask_of(self.labels, names)
        base = self.ranks[gone]
        keep = [i for i in range(len(self.labels)) if not gone >> i & 1]
        labels = tuple(self.labels[i] for i in keep)
        ranks = tuple(self.ranks[_spread(mask, keep) | gone] - base
                      for mask in range(1 << len(keep)))
        return RankTable._trusted(labels, self.k, ranks)

    def restrict(self, names: Iterable[str]) -> "RankTable":
        keep = mask_of(self.labels, names)
        return self.delete(name for i, name in enumerate(self.labels)
                           if not keep >> i & 1)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "RankTable") -> "RankTable":
        if not isinstance(other, RankTable):
            return NotImplemented
        if self.labels != other.labels:
            raise GroundMismatch("pointwise sum needs identical ground sets",
                                 left=list(self.labels), right=list(other.labels))
        ranks = tuple(a + b for a, b in zip(self.ranks, other.ranks))
        return RankTable._trusted(self.labels, self.k + other.k, ranks)

    def __mul__(self, scalar: int) -> "RankTable":
        if not isinstance(scalar, int) or isinstance(scalar, bool):
            return NotImplemented
        if scalar < 0:
            raise InvalidParams("scalar multiple must be nonnegative", scalar=scalar)
        ranks = tuple(scalar * r for r in self.ranks)
        return RankTable._trusted(self.labels, scalar * self.k, ranks)

    __rmul__ = __mul__

    # -- duality, simplification -----------------------------------------

    def dual(self) -> "RankTable":
        """k-dual: rho*(X) = k|X| + rho(E-X) - rho(E). An involution."""
        full = self.full_mask
        total = self.total_rank
        ranks = tuple(self.k * _popcount(mask) + self.ranks[full ^ mask] - total
                      for mask in range(1 << len(self.labels)))
        return RankTable(self.labels, self.k, ranks)

    def loops(self) -> tuple[str, ...]:
        return tuple(name for i, name in enumerate(self.labels)
                     if self.ranks[1 << i] == 0)

    def parallel_classes(self) -> list[tuple[str, ...]]:
        """Maximal classes of rank-1 points, two points parallel iff their pair
        has rank 1. Pairwise parallelism is transitive by submodularity."""
        points = [i for i in range(len(self.labels)) if self.ranks[1 << i] == 1]
        classes: list[list[int]] = []
        for i in points:
            for cls in classes:
                if self.ranks[(1 << cls[0]) | (1 << i)] == 1:
                    cls.append(i)
                    break
            else:
                classes.append([i])
        return [tuple(self.labels[i] for i in cls) for cls in classes]

    def simplify(self) -> "RankTable":
        """Drop loops; keep the label-least representative of each parallel class."""
        drop: list[str] = list(self.loops())
        for cls in self.parallel_classes():
            keepers = sorted(cls)
            drop.extend(keepers[1:])
        return self.delete(drop)


def _popcount(mask: int) -> int:
    return mask.bit_count()


def _spread(mask: int, positions: Sequence[int]) -> int:
    """Map a compact bitmask onto the given original bit positions."""
    out = 0
    for j, pos in enumerate(positions):
        if mask >> j & 1:
            out |= 1 << pos
    return out


# -- construction ---------------------------------------------------------

def validate(ground: Iterable[str], k: int, ranks) -> RankTable:
    """Build a RankTable from raw data, rejecting with the first violated axiom.

    ``ranks`` may be a dense sequence indexed by bitmask or a mapping from
    comma-joined subset names (ground order) to integers with every subset
    present.
    """
    labels = tuple(ground)
    _check_ground(labels)
    if isinstance(k, int) and not isinstance(k, bool) and k > config.max_k():
        raise TooLarge(
            f"k={k} exceeds the configured limit {config.max_k()} "
            "(override with PMKIT_MAX_K)", k=k)
    if isinstance(ranks, dict):
        n = len(labels)
        expected = [subset_name(labels, mask) for mask in range(1 << n)]
        missing = [key for key in expected if key not in ranks]
        if missing:
            raise MalformedInput(f"missing subset keys: {missing[:4]}",
                                 missing=missing)
        extra = sorted(set(ranks) - set(expected))
        if extra:
            raise MalformedInput(f"unknown subset keys: {extra[:4]}", extra=extra)
        dense = tuple(ranks[key] for key in expected)
    else:
        dense = tuple(ranks)
    return RankTable(labels, k, dense)


DEFAULT_LABELS = ("e", "f", "g", "h", "i", "j")


def uniform(a: int, b: int, labels: Sequence[str] | None = None) -> RankTable:
    """The uniform matroid of rank a on b elements, rank(A) = min(|A|, a), k=1."""
    if not (0 <= a <= b) or b < 1:
        raise InvalidParams("uniform(a, b) needs 0 <= a <= b and b >= 1", a=a, b=b)
    if labels is None:
        if b <= len(DEFAULT_LABELS):
            labels = DEFAULT_LABELS[:b]
        else:
            labels = tuple(f"e{i}" for i in range(1, b + 1))
    labels = tuple(labels)
    if len(labels) != b:
        raise InvalidParams("label count must equal b", b=b, labels=list(labels))
    ranks = tuple(min(_popcount(mask), a) for mask in range(1 << b))
    return RankTable(labels, 1, ranks)


def singleton(rank: int, k: int, label: str = "e") -> RankTable:
    """One-element k-polymatroid of the given rank."""
    return RankTable((label,), k, (0, rank))


def doubleton(rank_e: int, rank_f: int, total: int, k: int,
              labels: Sequence[str] = ("e", "f")) -> RankTable:
    """Two-element k-polymatroid with the given singleton ranks and total."""
    return RankTable(tuple(labels), k, (0, rank_e, rank_f, total))


def direct_sum(left: RankTable, right: RankTable) -> RankTable:
    """Disjoint union of ground sets; rank is the sum of the restrictions."""
    if set(left.labels) & set(right.labels):
        raise LabelCollision("ground sets overlap",
                             shared=sorted(set(left.labels) & set(right.labels)))
    if left.k != right.k:
        raise MixedK("direct sum needs equal k", left=left.k, right=right.k)
    labels = left.labels + right.labels
    n_left = len(left.labels)
    low = (1 << n_left) - 1
    ranks = tuple(left.ranks[mask & low] + right.ranks[mask >> n_left]
                  for mask in range(1 << len(labels)))
    return RankTable._trusted(labels, left.k, ranks)


def add(left: RankTable, right: RankTable) -> RankTable:
    return left + right


def scalar_multiply(scalar: int, rho: RankTable) -> RankTable:
    return scalar * rho


def delete(rho: RankTable, names: Iterable[str]) -> RankTable:
    return rho.delete(names)


def contract(rho: RankTable, names: Iterable[str]) -> RankTable:
    return rho.contract(names)


def k_dual(rho: RankTable) -> RankTable:
    return rho.dual()


def nullity(rho: RankTable) -> int:
    return rho.nullity()


def simplify(rho: RankTable) -> RankTable:
    return rho.simplify()


# -- isomorphism -----------------------------------------------------------

def _permuted_ranks(ranks: Sequence[int], perm: Sequence[int]) -> tuple[int, ...]:
    """Rank vector after sending old position j to new position perm[j]."""
    n = len(perm)
    pre = [0] * (1 << n)
    for mask in range(1 << n):
        src = 0
        for j in range(n):
            if mask >> perm[j] & 1:
                src |= 1 << j
        pre[mask] = ranks[src]
    return tuple(pre)


def canonical_form(rho: RankTable) -> tuple[int, ...]:
    """Lexicographically least rank vector over all relabelings."""
    best = None
    for perm in itertools.permutations(range(len(rho.labels))):
        cand = _permuted_ranks(rho.ranks, perm)
        if best is None or cand < best:
            best = cand
    return best if best is not None else (0,)


def canonical_key(rho: RankTable) -> tuple:
    return (len(rho.labels), rho.k, canonical_form(rho))


def is_isomorphic(left: RankTable, right: RankTable) -> tuple[bool, dict[str, str] | None]:
    """Whether some relabeling carries left's ranks onto right's.

    Returns the witness as a mapping from left labels to right labels.
    """
    if len(left.labels) != len(right.labels) or left.k != right.k:
        return False, None
    for perm in itertools.permutations(range(len(left.labels))):
        if _permuted_ranks(left.ranks, perm) == right.ranks:
            mapping = {left.labels[j]: right.labels[perm[j]]
                       for j in range(len(left.labels))}
            return True, mapping
    return False, None


# -- generation ------------------------------------------------------------

def _subset_order(n: int) -> list[int]:
    return sorted(range(1, 1 << n), key=lambda m: (_popcount(m), m))


def _bounds(mask: int, n: int, k: int, ranks: list[int]) -> tuple[int, int]:
    """Feasible range for ranks[mask] given all smaller subsets are set."""
    members = [i for i in range(n) if mask >> i & 1]
    if len(members) == 1:
        return 0, k
    lo = max(ranks[mask ^ (1 << i)] for i in members)
    hi = min(ranks[mask ^ (1 << i)] + ranks[mask ^ (1 << j)]
             - ranks[mask ^ (1 << i) ^ (1 << j)]
             for i, j in itertools.combinations(members, 2))
    return lo, hi


def iter_rank_tables(labels: Sequence[str], k: int, *,
                     budget: int | None = None,
                     counter: list[int] | None = None) -> Iterator[RankTable]:
    """Yield every k-polymatroid on the given labels, depth-first in rank-vector
    lex order. Monotonicity and submodularity are propagated as bounds during
    generation, so no post-filtering happens.

    ``counter`` (a one-element list) accumulates nodes; exceeding ``budget``
    raises SearchBudgetExceeded.
    """
    labels = tuple(labels)
    _check_ground(labels)
    n = len(labels)
    order = _subset_order(n)
    ranks = [0] * (1 << n)
    if counter is None:
        counter = [0]

    def walk(depth: int) -> Iterator[RankTable]:
        if depth == len(order):
            counter[0] += 1
            if budget is not None and counter[0] > budget:
                raise SearchBudgetExceeded("table generation exceeded node budget",
                                           nodes=counter[0])
            yield RankTable._trusted(labels, k, tuple(ranks))
            return
        mask = order[depth]
        lo, hi = _bounds(mask, n, k, ranks)
        for value in range(lo, hi + 1):
            counter[0] += 1
            if budget is not None and counter[0] > budget:
                raise SearchBudgetExceeded("table generation exceeded node budget",
                                           nodes=counter[0])
            ranks[mask] = value
            yield from walk(depth + 1)
        ranks[mask] = 0

    return walk(0)


def random_rank_table(labels: Sequence[str], k: int,
                      rng: random.Random) -> RankTable:
    """A random valid table via random descent with restarts on dead branches."""
    labels = tuple(labels)
    n = len(labels)
    order = _subset_order(n)
    while True:
        ranks = [0] * (1 << n)
        ok = True
        for mask in order:
            lo, hi = _bounds(mask, n, k, ranks)
            if lo > hi:
                ok = False
                break
            ranks[mask] = rng.randint(lo, hi)
        if ok:
            return RankTable._trusted(labels, k, tuple(ranks))


# -- maximally-separated matroids -------------------------------------------

@dataclass(frozen=True)
class MaxSepMatroid:
    """A direct sum of loops and coloops; rank counts the coloops present."""

    labels: Labels
    coloops: frozenset[str]

    def __post_init__(self):
        unknown = self.coloops - set(self.labels)
        if unknown:
            raise UnknownElement("coloops outside the ground set",
                                 elements=sorted(unknown))

    @property
    def coloop_mask(self) -> int:
        return mask_of(self.labels, sorted(self.coloops))

    def rank(self, mask: int) -> int:
        return _popcount(mask & self.coloop_mask)

    def rank_of(self, names: Iterable[str]) -> int:
        return self.rank(mask_of(self.labels, names))

    def to_rank_table(self) -> RankTable:
        cmask = self.coloop_mask
        ranks = tuple(_popcount(mask & cmask)
                      for mask in range(1 << len(self.labels)))
        return RankTable._trusted(self.labels, 1, ranks)
