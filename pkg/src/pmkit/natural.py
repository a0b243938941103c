"""The k-natural matroid of a k-polymatroid, kept implicit through counts.

Replacing each element e with k freely-placed clones yields a matroid on
k*|E| elements whose rank only depends on how many clones of each element a
subset contains. All consumers therefore work on count vectors in the integer
grid [0,k]^E:

* ``partition_map`` sends a set of clones to its count vector;
* ``multiset_rank`` evaluates the rank at a count vector by the closed form
  min over B of rho(B) + sum of counts outside B (2^|E| terms);
* ``multiset_rank_oracle`` recomputes it as the largest coordinate sum of an
  independence-polytope lattice point dominated by the counts, and is kept
  solely as a cross-check;
* ``MultisetRankGrid`` memoizes the (k+1)^|E| values for search workloads.

The expanded matroid is only ever materialized inside ``clone_check`` and the
test oracles, at k*|E| <= 16.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from . import polytope
from .core import RankTable
from .errors import OutOfGrid, TooLarge, UnknownElement

Counts = tuple[int, ...]
CloneElement = tuple[str, int]


def zero_counts(rho: RankTable) -> Counts:
    return (0,) * len(rho.labels)


def full_counts(rho: RankTable) -> Counts:
    return (rho.k,) * len(rho.labels)


def counts_of_subset(rho: RankTable, mask: int) -> Counts:
    """The {0,k} pattern of a ground subset: k on members, 0 elsewhere."""
    return tuple(rho.k if mask >> i & 1 else 0 for i in range(len(rho.labels)))


def _check_counts(rho: RankTable, counts: Sequence[int]) -> Counts:
    counts = tuple(counts)
    if len(counts) != len(rho.labels):
        raise OutOfGrid("count vector length does not match the ground set",
                        expected=len(rho.labels), got=len(counts))
    for value in counts:
        if not isinstance(value, int) or value < 0 or value > rho.k:
            raise OutOfGrid(f"counts must lie in [0, {rho.k}]", counts=list(counts))
    return counts


def partition_map(rho: RankTable, clones: Iterable[CloneElement]) -> Counts:
    """Count clones per ground element. Clones are (base label, index) pairs."""
    counts = [0] * len(rho.labels)
    seen = set()
    for base, index in clones:
        if base not in rho.labels:
            raise UnknownElement(f"clone base {base!r} is not a ground element",
                                 element=base)
        if not 1 <= index <= rho.k:
            raise OutOfGrid(f"clone index must lie in [1, {rho.k}]",
                            element=base, index=index)
        if (base, index) in seen:
            raise OutOfGrid("duplicate clone", element=base, index=index)
        seen.add((base, index))
        counts[rho.labels.index(base)] += 1
    return tuple(counts)


def multiset_rank(rho: RankTable, counts: Sequence[int]) -> int:
    """min over B of rho(B) + sum of counts outside B."""
    counts = _check_counts(rho, counts)
    n = len(rho.labels)
    best = None
    for mask in range(1 << n):
        value = rho.ranks[mask]
        for i in range(n):
            if not mask >> i & 1:
                value += counts[i]
        if best is None or value < best:
            best = value
    return best if best is not None else 0


def multiset_rank_oracle(rho: RankTable, counts: Sequence[int]) -> int:
    """Largest coordinate sum over independence lattice points dominated by counts.

    Brute force by construction; exists to cross-check multiset_rank.
    """
    counts = _check_counts(rho, counts)
    best = 0
    for point in polytope.lattice_points(rho):
        if all(b <= a for b, a in zip(point, counts)):
            best = max(best, sum(point))
    return best


def natural_rank(rho: RankTable, clones: Iterable[CloneElement]) -> int:
    """Rank in the clone expansion of an explicit set of clones."""
    return multiset_rank(rho, partition_map(rho, clones))


def minor_multiset_rank(grid: "MultisetRankGrid", contract: Sequence[int],
                        keep: Sequence[int]) -> int:
    """Rank of a count vector after contracting clones with the given counts:
    R(contract + keep) - R(contract)."""
    rho = grid.rho
    contract = _check_counts(rho, contract)
    total = tuple(c + y for c, y in zip(contract, keep))
    total = _check_counts(rho, total)
    return grid.value_at(total) - grid.value_at(contract)


class MultisetRankGrid:
    """Memoized multiset ranks on [0,k]^E.

    Entries are written once and never change, so concurrent readers are safe;
    every path computes the same pure function of rho. ``fill`` populates the
    whole grid eagerly, ``value_at`` fills per entry on demand.
    """

    __slots__ = ("rho", "_values", "_strides", "_terms")

    def __init__(self, rho: RankTable, eager: bool = False):
        self.rho = rho
        n = len(rho.labels)
        self._strides = tuple((rho.k + 1) ** i for i in range(n))
        self._values: list[int | None] = [None] * ((rho.k + 1) ** n)
        # (rank of B, indices outside B) pairs, one per subset
        self._terms = tuple(
            (rho.ranks[mask], tuple(i for i in range(n) if not mask >> i & 1))
            for mask in range(1 << n))
        if eager:
            self.fill()

    def _index(self, counts: Counts) -> int:
        return sum(a * s for a, s in zip(counts, self._strides))

    def value_at(self, counts: Sequence[int]) -> int:
        counts = _check_counts(self.rho, counts)
        idx = self._index(counts)
        value = self._values[idx]
        if value is None:
            value = min(base + sum(counts[i] for i in outside)
                        for base, outside in self._terms)
            self._values[idx] = value
        return value

    def fill(self) -> None:
        for counts in self.iter_counts():
            self.value_at(counts)

    def iter_counts(self) -> Iterator[Counts]:
        """Grid points in lexicographic order."""
        n = len(self.rho.labels)
        counts = [0] * n
        while True:
            yield tuple(counts)
            for i in range(n - 1, -1, -1):
                if counts[i] < self.rho.k:
                    counts[i] += 1
                    for j in range(i + 1, n):
                        counts[j] = 0
                    break
            else:
                return

    def rows(self) -> Iterator[tuple[Counts, int]]:
        for counts in self.iter_counts():
            yield counts, self.value_at(counts)


# -- explicit expansion (oracle scale only) ---------------------------------

EXPANSION_LIMIT = 16


def clone_labels(rho: RankTable) -> tuple[CloneElement, ...]:
    """Ground set of the expansion: k clones per element, in ground order."""
    return tuple((name, i) for name in rho.labels for i in range(1, rho.k + 1))


def expanded_ranks(rho: RankTable) -> list[int]:
    """Dense rank vector of the clone expansion, indexed by subset bitmask.

    Bit (j*k + i) is clone i+1 of ground element j. Computed from the
    defining formula min over A of rho(A) + |X - X_A|, directly on subsets.
    """
    n = len(rho.labels)
    k = rho.k
    total_bits = n * k
    if total_bits > EXPANSION_LIMIT:
        raise TooLarge(
            f"expansion has 2^{total_bits} subsets; limit is 2^{EXPANSION_LIMIT}",
            clones=total_bits)
    block = (1 << k) - 1
    blocks = [block << (j * k) for j in range(n)]
    terms = []
    for mask in range(1 << n):
        outside = 0
        for j in range(n):
            if not mask >> j & 1:
                outside |= blocks[j]
        terms.append((rho.ranks[mask], outside))
    out = []
    for subset in range(1 << total_bits):
        out.append(min(base + (subset & outside).bit_count()
                       for base, outside in terms))
    return out


def clone_check(rho: RankTable) -> bool:
    """Verify on the explicit expansion that rank depends only on counts and
    agrees with the grid, and that the expansion is a matroid rank function."""
    n = len(rho.labels)
    k = rho.k
    ranks = expanded_ranks(rho)
    total_bits = n * k
    grid = MultisetRankGrid(rho)
    by_counts: dict[Counts, int] = {}
    for subset in range(1 << total_bits):
        counts = tuple((subset >> (j * k) & ((1 << k) - 1)).bit_count()
                       for j in range(n))
        value = ranks[subset]
        if by_counts.setdefault(counts, value) != value:
            return False
        if value != grid.value_at(counts):
            return False
    # matroid axioms, local form: normalized, unit steps, submodular on pairs
    if ranks[0] != 0:
        return False
    for subset in range(1 << total_bits):
        for i in range(total_bits):
            if subset >> i & 1:
                step = ranks[subset] - ranks[subset ^ (1 << i)]
                if step not in (0, 1):
                    return False
    for subset in range(1 << total_bits):
        free = [i for i in range(total_bits) if not subset >> i & 1]
        for ai in range(len(free)):
            for bi in range(ai + 1, len(free)):
                a = subset | 1 << free[ai]
                b = subset | 1 << free[bi]
                if ranks[a] + ranks[b] < ranks[a | b] + ranks[subset]:
                    return False
    return True
