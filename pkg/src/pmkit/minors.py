"""Uniform-minor detection and excluded-minor catalogs.

A class is specified by (a, b, k): it contains the k-polymatroids whose clone
expansions have no minor isomorphic to the rank-a or rank-(b-a) uniform
matroid on b elements. Detection never materializes the expansion: because
each element's clones are interchangeable, a minor is determined up to
isomorphism by two count vectors (how many clones of each element are
contracted, and how many are kept), so the search space is the grid, not the
2^(k|E|) subsets.

A kept profile w with sum b0 yields the rank-a0 uniform matroid iff the minor
rank of w is a0 and every sub-profile y <= w with sum a0 also has minor rank
a0: smaller subsets are then free because they extend to an independent
a0-subset, and larger ones are pinched between a0 and the total.

Branches are pruned through nullity: minors never gain nullity, and a
rank-a0, size-b0 uniform target needs nullity at least b0 - a0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import config
from .core import (
    DEFAULT_LABELS,
    RankTable,
    canonical_form,
    canonical_key,
    doubleton,
    iter_rank_tables,
    singleton,
)
from .errors import (
    InvalidParams,
    KMismatch,
    NonIntegerResult,
    RegimeViolated,
)
from .natural import MultisetRankGrid

Counts = tuple[int, ...]


@dataclass(frozen=True)
class ClassSpec:
    """Parameters of a forbidden-uniform class: forbid U(a, b) and U(b-a, b)
    as minors of the k-clone expansion."""

    a: int
    b: int
    k: int

    def __post_init__(self):
        if not (self.b >= 2 * self.a >= 2):
            raise InvalidParams("class parameters need b >= 2a >= 2",
                                a=self.a, b=self.b)
        if self.k < 1:
            raise InvalidParams("k must be positive", k=self.k)

    @property
    def targets(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a, self.b), (self.b - self.a, self.b)

    @property
    def in_enumeration_regime(self) -> bool:
        return self.k >= 2 * (self.b - self.a)

    def require_regime(self) -> None:
        if not self.in_enumeration_regime:
            raise RegimeViolated(
                f"classification needs k >= 2(b-a) = {2 * (self.b - self.a)}",
                a=self.a, b=self.b, k=self.k)


@dataclass(frozen=True)
class MinorWitness:
    contract: Counts
    keep: Counts
    target: tuple[int, int]


@dataclass(frozen=True)
class ExcludedMinorRecord:
    polymatroid: RankTable
    canonical: tuple[int, ...]
    tags: tuple[str, ...]
    witness: MinorWitness | None = field(default=None, compare=False)

    @property
    def size(self) -> int:
        return len(self.polymatroid.labels)


def _compositions(total: int, limits: Sequence[int]) -> Iterator[Counts]:
    """Nonnegative integer vectors with the given sum, coordinate-bounded."""
    n = len(limits)

    def rec(i: int, remaining: int, prefix: list[int]) -> Iterator[Counts]:
        if i == n - 1:
            if remaining <= limits[i]:
                yield tuple(prefix + [remaining])
            return
        tail = sum(limits[i + 1:])
        lo = max(0, remaining - tail)
        hi = min(limits[i], remaining)
        for v in range(lo, hi + 1):
            yield from rec(i + 1, remaining - v, prefix + [v])

    if n == 0:
        if total == 0:
            yield ()
        return
    yield from rec(0, total, [])


def _detect(rho: RankTable, a0: int, b0: int, prune: bool = True,
            grid: MultisetRankGrid | None = None) -> MinorWitness | None:
    """Find a uniform U(a0, b0) minor of the clone expansion, or None."""
    if not 0 <= a0 <= b0:
        raise InvalidParams("need 0 <= a0 <= b0", a0=a0, b0=b0)
    n = len(rho.labels)
    k = rho.k
    if b0 > n * k:
        return None
    if grid is None:
        grid = MultisetRankGrid(rho)
    total_rank = grid.value_at((k,) * n) if n else 0
    total_size = n * k
    for contract in _compositions_upto(n, k):
        base = grid.value_at(contract)
        if prune:
            # contracted branch: nullity and rank can only shrink further
            branch_size = total_size - sum(contract)
            branch_rank = total_rank - base
            if branch_size - branch_rank < b0 - a0 or branch_rank < a0:
                continue
        limits = [k - c for c in contract]
        for keep in _compositions(b0, limits):
            merged = tuple(c + w for c, w in zip(contract, keep))
            if grid.value_at(merged) - base != a0:
                continue
            if all(grid.value_at(tuple(c + y for c, y in zip(contract, sub))) - base == a0
                   for sub in _compositions(a0, keep)):
                return MinorWitness(contract=contract, keep=keep, target=(a0, b0))
    return None


def _compositions_upto(n: int, k: int) -> Iterator[Counts]:
    """All count vectors in [0, k]^n, ascending by total then lex."""
    if n == 0:
        yield ()
        return
    all_counts = sorted(itertools.product(range(k + 1), repeat=n),
                        key=lambda c: (sum(c), c))
    yield from all_counts


def has_uniform_minor(rho: RankTable, a0: int, b0: int,
                      prune: bool = True) -> tuple[bool, MinorWitness | None]:
    witness = _detect(rho, a0, b0, prune=prune)
    return witness is not None, witness


def nullity_prune(rho: RankTable, contract: Sequence[int], spec: ClassSpec) -> bool:
    """Whether the branch contracting these clone counts can still reach either
    forbidden minor. False means safe to prune: both targets need nullity at
    least a, and nullity never grows under further minors."""
    grid = MultisetRankGrid(rho)
    n = len(rho.labels)
    contract = tuple(contract)
    branch_size = n * rho.k - sum(contract)
    branch_rank = grid.value_at((rho.k,) * n) - grid.value_at(contract) if n else 0
    return branch_size - branch_rank >= spec.a


_CLASS_CACHE: dict[tuple, tuple[bool, MinorWitness | None]] = {}


def in_class(rho: RankTable, spec: ClassSpec, prune: bool = True) -> bool:
    member, _ = class_membership(rho, spec, prune=prune)
    return member


def class_membership(rho: RankTable, spec: ClassSpec,
                     prune: bool = True) -> tuple[bool, MinorWitness | None]:
    """Membership plus, when outside, a witness minor."""
    if rho.k != spec.k:
        raise KMismatch("table k does not match the class k",
                        table=rho.k, cls=spec.k)
    key = (spec.a, spec.b, spec.k, canonical_key(rho), prune)
    hit = _CLASS_CACHE.get(key)
    if hit is not None:
        return hit
    grid = MultisetRankGrid(rho)
    witness = None
    for a0, b0 in spec.targets:
        witness = _detect(rho, a0, b0, prune=prune, grid=grid)
        if witness is not None:
            break
    result = (witness is None, witness)
    _CLASS_CACHE[key] = result
    return result


def is_excluded_minor(rho: RankTable, spec: ClassSpec) -> bool:
    """Outside the class while every single-element deletion and contraction is
    inside. Single-element checks suffice because the class is minor-closed."""
    if rho.k != spec.k:
        raise KMismatch("table k does not match the class k",
                        table=rho.k, cls=spec.k)
    if in_class(rho, spec):
        return False
    for name in rho.labels:
        if not in_class(rho.delete([name]), spec):
            return False
        if not in_class(rho.contract([name]), spec):
            return False
    return True


# -- classification-driven enumeration --------------------------------------

def singleton_tag(rank: int) -> str:
    return f"Ex^{rank}"


def doubleton_tag(rank_e: int, rank_f: int, total: int) -> str:
    return f"Ex_({rank_e},{rank_f})^{total}"


def _record(rho: RankTable, tags: tuple[str, ...],
            witness: MinorWitness | None) -> ExcludedMinorRecord:
    return ExcludedMinorRecord(polymatroid=rho, canonical=canonical_form(rho),
                               tags=tags, witness=witness)


def enumerate_singleton_excluded(spec: ClassSpec) -> list[ExcludedMinorRecord]:
    """All one-element excluded minors: ranks a..k-a, re-verified by direct
    detection rather than trusted."""
    spec.require_regime()
    records = []
    for m in range(spec.a, spec.k - spec.a + 1):
        rho = singleton(m, spec.k)
        if not is_excluded_minor(rho, spec):
            raise AssertionError(
                f"classification mismatch: singleton rank {m} failed re-verification")
        _, witness = class_membership(rho, spec)
        records.append(_record(rho, ("singleton", singleton_tag(m)), witness))
    if len(records) != spec.k - 2 * spec.a + 1:
        raise AssertionError("singleton count mismatch")
    return records


def doubleton_table_row(spec: ClassSpec, rank_e: int, rank_f: int, total: int) -> int:
    """Which row of the two-element classification the triple falls in (1-7).

    Requires rank_e <= rank_f and a valid polymatroid triple. Rows partition
    the valid triples: 1/2/4 are in-class, 3/5 are excluded minors, 6/7 have
    an excluded singleton restriction so they are neither.
    """
    a, k = spec.a, spec.k
    if rank_e > rank_f:
        raise InvalidParams("need rank_e <= rank_f", rank_e=rank_e, rank_f=rank_f)
    if not (rank_f <= total <= rank_e + rank_f) or rank_f > k:
        raise InvalidParams("triple is not a valid two-element polymatroid",
                            rank_e=rank_e, rank_f=rank_f, total=total)

    def mid(r: int) -> bool:
        return a <= r <= k - a

    if mid(rank_f):
        return 6
    if mid(rank_e):
        return 7
    low_e = rank_e <= a - 1
    low_f = rank_f <= a - 1
    if low_e and low_f:
        return 1
    if low_e:  # rank_f is high
        if rank_e >= 1 and total <= rank_e + (k - a):
            return 3
        return 2
    # both high
    if total <= rank_f + (k - a):
        return 5
    return 4


def doubleton_row_triples(spec: ClassSpec, rows: tuple[int, ...]) -> list[tuple[int, int, int]]:
    """All valid doubleton triples (rank_e <= rank_f, total) falling in the
    given classification rows."""
    k = spec.k
    out = []
    for rank_e in range(k + 1):
        for rank_f in range(rank_e, k + 1):
            for total in range(rank_f, rank_e + rank_f + 1):
                if doubleton_table_row(spec, rank_e, rank_f, total) in rows:
                    out.append((rank_e, rank_f, total))
    return out


def enumerate_doubleton_excluded(spec: ClassSpec) -> list[ExcludedMinorRecord]:
    """All two-element excluded minors, re-derived by direct detection.

    Every valid triple (rank_e <= rank_f, total) is swept and kept iff it
    passes is_excluded_minor; no classification table is trusted. The
    survivors are exactly the triples with both singleton ranks in the high
    band [k-a+1, k] and total <= rank_e + a - 1 (so that both contractions
    land in the low band), a(a+1)(2a+1)/6 of them.
    """
    spec.require_regime()
    k = spec.k
    records = []
    for rank_e in range(k + 1):
        for rank_f in range(rank_e, k + 1):
            for total in range(rank_f, rank_e + rank_f + 1):
                rho = doubleton(rank_e, rank_f, total, k)
                if not is_excluded_minor(rho, spec):
                    continue
                _, witness = class_membership(rho, spec)
                records.append(_record(
                    rho, ("doubleton", doubleton_tag(rank_e, rank_f, total)),
                    witness))
    return sorted(records, key=lambda r: (r.size, r.canonical))


def count_formula(a: int, k: int) -> int:
    """Closed-form number of two-element excluded minors."""
    numerator = a * (-2 * a * a + 3 * a * k + 3 * k + 2)
    if numerator % 6:
        raise NonIntegerResult("count formula is not an integer here", a=a, k=k)
    return numerator // 6


# -- exhaustive search -------------------------------------------------------

def _search_one_size(spec: ClassSpec, n: int, budget: int,
                     counter: list[int]) -> dict[tuple, ExcludedMinorRecord]:
    found: dict[tuple, ExcludedMinorRecord] = {}
    labels = DEFAULT_LABELS[:n]
    for rho in iter_rank_tables(labels, spec.k, budget=budget, counter=counter):
        if not all(in_class(rho.delete([name]), spec)
                   and in_class(rho.contract([name]), spec)
                   for name in rho.labels):
            continue
        member, witness = class_membership(rho, spec)
        if member:
            continue
        key = canonical_key(rho)
        if key not in found:
            found[key] = _record(rho, _search_tags(rho), witness)
    return found


def _search_task(args) -> list[ExcludedMinorRecord]:
    a, b, k, n, budget = args
    return list(_search_one_size(ClassSpec(a, b, k), n, budget, [0]).values())


def search_excluded(spec: ClassSpec, max_elements: int | None = None,
                    budget: int | None = None,
                    jobs: int = 1) -> list[ExcludedMinorRecord]:
    """Enumerate every k-polymatroid on up to max_elements elements and keep
    the excluded minors, deduplicated up to isomorphism.

    Candidate tables are generated with monotonicity/submodularity propagated
    as branch bounds. Each surviving table is first screened through its
    single-element minors (cached by canonical form) before the expensive
    membership test runs on the table itself.

    With jobs > 1, ground-set sizes run in separate worker processes (the
    budget then applies per worker task); results are merged and sorted, so
    the output is identical to the serial run.
    """
    if max_elements is None:
        max_elements = 3
    if max_elements > config.max_elements():
        raise InvalidParams(
            f"max_elements exceeds the configured limit {config.max_elements()}",
            max_elements=max_elements)
    if budget is None:
        budget = config.search_budget()
    found: dict[tuple, ExcludedMinorRecord] = {}
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        tasks = [(spec.a, spec.b, spec.k, n, budget)
                 for n in range(0, max_elements + 1)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(_search_task, tasks):
                for record in chunk:
                    found.setdefault(canonical_key(record.polymatroid), record)
    else:
        counter = [0]
        for n in range(0, max_elements + 1):
            found.update(_search_one_size(spec, n, budget, counter))
    return sorted(found.values(), key=lambda r: (r.size, r.canonical))


def _search_tags(rho: RankTable) -> tuple[str, ...]:
    if len(rho.labels) == 1:
        return ("singleton", singleton_tag(rho.ranks[1]))
    if len(rho.labels) == 2:
        re_, rf = sorted((rho.ranks[1], rho.ranks[2]))
        return ("doubleton", doubleton_tag(re_, rf, rho.ranks[3]))
    return ("other",)


# -- catalog-level checks ----------------------------------------------------

def dual_closure_check(records: Sequence[ExcludedMinorRecord],
                       spec: ClassSpec) -> bool:
    """Every record's k-dual is an excluded minor and appears in the record
    set up to isomorphism."""
    canon = {record.canonical for record in records}
    for record in records:
        dual = record.polymatroid.dual()
        if not is_excluded_minor(dual, spec):
            return False
        if canonical_form(dual) not in canon:
            return False
    return True


def gamma_size_check(records: Sequence[ExcludedMinorRecord],
                     spec: ClassSpec) -> bool:
    """Records all of whose internal compressions stay in the class live on at
    most b elements."""
    from .compression import is_in_gamma

    for record in records:
        if is_in_gamma(record.polymatroid, spec) and record.size > spec.b:
            return False
    return True
