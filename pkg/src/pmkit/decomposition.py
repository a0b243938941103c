"""Corner decompositions: rho = tau + (k-n) * r.

Writing a k-polymatroid as an n-polymatroid tau plus (k-n) copies of a
maximally-separated matroid r confines the base polytope to a corner box of
the k-cube. For k >= 2n+1 the decomposition is unique when it exists, and r
is forced: an element is a coloop of r exactly when its rank exceeds n.
Outside that regime only existence is meaningful, so the exhaustive variant
tries every coloop set.

The essential bound of rho is the least n admitting a decomposition (n = k
always works, with r all loops). Polymatroids glue: a decomposition of rho
can be assembled from decompositions of the deletion, contraction, and
restriction at one element, which is what ``decompose_via_minors`` does
recursively. For essentially m-bounded tables, every compression at a level
in [m, k-m] collapses to the plain deletion or contraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from . import polytope
from .compression import compress
from .core import MaxSepMatroid, RankTable, doubleton
from .errors import (
    CollapseFailed,
    HypothesisViolated,
    InvalidParams,
    LevelMismatch,
    MinorNotDecomposable,
    NotDecomposable,
    NotInTable,
    PmkitError,
    ReconstructionFailure,
    RegimeViolated,
    UniquenessRegimeViolated,
    UnknownElement,
)


@dataclass(frozen=True)
class CornerDecomposition:
    level: int                 # the n in rho = tau + (k-n) r
    tau: RankTable             # an n-polymatroid (declared k = n)
    sep: MaxSepMatroid

    def reconstruct(self, k: int) -> RankTable:
        return self.tau + (k - self.level) * self.sep.to_rank_table()

    def coloop_names(self) -> tuple[str, ...]:
        return tuple(name for name in self.tau.labels if name in self.sep.coloops)


def _build(rho: RankTable, n: int, coloop_mask: int) -> CornerDecomposition | None:
    """Try tau = rho - (k-n) * r for the given coloop set; None if invalid."""
    weight = rho.k - n
    tau_ranks = []
    for mask in range(1 << len(rho.labels)):
        value = rho.ranks[mask] - weight * (mask & coloop_mask).bit_count()
        if value < 0:
            return None
        tau_ranks.append(value)
    try:
        tau = RankTable(rho.labels, n, tuple(tau_ranks))
    except PmkitError:
        return None
    coloops = frozenset(rho.labels[i] for i in range(len(rho.labels))
                        if coloop_mask >> i & 1)
    return CornerDecomposition(n, tau, MaxSepMatroid(rho.labels, coloops))


def corner_decompose(rho: RankTable, n: int) -> CornerDecomposition:
    """The unique n-corner decomposition in the regime k >= 2n+1.

    The coloop set is forced (rank > n), so this either returns the
    decomposition or rejects with the axiom tau violates.
    """
    if n < 0:
        raise InvalidParams("n must be nonnegative", n=n)
    if 2 * n + 1 > rho.k:
        raise UniquenessRegimeViolated(
            f"uniqueness needs 2n+1 <= k; got n={n}, k={rho.k} "
            "(use corner_decompose_exhaustive)", n=n, k=rho.k)
    coloop_mask = 0
    for i in range(len(rho.labels)):
        if rho.ranks[1 << i] > n:
            coloop_mask |= 1 << i
    built = _build(rho, n, coloop_mask)
    if built is None:
        weight = rho.k - n
        witness = next(
            (mask for mask in range(1 << len(rho.labels))
             if rho.ranks[mask] - weight * (mask & coloop_mask).bit_count() < 0),
            None)
        raise NotDecomposable(
            f"no {n}-corner decomposition: residual table is not an "
            f"{n}-polymatroid", n=n,
            negative_subset=None if witness is None else
            ",".join(rho.labels[i] for i in range(len(rho.labels))
                     if witness >> i & 1))
    return built


def corner_decompose_exhaustive(rho: RankTable, n: int) -> list[CornerDecomposition]:
    """Every n-corner decomposition, trying each coloop subset. Nonempty for
    n = k (r = all loops). Ordered by coloop bitmask."""
    if not 0 <= n <= rho.k:
        raise InvalidParams("n must lie in [0, k]", n=n, k=rho.k)
    out = []
    for coloop_mask in range(1 << len(rho.labels)):
        built = _build(rho, n, coloop_mask)
        if built is not None:
            out.append(built)
    return out


@lru_cache(maxsize=1 << 16)
def essential_bound(rho: RankTable) -> tuple[int, CornerDecomposition]:
    """Least n admitting an n-corner decomposition, with that decomposition.

    Uses the forced-coloop rule inside the uniqueness regime and the
    exhaustive scan beyond it, keeping the least coloop bitmask on ties.
    Pure in rho, so results are memoized.
    """
    for n in range(0, rho.k + 1):
        if 2 * n + 1 <= rho.k:
            try:
                return n, corner_decompose(rho, n)
            except NotDecomposable:
                continue
        found = corner_decompose_exhaustive(rho, n)
        if found:
            return n, found[0]
    raise AssertionError("n = k always decomposes")  # pragma: no cover


def glue_decomposition(rho: RankTable, element: str,
                       deletion: CornerDecomposition,
                       contraction: CornerDecomposition,
                       restriction: CornerDecomposition) -> CornerDecomposition:
    """Assemble a decomposition of rho from decompositions of its deletion,
    contraction, and restriction at one element.

    Both glued pieces are built by cases: below the element copy the deletion,
    above it add the restriction value to the contraction. The glued r must
    come out maximally separated and tau an m-polymatroid; reconstruction is
    asserted against rho.
    """
    if element not in rho.labels:
        raise UnknownElement(f"element {element!r} is not in the ground set",
                             element=element)
    m = deletion.level
    if not (contraction.level == m and restriction.level == m):
        raise LevelMismatch("all three inputs must decompose at one level",
                            levels=(deletion.level, contraction.level,
                                    restriction.level))
    if rho.k < 3 * m + 1:
        raise RegimeViolated(f"gluing needs k >= 3m+1; got m={m}, k={rho.k}",
                             m=m, k=rho.k)
    n = len(rho.labels)
    pos = rho.labels.index(element)
    rest = [i for i in range(n) if i != pos]

    def glue(func_del, func_cont, res_value: int) -> list[int]:
        values = [0] * (1 << n)
        for mask in range(1 << n):
            small = 0
            for j, i in enumerate(rest):
                if mask >> i & 1:
                    small |= 1 << j
            if mask >> pos & 1:
                values[mask] = res_value + func_cont(small)
            else:
                values[mask] = func_del(small)
        return values

    tau_values = glue(lambda s: deletion.tau.ranks[s],
                      lambda s: contraction.tau.ranks[s],
                      restriction.tau.ranks[1])
    r_values = glue(lambda s: deletion.sep.rank(s),
                    lambda s: contraction.sep.rank(s),
                    restriction.sep.rank(1))
    coloops = frozenset(rho.labels[i] for i in range(n) if r_values[1 << i] == 1)
    sep = MaxSepMatroid(rho.labels, coloops)
    if any(r_values[mask] != sep.rank(mask) for mask in range(1 << n)):
        raise ReconstructionFailure(
            "glued separator is not maximally separated; deletion and "
            "contraction disagree on a coloop")
    try:
        tau = RankTable(rho.labels, m, tuple(tau_values))
    except PmkitError as err:
        raise ReconstructionFailure(
            f"glued residual is not an {m}-polymatroid: {err}") from err
    glued = CornerDecomposition(m, tau, sep)
    if glued.reconstruct(rho.k) != rho:
        raise ReconstructionFailure("glued decomposition does not reconstruct "
                                    "the input")
    return glued


def decompose_via_minors(rho: RankTable, m: int) -> CornerDecomposition:
    """Inductive m-corner decomposition: decompose the deletion, contraction,
    and restriction at the least label, then glue. Needs k >= 3m+1."""
    if rho.k < 3 * m + 1:
        raise RegimeViolated(f"inductive construction needs k >= 3m+1; got "
                             f"m={m}, k={rho.k}", m=m, k=rho.k)
    if len(rho.labels) <= 2:
        try:
            return corner_decompose(rho, m)
        except NotDecomposable as err:
            raise MinorNotDecomposable(
                f"base minor on {{{','.join(rho.labels)}}} has no "
                f"{m}-corner decomposition", minor=",".join(rho.labels),
                ranks=list(rho.ranks)) from err
    element = min(rho.labels)
    deletion = decompose_via_minors(rho.delete([element]), m)
    contraction = decompose_via_minors(rho.contract([element]), m)
    restriction = decompose_via_minors(rho.restrict([element]), m)
    return glue_decomposition(rho, element, deletion, contraction, restriction)


CollapseTag = Literal["deletion", "contraction"]


def compression_collapse(rho: RankTable, element: str, level: int) -> CollapseTag:
    """For an essentially m-bounded table and m <= level <= k-m, the level
    compression equals the deletion or the contraction; says which.

    Predicted case: contraction when level >= rho({element}), else deletion.
    A mismatch with both would be a bug and is raised loudly.
    """
    if element not in rho.labels:
        raise UnknownElement(f"element {element!r} is not in the ground set",
                             element=element)
    m, _ = essential_bound(rho)
    if not m <= level <= rho.k - m:
        raise HypothesisViolated(
            f"level must lie in [m, k-m] = [{m}, {rho.k - m}]",
            level=level, m=m, k=rho.k)
    compressed = compress(rho, element, level)
    deleted = rho.delete([element])
    contracted = rho.contract([element])
    predicted: CollapseTag = (
        "contraction" if level >= rho.rank_of([element]) else "deletion")
    if predicted == "contraction" and compressed == contracted:
        return "contraction"
    if compressed == deleted:
        return "deletion"
    if compressed == contracted:
        return "contraction"
    raise CollapseFailed(
        "compression equals neither the deletion nor the contraction; this "
        "should be impossible for essentially m-bounded tables",
        element=element, level=level, m=m)


def corner_confinement(rho: RankTable, decomposition: CornerDecomposition) -> bool:
    """Every base-polytope lattice point sits in the corner box
    [(k-n) r(e), (k-n) r(e) + n] per coordinate."""
    n = decomposition.level
    weight = rho.k - n
    anchors = [weight * decomposition.sep.rank(1 << i)
               for i in range(len(rho.labels))]
    for point in polytope.lattice_points(rho, restrict_to_base=True):
        for x, anchor in zip(point, anchors):
            if not anchor <= x <= anchor + n:
                return False
    return True


def corner_regions_disjoint(k: int, n: int, size: int) -> bool:
    """Whether the 2^size corner boxes of the k-cube with edge n are pairwise
    disjoint, checked on the actual boxes. Holds exactly when 2n < k."""
    import itertools

    boxes = []
    for pattern in itertools.product((0, 1), repeat=size):
        boxes.append(tuple(((k - n) * p, (k - n) * p + n) for p in pattern))
    for left, right in itertools.combinations(boxes, 2):
        if all(lo1 <= hi2 and lo2 <= hi1
               for (lo1, hi1), (lo2, hi2) in zip(left, right)):
            return False
    return True


def doubleton_canonical_tau(rank_e: int, rank_f: int, total: int,
                            a: int, k: int) -> CornerDecomposition:
    """The (a-1)-corner decomposition of an in-class two-element table.

    The residual is beta * U(1,2) plus coloop multiples, where beta is the
    overlap rank_e + rank_f - total computed on the corner-reduced ranks; the
    separator pattern is read off the three in-class rows (low/low, low/high,
    high/high). Triples outside those rows are rejected.
    """
    if not (0 <= rank_e and 0 <= rank_f):
        raise InvalidParams("ranks must be nonnegative",
                            rank_e=rank_e, rank_f=rank_f)
    if not (max(rank_e, rank_f) <= total <= rank_e + rank_f) or max(rank_e, rank_f) > k:
        raise NotInTable("triple is not a valid two-element polymatroid",
                         rank_e=rank_e, rank_f=rank_f, total=total)

    def pattern(r: int) -> int | None:
        if r <= a - 1:
            return 0
        if r >= k - a + 1:
            return 1
        return None

    weight = k - (a - 1)
    pat_e, pat_f = pattern(rank_e), pattern(rank_f)
    if pat_e is None or pat_f is None:
        raise NotInTable("a singleton rank falls in the excluded band [a, k-a]",
                         rank_e=rank_e, rank_f=rank_f)
    reduced_e = rank_e - weight * pat_e
    reduced_f = rank_f - weight * pat_f
    reduced_total = total - weight * (pat_e + pat_f)
    beta = reduced_e + reduced_f - reduced_total
    if not (0 <= beta <= min(reduced_e, reduced_f)) or reduced_total < 0:
        raise NotInTable("total rank falls outside the in-class rows",
                         rank_e=rank_e, rank_f=rank_f, total=total)
    labels = ("e", "f")
    # beta*U(1,2) + ((reduced_e-beta)*U(1,1) (+) (reduced_f-beta)*U(1,1)),
    # written out pointwise: the overlap beta is shared, the rest splits.
    tau = RankTable(labels, a - 1, (0, reduced_e, reduced_f, reduced_total))
    sep = MaxSepMatroid(labels, frozenset(
        name for name, flag in zip(labels, (pat_e, pat_f)) if flag))
    built = CornerDecomposition(a - 1, tau, sep)
    if built.reconstruct(k) != doubleton(rank_e, rank_f, total, k, labels):
        raise ReconstructionFailure("canonical residual failed to reconstruct "
                                    "the input")  # pragma: no cover
    return built
