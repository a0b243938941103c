"""Base and independence polytopes, exactly.

All membership tests run over every subset constraint with exact arithmetic
(ints and fractions.Fraction); nothing here touches floats, so points on
faces classify correctly. Lattice enumeration iterates the coordinate box
bounded by singleton ranks, which is exact and cheap at desk scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import RankTable, mask_of, subset_name
from .errors import DimensionMismatch, OverlappingSets

Point = tuple  # of int | Fraction, one coordinate per ground label


def _check_point(rho: RankTable, point: Sequence) -> Point:
    if len(point) != len(rho.labels):
        raise DimensionMismatch("point dimension does not match the ground set",
                                expected=len(rho.labels), got=len(point))
    return tuple(Fraction(c) if not isinstance(c, int) else c for c in point)


def in_independence_polytope(rho: RankTable, point: Sequence) -> bool:
    """0 <= sum over A of x_e <= rho(A) for every subset A."""
    point = _check_point(rho, point)
    n = len(rho.labels)
    for mask in range(1, 1 << n):
        total = sum(point[i] for i in range(n) if mask >> i & 1)
        if total < 0 or total > rho.ranks[mask]:
            return False
    return True


def in_base_polytope(rho: RankTable, point: Sequence) -> bool:
    """Independence membership plus full-sum equality with the total rank."""
    point = _check_point(rho, point)
    if sum(point) != rho.total_rank:
        return False
    return in_independence_polytope(rho, point)


def lattice_points(rho: RankTable, restrict_to_base: bool = False) -> list[Point]:
    """Integer points of the independence (or base) polytope, lex order."""
    n = len(rho.labels)
    if n == 0:
        empty = ()
        return [empty] if not restrict_to_base or rho.total_rank == 0 else []
    boxes = [range(rho.ranks[1 << i] + 1) for i in range(n)]
    masks = list(range(1, 1 << n))
    out = []
    for point in itertools.product(*boxes):
        if restrict_to_base and sum(point) != rho.total_rank:
            continue
        ok = True
        for mask in masks:
            total = 0
            for i in range(n):
                if mask >> i & 1:
                    total += point[i]
            if total > rho.ranks[mask]:
                ok = False
                break
        if ok:
            out.append(point)
    return out


def base_vertices(rho: RankTable) -> list[Point]:
    """Greedy vertices: along each element order, each coordinate takes the
    rank increment of its prefix. Deduplicated, lex order."""
    n = len(rho.labels)
    if n == 0:
        return [()]
    seen = set()
    for order in itertools.permutations(range(n)):
        vertex = [0] * n
        mask = 0
        for i in order:
            before = rho.ranks[mask]
            mask |= 1 << i
            vertex[i] = rho.ranks[mask] - before
        seen.add(tuple(vertex))
    return sorted(seen)


@dataclass(frozen=True)
class MinorFace:
    """A coordinate-pinned slice of the independence polytope.

    ``pins`` fixes each contracted element's coordinate; deleted elements sit
    at 0. ``intervals`` describes the smallest coordinate box containing the
    slice. ``pin_mismatch`` flags contracted elements whose single-element pin
    rho({e}) differs from the chain pin actually used (this happens exactly
    when the contracted set is not additive, where the single-element pinning
    would cut an empty slice).
    """

    contract_set: tuple[str, ...]
    delete_set: tuple[str, ...]
    pins: dict[str, int]
    intervals: tuple[tuple[int, int], ...]
    points: tuple[Point, ...]
    translated_points: tuple[Point, ...]
    pin_mismatch: tuple[str, ...]


def minor_face(rho: RankTable, contract_names: Iterable[str],
               delete_names: Iterable[str], pin: str = "chain") -> MinorFace:
    """Slice of the independence polytope matching the minor rho/A1\\A2.

    pin="chain" (default) fixes each contracted coordinate at its rank
    increment along ground order, a base point of the restriction to A1; the
    slice is then a translate of the minor's independence polytope.
    pin="singleton" fixes each at rho({e}) instead, which agrees with "chain"
    whenever rho is additive on A1 and otherwise cuts an empty slice.
    """
    a1 = mask_of(rho.labels, contract_names)
    a2 = mask_of(rho.labels, delete_names)
    if a1 & a2:
        raise OverlappingSets("contract and delete sets overlap",
                              shared=subset_name(rho.labels, a1 & a2))
    if pin not in ("chain", "singleton"):
        raise ValueError(f"unknown pinning {pin!r}")
    n = len(rho.labels)
    pins: dict[str, int] = {}
    chain_pins: dict[str, int] = {}
    prefix = 0
    for i in range(n):
        if a1 >> i & 1:
            chain_pins[rho.labels[i]] = rho.ranks[prefix | 1 << i] - rho.ranks[prefix]
            prefix |= 1 << i
    for i in range(n):
        if a1 >> i & 1:
            name = rho.labels[i]
            pins[name] = rho.ranks[1 << i] if pin == "singleton" else chain_pins[name]
    mismatch = tuple(name for name in pins
                     if rho.ranks[1 << rho.labels.index(name)] != chain_pins[name])

    free = [i for i in range(n) if not (a1 | a2) >> i & 1]
    boxes = [range(rho.ranks[1 << i] + 1) for i in free]
    fixed = [0] * n
    for i in range(n):
        if a1 >> i & 1:
            fixed[i] = pins[rho.labels[i]]
    points = []
    translated = []
    for combo in itertools.product(*boxes) if free else [()]:
        candidate = list(fixed)
        for j, i in enumerate(free):
            candidate[i] = combo[j]
        if in_independence_polytope(rho, tuple(candidate)):
            points.append(tuple(candidate))
            translated.append(combo)
    intervals = []
    for i in range(n):
        if a1 >> i & 1:
            v = fixed[i]
            intervals.append((v, v))
        elif a2 >> i & 1:
            intervals.append((0, 0))
        else:
            intervals.append((0, rho.k))
    return MinorFace(
        contract_set=tuple(rho.labels[i] for i in range(n) if a1 >> i & 1),
        delete_set=tuple(rho.labels[i] for i in range(n) if a2 >> i & 1),
        pins=pins,
        intervals=tuple(intervals),
        points=tuple(points),
        translated_points=tuple(translated),
        pin_mismatch=mismatch,
    )


def svg_independence_polytope(rho: RankTable, scale: int = 40) -> str:
    """A small SVG of the 2-D independence polytope boundary. Presentational."""
    if len(rho.labels) != 2:
        raise DimensionMismatch("SVG emitter supports exactly two elements",
                                got=len(rho.labels))
    re_, rf = rho.ranks[1], rho.ranks[2]
    upper = sorted(base_vertices(rho), reverse=True)
    corners: list[tuple[int, int]] = [(0, 0), (re_, 0)]
    for vertex in upper:
        if vertex != corners[-1]:
            corners.append((vertex[0], vertex[1]))
    if corners[-1] != (0, rf):
        corners.append((0, rf))
    margin = scale
    width = re_ * scale + 2 * margin
    height = rf * scale + 2 * margin

    def pix(pt: tuple[int, int]) -> str:
        x = margin + pt[0] * scale
        y = height - margin - pt[1] * scale
        return f"{x},{y}"

    path = " ".join(pix(p) for p in corners)
    grid = []
    for x in range(re_ + 1):
        grid.append(f'<line x1="{margin + x * scale}" y1="{margin}" '
                    f'x2="{margin + x * scale}" y2="{height - margin}" '
                    'stroke="#ddd" stroke-width="1"/>')
    for y in range(rf + 1):
        grid.append(f'<line x1="{margin}" y1="{height - margin - y * scale}" '
                    f'x2="{width - margin}" y2="{height - margin - y * scale}" '
                    'stroke="#ddd" stroke-width="1"/>')
    labels = (f'<text x="{width - margin + 6}" y="{height - margin + 4}">{rho.labels[0]}</text>'
              f'<text x="{margin - 14}" y="{margin - 6}">{rho.labels[1]}</text>')
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">'
            f'{"".join(grid)}'
            f'<polygon points="{path}" fill="#eef" stroke="black" stroke-width="2"/>'
            f'{labels}</svg>\n')
