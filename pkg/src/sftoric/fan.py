"""Complete smooth fans in Z^2 and their combinatorics.

A fan is stored as its cyclically ordered list of primitive ray generators
v_1, ..., v_d (strictly counterclockwise, adjacent determinants +1).  Ray and
divisor indices are 1-based throughout, matching the labels D_1..D_d, and all
index arithmetic is cyclic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import (
    FullCycle,
    NotComplete,
    NotCounterclockwise,
    NotPrimitive,
    NotSmooth,
)

Vec = tuple[int, int]


def det(a: Sequence[int], b: Sequence[int]) -> int:
    return a[0] * b[1] - a[1] * b[0]


def _quadrant(v: Vec) -> int:
    # counterclockwise from the positive x-axis; each quadrant is half-open
    x, y = v
    if x > 0 and y >= 0:
        return 0
    if x <= 0 and y > 0:
        return 1
    if x < 0 and y <= 0:
        return 2
    return 3


def _angle_less(a: Vec, b: Vec) -> bool:
    """Strict comparison of ray angles in [0, 2*pi), exact integer arithmetic."""
    qa, qb = _quadrant(a), _quadrant(b)
    if qa != qb:
        return qa < qb
    return det(a, b) > 0


@dataclass(frozen=True)
class MinusTwoChain:
    """A maximal cyclically contiguous run of rays whose divisors are (-2)-curves.

    ``indices`` are 1-based ray indices in cyclic order along the chain.
    """

    indices: tuple[int, ...]

    def __contains__(self, i: int) -> bool:
        return i in self.indices

    def position(self, i: int) -> int:
        return self.indices.index(i)

    def __len__(self) -> int:
        return len(self.indices)


class Fan:
    """A complete smooth 2D fan; immutable after validation."""

    __slots__ = ("rays", "_canon")

    def __init__(self, rays: Iterable[Sequence[int]]):
        rays = tuple((int(v[0]), int(v[1])) for v in rays)
        for v in rays:
            if v == (0, 0) or gcd(abs(v[0]), abs(v[1])) != 1:
                raise NotPrimitive(f"ray {v} is not a primitive lattice vector")
        if len(rays) < 3:
            raise NotComplete("a complete fan needs at least 3 rays")
        d = len(rays)
        for k in range(d):
            a, b = rays[k], rays[(k + 1) % d]
            dk = det(a, b)
            if dk <= 0:
                raise NotCounterclockwise(
                    f"rays {a}, {b} are not in strict counterclockwise order"
                )
            if dk != 1:
                raise NotSmooth(f"cone spanned by {a}, {b} has index {dk}")
        # each step turns by an angle in (0, pi); the fan is complete and
        # simple iff the angle wraps past 2*pi exactly once
        wraps = sum(
            0 if _angle_less(rays[k], rays[(k + 1) % d]) else 1 for k in range(d)
        )
        if wraps != 1:
            raise NotComplete(f"ray angles wrap {wraps} times, expected once")
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "_canon", None)

    # Fan is conceptually frozen; block accidental mutation.
    def __setattr__(self, name, value):
        raise AttributeError("Fan is immutable")

    @property
    def d(self) -> int:
        return len(self.rays)

    def ray(self, i: int) -> Vec:
        """Ray generator v_i, 1-based and cyclic in i."""
        return self.rays[(i - 1) % self.d]

    def self_intersection(self, i: int) -> int:
        """D_i^2 = -det(v_{i-1}, v_{i+1})."""
        return -det(self.ray(i - 1), self.ray(i + 1))

    def self_intersections(self) -> tuple[int, ...]:
        return tuple(self.self_intersection(i) for i in range(1, self.d + 1))

    def is_semi_fano(self) -> bool:
        return all(s >= -2 for s in self.self_intersections())

    def is_fano(self) -> bool:
        # -K is ample iff it is positive on every D_i, i.e. all D_i^2 >= -1
        return all(s >= -1 for s in self.self_intersections())

    def minus_two_chains(self) -> list[MinusTwoChain]:
        """Maximal cyclic runs of (-2)-divisors, sorted by first index."""
        s = self.self_intersections()
        d = self.d
        if all(x == -2 for x in s):
            raise FullCycle("every divisor has self-intersection -2")
        # start scanning just after some non-(-2) ray so runs never split
        start = next(k for k in range(d) if s[k] != -2)
        chains: list[MinusTwoChain] = []
        run: list[int] = []
        for off in range(1, d + 1):
            k = (start + off) % d
            if s[k] == -2:
                run.append(k + 1)
            elif run:
                chains.append(MinusTwoChain(tuple(run)))
                run = []
        for chain in chains:  # Prop. on (-2)-chains: midpoint relation
            for j in range(1, len(chain) - 1):
                prev, mid, nxt = (self.ray(chain.indices[j + t]) for t in (-1, 0, 1))
                assert (prev[0] + nxt[0], prev[1] + nxt[1]) == (2 * mid[0], 2 * mid[1])
        chains.sort(key=lambda c: c.indices[0])
        return chains

    def chain_through(self, i: int) -> MinusTwoChain | None:
        for chain in self.minus_two_chains():
            if i in chain:
                return chain
        return None

    def blowup(self, i: int) -> "Fan":
        """Star subdivision of the cone spanned by (v_i, v_{i+1}), 1-based."""
        d = self.d
        k = (i - 1) % d
        new = self.rays[: k + 1] + (vec_add(self.rays[k], self.rays[(k + 1) % d]),)
        new = new + self.rays[k + 1 :]
        return Fan(new)

    def canonical_form(self) -> tuple[Vec, ...]:
        """Normal form under lattice automorphisms, rotation and reflection.

        Rotate/reflect the ray list, map the first two rays to (1,0), (0,1)
        by the unique unimodular matrix, and keep the lexicographically
        smallest encoding.
        """
        if self._canon is not None:
            return self._canon
        best: tuple[Vec, ...] | None = None
        reflected = tuple((v[1], v[0]) for v in reversed(self.rays))
        for rays in (self.rays, reflected):
            d = len(rays)
            for r in range(d):
                rot = rays[r:] + rays[:r]
                (a, b), (c, e) = rot[0], rot[1]
                # inverse of the column matrix [v_0 | v_1], determinant 1
                mapped = tuple((e * x - c * y, -b * x + a * y) for x, y in rot)
                if best is None or mapped < best:
                    best = mapped
        object.__setattr__(self, "_canon", best)
        return best

    def __eq__(self, other) -> bool:
        return isinstance(other, Fan) and self.rays == other.rays

    def __hash__(self) -> int:
        return hash(self.rays)

    def __repr__(self) -> str:
        return f"Fan({list(self.rays)})"


def vec_add(a: Vec, b: Vec) -> Vec:
    return (a[0] + b[0], a[1] + b[1])


def validate_fan(rays: Iterable[Sequence[int]]) -> Fan:
    """Validate a ray list and wrap it as a Fan (order preserved)."""
    return Fan(rays)


def fans_isomorphic(f1: Fan, f2: Fan) -> bool:
    """Equality up to GL(2,Z), cyclic rotation and orientation reversal."""
    return f1.canonical_form() == f2.canonical_form()


P2_RAYS = ((1, 0), (0, 1), (-1, -1))
F0_RAYS = ((1, 0), (0, 1), (-1, 0), (0, -1))
F2_RAYS = ((1, 0), (0, 1), (-1, 2), (0, -1))


def classify_semi_fano(max_rays: int = 9) -> list[Fan]:
    """All isomorphism classes of complete smooth semi-Fano fans with <= max_rays rays.

    Breadth-first blowups from the minimal surfaces P^2, F_0 and F_2 (the only
    semi-Fano surfaces without a (-1)-ray); every blowdown of a semi-Fano
    surface along a (-1)-ray is again semi-Fano, so pruning at D^2 <= -3 loses
    nothing.  Output is one canonical representative per class, sorted by ray
    count and then by canonical encoding.
    """
    if max_rays < 3:
        raise ValueError("max_rays must be at least 3")
    seeds = [Fan(P2_RAYS), Fan(F0_RAYS), Fan(F2_RAYS)]
    classes: dict[tuple, Fan] = {}
    frontier: list[Fan] = []
    for fan in seeds:
        if fan.d <= max_rays and fan.is_semi_fano():
            key = fan.canonical_form()
            if key not in classes:
                classes[key] = Fan(key)
                frontier.append(Fan(key))
    while frontier:
        nxt: list[Fan] = []
        for fan in frontier:
            if fan.d + 1 > max_rays:
                continue
            for i in range(1, fan.d + 1):
                up = fan.blowup(i)
                if not up.is_semi_fano():
                    continue
                key = up.canonical_form()
                if key not in classes:
                    rep = Fan(key)
                    classes[key] = rep
                    nxt.append(rep)
        frontier = nxt
    out = sorted(classes.values(), key=lambda f: (f.d, f.canonical_form()))
    return out
