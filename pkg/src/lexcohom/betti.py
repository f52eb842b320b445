"""Minimal graded Betti tables of monomial quotients, computed from
multigraded Koszul homology.

For a monomial ideal I and a multidegree b, the Betti number of A/I in
homological position i and multidegree b is the reduced homology in
dimension i-2 of the squarefree complex { tau : x^(b-tau) in I }; only
multidegrees in the lcm lattice of the generators can contribute.  Ranks are
taken over GF(p), so tables carry the characteristic as a tag.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .core import Monomial, MonomialIdeal
from .errors import ResourceLimitError
from .hilbert import hilbert_series
from .homology import reduced_homology_dims

DEFAULT_LATTICE_CAP = 20_000

NEG_INF = float("-inf")


def lcm_lattice(I: MonomialIdeal, cap: int = DEFAULT_LATTICE_CAP) -> list[tuple[int, ...]]:
    """All joins of nonempty generator subsets, deduplicated (pairwise-join
    closure)."""
    lattice = {g.exps for g in I.gens}
    frontier = set(lattice)
    while frontier:
        new = set()
        for a in frontier:
            for g in I.gens:
                j = tuple(map(max, a, g.exps))
                if j not in lattice:
                    new.add(j)
        lattice |= new
        if len(lattice) > cap:
            raise ResourceLimitError(
                f"lcm lattice exceeds cap {cap}; raise the cap or shrink the ideal"
            )
        frontier = new
    return sorted(lattice)


def upper_koszul_faces(I: MonomialIdeal, b: tuple[int, ...]) -> list[int]:
    """Faces (as vertex bitmasks) of the upper Koszul complex at b."""
    verts = [i for i, e in enumerate(b) if e > 0]
    faces = []
    for size in range(len(verts) + 1):
        for combo in itertools.combinations(verts, size):
            shifted = tuple(
                e - 1 if i in combo else e for i, e in enumerate(b)
            )
            if I.contains(Monomial(shifted)):
                faces.append(sum(1 << v for v in combo))
    return faces


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers beta_{ij} of a cyclic quotient, over GF(char)."""

    n: int
    char: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def beta(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    @cached_property
    def projdim(self) -> int:
        return max((i for (i, _) in self.entries), default=0)

    @cached_property
    def regularity(self) -> int:
        return max((j - i for (i, j) in self.entries), default=0)

    def reg_h(self, h: int):
        """sup of j - i over rows i >= n - h; -inf for the empty set (h = -1
        always gives -inf)."""
        if h < -1 or h > self.n:
            raise ValueError(f"h must be in [-1, {self.n}]")
        vals = [j - i for (i, j) in self.entries if i >= self.n - h]
        return max(vals) if vals else NEG_INF

    def alternating_sum(self) -> tuple[int, ...]:
        """Coefficients of sum (-1)^i beta_ij t^j, for the Hilbert identity."""
        top = max((j for (_, j) in self.entries), default=0)
        out = [0] * (top + 1)
        for (i, j), v in self.entries.items():
            out[j] += (-1) ** i * v
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return tuple(out)

    def rows(self) -> str:
        lines = []
        for (i, j) in sorted(self.entries):
            lines.append(f"beta[{i},{j}] = {self.entries[(i, j)]}")
        return "\n".join(lines)


def betti_table(I: MonomialIdeal, check: bool = True,
                lattice_cap: int = DEFAULT_LATTICE_CAP) -> BettiTable:
    """Minimal graded Betti table of A/I over GF(p).

    ``check`` verifies the alternating-sum identity against the exact
    Hilbert numerator (an independent correctness cross-check).
    """
    ctx = I.ctx
    if I.is_unit:
        raise ValueError("the ideal must be proper")
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    if not I.is_zero:
        p = ctx.char
        for b in lcm_lattice(I, lattice_cap):
            faces = upper_koszul_faces(I, b)
            hom = reduced_homology_dims(faces, p)
            j = sum(b)
            for k, dim in hom.items():
                i = k + 2  # H~_{i-2} of the upper Koszul complex at b
                if dim:
                    entries[(i, j)] = entries.get((i, j), 0) + dim
    table = BettiTable(ctx.n, ctx.char, entries)
    if check:
        numer = hilbert_series(I).numer
        alt = table.alternating_sum()
        if alt != numer:
            raise AssertionError(
                f"Betti table fails the Hilbert identity: {alt} vs {numer}"
            )
    return table


@dataclass(frozen=True)
class Corner:
    """A dominance-maximal nonzero Betti position, stored as (i, j - i)."""

    i: int
    slope: int  # j - i
    value: int

    @property
    def j(self) -> int:
        return self.i + self.slope


def corners_via_reg(T: BettiTable) -> list[Corner]:
    """Corners read off the strict jumps of the partial regularities."""
    out = []
    for i in range(T.n, -1, -1):
        lo, hi = T.reg_h(T.n - i - 1), T.reg_h(T.n - i)
        if hi is not NEG_INF and lo < hi:
            j = i + hi
            out.append(Corner(i, hi, T.beta(i, j)))
    return sorted(out, key=lambda c: c.i)


def corners_direct(T: BettiTable) -> list[Corner]:
    """Corners from the definition: beta_ij != 0 is extremal when every
    beta_rs with r >= i, s >= j+1 and s - r >= j - i vanishes."""
    out = []
    for (i, j), v in T.entries.items():
        extremal = all(
            not (r >= i and s >= j + 1 and s - r >= j - i)
            for (r, s) in T.entries
        )
        if extremal:
            out.append(Corner(i, j - i, v))
    return sorted(out, key=lambda c: c.i)


def corners(T: BettiTable) -> list[Corner]:
    """Extremal Betti positions; both characterizations are computed and
    must agree."""
    via_reg = corners_via_reg(T)
    direct = corners_direct(T)
    if via_reg != direct:
        raise AssertionError(
            f"corner characterizations disagree: {via_reg} vs {direct}"
        )
    return via_reg


def region_dominates(corners_a: list[Corner], corners_b: list[Corner]) -> bool:
    """True iff every corner of A is dominated by some corner of B in both
    the homological index and the slope."""
    return all(
        any(ca.i <= cb.i and ca.slope <= cb.slope for cb in corners_b)
        for ca in corners_a
    )
