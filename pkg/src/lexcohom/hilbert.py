"""Exact Hilbert series of monomial quotients and Macaulay growth bounds.

The series of B/I is stored as an integer-coefficient numerator over
(1-t)^n.  When an ideal of a power quotient S = B/b is meant, callers pass
the preimage (I containing the power generators), which makes the same
machinery compute Hilb(S/I) directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, comb

from .core import MonomialIdeal, RingContext


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _poly_add(a, b):
    out = [0] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] += v
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _shift(a: tuple[int, ...], k: int) -> tuple[int, ...]:
    return (0,) * k + tuple(a)


def _most_frequent_variable(gens) -> int | None:
    """Index of the variable hitting the most generators, or None if the
    generators are pairwise coprime (every variable in at most one of them)."""
    n = len(gens[0])
    counts = [0] * n
    for g in gens:
        for i, e in enumerate(g):
            if e > 0:
                counts[i] += 1
    best = max(range(n), key=lambda i: counts[i])
    return best if counts[best] >= 2 else None


def _first_shared_variable(gens) -> int | None:
    """Alternative pivot strategy (first variable in >= 2 generators)."""
    n = len(gens[0])
    for i in range(n):
        if sum(1 for g in gens if g[i] > 0) >= 2:
            return i
    return None


_PIVOTS = {"most-frequent": _most_frequent_variable, "first": _first_shared_variable}


def _minimalize_exps(gens):
    gens = sorted(gens, key=lambda e: (sum(e), tuple(-x for x in e)))
    kept = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in kept):
            kept.append(g)
    return tuple(kept)


@lru_cache(maxsize=200_000)
def _numerator(gens: tuple[tuple[int, ...], ...], pivot: str) -> tuple[int, ...]:
    """Numerator of Hilb(B/(gens)) over (1-t)^n by pivot recursion:
    Hilb(B/I) = Hilb(B/(I+(x))) + t * Hilb(B/(I:x))."""
    if not gens:
        return (1,)
    if any(sum(g) == 0 for g in gens):
        return (0,)
    j = _PIVOTS[pivot](gens)
    if j is None:
        # pairwise coprime generators form a regular sequence
        out = (1,)
        for g in gens:
            factor = [0] * (sum(g) + 1)
            factor[0] = 1
            factor[sum(g)] = -1
            out = _poly_mul(out, tuple(factor))
        return out
    n = len(gens[0])
    xj = tuple(1 if i == j else 0 for i in range(n))
    plus = _minimalize_exps([g for g in gens if g[j] == 0] + [xj])
    col = _minimalize_exps(
        [tuple(e - 1 if i == j and e > 0 else e for i, e in enumerate(g)) for g in gens]
    )
    return _poly_add(_numerator(plus, pivot), _shift(_numerator(col, pivot), 1))


@dataclass(frozen=True)
class HilbertSeries:
    """Hilb(ring/I) = numer(t) / (1-t)^n with integer coefficients."""

    ctx: RingContext
    numer: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.ctx.n

    def quotient_window(self, upto: int) -> tuple[int, ...]:
        """Values of the quotient Hilbert function on degrees 0..upto."""
        vals = [0] * (upto + 1)
        for d in range(upto + 1):
            v = 0
            for i, c in enumerate(self.numer):
                if i > d:
                    break
                if c:
                    v += c * comb(d - i + self.n - 1, self.n - 1)
            vals[d] = v
        return tuple(vals)

    def value(self, d: int) -> int:
        if d < 0:
            return 0
        return self.quotient_window(d)[d]

    def krull_dim(self) -> int:
        """n minus the order of vanishing of the numerator at t=1."""
        poly = list(self.numer)
        if all(c == 0 for c in poly):
            return -1  # the zero ring
        dim = self.n
        while dim > 0 and sum(poly) == 0:
            # synthetic division by (1-t): q(t) = p(t)/(1-t)
            q = [0] * (len(poly) - 1)
            acc = 0
            for i in range(len(poly) - 1):
                acc += poly[i]
                q[i] = acc
            poly = q if q else [0]
            dim -= 1
        return dim


def hilbert_series(I: MonomialIdeal, pivot: str = "most-frequent") -> HilbertSeries:
    """Exact Hilbert series of (B or S)/I; pass preimages for S-quotients."""
    gens = tuple(g.exps for g in I.gens)
    return HilbertSeries(I.ctx, _numerator(gens, pivot))


def quotient_window(I: MonomialIdeal, upto: int) -> tuple[int, ...]:
    return hilbert_series(I).quotient_window(upto)


def ideal_window(I: MonomialIdeal, upto: int) -> tuple[int, ...]:
    """Degreewise dims of the ideal I itself inside the full ring."""
    qw = quotient_window(I, upto)
    return tuple(I.ctx.dim(d) - qw[d] for d in range(upto + 1))


def lagrange_interpolate(xs, ys) -> list[Fraction]:
    """Exact interpolation through (xs, ys); coefficients low-to-high."""
    m = len(xs)
    coeffs = [Fraction(0)] * m
    for t in range(m):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for u in range(m):
            if u == t:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k + 1] += c
                new[k] -= c * xs[u]
            basis = new
            denom *= xs[t] - xs[u]
        scale = Fraction(ys[t]) / denom
        for k, c in enumerate(basis):
            coeffs[k] += scale * c
    return coeffs


def poly_nonneg_on_ray(coeffs, start: int, direction: int) -> bool:
    """Exact test: the polynomial is >= 0 at every integer along the ray
    from ``start`` in ``direction`` (+1 or -1)."""
    q = [Fraction(c) for c in coeffs]
    while q and q[-1] == 0:
        q.pop()
    if not q:
        return True
    d = len(q) - 1
    lead = q[-1]
    sign_at_inf = lead if (direction > 0 or d % 2 == 0) else -lead
    if d > 0 and sign_at_inf < 0:
        return False
    if d == 0:
        return lead >= 0
    bound = ceil(1 + max(abs(c / lead) for c in q[:-1]))
    stop = max(start, bound) if direction > 0 else min(start, -bound)
    pts = range(start, stop + direction, direction)
    return all(sum(c * j**k for k, c in enumerate(q)) >= 0 for j in pts)


def series_nonneg(numer, nvars: int) -> bool:
    """Whether every coefficient of numer(t) / (1-t)^nvars is >= 0 for
    degrees >= 0, decided exactly.

    Coefficients are checked explicitly across the numerator's support;
    past it they follow a single polynomial of degree < nvars, which is
    tested on the ray.
    """
    numer = list(numer)
    while numer and numer[-1] == 0:
        numer.pop()
    if not numer:
        return True
    D = len(numer) - 1

    def coeff(d):
        if nvars == 0:
            return numer[d] if 0 <= d <= D else 0
        return sum(
            numer[i] * comb(d - i + nvars - 1, nvars - 1)
            for i in range(min(d, D) + 1)
        )

    if any(coeff(d) < 0 for d in range(D + 1)):
        return False
    if nvars == 0:
        return True
    xs = list(range(D + 1, D + nvars + 1))
    poly = lagrange_interpolate(xs, [coeff(d) for d in xs])
    return poly_nonneg_on_ray(poly, D + 1, +1)


def macaulay_rep(a: int, d: int) -> list[tuple[int, int]]:
    """The unique d-th Macaulay representation a = sum C(k_i, i).

    Returns [(k_d, d), (k_{d-1}, d-1), ...] with k_d > k_{d-1} > ... >= i >= 1.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if a < 0:
        raise ValueError("a must be >= 0")
    rep = []
    rem, i = a, d
    while rem > 0 and i >= 1:
        k = i
        while comb(k + 1, i) <= rem:
            k += 1
        rep.append((k, i))
        rem -= comb(k, i)
        i -= 1
    return rep


def macaulay_growth(a: int, d: int) -> int:
    """a^<d>: the maximal value of H(d+1) given H(d) = a (Macaulay bound)."""
    return sum(comb(k + 1, i + 1) for k, i in macaulay_rep(a, d))


@dataclass(frozen=True)
class HilbertFunctionSpec:
    """A finite prefix of a Hilbert function plus a tail-determination flag.

    ``tail_determined`` means no new generators (for ideal dims) appear
    beyond the listed window, so the function is determined by closure.
    """

    values: tuple[int, ...]
    tail_determined: bool = True

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if any(v < 0 for v in self.values):
            raise ValueError("Hilbert function values must be nonnegative")
        if self.values and self.values[0] not in (0, 1):
            raise ValueError("value in degree 0 must be 0 or 1")

    def __getitem__(self, d: int) -> int:
        return self.values[d]

    def __len__(self) -> int:
        return len(self.values)


def is_O_sequence(H, n: int) -> bool:
    """Macaulay's criterion for quotient Hilbert functions in n variables."""
    vals = tuple(H.values if isinstance(H, HilbertFunctionSpec) else H)
    if not vals:
        return True
    if vals[0] != 1:
        return False
    if len(vals) > 1 and vals[1] > n:
        return False
    for d in range(1, len(vals) - 1):
        if vals[d + 1] > macaulay_growth(vals[d], d):
            return False
    return True
