"""Ring contexts, exponent-vector monomials and monomial ideals.

Conventions used throughout the package:

* Variables are x1 > x2 > ... > x_{nx} (> z when the context has the
  distinguished last variable).  Lex order always refers to this order.
* A quotient S = B/b by pure powers b = (x1^d1, ..., xr^dr) is never a
  separate ring type: ideals of S are represented by their preimages in B,
  i.e. monomial ideals containing b.  ``graded_piece_dim`` counts within the
  monomial basis of S when the context carries powers.
* All values are immutable and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import MixedContextError

DEFAULT_CHAR = 32003

_EXP_LIMIT = 1 << 40  # exponent overflow guard; degrees here stay tiny


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class RingContext:
    """Ambient polynomial ring K[x1..xn] over GF(char), with optional powers.

    ``n`` counts all variables, including the adjoined last variable z when
    ``z=True``.  ``powers`` is the ascending degree sequence (d1, ..., dr) of
    the pure-power ideal on the first r variables; z never carries a power.
    """

    n: int
    char: int = DEFAULT_CHAR
    powers: tuple[int, ...] = ()
    z: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one variable")
        if not _is_prime(self.char):
            raise ValueError(f"char must be prime, got {self.char}")
        object.__setattr__(self, "powers", tuple(self.powers))
        if self.powers:
            if list(self.powers) != sorted(self.powers):
                raise ValueError("powers must be sorted ascending")
            if any(d < 2 for d in self.powers):
                raise ValueError("each power degree must be >= 2")
            if len(self.powers) > self.nx:
                raise ValueError("more powers than non-z variables")

    @property
    def nx(self) -> int:
        """Number of variables excluding z."""
        return self.n - 1 if self.z else self.n

    @property
    def r(self) -> int:
        return len(self.powers)

    def var_names(self) -> tuple[str, ...]:
        names = tuple(f"x{i+1}" for i in range(self.nx))
        return names + ("z",) if self.z else names

    def exp_bound(self, i: int) -> int | None:
        """Largest exponent of variable i allowed in the S-monomial basis."""
        if i < self.r:
            return self.powers[i] - 1
        return None

    def add_z(self) -> "RingContext":
        if self.z:
            raise ValueError("context already has z")
        return RingContext(self.n + 1, self.char, self.powers, z=True)

    def drop_z(self) -> "RingContext":
        if not self.z:
            raise ValueError("context has no z")
        return RingContext(self.n - 1, self.char, self.powers, z=False)

    def monomials(self, d: int, bounded: bool = False):
        """Degree-d monomials in lex-descending order.

        With ``bounded=True`` only the monomial basis of S = B/b is listed
        (exponents below the power bounds); z is never bounded.
        """
        bounds = [self.exp_bound(i) if bounded else None for i in range(self.n)]
        if self.z:
            bounds[-1] = None

        def rec(i, rem):
            if i == self.n - 1:
                if bounds[i] is None or rem <= bounds[i]:
                    yield (rem,)
                return
            top = rem if bounds[i] is None else min(rem, bounds[i])
            for e in range(top, -1, -1):
                for tail in rec(i + 1, rem - e):
                    yield (e,) + tail

        yield from map(Monomial, rec(0, d))

    def dim(self, d: int) -> int:
        """dim_K of the degree-d piece of the full ring S (or B if no powers)."""
        if d < 0:
            return 0
        return _ring_dims(self.n, self.powers, d)[d]

    def powers_ideal(self) -> "MonomialIdeal":
        gens = []
        for i, di in enumerate(self.powers):
            e = [0] * self.n
            e[i] = di
            gens.append(Monomial(tuple(e)))
        return MonomialIdeal.make(self, gens)

    def max_ideal(self) -> "MonomialIdeal":
        gens = []
        for i in range(self.n):
            e = [0] * self.n
            e[i] = 1
            gens.append(Monomial(tuple(e)))
        return MonomialIdeal.make(self, gens)

    def variable(self, i: int) -> "Monomial":
        e = [0] * self.n
        e[i] = 1
        return Monomial(tuple(e))

    def one(self) -> "Monomial":
        return Monomial((0,) * self.n)


@lru_cache(maxsize=None)
def _ring_dims(n: int, powers: tuple[int, ...], upto: int) -> tuple[int, ...]:
    """Hilbert function of B/(powers) on degrees 0..upto."""
    dims = [0] * (upto + 1)
    free = n - len(powers)
    for d in range(upto + 1):
        dims[d] = comb(d + free - 1, free - 1) if free > 0 else (1 if d == 0 else 0)
    for di in powers:
        new = [0] * (upto + 1)
        for d in range(upto + 1):
            new[d] = sum(dims[d - e] for e in range(min(di - 1, d) + 1))
        dims = new
    return tuple(dims)


@dataclass(frozen=True)
class Monomial:
    """A monomial as its exponent vector."""

    exps: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exps):
            raise ValueError(f"negative exponent in {self.exps}")
        if any(e > _EXP_LIMIT for e in self.exps):
            raise OverflowError(f"exponent overflow in {self.exps}")

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(map(max, self.exps, other.exps)))

    def mul(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def colon(self, other: "Monomial") -> "Monomial":
        """self / gcd(self, other) -- the generator of (self) : (other)."""
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exps, other.exps)))

    def grlex_key(self):
        """Sort key: ascending degree, lex-descending inside a degree."""
        return (self.degree, tuple(-e for e in self.exps))

    def __str__(self):
        return "*".join(
            f"x{i+1}" + (f"^{e}" if e > 1 else "")
            for i, e in enumerate(self.exps) if e > 0
        ) or "1"


def minimalize(ctx: RingContext, gens) -> "MonomialIdeal":
    """Divisibility antichain generating the same ideal; idempotent."""
    gens = list(gens)
    for g in gens:
        if len(g.exps) != ctx.n:
            raise MixedContextError(
                f"monomial {g.exps} has {len(g.exps)} exponents, context has {ctx.n}"
            )
    gens.sort(key=Monomial.grlex_key)
    kept: list[Monomial] = []
    for g in gens:
        if any(h.divides(g) for h in kept):
            continue
        kept.append(g)
    return MonomialIdeal(ctx, tuple(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators, canonically sorted.

    Construct through :func:`minimalize` / :meth:`make`; the raw constructor
    trusts its input.
    """

    ctx: RingContext
    gens: tuple[Monomial, ...]

    @staticmethod
    def make(ctx: RingContext, gens) -> "MonomialIdeal":
        return minimalize(ctx, gens)

    @staticmethod
    def zero(ctx: RingContext) -> "MonomialIdeal":
        return MonomialIdeal(ctx, ())

    @staticmethod
    def unit(ctx: RingContext) -> "MonomialIdeal":
        return MonomialIdeal(ctx, (ctx.one(),))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return bool(self.gens) and self.gens[0].degree == 0

    def max_gen_degree(self) -> int:
        return max((g.degree for g in self.gens), default=0)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def plus_powers(self) -> "MonomialIdeal":
        """Preimage closure: the ideal plus the context's power generators."""
        if not self.ctx.powers:
            return self
        return ideal_sum(self, self.ctx.powers_ideal())

    def __str__(self):
        return "(" + ", ".join(map(str, self.gens)) + ")" if self.gens else "(0)"


def _same_ctx(I: MonomialIdeal, J: MonomialIdeal):
    if I.ctx != J.ctx:
        raise MixedContextError(f"contexts differ: {I.ctx} vs {J.ctx}")


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ctx(I, J)
    return minimalize(I.ctx, I.gens + J.gens)


def ideal_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ctx(I, J)
    return minimalize(I.ctx, [a.mul(b) for a in I.gens for b in J.gens])


def ideal_intersection(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ctx(I, J)
    return minimalize(I.ctx, [a.lcm(b) for a in I.gens for b in J.gens])


def colon(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """The quotient ideal I : (m)."""
    return minimalize(I.ctx, [g.colon(m) for g in I.gens])


def colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I : J = intersection of I : g over the generators g of J."""
    _same_ctx(I, J)
    if J.is_zero:
        return MonomialIdeal.unit(I.ctx)
    out = colon(I, J.gens[0])
    for g in J.gens[1:]:
        out = ideal_intersection(out, colon(I, g))
    return out


def saturate(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I : J^infinity, by iterating the colon until it stabilizes."""
    _same_ctx(I, J)
    cur = I
    while True:
        nxt = colon_ideal(cur, J)
        if nxt == cur:
            return cur
        cur = nxt


def graded_piece_dim(I: MonomialIdeal, d: int) -> int:
    """Number of degree-d basis monomials lying in I.

    The basis is all of B_d, or the monomial basis of S = B/b when the
    context has powers; so for a preimage P >= b this is dim_K (P/b)_d.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if I.is_zero:
        return 0
    return sum(1 for m in I.ctx.monomials(d, bounded=True) if I.contains(m))


def quotient_piece_dim(I: MonomialIdeal, d: int) -> int:
    """dim of the degree-d piece of (S or B)/I, counting basis monomials."""
    return I.ctx.dim(d) - graded_piece_dim(I, d)
