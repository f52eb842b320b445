"""Decompositions along the last variable, stability, distractions and the
stabilization loop.

A monomial ideal I of R[z] splits as a direct sum of components I_<h> z^h
with I_<0> <= I_<1> <= ... eventually constant; I is z-stable when each
I_<k+1> * m_R lands inside I_<k>.  Non-stable ideals are pushed up a strictly
increasing chain (in the partial order compared here) by alternating a
distraction that replaces z with x_j + z in the top components and a weight
initial ideal; the chain is finite, so the loop terminates in a stable ideal
with the same Hilbert function.

All computations happen on preimages in the ambient polynomial ring: when
the context has powers the component ideals carry the power generators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (Monomial, MonomialIdeal, RingContext, graded_piece_dim,
                   ideal_product, minimalize)
from .errors import HilbertMismatchError, IterationCapExceededError
from .groebner import Polynomial, TermOrder, initial_ideal
from .hilbert import hilbert_series, series_nonneg


def _check_z_ctx(ctx: RingContext):
    if not ctx.z:
        raise ValueError("operation requires a context with z as last variable")


def _check_preimage(I: MonomialIdeal):
    if I.ctx.powers and not I.contains_ideal(I.ctx.powers_ideal()):
        raise ValueError(
            "expected the preimage of a quotient ideal: include the power generators"
        )


@dataclass(frozen=True)
class ZGradedIdeal:
    """The component chain I_<0> <= ... <= I_<s> of a z-graded ideal.

    Components live in the context with z dropped and are constant from the
    stabilization index s = len(components) - 1 on.
    """

    ctx: RingContext                      # the R[z] context
    components: tuple[MonomialIdeal, ...]

    def __post_init__(self):
        if not self.components:
            raise ValueError("need at least one component")

    @property
    def s(self) -> int:
        return len(self.components) - 1

    def component(self, h: int) -> MonomialIdeal:
        return self.components[min(h, self.s)]

    def max_gen_degree(self) -> int:
        return max(
            max((g.degree for g in comp.gens), default=0) + h
            for h, comp in enumerate(self.components)
        )


def _strip_z(e: tuple[int, ...]) -> tuple[int, ...]:
    return e[:-1]


def z_decompose(I: MonomialIdeal) -> ZGradedIdeal:
    """Split a monomial ideal of R[z] into its z-degree components."""
    _check_z_ctx(I.ctx)
    _check_preimage(I)
    ctx_R = I.ctx.drop_z()
    s = max((g.exps[-1] for g in I.gens), default=0)
    comps = []
    for h in range(s + 1):
        gens = [Monomial(_strip_z(g.exps)) for g in I.gens if g.exps[-1] <= h]
        comps.append(minimalize(ctx_R, gens))
    return ZGradedIdeal(I.ctx, tuple(comps))


def z_recompose(Z: ZGradedIdeal) -> MonomialIdeal:
    """Inverse of z_decompose."""
    gens = []
    for h, comp in enumerate(Z.components):
        gens.extend(Monomial(g.exps + (h,)) for g in comp.gens)
    return minimalize(Z.ctx, gens)


def bar(Z: ZGradedIdeal) -> MonomialIdeal:
    """Image under z -> 0, which is the bottom component."""
    return Z.components[0]


def is_z_stable(Z: ZGradedIdeal) -> bool:
    """Check I_<k+1> * m_R <= I_<k> for every k below the stabilization index."""
    ctx_R = Z.ctx.drop_z()
    m_R = ctx_R.max_ideal()
    for k in range(Z.s):
        prod = ideal_product(Z.components[k + 1], m_R)
        if not Z.components[k].contains_ideal(prod):
            return False
    return True


def colon_z(Z: ZGradedIdeal) -> ZGradedIdeal:
    """I : z, which shifts the component chain down by one."""
    if Z.s == 0:
        return Z
    return ZGradedIdeal(Z.ctx, Z.components[1:])


def z_saturate(Z: ZGradedIdeal) -> ZGradedIdeal:
    """I : z^infinity: the extension of the top component."""
    return ZGradedIdeal(Z.ctx, (Z.components[-1],))


def partial_sum_dims(Z: ZGradedIdeal, h: int, upto: int) -> tuple[int, ...]:
    """Hilbert function on degrees 0..upto of the submodule with z-degree <= h,
    graded with deg z^k = k."""
    vals = [0] * (upto + 1)
    for k in range(min(h, upto) + 1):
        comp = Z.component(k)
        for d in range(upto + 1 - k):
            vals[d + k] += graded_piece_dim(comp, d)
    return tuple(vals)


def default_window(*ideals) -> int:
    """Comparison window: past every generator degree of every ideal in play."""
    maxdeg = max(I.max_gen_degree() for I in ideals)
    n = ideals[0].ctx.n
    return 2 * maxdeg + n + 2


def _poly_sub(a, b):
    out = [0] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] -= v
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _poly_add_shifted(a, b, k):
    out = [0] * max(len(a), len(b) + k)
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i + k] += v
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def z_order_compare(J: ZGradedIdeal, L: ZGradedIdeal, window: int | None = None) -> str:
    """Compare the partial-sum Hilbert functions of the component chains,
    returning "less", "equal", "greater" or "incomparable".

    Both ideals must have the same Hilbert function (checked exactly).  By
    default the comparison is exact at every degree and every level: for a
    level h the difference of partial sums is a rational series
    sum_k t^k (numer(R/J_k) - numer(R/L_k)) / (1-t)^n, whose sign is
    decidable; levels past both stabilization indices reduce (using the
    equality of total Hilbert functions) to one cumulative comparison of
    the top components.  Passing ``window`` instead restricts to explicit
    dims on [0, window].
    """
    if J.ctx != L.ctx:
        raise HilbertMismatchError("contexts differ")
    IJ, IL = z_recompose(J), z_recompose(L)
    if hilbert_series(IJ).numer != hilbert_series(IL).numer:
        raise HilbertMismatchError("the ideals have different Hilbert functions")

    if window is not None:
        le = ge = True
        strict_le = strict_ge = False
        for h in range(max(J.s, L.s) + 1):
            a = partial_sum_dims(J, h, window)
            b = partial_sum_dims(L, h, window)
            for x, y in zip(a, b):
                if x < y:
                    strict_le, ge = True, False
                elif x > y:
                    strict_ge, le = True, False
        if le and ge:
            return "equal"
        if le:
            return "less" if strict_le else "equal"
        if ge:
            return "greater" if strict_ge else "equal"
        return "incomparable"

    n = J.ctx.drop_z().n
    H = max(J.s, L.s)
    numers_J = [hilbert_series(J.component(h)).numer for h in range(H + 1)]
    numers_L = [hilbert_series(L.component(h)).numer for h in range(H + 1)]
    le = ge = True
    strict = False
    diff = ()
    for h in range(H + 1):
        diff = _poly_add_shifted(diff, _poly_sub(numers_J[h], numers_L[h]), h)
        if not diff:
            continue
        strict = True
        if not series_nonneg(diff, n):
            le = False
        if not series_nonneg(tuple(-c for c in diff), n):
            ge = False
    # levels past H: cumulative comparison of the stabilized components
    tail = _poly_sub(numers_J[H], numers_L[H])
    if tail:
        strict = True
        if not series_nonneg(tuple(-c for c in tail), n + 1):
            le = False
        if not series_nonneg(tail, n + 1):
            ge = False
    if le and ge:
        return "equal"
    if le:
        return "less" if strict else "equal"
    if ge:
        return "greater" if strict else "equal"
    return "incomparable"


def distraction(Z: ZGradedIdeal, d: int, j: int | None) -> list[Polynomial]:
    """Generators of the (d, l)-distraction with l = x_{j+1} + z (or l = z).

    Components of z-degree below d keep their z power; components from d up
    are multiplied by l and lose one z.  The output generates the distracted
    ideal in the ambient ring (power generators ride along inside the
    components).
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    ctx = Z.ctx
    gens: list[Polynomial] = []
    for h in range(min(d - 1, Z.s) + 1):
        for g in Z.component(h).gens:
            gens.append(Polynomial.make(ctx, [(g.exps + (h,), 1)]))
    if j is None:
        l_terms = [((0,) * (ctx.n - 1) + (1,), 1)]
    else:
        xj = tuple(1 if i == j else 0 for i in range(ctx.n))
        l_terms = [(xj, 1), ((0,) * (ctx.n - 1) + (1,), 1)]
    for h in range(d, max(Z.s, d) + 1):
        for g in Z.component(h).gens:
            terms = [
                (tuple(a + b for a, b in zip(g.exps + (h - 1,), le)), c)
                for le, c in l_terms
            ]
            gens.append(Polynomial.make(ctx, terms))
    return gens


def stabilization_order(ctx: RingContext) -> TermOrder:
    """Weight 1 on the x variables, 0 on z, revlex tiebreak."""
    return TermOrder.x_weight(ctx, "revlex")


def _first_violation(Z: ZGradedIdeal) -> tuple[int, int] | None:
    """Least (d, j) with component d times x_{j+1} not inside component d-1."""
    ctx_R = Z.ctx.drop_z()
    nx = ctx_R.n
    for d in range(1, Z.s + 1):
        lower = Z.components[d - 1]
        for j in range(nx):
            xj = ctx_R.variable(j)
            if not all(lower.contains(g.mul(xj)) for g in Z.components[d].gens):
                return d, j
    return None


def z_stabilize(
    I: MonomialIdeal,
    max_iterations: int = 500,
    degree_cap: int = 40,
    check: bool = True,
) -> ZGradedIdeal:
    """Deform a monomial ideal of R[z] into a z-stable one with the same
    Hilbert function.

    Each round distracts the first failing component with l = x_j + z (x_j
    the smallest witness variable) and passes to the weight initial ideal;
    every round moves strictly up in the partial order, so the loop
    terminates.  ``check`` verifies the strict increase and the Hilbert
    function on every round.
    """
    _check_z_ctx(I.ctx)
    _check_preimage(I)
    order = stabilization_order(I.ctx)
    target = hilbert_series(I).numer
    cur = z_decompose(I)
    for _ in range(max_iterations):
        viol = _first_violation(cur)
        if viol is None:
            return cur
        d, j = viol
        D = distraction(cur, d, j)
        nxt_ideal = initial_ideal(D, order, degree_cap)
        nxt = z_decompose(nxt_ideal)
        if check:
            if hilbert_series(nxt_ideal).numer != target:
                raise HilbertMismatchError(
                    "distraction step changed the Hilbert function (bug)"
                )
            if z_order_compare(cur, nxt) != "less":
                raise IterationCapExceededError(
                    "stabilization step did not strictly increase (bug)"
                )
        cur = nxt
    raise IterationCapExceededError(
        f"no z-stable ideal reached in {max_iterations} iterations"
    )
