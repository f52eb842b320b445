"""Shared brute-force oracles: slow, simple, independent of the code paths
they check."""

from lexcohom.core import MonomialIdeal


def all_monomials(ctx, d, bounded=False):
    return list(ctx.monomials(d, bounded=bounded))


def members_upto(I, D, bounded=False):
    """Set of exponent vectors of monomials of degree <= D lying in I."""
    out = set()
    for d in range(D + 1):
        for m in I.ctx.monomials(d, bounded=bounded):
            if I.contains(m):
                out.add(m.exps)
    return out


def brute_quotient_dims(I, D):
    """Degreewise dims of (ring)/I by direct monomial counting."""
    dims = []
    for d in range(D + 1):
        dims.append(sum(1 for m in I.ctx.monomials(d, bounded=True)
                        if not I.contains(m)))
    return tuple(dims)


def random_ideal(rng, ctx, max_deg, max_gens):
    pool = []
    for d in range(1, max_deg + 1):
        pool.extend(ctx.monomials(d, bounded=True))
    k = rng.randint(0, min(max_gens, len(pool)))
    gens = rng.sample(pool, k) if k else []
    base = list(ctx.powers_ideal().gens) if ctx.powers else []
    return MonomialIdeal.make(ctx, base + gens)
