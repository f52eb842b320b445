"""Lex-segment and Clements-Lindstrom embeddings, and lex-plus-power ideals.

The central engine selects, degree by degree, the lex-first monomials of the
quotient basis matching a requested ideal Hilbert function, and checks at
runtime that the selection closes into an ideal.  That check turns the
classical Macaulay/Clements-Lindstrom theorems from trusted input into
verified invariants: for genuine Hilbert functions it can never fail.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Monomial, MonomialIdeal, RingContext, graded_piece_dim, minimalize
from .errors import NotAnIdealError, NotAttainableError, NotOSequenceError
from .hilbert import HilbertFunctionSpec, hilbert_series, is_O_sequence


def embedding_horizon(ctx: RingContext, max_gen_degree: int) -> int:
    """Default construction depth: past every degree where the embedded
    ideal of an ideal generated up to max_gen_degree can acquire generators
    (verified post hoc by an exact Hilbert series comparison)."""
    return sum(d - 1 for d in ctx.powers) + max_gen_degree + 2


@dataclass(frozen=True)
class EmbeddingResult:
    """Outcome of a degreewise lex-first embedding.

    ``lex_ideal_in_B`` is generated by the selected basis monomials viewed in
    the plain polynomial ring (for a context without powers this is the
    classical lex-segment ideal); ``image_in_S`` is lex_ideal_in_B plus the
    power generators, minimized.
    """

    lex_ideal_in_B: MonomialIdeal
    image_in_S: MonomialIdeal
    quotient_dims: tuple[int, ...]  # achieved quotient Hilbert window


def _values(H) -> tuple[int, ...]:
    if isinstance(H, HilbertFunctionSpec):
        return H.values
    return tuple(H)


def _engine(ctx: RingContext, ideal_dims, strict_ideal_check: bool) -> EmbeddingResult:
    """Degree-by-degree lex-first selection.

    ``ideal_dims[d]`` is the requested dim of the ideal inside S_d (the
    bounded monomial basis when the context has powers).  On failure raises
    NotAttainableError, or NotAnIdealError when ``strict_ideal_check`` marks
    a closure failure as impossible-by-theorem.
    """
    dims = _values(ideal_dims)
    ctx_B = RingContext(ctx.n, ctx.char, (), ctx.z)
    image_gens: list[Monomial] = []
    prev_sel: set[tuple[int, ...]] = set()
    bounds = [ctx.exp_bound(i) for i in range(ctx.n)]
    if ctx.z:
        bounds[-1] = None
    fail = NotAnIdealError if strict_ideal_check else NotAttainableError

    for d, want in enumerate(dims):
        s_basis = [m.exps for m in ctx.monomials(d, bounded=True)]
        closure = set()
        for e in prev_sel:
            for i in range(ctx.n):
                if bounds[i] is not None and e[i] + 1 > bounds[i]:
                    continue
                closure.add(tuple(x + 1 if k == i else x for k, x in enumerate(e)))
        if want > len(s_basis):
            raise NotAttainableError(
                f"degree {d}: requested ideal dim {want} exceeds ring dim {len(s_basis)}"
            )
        sel = s_basis[:want]
        sel_set = set(sel)
        if not closure <= sel_set:
            raise fail(
                f"degree {d}: lex-first selection of size {want} is not closed "
                f"under multiplication (needs {len(closure)} monomials)"
            )
        image_gens.extend(Monomial(e) for e in sel if e not in closure)
        prev_sel = sel_set

    lex_ideal = minimalize(ctx_B, image_gens)
    image = minimalize(ctx, image_gens)
    if ctx.powers:
        image = image.plus_powers()
    qdims = tuple(ctx.dim(d) - dims[d] for d in range(len(dims)))
    return EmbeddingResult(lex_ideal, image, qdims)


def lex_segment_ideal(ctx: RingContext, H) -> MonomialIdeal:
    """The lex-segment ideal of a plain polynomial ring with ideal dims H.

    Raises NotOSequenceError when the complementary quotient function
    violates Macaulay growth.
    """
    if ctx.powers:
        raise ValueError("lex_segment_ideal expects a context without powers")
    dims = _values(H)
    qdims = [ctx.dim(d) - dims[d] for d in range(len(dims))]
    if any(q < 0 for q in qdims):
        raise NotOSequenceError("ideal dims exceed the ring dimensions")
    if qdims and qdims[0] == 0:
        if any(qdims):
            raise NotOSequenceError("the zero ring cannot grow back")
        return MonomialIdeal.unit(ctx)
    if not is_O_sequence(qdims, ctx.n):
        raise NotOSequenceError(f"quotient dims {tuple(qdims)} violate Macaulay growth")
    return _engine(ctx, dims, strict_ideal_check=True).image_in_S


def cl_embed(ctx: RingContext, H) -> EmbeddingResult:
    """Clements-Lindstrom embedding: lex-first selection inside S = B/b."""
    return _engine(ctx, H, strict_ideal_check=False)


def ideal_dims(I: MonomialIdeal, upto: int) -> HilbertFunctionSpec:
    """Hilbert function of I inside S (bounded basis) on degrees 0..upto."""
    return HilbertFunctionSpec(
        tuple(graded_piece_dim(I, d) for d in range(upto + 1))
    )


def _embed_ideal(I: MonomialIdeal, horizon: int | None) -> EmbeddingResult:
    D = horizon if horizon is not None else embedding_horizon(I.ctx, I.max_gen_degree())
    return cl_embed(I.ctx, ideal_dims(I, D))


def lex_ideal_of(I: MonomialIdeal, horizon: int | None = None) -> MonomialIdeal:
    """The lex-segment ideal with the same Hilbert function as I (no powers)."""
    if I.ctx.powers:
        raise ValueError("lex_ideal_of expects a context without powers")
    return _embed_matching_series(I, horizon)


def _embed_matching_series(I: MonomialIdeal, horizon: int | None) -> MonomialIdeal:
    """Embed and verify the exact rational Hilbert series, doubling the
    construction horizon while the embedded ideal is still acquiring
    generators beyond it (lex ideals can need generators well past the
    source ideal's degrees)."""
    want = hilbert_series(I).numer
    if horizon is not None:
        res = _embed_ideal(I, horizon)
        if hilbert_series(res.image_in_S).numer != want:
            raise NotAttainableError(
                f"embedded ideal differs from the requested Hilbert series at "
                f"horizon {horizon}; widen it"
            )
        return res.image_in_S
    D = embedding_horizon(I.ctx, I.max_gen_degree())
    for _ in range(6):
        res = _embed_ideal(I, D)
        if hilbert_series(res.image_in_S).numer == want:
            return res.image_in_S
        D *= 2
    raise NotAttainableError(
        "embedded ideal still acquiring generators at a very deep horizon (bug?)"
    )


def lpp_ideal(I: MonomialIdeal, horizon: int | None = None) -> MonomialIdeal:
    """The lex-plus-power ideal with the Hilbert function of I (b <= I).

    The result is L + b minimized, with an exact rational Hilbert series
    equality check (widening the construction horizon as needed).
    """
    ctx = I.ctx
    if not ctx.powers:
        raise ValueError("lpp_ideal expects a context with powers")
    b = ctx.powers_ideal()
    if not I.contains_ideal(b):
        raise ValueError("the ideal must contain the pure-power generators")
    return _embed_matching_series(I, horizon)


def epsilon_one(I: MonomialIdeal, horizon: int | None = None,
                check: bool = True) -> MonomialIdeal:
    """Extended embedding on S[z]: lex-first selection one variable up.

    The result is stable under the last variable with embedded components;
    both properties are asserted when ``check`` is set.
    """
    from . import zstable  # deferred: zstable does not import back

    ctx = I.ctx
    if not ctx.z:
        raise ValueError("epsilon_one expects a context with z")
    out = _embed_matching_series(I.plus_powers(), horizon)
    if check:
        dec = zstable.z_decompose(out)
        if not zstable.is_z_stable(dec):
            raise NotAnIdealError("extended embedding produced a non-z-stable ideal")
        for comp in dec.components:
            if not is_embedded(comp):
                raise NotAnIdealError("extended embedding has a non-embedded component")
    return out


def is_embedded(J: MonomialIdeal, horizon: int | None = None) -> bool:
    """True iff the degreewise lex-first embedding returns J itself."""
    ctx = J.ctx
    P = J.plus_powers()
    if P.is_unit:
        return True
    D = horizon if horizon is not None else embedding_horizon(ctx, P.max_gen_degree())
    try:
        res = cl_embed(ctx, ideal_dims(P, D))
    except NotAttainableError:
        return False
    return res.image_in_S == P and \
        hilbert_series(res.image_in_S).numer == hilbert_series(P).numer
