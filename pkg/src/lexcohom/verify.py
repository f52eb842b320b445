"""Family enumeration and the theorem-by-theorem verification harness.

Every check here is a statement the underlying mathematics guarantees, so
the harness is a self-test of this package rather than an experiment: any
failure is a defect and exits nonzero with a reproducible instance dump.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from . import zstable
from .betti import betti_table, corners, region_dominates
from .core import (Monomial, MonomialIdeal, RingContext, graded_piece_dim,
                   ideal_product, ideal_sum, minimalize, saturate)
from .embeddings import (cl_embed, embedding_horizon, epsilon_one, ideal_dims,
                         lex_ideal_of, lpp_ideal)
from .errors import ResourceLimitError
from .hilbert import hilbert_series, ideal_window
from .ioformat import format_ideal
from .localcohom import (CohomologyTable, check_extension_recurrence,
                         cohomology_table, compare_tables,
                         lemma_top_partial_sums, shared_window)

EXHAUSTIVE_CAP = 20_000


@dataclass(frozen=True)
class FamilySpec:
    """A family of monomial ideals containing the power ideal b.

    ``n`` counts the x variables; with ``with_z`` the ideals live in
    K[x1..xn][z].  Extra generators are drawn from the bounded monomial
    basis in degrees 1..max_deg.
    """

    n: int
    char: int = 32003
    powers: tuple[int, ...] = ()
    max_deg: int = 3
    mode: str = "random"
    count: int = 500
    seed: int = 0
    with_z: bool = False
    max_extra_gens: int = 5

    def context(self) -> RingContext:
        ctx = RingContext(self.n, self.char, tuple(self.powers))
        return ctx.add_z() if self.with_z else ctx

    def describe(self) -> dict:
        return {
            "n": self.n,
            "char": self.char,
            "powers": list(self.powers),
            "max_deg": self.max_deg,
            "mode": self.mode,
            "count": self.count,
            "seed": self.seed,
            "with_z": self.with_z,
            "max_extra_gens": self.max_extra_gens,
        }


def _basis_pool(ctx: RingContext, max_deg: int) -> list[Monomial]:
    """Candidate extra generators: bounded-basis monomials in degrees from
    the largest power degree (1 when there are no powers) up to max_deg."""
    lo = max(ctx.powers[-1], 1) if ctx.powers else 1
    pool = []
    for d in range(lo, max_deg + 1):
        pool.extend(ctx.monomials(d, bounded=True))
    return pool


def enumerate_family(spec: FamilySpec):
    """Deterministic stream of monomial ideals containing b."""
    ctx = spec.context()
    b = ctx.powers_ideal()
    pool = _basis_pool(ctx, spec.max_deg)
    if spec.mode == "exhaustive":
        if 2 ** len(pool) > EXHAUSTIVE_CAP:
            raise ResourceLimitError(
                f"exhaustive family would scan 2^{len(pool)} subsets; cap is "
                f"{EXHAUSTIVE_CAP}"
            )
        seen = set()
        ideals = []
        for size in range(len(pool) + 1):
            for combo in itertools.combinations(pool, size):
                I = minimalize(ctx, b.gens + combo)
                if I.gens not in seen:
                    seen.add(I.gens)
                    ideals.append(I)
        ideals.sort(key=lambda I: tuple(g.grlex_key() for g in I.gens))
        yield from ideals
    elif spec.mode == "random":
        rng = random.Random(spec.seed)
        for _ in range(spec.count):
            k = rng.randint(0, min(spec.max_extra_gens, len(pool)))
            extra = rng.sample(pool, k) if k else []
            yield minimalize(ctx, list(b.gens) + extra)
    else:
        raise ValueError(f"unknown family mode {spec.mode!r}")


def stable_instances(spec: FamilySpec):
    """Z-stable instances: sampled ideals pushed through the stabilizer."""
    for I in enumerate_family(spec):
        yield zstable.z_recompose(zstable.z_stabilize(I))


def nonstable_instances(spec: FamilySpec):
    """Sampled ideals that genuinely fail z-stability (stabilizer inputs).

    In random mode the stream keeps drawing until ``count`` non-stable
    ideals were produced.
    """
    if spec.mode == "exhaustive":
        for I in enumerate_family(spec):
            if not zstable.is_z_stable(zstable.z_decompose(I)):
                yield I
        return
    produced = 0
    attempt = 0
    while produced < spec.count:
        attempt += 1
        if attempt > 200 * spec.count:
            raise ResourceLimitError(
                "family is too stable: could not sample enough non-stable ideals"
            )
        widened = FamilySpec(**{**spec.__dict__, "seed": spec.seed + attempt,
                                "count": 1})
        I = next(enumerate_family(widened))
        if not zstable.is_z_stable(zstable.z_decompose(I)):
            produced += 1
            yield I


# ---------------------------------------------------------------------------
# per-instance theorem checks


@dataclass
class InstanceRecord:
    ideal: str
    checks: dict[str, bool]
    lpp: str | None = None
    first_fail: tuple[int, int] | None = None
    betti: dict[str, list[list[int]]] = field(default_factory=dict)
    cohomology: dict[str, list[dict]] = field(default_factory=dict)
    info: dict[str, bool] = field(default_factory=dict)  # profile, not pass/fail
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def _betti_triples(T) -> list[list[int]]:
    return [[i, j, v] for (i, j), v in sorted(T.entries.items())]


def _cohom_rows(T: CohomologyTable) -> list[dict]:
    rows = []
    for i in range(T.n + 1):
        tail = T.tails[i]
        rows.append({
            "i": i,
            "lo": T.lo,
            "hi": T.hi,
            "values": list(T.rows[i]),
            "tail_poly": [str(c) for c in tail.coeffs],
            "certified": tail.certified,
        })
    return rows


def _widening_tables(I, J, backend, attempts=3):
    """Tables for I and J on a shared window, widening on uncertified tails."""
    from .errors import WindowUncertifiedError

    lo, hi = shared_window(I, J)
    for attempt in range(attempts):
        TA = cohomology_table(I, (lo, hi), backend=backend)
        TB = cohomology_table(J, (lo, hi), backend=backend)
        if TA.all_certified() and TB.all_certified():
            return TA, TB
        lo = 2 * lo
    raise WindowUncertifiedError(f"tails uncertified even at lo={lo}")


def verify_cohomology_lpp(I: MonomialIdeal,
                          backend: str = "combinatorial") -> InstanceRecord:
    """Coefficientwise H^i(A/I) <= H^i(A/LPP) for all i (window + tails)."""
    t0 = time.perf_counter()
    L = lpp_ideal(I)
    TA, TB = _widening_tables(I, L, backend)
    ok, fail = compare_tables(TA, TB)
    rec = InstanceRecord(
        ideal=format_ideal(I),
        lpp=format_ideal(L),
        checks={"cohomology_le": ok},
        first_fail=fail,
        cohomology={"quotient": _cohom_rows(TA), "lpp": _cohom_rows(TB)},
        info={"equal_everywhere": ok and TA.rows == TB.rows},
    )
    rec.seconds = time.perf_counter() - t0
    return rec


def verify_lex_cohomology(I: MonomialIdeal,
                          backend: str = "combinatorial") -> InstanceRecord:
    """The powers-free case: the lex-segment ideal maximizes local cohomology."""
    t0 = time.perf_counter()
    ctx = I.ctx
    if ctx.powers:
        raise ValueError("lex-cohomology check expects a context without powers")
    L = lex_ideal_of(I)
    TA, TB = _widening_tables(I, L, backend)
    ok, fail = compare_tables(TA, TB)
    rec = InstanceRecord(
        ideal=format_ideal(I),
        lpp=format_ideal(L),
        checks={"cohomology_le": ok},
        first_fail=fail,
        cohomology={"quotient": _cohom_rows(TA), "lex": _cohom_rows(TB)},
    )
    rec.seconds = time.perf_counter() - t0
    return rec


def verify_betti_lpp_corners(I: MonomialIdeal,
                             backend: str = "combinatorial") -> InstanceRecord:
    """At every corner of the LPP quotient, beta(A/I) <= beta(A/LPP); plus
    the corner identity beta_ij = H^{n-i} at j-n on both quotients."""
    t0 = time.perf_counter()
    L = lpp_ideal(I)
    TI, TL = betti_table(I), betti_table(L)
    n = I.ctx.n
    corner_ok, fail = True, None
    for c in corners(TL):
        if TI.beta(c.i, c.j) > c.value:
            corner_ok, fail = False, (c.i, c.j)
            break
    cor_identity = True
    for J, T in ((I, TI), (L, TL)):
        table = cohomology_table(J, backend=backend)
        for c in corners(T):
            if T.beta(c.i, c.j) != table.value(n - c.i, c.j - n):
                cor_identity, fail = False, (c.i, c.j)
    rec = InstanceRecord(
        ideal=format_ideal(I),
        lpp=format_ideal(L),
        checks={"corner_le": corner_ok, "corner_identity": cor_identity},
        first_fail=fail,
        betti={"quotient": _betti_triples(TI), "lpp": _betti_triples(TL)},
    )
    rec.seconds = time.perf_counter() - t0
    return rec


def verify_region_inclusion(I: MonomialIdeal) -> InstanceRecord:
    """Every corner of A/I is dominated by a corner of A/LPP."""
    t0 = time.perf_counter()
    L = lpp_ideal(I)
    TI, TL = betti_table(I), betti_table(L)
    cI, cL = corners(TI), corners(TL)
    ok = region_dominates(cI, cL)
    fail = None
    if not ok:
        for c in cI:
            if not any(c.i <= d.i and c.slope <= d.slope for d in cL):
                fail = (c.i, c.j)
                break
    rec = InstanceRecord(
        ideal=format_ideal(I),
        lpp=format_ideal(L),
        checks={"region_dominated": ok},
        first_fail=fail,
        betti={"quotient": _betti_triples(TI), "lpp": _betti_triples(TL)},
    )
    rec.seconds = time.perf_counter() - t0
    return rec


# --- the lemma suite for embeddings -----------------------------------------


def _generator_tallies(P: MonomialIdeal, upto: int) -> tuple[int, ...]:
    """Degreewise counts of minimal generators of the quotient-ring ideal
    P/b, i.e. dims of P/(m*P + b)."""
    ctx = P.ctx
    mP = ideal_sum(ideal_product(ctx.max_ideal(), P), ctx.powers_ideal()) \
        if ctx.powers else ideal_product(ctx.max_ideal(), P)
    return tuple(
        graded_piece_dim(P, d) - graded_piece_dim(mP, d) for d in range(upto + 1)
    )


def verify_embedding_lemmas(I: MonomialIdeal, epsilon=None) -> InstanceRecord:
    """The supporting-lemma suite on a z-stable instance over S[z].

    ``epsilon`` substitutes the embedding map (used by mutation tests);
    the default is the extended lex-first embedding.
    """
    t0 = time.perf_counter()
    ctx = I.ctx
    if not ctx.z:
        raise ValueError("the lemma suite runs over a context with z")
    I = I.plus_powers()
    dec = zstable.z_decompose(I)
    if not zstable.is_z_stable(dec):
        raise ValueError("instance must be z-stable (use z_stabilize first)")
    embed = epsilon if epsilon is not None else (lambda J: epsilon_one(J, check=False))
    E = embed(I)
    checks: dict[str, bool] = {}
    fail = None
    W = zstable.default_window(I, E)
    ctx_R = ctx.drop_z()
    m = ctx.max_ideal()

    # same Hilbert function (embedding well-definedness)
    checks["same_hilbert"] = hilbert_series(E).numer == hilbert_series(I).numer

    # the image is z-stable with embedded components
    decE = zstable.z_decompose(E)
    checks["image_z_stable"] = zstable.is_z_stable(decE)

    # m * eps(I) <= eps(m * I)
    mI = ideal_sum(ideal_product(m, I), ctx.powers_ideal()) if ctx.powers \
        else ideal_product(m, I)
    try:
        EmI = embed(mI)
        lhs = ideal_sum(ideal_product(m, E), ctx.powers_ideal()) if ctx.powers \
            else ideal_product(m, E)
        checks["multiply_then_embed"] = EmI.contains_ideal(lhs)
    except (ValueError, RuntimeError):
        checks["multiply_then_embed"] = False  # corrupted embeddings may not close

    # generator-count inequality beta_1j(I) <= beta_1j(eps I)
    tI = _generator_tallies(I, W)
    tE = _generator_tallies(E, W)
    checks["generator_counts"] = all(a <= b for a, b in zip(tI, tE))
    if not checks["generator_counts"]:
        fail = (1, next(d for d in range(W + 1) if tI[d] > tE[d]))

    # restriction inequality: Hilb(I + (z^j)) >= Hilb(eps(I) + (z^j))
    restriction = True
    for j in range(0, W + 1):
        zj = Monomial((0,) * (ctx.n - 1) + (j,))
        a = ideal_window(ideal_sum(I, MonomialIdeal.make(ctx, [zj])), W)
        b = ideal_window(ideal_sum(E, MonomialIdeal.make(ctx, [zj])), W)
        if any(x < y for x, y in zip(a, b)):
            restriction = False
            fail = fail or (j, next(d for d in range(W + 1) if a[d] < b[d]))
            break
    checks["restriction_ineq"] = restriction

    # saturations: eps(bar I)^sat == bar(eps_1 I)^sat
    barI = zstable.bar(dec)
    try:
        if ctx_R.powers:
            eps_bar = cl_embed(ctx_R, ideal_dims(
                barI, embedding_horizon(ctx_R, barI.max_gen_degree()))).image_in_S
        else:
            eps_bar = lex_ideal_of(barI)
        lhs_sat = saturate(eps_bar, ctx_R.max_ideal())
        rhs_sat = saturate(zstable.bar(decE), ctx_R.max_ideal())
        checks["saturated_bars_agree"] = lhs_sat == rhs_sat
    except (ValueError, RuntimeError):
        checks["saturated_bars_agree"] = False

    # equal Hilbert functions high up push down to the bars
    thresh = max(I.max_gen_degree(), E.max_gen_degree()) + 1
    dimsI = ideal_window(barI, W)
    dimsE = ideal_window(zstable.bar(decE), W)
    checks["bars_agree_high"] = dimsI[thresh:] == dimsE[thresh:]

    # saturation commutes with killing z up to saturation
    lhs = saturate(zstable.bar(zstable.z_saturate(dec)), ctx_R.max_ideal())
    rhs = saturate(barI, ctx_R.max_ideal())
    checks["saturate_bar_swap"] = lhs == rhs

    # top-degree partial sums (only meaningful for the genuine embedding)
    if epsilon is None:
        checks["top_partial_sums"] = lemma_top_partial_sums(I).passed

    rec = InstanceRecord(
        ideal=format_ideal(I),
        lpp=format_ideal(E),
        checks=checks,
        first_fail=fail,
    )
    rec.seconds = time.perf_counter() - t0
    return rec


def corrupt_epsilon(I: MonomialIdeal) -> MonomialIdeal:
    """Deliberately wrong embedding for mutation tests: selects lex-last
    monomials degree by degree (same Hilbert function, wrong structure)."""
    ctx = I.ctx
    P = I.plus_powers()
    D = embedding_horizon(ctx, P.max_gen_degree()) + 2
    dims = ideal_dims(P, D)
    chosen: list[Monomial] = []
    prev: set[tuple[int, ...]] = set()
    bounds = [ctx.exp_bound(i) for i in range(ctx.n)]
    if ctx.z:
        bounds[-1] = None
    for d, want in enumerate(dims.values):
        basis = [m.exps for m in ctx.monomials(d, bounded=True)][::-1]  # lex-last
        closure = set()
        for e in prev:
            for i in range(ctx.n):
                if bounds[i] is not None and e[i] + 1 > bounds[i]:
                    continue
                closure.add(tuple(x + 1 if k == i else x for k, x in enumerate(e)))
        sel = list(closure) + [e for e in basis if e not in closure]
        sel = sel[:want] if want >= len(closure) else list(closure)
        chosen.extend(Monomial(e) for e in sel if e not in closure)
        prev = set(sel)
    out = minimalize(ctx, chosen)
    return out.plus_powers() if ctx.powers else out


def verify_recurrences(I: MonomialIdeal,
                       backend: str = "combinatorial") -> InstanceRecord:
    t0 = time.perf_counter()
    reports = check_extension_recurrence(I, backend=backend)
    rec = InstanceRecord(
        ideal=format_ideal(I),
        checks={r.name: r.passed for r in reports},
        first_fail=next((r.first_mismatch for r in reports if not r.passed), None),
    )
    rec.seconds = time.perf_counter() - t0
    return rec


def verify_zstabilize(I: MonomialIdeal, max_iterations: int = 50) -> InstanceRecord:
    """Stabilizer contract: output stable, >= input in the partial order,
    Hilbert-window-identical, within the iteration budget."""
    t0 = time.perf_counter()
    dec = zstable.z_decompose(I)
    out = zstable.z_stabilize(I, max_iterations=max_iterations)
    J = zstable.z_recompose(out)
    checks = {
        "stable": zstable.is_z_stable(out),
        "hilbert_preserved": hilbert_series(J).numer == hilbert_series(I).numer,
        "weakly_increased": zstable.z_order_compare(dec, out) in ("less", "equal"),
    }
    rec = InstanceRecord(ideal=format_ideal(I), lpp=format_ideal(J), checks=checks)
    rec.seconds = time.perf_counter() - t0
    return rec


# ---------------------------------------------------------------------------
# reports


@dataclass
class Report:
    theorem: str
    family: FamilySpec
    records: list[InstanceRecord]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def summary(self) -> dict:
        failed = [r for r in self.records if not r.passed]
        return {
            "total": len(self.records),
            "passed": len(self.records) - len(failed),
            "failed": len(failed),
        }

    def to_json_dict(self) -> dict:
        ctx = self.family.context()
        return {
            "schema_version": 1,
            "theorem": self.theorem,
            "context": {
                "n": ctx.nx,
                "char": ctx.char,
                "powers": list(ctx.powers),
                "z": ctx.z,
            },
            "family": self.family.describe(),
            "instances": [
                {
                    "ideal": r.ideal,
                    "lpp": r.lpp,
                    "checks": dict(sorted(r.checks.items())),
                    "first_fail": list(r.first_fail) if r.first_fail else None,
                    "betti": r.betti or None,
                    "cohomology": r.cohomology or None,
                }
                for r in self.records
            ],
            "summary": self.summary(),
        }


THEOREMS = {
    "lpp-cohomology": ("family", verify_cohomology_lpp),
    "lex-cohomology": ("family", verify_lex_cohomology),
    "lpp-corners": ("family", verify_betti_lpp_corners),
    "region": ("family", verify_region_inclusion),
    "embedding-lemmas": ("stable", verify_embedding_lemmas),
    "recurrences": ("stable", verify_recurrences),
    "zstabilize": ("raw", verify_zstabilize),
}


def run_family(theorem: str, spec: FamilySpec, jobs: int = 1) -> Report:
    """Run one theorem check over a family; records sorted by serialization."""
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from "
                         + ", ".join(sorted(THEOREMS)))
    kind, op = THEOREMS[theorem]
    if kind == "stable":
        instances = list(stable_instances(spec))
    elif kind == "raw":
        instances = list(nonstable_instances(spec))
    else:
        instances = list(enumerate_family(spec))
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            records = pool.map(op, instances)
    else:
        records = [op(I) for I in instances]
    records.sort(key=lambda r: r.ideal)
    return Report(theorem, spec, records)
