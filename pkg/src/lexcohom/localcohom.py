"""Hilbert functions of local cohomology of monomial quotients, two ways.

Both backends decompose by multidegree and group multidegrees into finitely
many cells on which the relevant complex is constant, so each row of the
table is assembled exactly from per-cell homology dims times lattice-point
counts (binomials).  The backends share nothing but the rank kernel:

* ``ext``: graded local duality.  The dual of the Taylor complex of I is
  sliced per multidegree; the slice pattern only depends on clamp(-a, 0, rho)
  and its cohomology gives the Ext modules, whence
  dim H^i_m(A/I)_j = dim Ext^{n-i}(A/I, A)_{-n-j}.
* ``combinatorial``: the degreewise simplicial formula for the Cech complex
  of a monomial quotient: dim H^i_m(A/I)_a is a reduced homology dim of a
  complex depending only on the negative support of a and its clamped
  positive part.

Tables live on a degree window [lo, hi]; below lo each row is described by a
fitted tail polynomial whose certification is checked on the lowest points
(the rows are eventually polynomial because the dual modules are finitely
generated).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .betti import betti_table
from .core import MonomialIdeal, saturate
from .errors import ResourceLimitError, WindowUncertifiedError
from .hilbert import (hilbert_series, lagrange_interpolate, poly_nonneg_on_ray,
                      quotient_window)
from .homology import reduced_homology_dims
from .linalg import rank_mod_p

DEFAULT_GENS_CAP = 18


# ---------------------------------------------------------------------------
# combinatorial backend


def _takayama_cells(I: MonomialIdeal):
    """Cells (fixed_sum, n_negative, {i: dim}) covering every multidegree
    with nonzero cohomology.

    A coordinate is either negative (free, <= -1) or pinned to a value below
    the generator-exponent bound rho_i; multidegrees with a_i >= rho_i give
    cones, hence no homology, and are skipped.
    """
    ctx = I.ctx
    n, p = ctx.n, ctx.char
    gens = [g.exps for g in I.gens]
    rho = [max((g[i] for g in gens), default=0) for i in range(n)]
    NEG = -1
    cells = []
    for combo in itertools.product(*[[NEG] + list(range(rho[i])) for i in range(n)]):
        Fset = [i for i in range(n) if combo[i] == NEG]
        verts = [i for i in range(n) if combo[i] != NEG]
        faces = []
        for mask in range(1 << len(verts)):
            outside = [
                verts[t] for t in range(len(verts)) if not (mask >> t) & 1
            ]
            blocked = any(
                all(g[k] <= combo[k] for k in outside) for g in gens
            )
            if not blocked:
                faces.append(mask)
        hom = reduced_homology_dims(faces, p)
        if not hom:
            continue
        f = len(Fset)
        by_i = {}
        for k, dim in hom.items():
            i = k + f + 1
            if 0 <= i <= n:
                by_i[i] = by_i.get(i, 0) + dim
        if by_i:
            cells.append((sum(combo[i] for i in verts), f, by_i))
    return cells


def _count_negatives(j: int, fixed_sum: int, f: int) -> int:
    """Number of multidegrees with f coordinates <= -1 summing to
    j - fixed_sum (the other coordinates being pinned)."""
    if f == 0:
        return 1 if j == fixed_sum else 0
    m = fixed_sum - j
    return comb(m - 1, f - 1) if m >= f else 0


def _combinatorial_rows(I: MonomialIdeal, lo: int, hi: int) -> dict[int, list[int]]:
    n = I.ctx.n
    rows = {i: [0] * (hi - lo + 1) for i in range(n + 1)}
    for fixed_sum, f, by_i in _takayama_cells(I):
        for i, dim in by_i.items():
            row = rows[i]
            for j in range(lo, hi + 1):
                cnt = _count_negatives(j, fixed_sum, f)
                if cnt:
                    row[j - lo] += dim * cnt
    return rows


# ---------------------------------------------------------------------------
# ext backend (dual Taylor complex + graded local duality)


def _taylor_lcms(I: MonomialIdeal, cap: int) -> np.ndarray:
    g = len(I.gens)
    if g > cap:
        raise ResourceLimitError(
            f"{g} generators exceed the Taylor-complex cap {cap}"
        )
    n = I.ctx.n
    lcms = np.zeros((1 << g, n), dtype=np.int64)
    exps = np.array([gen.exps for gen in I.gens], dtype=np.int64).reshape(g, n)
    for mask in range(1, 1 << g):
        low = (mask & -mask).bit_length() - 1
        lcms[mask] = np.maximum(lcms[mask & (mask - 1)], exps[low])
    return lcms


def _pattern_homology(subsets: list[int], p: int) -> dict[int, int]:
    """Cohomology dims of the dual Taylor slice on an upward-closed family
    of generator subsets, by level ranks."""
    by_size: dict[int, list[int]] = {}
    for s in subsets:
        by_size.setdefault(bin(s).count("1"), []).append(s)
    for level in by_size.values():
        level.sort()
    if not by_size:
        return {}
    top = max(by_size)
    ranks: dict[int, int] = {}
    for k in range(top):
        lower = by_size.get(k, [])
        upper = by_size.get(k + 1, [])
        if not lower or not upper:
            ranks[k] = 0
            continue
        index = {s: c for c, s in enumerate(lower)}
        mat = np.zeros((len(upper), len(lower)), dtype=np.int64)
        for r, s_up in enumerate(upper):
            v = s_up
            while v:
                bit = v & (-v)
                sub = s_up & ~bit
                c = index.get(sub)
                if c is not None:
                    below = bin(s_up & (bit - 1)).count("1")
                    mat[r, c] = -1 if below % 2 else 1
                v &= v - 1
        ranks[k] = rank_mod_p(mat, p)
    out = {}
    for k in range(top + 1):
        dim = len(by_size.get(k, [])) - ranks.get(k, 0) - ranks.get(k - 1, 0)
        if dim:
            out[k] = dim
    return out


def _ext_cells(I: MonomialIdeal, cap: int = DEFAULT_GENS_CAP):
    """Cells (fixed_sum, n_free, {k: dim Ext^k}) covering the multidegree
    support of all Ext modules Ext^k(A/I, A)."""
    ctx = I.ctx
    n, p = ctx.n, ctx.char
    lcms = _taylor_lcms(I, cap)
    rho = lcms[-1] if len(I.gens) else np.zeros(n, dtype=np.int64)
    memo: dict[bytes, dict[int, int]] = {}
    cells = []
    for c in itertools.product(*[range(int(rho[i]) + 1) for i in range(n)]):
        mask = np.all(lcms >= np.array(c, dtype=np.int64), axis=1)
        key = np.packbits(mask).tobytes()
        hom = memo.get(key)
        if hom is None:
            hom = _pattern_homology(np.nonzero(mask)[0].tolist(), p)
            memo[key] = hom
        if hom:
            cells.append((sum(c), sum(1 for x in c if x == 0), hom))
    return cells


def _count_frees(e: int, fixed_sum: int, z: int) -> int:
    """Number of multidegrees with z free coordinates >= 0 and the rest
    pinned at negatives summing to -fixed_sum, with total degree e."""
    if z == 0:
        return 1 if e == -fixed_sum else 0
    t = e + fixed_sum
    return comb(t + z - 1, z - 1) if t >= 0 else 0


def _ext_rows(I: MonomialIdeal, lo: int, hi: int,
              cap: int = DEFAULT_GENS_CAP) -> dict[int, list[int]]:
    n = I.ctx.n
    cells = _ext_cells(I, cap)
    rows = {}
    for i in range(n + 1):
        k = n - i
        row = [0] * (hi - lo + 1)
        for j in range(lo, hi + 1):
            e = -n - j
            row[j - lo] = sum(
                hom.get(k, 0) * _count_frees(e, fs, z)
                for fs, z, hom in cells
                if k in hom
            )
        rows[i] = row
    return rows


# ---------------------------------------------------------------------------
# tables, tails, comparisons


@dataclass(frozen=True)
class TailPoly:
    """Polynomial describing a row for degrees below the window."""

    coeffs: tuple[Fraction, ...]  # low-to-high powers of j
    certified: bool

    def value(self, j: int) -> Fraction:
        return sum(c * j**k for k, c in enumerate(self.coeffs))


def _fit_tail(values: list[int], lo: int, module_dim: int) -> TailPoly:
    """Fit a polynomial of degree < module_dim through the lowest points and
    certify it on the two spare ones."""
    deg = max(module_dim, 0)
    pts = [(lo + t, Fraction(values[t])) for t in range(deg + 2)]
    if deg == 0:
        poly = (Fraction(0),)
    else:
        poly = tuple(lagrange_interpolate([p[0] for p in pts[:deg]],
                                          [p[1] for p in pts[:deg]]))
    tail = TailPoly(poly, certified=True)
    ok = all(tail.value(x) == y for x, y in pts)
    return TailPoly(tail.coeffs, certified=ok)


@dataclass(frozen=True)
class CohomologyTable:
    """Hilbert functions of H^i_m(A/I) on a window, with tail descriptors."""

    n: int
    char: int
    lo: int
    hi: int
    rows: dict[int, tuple[int, ...]]
    tails: dict[int, TailPoly]
    module_dim: int
    hi_covers_reg: bool

    def value(self, i: int, j: int) -> int:
        if i < 0 or i > self.n:
            return 0
        if self.lo <= j <= self.hi:
            return self.rows[i][j - self.lo]
        if j > self.hi:
            if not self.hi_covers_reg:
                raise ValueError(f"degree {j} above the window top {self.hi}")
            return 0
        tail = self.tails[i]
        if not tail.certified:
            raise WindowUncertifiedError(
                f"row {i}: tail not certified, cannot evaluate below {self.lo}"
            )
        v = tail.value(j)
        if v.denominator != 1:
            raise WindowUncertifiedError(f"row {i}: non-integral tail value at {j}")
        return int(v)

    def row(self, i: int) -> tuple[int, ...]:
        return self.rows[i]

    def all_certified(self) -> bool:
        return all(t.certified for t in self.tails.values())


def default_window(I: MonomialIdeal) -> tuple[int, int]:
    """hi from the regularity, lo conservatively below the resolution twists."""
    reg = 0 if I.is_unit else betti_table(I, check=False).regularity
    total = sum(g.degree for g in I.gens)
    return (-(I.ctx.n + total) - 2, reg + 1)


def cohomology_table(
    I: MonomialIdeal,
    window: tuple[int, int] | None = None,
    backend: str = "combinatorial",
    gens_cap: int = DEFAULT_GENS_CAP,
) -> CohomologyTable:
    """Local-cohomology Hilbert functions of A/I over GF(p) on a window.

    ``backend`` is "combinatorial" or "ext"; both must agree entrywise on
    every input (this is the package's primary anti-bug oracle, exercised by
    the test suite).
    """
    ctx = I.ctx
    if window is None:
        lo, hi = default_window(I)
        hi_covers = True
    else:
        lo, hi = window
        hi_covers = I.is_unit or hi >= betti_table(I, check=False).regularity
    if lo > hi:
        raise ValueError("window must satisfy lo <= hi")
    dim = hilbert_series(I).krull_dim()
    if hi - lo + 1 < max(dim, 0) + 2:
        raise ValueError(
            f"window too short to certify tails (need {max(dim, 0) + 2} points)"
        )
    if backend == "combinatorial":
        rows = _combinatorial_rows(I, lo, hi)
    elif backend == "ext":
        rows = _ext_rows(I, lo, hi, gens_cap)
    else:
        raise ValueError(f"unknown backend {backend!r}")
    if any(v < 0 for row in rows.values() for v in row):
        raise AssertionError("negative cohomology dimension (bug)")
    tails = {i: _fit_tail(rows[i], lo, dim) for i in rows}
    return CohomologyTable(
        n=ctx.n,
        char=ctx.char,
        lo=lo,
        hi=hi,
        rows={i: tuple(v) for i, v in rows.items()},
        tails=tails,
        module_dim=dim,
        hi_covers_reg=hi_covers,
    )


def h0_via_saturation(I: MonomialIdeal, window: tuple[int, int]) -> tuple[int, ...]:
    """H^0 row from the saturation: Hilb(A/I) - Hilb(A/I^sat) on the window."""
    lo, hi = window
    sat = saturate(I, I.ctx.max_ideal())
    if hi < 0:
        return (0,) * (hi - lo + 1)
    qi = quotient_window(I, hi)
    qs = quotient_window(sat, hi)
    return tuple(
        (qi[j] - qs[j]) if j >= 0 else 0 for j in range(lo, hi + 1)
    )




def compare_tables(
    A: CohomologyTable, B: CohomologyTable
) -> tuple[bool, tuple[int, int] | None]:
    """Entrywise A <= B on the shared window and below it via tails.

    Returns (holds, first_failure_coordinates).  Raises on mixed
    characteristics or uncertified tails (never silently truncates).
    """
    if A.char != B.char:
        raise ValueError("mixed-characteristic comparison rejected")
    if A.n != B.n or A.lo != B.lo or A.hi != B.hi:
        raise ValueError("tables must be computed on a shared window")
    for i in range(A.n + 1):
        for j in range(A.lo, A.hi + 1):
            if A.value(i, j) > B.value(i, j):
                return False, (i, j)
    for i in range(A.n + 1):
        ta, tb = A.tails[i], B.tails[i]
        if not (ta.certified and tb.certified):
            raise WindowUncertifiedError(
                f"row {i}: uncertified tail in comparison; widen the window"
            )
        diff = list(tb.coeffs) + [Fraction(0)] * (len(ta.coeffs) - len(tb.coeffs))
        for k, c in enumerate(ta.coeffs):
            diff[k] -= c
        if not poly_nonneg_on_ray(diff, A.lo - 1, -1):
            return False, (i, A.lo - 1)
    return True, None


def shared_window(*ideals: MonomialIdeal) -> tuple[int, int]:
    wins = [default_window(I) for I in ideals]
    return (min(w[0] for w in wins), max(w[1] for w in wins))


# ---------------------------------------------------------------------------
# recurrence checks for extensions along z


@dataclass(frozen=True)
class CheckReport:
    name: str
    passed: bool
    first_mismatch: tuple[int, int] | None = None
    detail: str = ""


def check_extension_recurrence(
    I: MonomialIdeal, window: tuple[int, int] | None = None,
    backend: str = "combinatorial",
) -> list[CheckReport]:
    """Verify the two summation recurrences tying H^i over R[z] to H^{i-1}
    over R, for a z-stable monomial ideal given by its preimage.

    For i > 0 the row of H^i(R[z]/I) at h equals the upper partial sum of
    the row of H^{i-1}(R/J) starting at h+1, where J is the z-saturation
    pushed down to R; for i > 1 the same holds with the downstairs
    saturation of the plain push-down.
    """
    from . import zstable

    dec = zstable.z_decompose(I)
    if not zstable.is_z_stable(dec):
        raise ValueError("the recurrence requires a z-stable ideal")
    ctx = I.ctx
    big = cohomology_table(I, window, backend=backend)
    lo, hi = big.lo, big.hi

    J_sat = zstable.bar(zstable.z_saturate(dec))      # bar of the z-saturation
    J_bar_sat = saturate(zstable.bar(dec), ctx.drop_z().max_ideal())

    reports = []
    for name, J, min_i in (("upper-sum", J_sat, 1), ("bar-saturated", J_bar_sat, 2)):
        small = cohomology_table(J, (lo, hi), backend=backend)
        mismatch = None
        for i in range(min_i, ctx.n + 1):
            for h in range(lo, hi + 1):
                rhs = sum(small.value(i - 1, m) for m in range(h + 1, small.hi + 1))
                if big.value(i, h) != rhs:
                    mismatch = (i, h)
                    break
            if mismatch:
                break
        reports.append(CheckReport(name, mismatch is None, mismatch))
    return reports


def lemma_top_partial_sums(
    I: MonomialIdeal, d: int | None = None
) -> CheckReport:
    """Partial-sum inequality between the push-downs of the z-saturations of
    a z-stable ideal and of its extended embedding, at a degree beyond all
    generators: summing dims downward from degree d, the original ideal
    dominates its embedding (this is the degreewise restatement of the
    restriction inequality Hilb(I + (z^j)) >= Hilb(eps(I) + (z^j)), and the
    full sums at j = d agree because the Hilbert functions do)."""
    from . import zstable
    from .embeddings import epsilon_one, ideal_dims

    dec = zstable.z_decompose(I)
    if not zstable.is_z_stable(dec):
        raise ValueError("requires a z-stable ideal")
    eps = epsilon_one(I)
    if d is None:
        d = max(I.max_gen_degree(), eps.max_gen_degree()) + 2
    lhs_ideal = zstable.bar(zstable.z_saturate(dec))
    rhs_ideal = zstable.bar(zstable.z_saturate(zstable.z_decompose(eps)))
    lhs = ideal_dims(lhs_ideal, d).values
    rhs = ideal_dims(rhs_ideal, d).values
    acc_l = acc_r = 0
    for j in range(d + 1):
        acc_l += lhs[d - j]
        acc_r += rhs[d - j]
        if acc_l < acc_r:
            return CheckReport("top-partial-sums", False, (j, d - j))
    if acc_l != acc_r:
        return CheckReport("top-partial-sums", False, (d, 0),
                           "full sums differ despite equal Hilbert functions")
    return CheckReport("top-partial-sums", True)
