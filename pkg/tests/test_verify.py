import json

import pytest

from lexcohom.core import Monomial, MonomialIdeal, RingContext, minimalize
from lexcohom.errors import ResourceLimitError
from lexcohom.ioformat import format_ideal
from lexcohom.verify import (FamilySpec, corrupt_epsilon, enumerate_family,
                             nonstable_instances, run_family,
                             stable_instances, verify_betti_lpp_corners,
                             verify_cohomology_lpp, verify_embedding_lemmas,
                             verify_lex_cohomology,
                             verify_region_inclusion, verify_zstabilize)
import lexcohom.zstable as zs


def M(*exps):
    return Monomial(tuple(exps))


def test_exhaustive_family_examples():
    spec = FamilySpec(n=2, powers=(2, 2), max_deg=2, mode="exhaustive")
    fam = list(enumerate_family(spec))
    ctx = spec.context()
    b = ctx.powers_ideal()
    assert b in fam
    assert minimalize(ctx, list(b.gens) + [M(1, 1)]) in fam
    assert len(fam) == 2  # the ideals between b and the square of the max ideal
    # max_deg below the powers: only b
    only_b = list(enumerate_family(
        FamilySpec(n=2, powers=(2, 2), max_deg=1, mode="exhaustive")))
    assert only_b == [b]


def test_random_family_determinism():
    spec = FamilySpec(n=3, powers=(2,), max_deg=3, count=20, seed=9)
    a = [format_ideal(I) for I in enumerate_family(spec)]
    b = [format_ideal(I) for I in enumerate_family(spec)]
    assert a == b
    other = FamilySpec(n=3, powers=(2,), max_deg=3, count=20, seed=10)
    assert a != [format_ideal(I) for I in enumerate_family(other)]


def test_exhaustive_cap():
    with pytest.raises(ResourceLimitError):
        list(enumerate_family(FamilySpec(n=4, max_deg=4, mode="exhaustive")))


def test_family_ideals_contain_powers():
    spec = FamilySpec(n=2, powers=(2, 3), max_deg=4, count=15, seed=1)
    b = spec.context().powers_ideal()
    for I in enumerate_family(spec):
        assert I.contains_ideal(b)


def test_stable_and_nonstable_streams():
    spec = FamilySpec(n=2, powers=(2, 2), max_deg=3, with_z=True, count=6, seed=3)
    for I in stable_instances(spec):
        assert zs.is_z_stable(zs.z_decompose(I))
    count = 0
    for I in nonstable_instances(spec):
        assert not zs.is_z_stable(zs.z_decompose(I))
        count += 1
    assert count == 6


def test_cohomology_lpp_spec_instances():
    ctxp = RingContext(2, powers=(2,))
    I = MonomialIdeal.make(ctxp, [M(2, 0), M(0, 3)])
    rec = verify_cohomology_lpp(I)
    assert rec.passed and rec.info["equal_everywhere"]
    assert rec.lpp == "x1^2, x1*x2^2, x2^4"
    # equality when the ideal is b itself
    rec_b = verify_cohomology_lpp(ctxp.powers_ideal())
    assert rec_b.passed and rec_b.info["equal_everywhere"]
    # a nontrivial comparison in three variables
    ctx3 = RingContext(3, powers=(2,))
    rec3 = verify_cohomology_lpp(MonomialIdeal.make(
        ctx3, [M(2, 0, 0), M(0, 1, 1)]))
    assert rec3.passed and not rec3.info["equal_everywhere"]


def test_lex_cohomology_instances():
    ctx = RingContext(2)
    rec = verify_lex_cohomology(MonomialIdeal.make(ctx, [M(1, 1)]))
    assert rec.passed and rec.lpp == "x1^2"
    # already lex: equality
    rec2 = verify_lex_cohomology(MonomialIdeal.make(ctx, [M(1, 0)]))
    assert rec2.passed


def test_corner_and_region_instances():
    ctxp = RingContext(2, powers=(2,))
    I = MonomialIdeal.make(ctxp, [M(2, 0), M(0, 3)])
    assert verify_betti_lpp_corners(I).passed
    assert verify_region_inclusion(I).passed
    assert verify_betti_lpp_corners(ctxp.powers_ideal()).passed


def test_embedding_lemma_suite_and_mutation():
    spec = FamilySpec(n=2, powers=(2, 2), max_deg=3, with_z=True,
                      count=8, seed=21)
    instances = list(stable_instances(spec))
    for I in instances:
        assert verify_embedding_lemmas(I).passed
    # the corrupted embedding must trip at least one lemma somewhere
    failures = sum(
        0 if verify_embedding_lemmas(I, epsilon=corrupt_epsilon).passed else 1
        for I in instances
    )
    assert failures >= 1


def test_zstabilize_record():
    ctx = RingContext(2).add_z()
    rec = verify_zstabilize(MonomialIdeal.make(ctx, [M(1, 0, 1)]))
    assert rec.passed


def test_report_json_is_deterministic():
    spec = FamilySpec(n=2, powers=(2,), max_deg=3, count=5, seed=4)
    r1 = run_family("lpp-cohomology", spec)
    r2 = run_family("lpp-cohomology", spec)
    j1 = json.dumps(r1.to_json_dict(), sort_keys=True)
    j2 = json.dumps(r2.to_json_dict(), sort_keys=True)
    assert j1 == j2
    assert r1.passed and r1.summary() == {"total": 5, "passed": 5, "failed": 0}


def test_parallel_pool_matches_sequential():
    spec = FamilySpec(n=2, powers=(2,), max_deg=3, count=6, seed=8)
    seq = run_family("region", spec, jobs=1)
    par = run_family("region", spec, jobs=2)
    assert json.dumps(seq.to_json_dict(), sort_keys=True) == \
        json.dumps(par.to_json_dict(), sort_keys=True)


def test_report_records_sorted_by_serialization():
    spec = FamilySpec(n=2, powers=(2,), max_deg=3, count=6, seed=5)
    rep = run_family("region", spec)
    ids = [r.ideal for r in rep.records]
    assert ids == sorted(ids)


def test_unknown_theorem():
    with pytest.raises(ValueError):
        run_family("no-such-theorem", FamilySpec(n=2))
