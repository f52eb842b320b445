"""Hand-picked non-monomial instances, degenerated by a weight/term order.

The cohomology comparison for a non-monomial ideal is covered only through
its initial ideal: we pick homogeneous regular sequences whose initial forms
are pure variable powers, add non-monomial noise, degenerate, and push the
resulting monomial ideal through the lex-plus-power checks.  The fixture
list is deliberately tiny and explicit.
"""

import pytest

from lexcohom.core import MonomialIdeal, RingContext
from lexcohom.groebner import Polynomial, TermOrder, initial_ideal
from lexcohom.verify import (verify_betti_lpp_corners, verify_cohomology_lpp,
                             verify_region_inclusion)

P = 32003


def poly(ctx, *terms):
    return Polynomial.make(ctx, list(terms))


# (label, n, powers of the initial forms, generator builder)
FIXTURES = [
    (
        "circle-and-cube-n2",
        2, (2, 3),
        lambda c: [
            poly(c, ((2, 0), 1), ((0, 2), 1)),          # x1^2 + x2^2
            poly(c, ((0, 3), 1)),                       # x2^3
        ],
    ),
    (
        "square-cube-n2",
        2, (2, 3),
        lambda c: [
            poly(c, ((2, 0), 1), ((1, 1), 3)),           # x1^2 + 3 x1 x2
            poly(c, ((0, 3), 1), ((1, 2), 1)),           # x2^3 + x1 x2^2
            poly(c, ((2, 1), 1), ((1, 2), P - 1)),       # x1^2 x2 - x1 x2^2
        ],
    ),
    (
        "two-squares-n3",
        3, (2, 2),
        lambda c: [
            poly(c, ((2, 0, 0), 1), ((0, 1, 1), 1)),     # x1^2 + x2 x3
            poly(c, ((0, 2, 0), 1), ((0, 1, 1), P - 1)), # x2^2 - x2 x3
            poly(c, ((1, 1, 1), 1), ((0, 2, 1), 2)),     # x1 x2 x3 + 2 x2^2 x3
        ],
    ),
]


@pytest.mark.parametrize("label,n,powers,build", FIXTURES,
                         ids=[f[0] for f in FIXTURES])
def test_degenerated_instance_passes_lpp_checks(label, n, powers, build):
    plain = RingContext(n, char=P)
    gens = build(plain)
    order = TermOrder((1,) * n, "lex")
    ini = initial_ideal(gens, order)
    # the degenerated ideal contains the expected variable powers
    ctx = RingContext(n, char=P, powers=powers)
    I = MonomialIdeal.make(ctx, [g for g in ini.gens])
    b = ctx.powers_ideal()
    assert I.contains_ideal(b), f"{label}: initial forms are not the powers"
    # degeneration is flat: the window matches the original computed by rank
    assert verify_cohomology_lpp(I).passed
    assert verify_betti_lpp_corners(I).passed
    assert verify_region_inclusion(I).passed
