"""The IdealFile text format.

Grammar (case-insensitive on input, canonical lowercase on output)::

    ring n=<int> char=<prime>
    powers d=<d1,...,dr>        # optional
    variable z                  # optional: adjoin z as the last variable
    <generator>                 # one per line; blank lines and # comments ok

Generators are monomials like ``x1^2*x3`` or homogeneous polynomials like
``x1^2 + 3*x1*z``.  ``n`` counts the x variables only; with ``variable z``
the ring is K[x1..xn][z].  Parse/print round-trips are the identity on
canonical form.
"""

from __future__ import annotations

import re

from .core import Monomial, MonomialIdeal, RingContext
from .groebner import Polynomial


class ParseError(ValueError):
    def __init__(self, line_no: int, col: int, message: str):
        super().__init__(f"line {line_no}, column {col}: {message}")
        self.line_no = line_no
        self.col = col


def format_monomial(ctx: RingContext, m: Monomial) -> str:
    names = ctx.var_names()
    parts = [
        names[i] + (f"^{e}" if e > 1 else "")
        for i, e in enumerate(m.exps) if e > 0
    ]
    return "*".join(parts) if parts else "1"


def format_ideal(I: MonomialIdeal) -> str:
    """Canonical one-line form: generators sorted, comma-separated."""
    return ", ".join(format_monomial(I.ctx, g) for g in I.gens) or "0"


def format_polynomial(p: Polynomial) -> str:
    names = p.ctx.var_names()
    terms = []
    for e, c in sorted(p.coeffs, key=lambda t: (sum(t[0]), tuple(-x for x in t[0]))):
        mon = "*".join(
            names[i] + (f"^{x}" if x > 1 else "") for i, x in enumerate(e) if x > 0
        )
        if not mon:
            terms.append(str(c))
        elif c == 1:
            terms.append(mon)
        else:
            terms.append(f"{c}*{mon}")
    return " + ".join(terms) if terms else "0"


def write_ideal_file(ctx: RingContext, gens, out=None) -> str:
    lines = [f"ring n={ctx.nx} char={ctx.char}"]
    if ctx.powers:
        lines.append("powers d=" + ",".join(map(str, ctx.powers)))
    if ctx.z:
        lines.append("variable z")
    for g in gens:
        if isinstance(g, Monomial):
            lines.append(format_monomial(ctx, g))
        else:
            lines.append(format_polynomial(g))
    text = "\n".join(lines) + "\n"
    if out is not None:
        out.write(text)
    return text


_TOKEN = re.compile(r"\s*([a-z]\d*|\^|\*|\+|-|\d+)", re.IGNORECASE)


def _parse_generator(ctx: RingContext, line: str, line_no: int) -> Polynomial:
    names = {name: i for i, name in enumerate(ctx.var_names())}
    pos = 0
    terms: list[tuple[tuple[int, ...], int]] = []
    sign = 1
    cur_coeff = None
    cur_exps = None
    last_var = None  # variable awaiting a ^exponent
    expecting_exponent = False

    def flush(col):
        nonlocal cur_coeff, cur_exps, sign, last_var
        if cur_exps is None and cur_coeff is None:
            raise ParseError(line_no, col, "empty term")
        exps = cur_exps if cur_exps is not None else [0] * ctx.n
        coeff = cur_coeff if cur_coeff is not None else 1
        terms.append((tuple(exps), sign * coeff))
        cur_coeff, cur_exps, sign, last_var = None, None, 1, None

    while pos < len(line):
        m = _TOKEN.match(line, pos)
        if not m:
            if line[pos:].strip() == "":
                break
            raise ParseError(line_no, pos + 1, f"unexpected character {line[pos]!r}")
        tok = m.group(1)
        col = m.start(1) + 1
        pos = m.end()
        low = tok.lower()
        if low == "+":
            flush(col)
        elif low == "-":
            flush(col)
            sign = -1
        elif low == "*":
            continue
        elif low == "^":
            if last_var is None:
                raise ParseError(line_no, col, "exponent without a variable")
            expecting_exponent = True
        elif tok.isdigit():
            if expecting_exponent:
                cur_exps[last_var] += int(tok) - 1
                expecting_exponent = False
            else:
                cur_coeff = (1 if cur_coeff is None else cur_coeff) * int(tok)
        else:
            if low not in names:
                raise ParseError(line_no, col, f"unknown variable {tok!r}")
            if cur_exps is None:
                cur_exps = [0] * ctx.n
            last_var = names[low]
            cur_exps[last_var] += 1
    if expecting_exponent:
        raise ParseError(line_no, len(line), "dangling exponent")
    if cur_exps is not None or cur_coeff is not None:
        flush(len(line))
    if not terms:
        raise ParseError(line_no, 1, "empty generator")
    return Polynomial.make(ctx, terms)


def parse_ideal_file(text: str) -> tuple[RingContext, list[Polynomial]]:
    ctx = None
    powers: tuple[int, ...] = ()
    with_z = False
    n = None
    char = None
    gens: list[str] = []
    gen_lines: list[int] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        low = line.lower()
        if low.startswith("ring"):
            m = re.fullmatch(r"ring\s+n=(\d+)\s+char=(\d+)", low)
            if not m:
                raise ParseError(line_no, 1, "expected: ring n=<int> char=<prime>")
            n, char = int(m.group(1)), int(m.group(2))
        elif low.startswith("powers"):
            m = re.fullmatch(r"powers\s+d=([\d,\s]+)", low)
            if not m:
                raise ParseError(line_no, 1, "expected: powers d=<d1,...,dr>")
            powers = tuple(int(x) for x in m.group(1).replace(" ", "").split(","))
        elif low.startswith("variable"):
            m = re.fullmatch(r"variable\s+z", low)
            if not m:
                raise ParseError(line_no, 1, "expected: variable z")
            with_z = True
        else:
            gens.append(line)
            gen_lines.append(line_no)
    if n is None:
        raise ParseError(1, 1, "missing ring header")
    ctx = RingContext(n + (1 if with_z else 0), char, powers, z=with_z)
    polys = [_parse_generator(ctx, g, ln) for g, ln in zip(gens, gen_lines)]
    return ctx, polys


def as_monomial_ideal(ctx: RingContext, polys: list[Polynomial]) -> MonomialIdeal:
    """Convert single-term generators to a monomial ideal; reject others."""
    gens = []
    for p in polys:
        if len(p.coeffs) != 1:
            raise ValueError(f"generator {format_polynomial(p)} is not a monomial")
        exps, _ = p.coeffs[0]
        gens.append(Monomial(exps))
    return MonomialIdeal.make(ctx, gens)
