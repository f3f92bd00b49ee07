"""Text grammar for modules: S(i), M(i,l), P(i), I(j), sums with "+"."""

from __future__ import annotations

import re

from .core import KupischSeries
from .errors import NotAdmissible, ParseError
from .modules import (
    IntervalModule,
    ModuleSum,
    _as_sum,
    check_module,
    injective,
    projective,
)

__all__ = ["format_interval", "format_module", "parse_module"]

_TERM_RE = re.compile(
    r"""^ \s* ([MSPI]) \s* \( \s* (\d+) \s* (?: , \s* (\d+) \s* )? \) \s* $""",
    re.VERBOSE,
)


def format_interval(m: IntervalModule) -> str:
    if m.length == 1:
        return f"S({m.start})"
    return f"M({m.start},{m.length})"


def format_module(m) -> str:
    """Canonical text for a module: sorted summands joined by '+', '0' if zero."""
    msum = _as_sum(m)
    if msum.is_zero:
        return "0"
    return "+".join(format_interval(piece) for piece in msum)


def _parse_term(alg: KupischSeries, term: str) -> IntervalModule:
    match = _TERM_RE.match(term)
    if not match:
        raise ParseError(f"cannot parse module term {term!r}")
    kind, first, second = match.group(1), int(match.group(2)), match.group(3)
    if kind == "M":
        if second is None:
            raise ParseError(f"M(i,l) needs two arguments, got {term!r}")
        return IntervalModule(first, int(second))
    if second is not None:
        raise ParseError(f"{kind}(i) takes one argument, got {term!r}")
    if kind == "S":
        return IntervalModule(first, 1)
    if not 1 <= first <= alg.num_vertices:
        raise ParseError(f"vertex {first} out of range in {term!r}")
    if kind == "P":
        return projective(alg, first)
    return injective(alg, first)


def parse_module(alg: KupischSeries, text: str) -> ModuleSum:
    """Parse a '+'-separated sum of terms against a concrete algebra.

    P(i) and I(j) expand to that algebra's projective and injective
    intervals; '0' is the zero module.  Malformed syntax and modules that
    do not live over the algebra both raise ParseError.
    """
    if text is None or not text.strip():
        raise ParseError("empty module expression")
    if text.strip() == "0":
        return ModuleSum.zero()
    pieces = [_parse_term(alg, chunk) for chunk in text.split("+")]
    out = ModuleSum.of(*pieces)
    try:
        check_module(alg, out)
    except NotAdmissible as exc:
        raise ParseError(str(exc)) from exc
    return out
