"""One entry point for the text grammar.

    multisegment   ``[0..2]+[1..1]@L``, or ``0`` for the empty one
    segment        ``[-1/2..3/2]``
    point          ``3``, ``-1/2``, ``2@L``
    standard       ``<[0..1]>^t x <[2..3]>^t`` (Langlands) or ``<[0..1]> x <[2..3]>``
                   (Zelevinsky), ``1`` for the empty product
    socle          ``<multisegment> * point`` (pi x rho) or ``point * <multisegment>``
                   (rho x pi), with ``^t`` after the bracket for the Langlands form
"""
from __future__ import annotations

import re

from .core import (IrreducibleParam, Multisegment, Param, ParseError, parse_multisegment,
                   parse_point, parse_segment)
from .ring import StandardProduct
from .socle import COSOCLE, LEFT, RIGHT, SOCLE, SocleQuery

_FACTOR = re.compile(r"\s*<([^<>]*)>(\^t)?\s*")


def _tagged(text: str, what: str):
    m = _FACTOR.fullmatch(text)
    if not m:
        raise ParseError(f"malformed {what}", text, 0)
    return m.group(1), Param.LANGLANDS if m.group(2) else Param.ZELEVINSKY


def parse_standard(text: str, units=None) -> StandardProduct:
    if text.strip() == "1":
        return StandardProduct(Multisegment())
    segs, tags = [], set()
    for chunk in text.split(" x "):
        body, tag = _tagged(chunk, "standard factor")
        segs.append(parse_segment(body, units))
        tags.add(tag)
    if len(tags) > 1:
        raise ParseError("mixed Langlands and Zelevinsky factors", text, 0)
    return StandardProduct(Multisegment(segs), tags.pop())


def parse_socle_query(text: str, mode: str = SOCLE, units=None) -> SocleQuery:
    left, sep, right = text.partition("*")
    if not sep:
        raise ParseError("expected 'pi * rho' or 'rho * pi'", text, 0)
    if "<" in left:
        (body, tag), point, side = _tagged(left, "irreducible"), right, RIGHT
    else:
        (body, tag), point, side = _tagged(right, "irreducible"), left, LEFT
    pi = IrreducibleParam(tag, parse_multisegment(body, units))
    return SocleQuery(pi, parse_point(point, units), side, mode)


_KINDS = {
    "multisegment": parse_multisegment,
    "segment": parse_segment,
    "point": parse_point,
    "standard": parse_standard,
    "socle": lambda t, u: parse_socle_query(t, SOCLE, u),
    "cosocle": lambda t, u: parse_socle_query(t, COSOCLE, u),
}


def parse(text: str, kind: str = "multisegment", units=None):
    """Parse ``text`` as one of the kinds listed in the module docstring."""
    try:
        fn = _KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown kind {kind!r}; expected one of {sorted(_KINDS)}") from None
    return fn(text, units)
