"""Socle and cosocle of a product with a cuspidal point."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import (IrreducibleParam, Multisegment, Param, Point, Segment,
                   as_point, linked)
from .matching import matching, matching_primed


class _NotInImage:
    """Returned by :func:`S` when the multisegment is not in the image of ``Q``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NOT_IN_IMAGE"

    def __bool__(self):
        return False


NOT_IN_IMAGE = _NotInImage()


def _touches(m: Multisegment, c: Point) -> bool:
    return any(s.line == c.line for s in m)


def Q(m: Multisegment, c, line=None) -> Multisegment:
    """Parameter of the socle of ``<m>^t x nu^c``."""
    c = as_point(c, line)
    if not _touches(m, c):
        return m.with_segment(Segment.point(c))
    rep = matching(m, c)
    if rep.u:
        p = rep.l[0]
        return m.replace(p, m[p].plus())
    return m.with_segment(Segment.point(c))


def S(m: Multisegment, c, line=None):
    """Inverse of :func:`Q`, or ``NOT_IN_IMAGE`` when no begin-c segment is free."""
    c = as_point(c, line)
    rep = matching(m, c)
    if not rep.l_prime:
        return NOT_IN_IMAGE
    p = rep.s[-1]
    return m.replace(p, m[p].minus())


def Q_primed(m: Multisegment, c, line=None) -> Multisegment:
    """Parameter of the cosocle of ``<m>^t x nu^c``."""
    c = as_point(c, line)
    if not _touches(m, c):
        return m.with_segment(Segment.point(c))
    rep = matching_primed(m, c)
    if rep.u:
        p = rep.l[0]
        return m.replace(p, m[p].extend_end())
    return m.with_segment(Segment.point(c))


SOCLE, COSOCLE = "socle", "cosocle"
RIGHT, LEFT = "cuspidal-right", "cuspidal-left"


@dataclass(frozen=True)
class SocleQuery:
    pi: IrreducibleParam
    rho: Point
    side: str = RIGHT
    mode: str = SOCLE

    def __post_init__(self):
        if self.side not in (RIGHT, LEFT):
            raise ValueError(f"unknown side {self.side!r}")
        if self.mode not in (SOCLE, COSOCLE):
            raise ValueError(f"unknown mode {self.mode!r}")
        object.__setattr__(self, "rho", as_point(self.rho))


def socle_cosocle(q: SocleQuery) -> IrreducibleParam:
    """Socle or cosocle of ``pi x rho`` (side right) or ``rho x pi`` (side left).

    Langlands: socle(pi x rho) = cosocle(rho x pi) is given by ``Q`` and
    cosocle(pi x rho) = socle(rho x pi) by ``Q_primed``.  In the Zelevinsky
    parametrization the roles of the two sides are exchanged.
    """
    m, c = q.pi.m, q.rho
    unprimed = (q.side == RIGHT) == (q.mode == SOCLE)
    if q.pi.param is Param.ZELEVINSKY:
        unprimed = not unprimed
    new = Q(m, c) if unprimed else Q_primed(m, c)
    return IrreducibleParam(q.pi.param, new)


def is_irreducible_with_cuspidal(m: Multisegment, c, line=None) -> bool:
    c = as_point(c, line)
    return matching(m, c).u == 0 and matching_primed(m, c).u == 0


def l_prime_invariant(m: Multisegment, c, line=None) -> int:
    return matching(m, as_point(c, line)).l_prime


def l_sup_formula(m: Multisegment, c, n: int = 1, line=None) -> int:
    """Largest Jacquet drop of ``<m>^t`` toward ``{nu^c}``: ``n * l'``."""
    return n * l_prime_invariant(m, c, line)


def condition_C(m) -> bool:
    """Pairwise unlinked, and any two segments are equal or disjoint."""
    for a, b in combinations(list(m), 2):
        if linked(a, b):
            return False
        if a == b:
            continue
        if a.line == b.line and max(a.b, b.b) <= min(a.e, b.e) and (a.b - b.b) % 1 == 0:
            return False
    return True


def unlinked_product_irreducible(segs) -> bool:
    return not any(linked(a, b) for a, b in combinations(list(segs), 2))


# names used for the operators in the interface description
Q_c, S_c, Q_primed_c = Q, S, Q_primed
