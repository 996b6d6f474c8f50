"""Greedy matching of begin-c segments against begin-(c+1) segments.

Positions are 0-based indices into the canonical order of the multisegment.
An unmatched entry is ``None``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import Multisegment, Point, Segment, as_point


@dataclass(frozen=True)
class MatchingReport:
    """Index families of the matching at a point ``c``.

    ``j`` lists the positions of the segments at ``c`` (beginning at ``c``,
    or ending at ``c`` for the primed report), in canonical order; ``i[v]``
    is the partner of ``j[v]`` or ``None``.  ``k``/``h`` are the matched
    pairs with ``k`` ascending, ``l`` the free partner candidates in the
    order in which they are extended, ``s`` the unmatched ``j`` positions
    in ascending order.
    """

    c: Point
    primed: bool
    j: tuple
    i: tuple
    k: tuple
    h: tuple
    l: tuple
    s: tuple

    @property
    def t(self) -> int:
        return len(self.j)

    @property
    def w(self) -> int:
        return len(self.k)

    @property
    def u(self) -> int:
        return len(self.l)

    @property
    def l_prime(self) -> int:
        return self.t - self.w

    def as_dict(self) -> dict:
        return {
            "c": str(self.c),
            "primed": self.primed,
            "j": list(self.j),
            "i": [None if x is None else x for x in self.i],
            "k": list(self.k),
            "h": list(self.h),
            "l": list(self.l),
            "s": list(self.s),
            "t": self.t,
            "w": self.w,
            "u": self.u,
            "l_prime": self.l_prime,
        }


def _report(c, primed, j, i, partners, free_order_desc):
    pairs = sorted((jv, iv) for jv, iv in zip(j, i) if iv is not None)
    used = {iv for iv in i if iv is not None}
    free = sorted((p for p in partners if p not in used), reverse=free_order_desc)
    s = tuple(jv for jv, iv in zip(j, i) if iv is None)
    return MatchingReport(
        c=c, primed=primed, j=tuple(j), i=tuple(i),
        k=tuple(p[0] for p in pairs), h=tuple(p[1] for p in pairs),
        l=tuple(free), s=s,
    )


def matching(m: Multisegment, c, line=None) -> MatchingReport:
    """Match each segment beginning at ``c`` with one beginning at ``c+1``.

    The segments at ``c`` are taken largest first; each takes the largest
    unused position (smallest segment) among the ``c+1`` segments it
    precedes, i.e. whose end is strictly larger.
    """
    c = as_point(c, line)
    segs = m.items
    line, x, x1 = c.line, c.x, c.x + 1
    j, partners = [], []
    for p, s in enumerate(segs):
        if s.line == line:
            if s.b == x:
                j.append(p)
            elif s.b == x1:
                partners.append(p)
    used: set[int] = set()
    i: list[Optional[int]] = []
    for jv in j:
        choice = None
        for p in reversed(partners):
            if p not in used and segs[p].e > segs[jv].e:
                choice = p
                break
        if choice is not None:
            used.add(choice)
        i.append(choice)
    return _report(c, False, j, i, partners, free_order_desc=False)


def matching_primed(m: Multisegment, c, line=None) -> MatchingReport:
    """Mirror of :func:`matching` on segment ends.

    The segments ending at ``c`` are processed from the last in canonical
    order; each takes the smallest unused position among the segments
    ending at ``c-1`` that precede it (begin strictly earlier).  Free
    partners are listed longest first, so ``l[0]`` is the one extended by
    the quotient operator.
    """
    c = as_point(c, line)
    segs = m.items
    line, x, x1 = c.line, c.x, c.x - 1
    j, partners = [], []
    for p, s in enumerate(segs):
        if s.line == line:
            if s.e == x:
                j.append(p)
            elif s.e == x1:
                partners.append(p)
    used: set[int] = set()
    i: list[Optional[int]] = [None] * len(j)
    for idx in reversed(range(len(j))):
        jv = j[idx]
        for p in partners:
            if p not in used and segs[p].b < segs[jv].b:
                used.add(p)
                i[idx] = p
                break
    return _report(c, True, j, i, partners, free_order_desc=True)


def candidates_socle(m: Multisegment, c, line=None) -> list[Multisegment]:
    """Possible socle parameters of ``<m>^t x rho`` with ``rho = nu^c``."""
    c = as_point(c, line)
    rep = matching(m, c)
    out = [m.with_segment(Segment.point(c))]
    out.extend(m.replace(p, m[p].plus()) for p in rep.l)
    return out


def candidates_quotient(m: Multisegment, c, line=None) -> list[Multisegment]:
    c = as_point(c, line)
    rep = matching_primed(m, c)
    out = [m.with_segment(Segment.point(c))]
    out.extend(m.replace(p, m[p].extend_end()) for p in rep.l)
    return out
