"""The Zelevinsky involution on multisegments, by peeling cuspidal points."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .core import Multisegment, Point
from .matching import matching
from .socle import NOT_IN_IMAGE, Q, Q_primed, S


@dataclass(frozen=True)
class DualTrace:
    """``steps[k] = (c, m_k)`` where ``m_k = S_c(m_{k-1})`` and ``m_{-1}`` is the input."""

    source: Multisegment
    steps: tuple
    result: Multisegment

    def replay_result(self) -> Multisegment:
        out = Multisegment()
        for c, _ in reversed(self.steps):
            out = Q_primed(out, c)
        return out

    def replay_source(self) -> Multisegment:
        out = self.steps[-1][1] if self.steps else Multisegment()
        for k in reversed(range(len(self.steps))):
            out = Q(out, self.steps[k][0])
        return out


def _top_point(m: Multisegment) -> Point:
    line = m[0].line
    return Point(max(s.b for s in m if s.line == line), line)


def _peel(m: Multisegment, choose) -> list:
    steps = []
    while len(m):
        c = choose(m)
        nxt = S(m, c)
        if nxt is NOT_IN_IMAGE:
            raise AssertionError(f"peeling point {c} is not in the image for {m}")
        steps.append((c, nxt))
        m = nxt
    return steps


def dual_with_trace(m: Multisegment) -> DualTrace:
    steps = _peel(m, _top_point)
    trace = DualTrace(m, tuple(steps), Multisegment())
    return DualTrace(m, trace.steps, trace.replay_result())


def dual(m: Multisegment) -> Multisegment:
    """Zelevinsky dual: ``dual(m) = Q'_c(dual(S_c(m)))`` at the largest begin ``c``."""
    return dual_with_trace(m).result


def dual_random_peel(m: Multisegment, rng: random.Random) -> Multisegment:
    """Same recursion, peeling at a random point ``c`` with ``l'(m, c) >= 1``."""

    def choose(cur):
        pts = sorted({Point(s.b, s.line) for s in cur}, key=lambda p: (p.line, p.x))
        ok = [p for p in pts if matching(cur, p).l_prime]
        return rng.choice(ok)

    steps = _peel(m, choose)
    out = Multisegment()
    for c, _ in reversed(steps):
        out = Q_primed(out, c)
    return out
