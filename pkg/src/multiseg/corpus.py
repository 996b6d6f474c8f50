"""Exhaustive enumeration of small multisegments."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator

from .core import DEFAULT_LINE, Line, Multisegment, Segment


@dataclass(frozen=True)
class CorpusSpec:
    window: tuple = (0, 4)
    max_segments: int = 4
    max_multiplicity: int = 2
    line_count: int = 1

    def __post_init__(self):
        lo, hi = self.window
        if lo > hi or self.max_segments < 0 or self.max_multiplicity < 1 or self.line_count < 1:
            raise ValueError(f"invalid corpus spec {self}")


DEFAULT_CORPUS = CorpusSpec()


def corpus_lines(n: int) -> list[Line]:
    return [DEFAULT_LINE] + [Line(f"L{k}") for k in range(1, n)]


def window_segments(spec: CorpusSpec) -> list[Segment]:
    """Segments inside the window: by line, then length, then begin."""
    lo, hi = spec.window
    out = []
    for line in corpus_lines(spec.line_count):
        for length in range(1, hi - lo + 2):
            for b in range(lo, hi - length + 2):
                out.append(Segment(b, b + length - 1, line))
    return out


def enumerate_corpus(spec: CorpusSpec = DEFAULT_CORPUS) -> Iterator[Multisegment]:
    """Every multisegment with at most ``max_segments`` window segments, each
    repeated at most ``max_multiplicity`` times.  Ordered by size, then
    lexicographically in the segment order of :func:`window_segments`.
    """
    segs = window_segments(spec)
    for size in range(spec.max_segments + 1):
        for combo in combinations_with_replacement(range(len(segs)), size):
            if size and max(combo.count(x) for x in set(combo)) > spec.max_multiplicity:
                continue
            yield Multisegment(segs[i] for i in combo)
