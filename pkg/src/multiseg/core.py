"""Points, segments and multisegments on cuspidal lines.

A cuspidal line is the orbit of one cuspidal representation under the
twists by its reducibility character; one step along a line is one such
twist.  Positions are exact half-integers.  A segment ``[b, e]`` is the run
of consecutive positions ``b, b+1, ..., e``.
"""
from __future__ import annotations

import enum
import operator
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Union

Number = Union[int, Fraction]


def half(x) -> Number:
    """Normalize ``x`` to an exact half-integer (int when integral)."""
    if type(x) is int:
        return x
    if type(x) is Fraction and x.denominator == 2:
        return x
    if isinstance(x, str):
        x = Fraction(x)
    elif isinstance(x, float):
        if not (2 * x).is_integer():
            raise ValueError(f"{x!r} is not a half-integer")
        x = Fraction(x)
    q = Fraction(x)
    if q.denominator not in (1, 2):
        raise ValueError(f"{x!r} is not a half-integer")
    return int(q) if q.denominator == 1 else q


def _is_int(x: Number) -> bool:
    return type(x) is int or x.denominator == 1


@dataclass(frozen=True, order=True)
class Line:
    """A cuspidal line; ``unit_degree`` is the degree of one of its points."""

    id: str = ""
    unit_degree: int = 1

    def __post_init__(self):
        if self.unit_degree < 1:
            raise ValueError("unit_degree must be >= 1")
        object.__setattr__(self, "_hash", hash((self.id, self.unit_degree)))

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, Line) and self.id == other.id
                and self.unit_degree == other.unit_degree)

    def __hash__(self):
        return self._hash


DEFAULT_LINE = Line()


@dataclass(frozen=True)
class Point:
    x: Number
    line: Line = DEFAULT_LINE

    def __post_init__(self):
        object.__setattr__(self, "x", half(self.x))
        object.__setattr__(self, "_hash", hash((self.x, self.line)))

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Point) and self.x == other.x and self.line == other.line

    def __hash__(self):
        return self._hash

    def __str__(self):
        return fmt_number(self.x) + _line_suffix(self.line)


def as_point(c, line: Optional[Line] = None) -> Point:
    if type(c) is Point:
        return c
    return Point(c, line if line is not None else DEFAULT_LINE)


class Param(enum.Enum):
    """Which parametrization a multisegment refers to."""

    LANGLANDS = "langlands"
    ZELEVINSKY = "zelevinsky"


class Segment:
    """The segment ``[b, e]`` on ``line``; immutable and hashable."""

    __slots__ = ("b", "e", "line", "_key", "_hash")

    def __init__(self, b, e, line: Line = DEFAULT_LINE):
        b, e = half(b), half(e)
        # after half(), a value is an int or a Fraction with denominator 2
        tb = 2 * b if type(b) is int else b.numerator
        te = 2 * e if type(e) is int else e.numerator
        if (te - tb) % 2 or te < tb:
            raise ValueError(f"invalid segment [{b}, {e}]")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "line", line)
        key = (line.id, line.unit_degree, -tb, -te)
        object.__setattr__(self, "_key", key)
        object.__setattr__(self, "_hash", hash(key))

    def __setattr__(self, name, value):
        raise AttributeError("Segment is immutable")

    def __eq__(self, other):
        return isinstance(other, Segment) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __reduce__(self):
        return (Segment, (self.b, self.e, self.line))

    @classmethod
    def point(cls, c) -> "Segment":
        p = as_point(c)
        return cls(p.x, p.x, p.line)

    @property
    def length(self) -> int:
        return int(self.e - self.b) + 1

    @property
    def degree(self) -> int:
        return self.length * self.line.unit_degree

    def points(self) -> list[Point]:
        return [Point(self.b + k, self.line) for k in range(self.length)]

    def contains(self, other: "Segment") -> bool:
        return (self.line == other.line and _is_int(self.b - other.b)
                and self.b <= other.b and other.e <= self.e)

    def plus(self) -> "Segment":
        """``^+Δ``: prepend the point ``b - 1``."""
        return Segment(self.b - 1, self.e, self.line)

    def minus(self) -> Optional["Segment"]:
        """``^-Δ``: drop the first point; ``None`` when nothing is left."""
        if self.b == self.e:
            return None
        return Segment(self.b + 1, self.e, self.line)

    def extend_end(self) -> "Segment":
        return Segment(self.b, self.e + 1, self.line)

    def shift(self, x) -> "Segment":
        x = half(x)
        return Segment(self.b + x, self.e + x, self.line)

    def reflect(self) -> "Segment":
        return Segment(-self.e, -self.b, self.line)

    def sort_key(self):
        return self._key

    def __str__(self):
        return f"[{fmt_number(self.b)}..{fmt_number(self.e)}]" + _line_suffix(self.line)

    def __repr__(self):
        return f"Segment({self})"


def linked(a: Segment, b: Segment) -> bool:
    """True when ``a ∪ b`` is a segment and neither contains the other."""
    if a.line != b.line or not _is_int(a.b - b.b):
        return False
    if a.e + 1 < b.b or b.e + 1 < a.b:
        return False
    return not (a.contains(b) or b.contains(a))


def precedes(a: Segment, b: Segment) -> bool:
    return linked(a, b) and a.b < b.b


def segment_ge(a: Segment, b: Segment) -> bool:
    """The order on segments of one line: later begin, or same begin and longer."""
    if a.line != b.line:
        raise ValueError("segments on distinct lines are not comparable")
    return a.b > b.b or (a.b == b.b and a.length >= b.length)


def union_intersection(a: Segment, b: Segment) -> tuple[Segment, Optional[Segment]]:
    if not linked(a, b):
        raise ValueError(f"{a} and {b} are not linked")
    union = Segment(min(a.b, b.b), max(a.e, b.e), a.line)
    lo, hi = max(a.b, b.b), min(a.e, b.e)
    return union, (Segment(lo, hi, a.line) if lo <= hi else None)


_SEG_KEY = operator.attrgetter("_key")


class Multisegment:
    """A finite multiset of segments, kept in canonical ("rangé") order.

    Within a line segments are sorted by begin descending, then end
    descending, so no segment precedes a later one.  Lines are grouped in
    their natural order.  Instances are immutable and hashable.
    """

    __slots__ = ("items", "_hash")

    def __init__(self, items: Iterable[Segment] = ()):
        self.items: tuple[Segment, ...] = tuple(sorted(items, key=_SEG_KEY))
        self._hash = hash(self.items)

    @classmethod
    def of(cls, *pairs, line: Line = DEFAULT_LINE) -> "Multisegment":
        """``Multisegment.of((0, 2), (1, 1))`` builds ``{[0,2], [1,1]}``."""
        return cls(Segment(b, e, line) for b, e in pairs)

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.items)

    def __len__(self):
        return len(self.items)

    def __getitem__(self, i):
        return self.items[i]

    def __eq__(self, other):
        return isinstance(other, Multisegment) and self.items == other.items

    def __hash__(self):
        return self._hash

    def __add__(self, other: "Multisegment") -> "Multisegment":
        return Multisegment(self.items + tuple(other))

    def __lt__(self, other: "Multisegment"):
        return self.key() < other.key()

    def key(self):
        return tuple(s._key for s in self.items)

    def __str__(self):
        return format_multisegment(self)

    def __repr__(self):
        return f"Multisegment({self})"

    @property
    def degree(self) -> int:
        return sum(s.degree for s in self.items)

    def supp(self) -> Counter:
        """Cuspidal support as a multiset of points."""
        out: Counter = Counter()
        for s in self.items:
            out.update(s.points())
        return out

    def lines(self) -> list[Line]:
        return sorted({s.line for s in self.items})

    def on_line(self, line: Line) -> "Multisegment":
        return Multisegment(s for s in self.items if s.line == line)

    def replace(self, pos: int, new: Optional[Segment]) -> "Multisegment":
        """Replace the segment at ``pos``; ``None`` deletes it."""
        rest = self.items[:pos] + self.items[pos + 1:]
        return Multisegment(rest if new is None else rest + (new,))

    def with_segment(self, seg: Segment) -> "Multisegment":
        return Multisegment(self.items + (seg,))


def range_sort(items: Iterable[Segment]) -> Multisegment:
    return Multisegment(items)


def twist(m: Multisegment, x) -> Multisegment:
    return Multisegment(s.shift(x) for s in m)


def contragredient(m: Multisegment) -> Multisegment:
    """``[b, e] -> [-e, -b]`` on every segment."""
    return Multisegment(s.reflect() for s in m)


reflect = contragredient


@dataclass(frozen=True)
class IrreducibleParam:
    param: Param
    m: Multisegment

    def __str__(self):
        mark = "^t" if self.param is Param.LANGLANDS else ""
        return f"<{self.m}>{mark}"


# -- text grammar -------------------------------------------------------------

_NUM = r"-?\d+(?:/2)?"
_SEG_RE = re.compile(rf"\s*\[\s*({_NUM})\s*\.\.\s*({_NUM})\s*\](?:@([A-Za-z_][\w.-]*))?\s*")


class ParseError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


def fmt_number(x: Number) -> str:
    q = Fraction(x)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/2"


def _line_suffix(line: Line) -> str:
    return f"@{line.id}" if line.id else ""


def parse_number(text: str) -> Number:
    if not re.fullmatch(_NUM, text.strip()):
        raise ParseError("expected an integer or integer/2", text, 0)
    return half(Fraction(text.strip()))


def _line_for(name: Optional[str], units: Optional[dict]) -> Line:
    if not name:
        return Line("", (units or {}).get("", 1))
    return Line(name, (units or {}).get(name, 1))


def parse_segment(text: str, units: Optional[dict] = None) -> Segment:
    m = _SEG_RE.fullmatch(text)
    if not m:
        raise ParseError("malformed segment", text, 0)
    b, e = Fraction(m.group(1)), Fraction(m.group(2))
    if b > e:
        raise ParseError("segment begins after it ends", text, m.start(1))
    if (e - b).denominator != 1:
        raise ParseError("segment endpoints differ by a non-integer", text, m.start(1))
    return Segment(b, e, _line_for(m.group(3), units))


def parse_multisegment(text: str, units: Optional[dict] = None) -> Multisegment:
    """Parse ``"[0..2]+[1..1]@L"``; ``"0"`` is the empty multisegment.

    ``units`` optionally maps line ids to unit degrees.
    """
    if text.strip() == "0":
        return Multisegment()
    segs = []
    pos = 0
    for chunk in text.split("+"):
        if not chunk.strip():
            raise ParseError("empty summand", text, pos)
        try:
            segs.append(parse_segment(chunk, units))
        except ParseError as exc:
            raise ParseError(str(exc).split(" at position")[0], text, pos + exc.pos) from None
        pos += len(chunk) + 1
    return Multisegment(segs)


def format_multisegment(m: Multisegment) -> str:
    if not len(m):
        return "0"
    return "+".join(str(s) for s in m)


def parse_point(text: str, units: Optional[dict] = None) -> Point:
    """Parse ``"3"``, ``"-1/2"`` or ``"2@L"``."""
    num, _, name = text.strip().partition("@")
    try:
        x = parse_number(num)
    except ParseError:
        raise ParseError("malformed point", text, 0) from None
    return Point(x, _line_for(name, units))
