"""Grothendieck-group computations in the basis of standard modules.

A :class:`StandardProduct` is the class of a product of segment
representations (all ``<Δ>^t`` or all ``<Δ>``); its class depends only on
the multiset of factors.  A :class:`GrothVector` is a finitely supported
integer combination of tensor products of such classes.  Jacquet
restrictions are computed with the geometric lemma: a sum over margin
matrices, where each segment factor restricts to a single tensor of
sub-segments.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Multisegment, Param, Point, Segment, precedes, union_intersection


@dataclass(frozen=True)
class StandardProduct:
    factors: Multisegment
    tag: Param = Param.LANGLANDS

    @classmethod
    def of(cls, segs: Iterable[Segment], tag: Param = Param.LANGLANDS) -> "StandardProduct":
        return cls(Multisegment(segs), tag)

    @property
    def degree(self) -> int:
        return self.factors.degree

    def supp(self) -> Counter:
        return self.factors.supp()

    def sort_key(self):
        return (self.tag.value, self.factors.key())

    def __str__(self):
        if not len(self.factors):
            return "1"
        mark = "^t" if self.tag is Param.LANGLANDS else ""
        return " x ".join(f"<{s}>{mark}" for s in self.factors)


def margin_matrices(beta: Sequence[int], gamma: Sequence[int]) -> list[tuple[tuple[int, ...], ...]]:
    """All non-negative integer matrices with row sums ``beta`` and column sums ``gamma``."""
    beta, gamma = tuple(beta), tuple(gamma)
    if any(x < 0 for x in beta + gamma):
        raise ValueError("margins must be non-negative")
    if sum(beta) != sum(gamma):
        raise ValueError(f"margins {beta} and {gamma} have different totals")
    out = []

    def rows_for(total, caps):
        # compositions of ``total`` bounded entrywise by ``caps``
        if not caps:
            if total == 0:
                yield ()
            return
        rest_cap = sum(caps[1:])
        for x in range(max(0, total - rest_cap), min(total, caps[0]) + 1):
            for tail in rows_for(total - x, caps[1:]):
                yield (x,) + tail

    def rec(i, remaining, acc):
        if i == len(beta):
            out.append(tuple(acc))
            return
        for row in rows_for(beta[i], remaining):
            rec(i + 1, tuple(r - x for r, x in zip(remaining, row)), acc + [row])

    rec(0, gamma, [])
    return out


class GrothVector:
    """Integer combination of tensor tuples of :class:`StandardProduct`."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict = {}
        for k, v in (terms or {}).items():
            if v:
                self.terms[k] = v

    @classmethod
    def basis(cls, *slots: StandardProduct) -> "GrothVector":
        return cls({tuple(slots): 1})

    def _combine(self, other, sign):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + sign * v
        return GrothVector(out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return GrothVector({k: -v for k, v in self.terms.items()})

    def __rmul__(self, n: int):
        return GrothVector({k: n * v for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, GrothVector) and self.terms == other.terms

    def __le__(self, other):
        diff = other - self
        return all(v >= 0 for v in diff.terms.values())

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, key) -> int:
        return self.terms.get(tuple(key), 0)

    def items(self):
        """Terms in canonical order."""
        return sorted(self.terms.items(), key=lambda kv: tuple(s.sort_key() for s in kv[0]))

    def to_json(self) -> list:
        return [[v, [str(s.factors) for s in k]] for k, v in self.items()]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, v in self.items():
            body = " (x) ".join(f"({s})" for s in k)
            parts.append(f"{v:+d}*{body}")
        return " ".join(parts)

    __repr__ = __str__


def _split(seg: Segment, row: Sequence[int], tag: Param):
    """Pieces of ``seg`` by slot for one margin-matrix row (degrees)."""
    unit = seg.line.unit_degree
    if any(x % unit for x in row):
        return None
    pieces = []
    if tag is Param.LANGLANDS:
        hi = seg.e
        for x in row:
            n = x // unit
            pieces.append(Segment(hi - n + 1, hi, seg.line) if n else None)
            hi -= n
    else:
        lo = seg.b
        for x in row:
            n = x // unit
            pieces.append(Segment(lo, lo + n - 1, seg.line) if n else None)
            lo += n
    return pieces


def jacquet(std: StandardProduct, gamma: Sequence[int]) -> GrothVector:
    """Jacquet restriction of ``std`` to the composition ``gamma`` (degrees)."""
    gamma = tuple(gamma)
    if sum(gamma) != std.degree or any(x < 0 for x in gamma):
        raise ValueError(f"composition {gamma} incompatible with degree {std.degree}")
    segs = std.factors.items
    beta = [s.degree for s in segs]
    out: dict = {}
    for mat in margin_matrices(beta, gamma):
        split = [_split(s, row, std.tag) for s, row in zip(segs, mat)]
        if any(p is None for p in split):
            continue
        key = tuple(
            StandardProduct(Multisegment(p[col] for p in split if p[col] is not None), std.tag)
            for col in range(len(gamma))
        )
        out[key] = out.get(key, 0) + 1
    return GrothVector(out)


def jacquet_vector(v: GrothVector, gamma: Sequence[int]) -> GrothVector:
    """Extend :func:`jacquet` linearly to single-slot vectors."""
    out = GrothVector()
    for key, coeff in v.terms.items():
        if len(key) != 1:
            raise ValueError("jacquet_vector expects single-slot terms")
        if key[0].degree != sum(gamma):
            continue
        out = out + coeff * jacquet(key[0], gamma)
    return out


def _support_of(points) -> Counter:
    out: Counter = Counter()
    for p in points:
        out[p if isinstance(p, Point) else Point(p)] += 1
    return out


def jac_filter(v: GrothVector, end_support, side: str = "right") -> GrothVector:
    """Keep the terms whose right (or left) slot has cuspidal support ``end_support``."""
    want = _support_of(end_support)
    slot = {"right": -1, "left": 0}[side]
    out = {}
    for key, coeff in v.terms.items():
        if len(key) != 2:
            raise ValueError("jac_filter expects two-slot terms")
        if key[slot].supp() == want:
            out[key] = coeff
    return GrothVector(out)


def multiplicity(std: StandardProduct, target, gamma: Sequence[int]) -> int:
    """Coefficient of ``target`` in ``jacquet(std, gamma)``; slots compare as factor multisets."""
    key = tuple(
        StandardProduct(t.factors if isinstance(t, StandardProduct) else Multisegment(t), std.tag)
        for t in target
    )
    return jacquet(std, gamma).coefficient(key)


def lemme2_jac(delta: Segment, delta_p: Segment) -> GrothVector:
    """Right-``b(delta)`` part of the Jacquet module of ``<delta, delta_p>^t``.

    Computed as the standard product minus its submodule
    ``<delta ∪ delta_p>^t x <delta ∩ delta_p>^t``.
    """
    if not precedes(delta, delta_p):
        raise ValueError(f"{delta} does not precede {delta_p}")
    union, inter = union_intersection(delta, delta_p)
    std = StandardProduct.of([delta, delta_p])
    sub = StandardProduct.of([union] + ([inter] if inter else []))
    n = delta.line.unit_degree
    gamma = (std.degree - n, n)
    bottom = [Point(delta.b, delta.line)]
    return jac_filter(jacquet(std, gamma), bottom) - jac_filter(jacquet(sub, gamma), bottom)




def l_sup_standard(std, support) -> int:
    """Largest ``i`` such that the ``(total - i, i)`` Jacquet restriction has a
    term whose right slot has support inside the set ``support``.

    ``std`` may also be a single-slot :class:`GrothVector` (a virtual
    combination of standard classes); the filtered restriction is then
    required to be non-zero.
    """
    allowed = set(_support_of(support))
    v = std if isinstance(std, GrothVector) else GrothVector.basis(std)
    degrees = {k[0].degree for k in v.terms}
    if len(degrees) > 1:
        raise ValueError("mixed degrees")
    if not degrees:
        return 0
    total = degrees.pop()
    # the right slot can only use points of the support lying in ``allowed``
    cap = max(sum(k * p.line.unit_degree for p, k in key[0].supp().items() if p in allowed)
              for key in v.terms)
    for i in range(cap, 0, -1):
        res = jacquet_vector(v, (total - i, i))
        kept = GrothVector({k: c for k, c in res.terms.items() if set(k[1].supp()) <= allowed})
        if kept:
            return i
    return 0


def cons_hypothesis(factors: Sequence[Segment], tag: Param = Param.LANGLANDS) -> bool:
    """Support criterion guaranteeing that ``ρ_1 ⊗ ... ⊗ ρ_r`` occurs once in
    the Jacquet module of the ordered product ``ρ_1 x ... x ρ_r``.

    For every factor and every two-piece restriction ``σ1 ⊗ σ2`` of it,
    either ``supp σ1`` is not inside the union of supports of the earlier
    factors, or ``supp σ2`` is not inside that of the later ones.
    """
    supports = [set(s.points()) for s in factors]
    for i, seg in enumerate(factors):
        before = set().union(*supports[:i])
        after = set().union(*supports[i + 1:])
        unit = seg.line.unit_degree
        for k in range(seg.length + 1):
            pieces = _split(seg, (k * unit, (seg.length - k) * unit), tag)
            s1 = set(pieces[0].points()) if pieces[0] else set()
            s2 = set(pieces[1].points()) if pieces[1] else set()
            if s1 <= before and s2 <= after:
                return False
    return True


def ordered_multiplicity(factors: Sequence[Segment], tag: Param = Param.LANGLANDS) -> int:
    """Multiplicity of ``ρ_1 ⊗ ... ⊗ ρ_r`` in the restriction of their product to ``β``."""
    std = StandardProduct.of(factors, tag)
    beta = [s.degree for s in factors]
    return multiplicity(std, [Multisegment([s]) for s in factors], beta)


def virtual_class(segs: Sequence[Segment], pairs: Sequence[tuple[Segment, Segment]],
                  tag: Param = Param.LANGLANDS) -> GrothVector:
    """Class of ``<s_1> x ... x <s_k> x <Δ_1, Δ'_1> x ...`` in the standard basis.

    Each two-segment irreducible ``<Δ, Δ'>`` with ``Δ`` preceding ``Δ'`` is
    expanded as ``<Δ> x <Δ'> - <Δ ∪ Δ'> x <Δ ∩ Δ'>``.
    """
    v = {tuple(segs): 1}
    for a, b in pairs:
        union, inter = union_intersection(a, b)
        nxt: dict = {}
        for base, coeff in v.items():
            for extra, sign in (((a, b), 1), ((union,) + ((inter,) if inter else ()), -1)):
                k = base + extra
                nxt[k] = nxt.get(k, 0) + sign * coeff
        v = nxt
    out = GrothVector()
    for k, c in v.items():
        out = out + c * GrothVector.basis(StandardProduct.of(k, tag))
    return out
