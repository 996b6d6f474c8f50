"""Transport of Langlands parameters under the type-II theta lift.

Everything here lives on the line of the absolute value character of
``GL_1``, with half-integer exponents.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import DEFAULT_LINE, Multisegment, Segment, contragredient, half, twist
from .socle import Q, Q_primed


def _check_line(m: Multisegment):
    if any(s.line != DEFAULT_LINE for s in m):
        raise ValueError("theta works on the default character line only")


@dataclass(frozen=True)
class ThetaQuery:
    m_param: Multisegment
    n: int
    M: int

    def __post_init__(self):
        _check_line(self.m_param)
        if self.m_param.degree != self.n:
            raise ValueError(f"parameter has degree {self.m_param.degree}, expected {self.n}")
        if self.M < self.n:
            raise ValueError("theta_star needs M >= n")


def chain(n: int, M: int) -> list[Segment]:
    """Singletons at ``(M-2n-1)/2, (M-2n-3)/2, ..., (-M+1)/2``."""
    top = Fraction(M - 2 * n - 1, 2)
    return [Segment.point(top - k) for k in range(M - n)]


def theta_star(q: ThetaQuery) -> Multisegment:
    shift = Fraction(q.M - q.n, 2)
    return Multisegment(chain(q.n, q.M)) + twist(contragredient(q.m_param), shift)


def _block(a: int, b) -> Multisegment:
    b = half(b)
    return Multisegment(Segment.point(b - k) for k in range(a + 1))


@dataclass(frozen=True)
class CheckResult:
    lhs: Multisegment
    rhs: Multisegment
    equal: bool
    condition_holds: bool

    @property
    def excluded(self) -> bool:
        return not self.condition_holds

    def as_dict(self) -> dict:
        return {"lhs": str(self.lhs), "rhs": str(self.rhs),
                "equal": self.equal, "condition_holds": self.condition_holds}


def lemma_com_check(m_prime: Multisegment, a: int, b, c) -> CheckResult:
    """Compare ``{b, ..., b-a} + socle(<m'>^t x nu^c)`` with
    ``socle(<b, ..., b-a, m'>^t x nu^c)``.

    ``b, ..., b-a`` are ``a + 1`` singleton segments.  Equality is
    guaranteed when ``c`` is neither ``b`` nor ``b - a - 1``.
    """
    _check_line(m_prime)
    b, c = half(b), half(c)
    block = _block(a, b)
    lhs = block + Q(m_prime, c)
    rhs = Q(block + m_prime, c)
    return CheckResult(lhs, rhs, lhs == rhs, c not in (b, b - a - 1))


def cor_comb_check(m1: Multisegment, n: int, M: int, c, p: int = 1) -> CheckResult:
    """Both sides of the theta commutation with ``rho = nu^{-c}`` on ``GL_1``.

    lhs: ``theta*_M`` of the socle of ``rho x <m1>^t``.
    rhs: socle of ``nu^{-1/2} theta*_{M-1}(nu^{-1/2} <m1>^t) x nu^{(M-n)/2} rho~``.
    ``condition_holds`` is False on the two excluded characters.
    """
    if p != 1:
        raise ValueError("only cuspidal characters (p = 1) are supported")
    _check_line(m1)
    c = half(c)
    if m1.degree != n - p:
        raise ValueError(f"m1 must have degree n - p = {n - p}")
    if M < n:
        raise ValueError("need M >= n")
    pi = Q_primed(m1, -c)
    lhs = theta_star(ThetaQuery(pi, n, M))
    half_step = Fraction(-p, 2)
    inner = theta_star(ThetaQuery(twist(m1, half_step), n - p, M - p))
    rhs = Q(twist(inner, half_step), c + Fraction(M - n, 2))
    excluded = -c in (Fraction(n + 1, 2), Fraction(2 * M - n + 1, 2))
    return CheckResult(lhs, rhs, lhs == rhs, not excluded)
