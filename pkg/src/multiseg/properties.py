"""Invariant suites run over an enumerated corpus.

Each property returns ``(checked, violations, extra)``.  Operators are
looked up through their modules at call time so a test can substitute a
corrupted one and watch the suite catch it.
"""
from __future__ import annotations

import json
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Callable

from . import duality, matching as matching_mod, ring, socle, theta
from .core import (Line, Multisegment, Param, IrreducibleParam, Segment, linked,
                   precedes, reflect)
from .corpus import CorpusSpec, DEFAULT_CORPUS, enumerate_corpus, window_segments

SCHEMA = "multiseg.report/1"

REGISTRY: dict[str, Callable] = {}
DESCRIPTIONS: dict[str, str] = {}


def prop(name: str, doc: str):
    def deco(fn):
        REGISTRY[name] = fn
        DESCRIPTIONS[name] = doc
        return fn
    return deco


def _points(spec: CorpusSpec):
    lo, hi = spec.window
    return range(lo - 1, hi + 2)


def _v(name, **detail):
    return {"property": name, **{k: str(v) for k, v in detail.items()}}


# -- duality ------------------------------------------------------------------

@prop("involution", "dual(dual(m)) = m")
def p_involution(corpus, spec):
    bad = []
    for m in corpus:
        d = duality.dual(m)
        if duality.dual(d) != m:
            bad.append(_v("involution", m=m, dual=d, dual_dual=duality.dual(d)))
    return len(corpus), bad, {}


@prop("dual-singletons", "dual({Δ}) is the multiset of singletons of Δ")
def p_dual_singletons(corpus, spec):
    bad = []
    segs = window_segments(spec)
    for s in segs:
        want = Multisegment(Segment.point(p) for p in s.points())
        got = duality.dual(Multisegment([s]))
        if got != want:
            bad.append(_v("dual-singletons", segment=s, got=got))
    return len(segs), bad, {}


@prop("dual-support", "dual preserves cuspidal support and degree")
def p_dual_support(corpus, spec):
    bad = []
    for m in corpus:
        d = duality.dual(m)
        if d.supp() != m.supp() or d.degree != m.degree:
            bad.append(_v("dual-support", m=m, dual=d))
    return len(corpus), bad, {}


@prop("dual-reflect", "dual commutes with the contragredient")
def p_dual_reflect(corpus, spec):
    bad = []
    for m in corpus:
        if duality.dual(reflect(m)) != reflect(duality.dual(m)):
            bad.append(_v("dual-reflect", m=m))
    return len(corpus), bad, {}


@prop("dual-trace", "replaying the peeling trace rebuilds input and result")
def p_dual_trace(corpus, spec):
    bad = []
    for m in corpus:
        tr = duality.dual_with_trace(m)
        if tr.replay_source() != m or tr.replay_result() != tr.result:
            bad.append(_v("dual-trace", m=m))
    return len(corpus), bad, {}


@prop("peel-independence", "peeling at a random admissible point gives the same dual")
def p_peel(corpus, spec):
    rng = random.Random(20240229)
    bad = []
    for m in corpus:
        if duality.dual_random_peel(m, rng) != duality.dual(m):
            bad.append(_v("peel-independence", m=m))
    return len(corpus), bad, {}


@prop("dual-lines", "dual factors over lines")
def p_dual_lines(corpus, spec):
    other = Line("Z")
    bad = []
    for m in corpus:
        moved = Multisegment(Segment(s.b, s.e, other) for s in m)
        d = duality.dual(m)
        d_moved = Multisegment(Segment(s.b, s.e, other) for s in d)
        if duality.dual(m + moved) != d + d_moved:
            bad.append(_v("dual-lines", m=m))
    return len(corpus), bad, {}


# -- operators ----------------------------------------------------------------

@prop("qs-identity", "Q_c(S_c(m)) = m whenever S_c(m) is defined")
def p_qs(corpus, spec):
    bad, n = [], 0
    for m in corpus:
        for c in _points(spec):
            s = socle.S(m, c)
            if s is socle.NOT_IN_IMAGE:
                continue
            n += 1
            if socle.Q(s, c) != m:
                bad.append(_v("qs-identity", m=m, c=c, S=s, QS=socle.Q(s, c)))
    return n, bad, {}


@prop("lprime-shift", "l'(Q_c m) = l'(m) + 1 and l'(S_c m) = l'(m) - 1")
def p_lprime(corpus, spec):
    bad, n = [], 0
    lp = socle.l_prime_invariant
    for m in corpus:
        for c in _points(spec):
            n += 1
            base = lp(m, c)
            if lp(socle.Q(m, c), c) != base + 1:
                bad.append(_v("lprime-shift", m=m, c=c, op="Q"))
            s = socle.S(m, c)
            if s is not socle.NOT_IN_IMAGE and lp(s, c) != base - 1:
                bad.append(_v("lprime-shift", m=m, c=c, op="S"))
    return n, bad, {}


@prop("candidates", "Q_c(m) is a candidate; the other candidates keep l'; list sizes are u+1, u'+1")
def p_candidates(corpus, spec):
    bad, n = [], 0
    lp = socle.l_prime_invariant
    for m in corpus:
        for c in _points(spec):
            n += 1
            q = socle.Q(m, c)
            cands = matching_mod.candidates_socle(m, c)
            if q not in cands:
                bad.append(_v("candidates", m=m, c=c, Q=q))
            base = lp(m, c)
            for w in cands:
                if w != q and lp(w, c) != base:
                    bad.append(_v("candidates", m=m, c=c, candidate=w))
            if len(cands) != matching_mod.matching(m, c).u + 1:
                bad.append(_v("candidates", m=m, c=c, size=len(cands)))
            qc = matching_mod.candidates_quotient(m, c)
            if len(qc) != matching_mod.matching_primed(m, c).u + 1 or socle.Q_primed(m, c) not in qc:
                bad.append(_v("candidates", m=m, c=c, quotient=qc))
    return n, bad, {}


@prop("support-shift", "supp(Q_c m) = supp(m) + {c}, supp(S_c m) = supp(m) - {c}")
def p_support_shift(corpus, spec):
    bad, n = [], 0
    for m in corpus:
        for c in _points(spec):
            n += 1
            pt = Segment.point(c).points()[0]
            base = m.supp()
            plus = base.copy()
            plus[pt] += 1
            if socle.Q(m, c).supp() != plus:
                bad.append(_v("support-shift", m=m, c=c, op="Q"))
            s = socle.S(m, c)
            if s is not socle.NOT_IN_IMAGE:
                minus = base.copy()
                minus[pt] -= 1
                if s.supp() != +minus:
                    bad.append(_v("support-shift", m=m, c=c, op="S"))
    return n, bad, {}


@prop("matching-invariants", "family sizes, disjointness and precedence of matched pairs")
def p_matching_inv(corpus, spec):
    bad, n = [], 0
    for m in corpus:
        for c in _points(spec):
            for rep in (matching_mod.matching(m, c), matching_mod.matching_primed(m, c)):
                n += 1
                fam = list(rep.k) + list(rep.h) + list(rep.l) + list(rep.s)
                ok = rep.w <= rep.t and len(fam) == len(set(fam))
                ok = ok and rep.l_prime == rep.t - rep.w == len(rep.s)
                for kv, hv in zip(rep.k, rep.h):
                    a, b = (m[hv], m[kv]) if rep.primed else (m[kv], m[hv])
                    ok = ok and precedes(a, b)
                if not ok:
                    bad.append(_v("matching-invariants", m=m, c=c, primed=rep.primed))
    return n, bad, {}


def _segment_view(m, rep, flip=False):
    f = (lambda s: s.reflect()) if flip else (lambda s: s)
    pairs = sorted((f(m[a]).sort_key(), f(m[b]).sort_key()) for a, b in zip(rep.k, rep.h))
    free = [f(m[p]).sort_key() for p in rep.l]
    unmatched = sorted(f(m[p]).sort_key() for p in rep.s)
    return pairs, sorted(free), free[:1], unmatched, (rep.t, rep.w, rep.u, rep.l_prime)


@prop("mirror", "primed rule equals the contragredient of the unprimed rule")
def p_mirror(corpus, spec):
    bad, n = [], 0
    for m in corpus:
        r = reflect(m)
        for c in _points(spec):
            n += 1
            if socle.Q_primed(m, c) != reflect(socle.Q(r, -c)):
                bad.append(_v("mirror", m=m, c=c, op="Q'"))
            mine = _segment_view(m, matching_mod.matching_primed(m, c))
            theirs = _segment_view(r, matching_mod.matching(r, -c), flip=True)
            if mine != theirs:
                bad.append(_v("mirror", m=m, c=c, op="matching"))
    return n, bad, {}


@prop("side-exchange", "socle(pi x rho) = cosocle(rho x pi), checked through the contragredient path")
def p_side_exchange(corpus, spec):
    Q = socle.SocleQuery
    bad, n = [], 0
    for m in corpus:
        for c in _points(spec):
            for tag in Param:
                n += 1
                pi = IrreducibleParam(tag, m)
                r_soc = socle.socle_cosocle(Q(pi, c, socle.RIGHT, socle.SOCLE))
                l_cos = socle.socle_cosocle(Q(pi, c, socle.LEFT, socle.COSOCLE))
                r_cos = socle.socle_cosocle(Q(pi, c, socle.RIGHT, socle.COSOCLE))
                l_soc = socle.socle_cosocle(Q(pi, c, socle.LEFT, socle.SOCLE))
                # contragredient exchanges socle and cosocle of pi x rho
                dual_pi = IrreducibleParam(tag, reflect(m))
                via = socle.socle_cosocle(Q(dual_pi, -c, socle.RIGHT, socle.SOCLE)).m
                if r_soc != l_cos or r_cos != l_soc or reflect(via) != r_cos.m:
                    bad.append(_v("side-exchange", m=m, c=c, tag=tag.value))
    return n, bad, {}


@prop("irreducible-single", "for one segment, pi x nu^c is irreducible iff [c,c] is unlinked with it")
def p_irred(corpus, spec):
    bad, n = [], 0
    for s in window_segments(spec):
        for c in _points(spec):
            n += 1
            got = socle.is_irreducible_with_cuspidal(Multisegment([s]), c)
            if got != (not linked(s, Segment.point(c))):
                bad.append(_v("irreducible-single", segment=s, c=c))
    return n, bad, {}


@prop("permutation", "results do not depend on the input order of equal segments")
def p_permutation(corpus, spec):
    rng = random.Random(7)
    bad, n = [], 0
    for m in corpus:
        items = list(m.items)
        rng.shuffle(items)
        other = Multisegment(items)
        n += 1
        same = other == m and duality.dual(other) == duality.dual(m)
        for c in _points(spec):
            same = same and socle.Q(other, c) == socle.Q(m, c)
            same = same and socle.S(other, c) == socle.S(m, c)
            same = same and socle.Q_primed(other, c) == socle.Q_primed(m, c)
        if not same:
            bad.append(_v("permutation", m=m))
    return n, bad, {}


# -- Grothendieck group -------------------------------------------------------

@prop("margins", "margin matrices: exact margins, k! tables for unit margins up to k = 5")
def p_margins(corpus, spec):
    bad, n = [], 0
    for k in range(1, 6):
        mats = ring.margin_matrices((1,) * k, (1,) * k)
        n += 1
        if len(mats) != math.factorial(k) or len(set(mats)) != len(mats):
            bad.append(_v("margins", k=k, count=len(mats)))
    for beta, gamma in [((2, 1), (1, 1, 1)), ((3, 2), (2, 2, 1)), ((2, 2, 1), (4, 1))]:
        for mat in ring.margin_matrices(beta, gamma):
            n += 1
            rows = tuple(sum(r) for r in mat)
            cols = tuple(sum(col) for col in zip(*mat))
            if rows != beta or cols != gamma:
                bad.append(_v("margins", matrix=mat))
    return n, bad, {}


def _compositions(total):
    yield (total,)
    for i in range(1, total):
        yield (total - i, i)
    if total <= 5:
        yield (1,) * total


@prop("support-conservation", "every Jacquet term splits the support of the product (<= 3 factors)")
def p_support_cons(corpus, spec):
    bad, n = [], 0
    for m in corpus:
        if len(m) > 3:
            continue
        for tag in Param:
            std = ring.StandardProduct(m, tag)
            for gamma in _compositions(std.degree):
                for key in ring.jacquet(std, gamma).terms:
                    n += 1
                    total = sum((s.supp() for s in key), start=type(std.supp())())
                    degrees = tuple(s.degree for s in key)
                    if total != std.supp() or degrees != gamma:
                        bad.append(_v("support-conservation", m=m, gamma=gamma, term=key))
    return n, bad, {}


@prop("multiplicity-one", "support criterion implies multiplicity one of the diagonal term")
def p_multiplicity_one(corpus, spec):
    bad, n, certified = [], 0, 0
    for m in corpus:
        if len(m) > 3:
            continue
        for order in set(permutations(m.items)):
            for tag in Param:
                n += 1
                if ring.cons_hypothesis(order, tag):
                    certified += 1
                    if ring.ordered_multiplicity(order, tag) != 1:
                        bad.append(_v("multiplicity-one", order=list(map(str, order)), tag=tag.value))
    return n, bad, {"certified": certified}


@prop("lemme2", "Jac_b of <Δ, Δ'>^t vanishes iff b(Δ') = b(Δ) + 1, coordinates in [-3, 3]")
def p_lemme2(corpus, spec):
    segs = [Segment(b, e) for b in range(-3, 4) for e in range(b, 4)]
    bad, n = [], 0
    for a in segs:
        for b in segs:
            if not precedes(a, b):
                continue
            n += 1
            zero = not ring.lemme2_jac(a, b)
            if zero != (b.b == a.b + 1):
                bad.append(_v("lemme2", delta=a, delta_p=b))
    return n, bad, {}


def segment_product_class(m, c):
    """Class of ``V_1 x ... x V_r``: matched pairs fused into two-segment irreducibles."""
    rep = matching_mod.matching(m, c)
    paired = set(rep.k) | set(rep.h)
    singles = [m[p] for p in range(len(m)) if p not in paired]
    pairs = [(m[k], m[h]) for k, h in zip(rep.k, rep.h)]
    return ring.virtual_class(singles, pairs), rep


@prop("drop-formula", "Jacquet drop of V_1 x ... x V_r toward {nu^c} equals n l'")
def p_drop_formula(corpus, spec):
    bad, n = [], 0
    for m in corpus:
        for c in _points(spec):
            n += 1
            v, rep = segment_product_class(m, c)
            unit = Segment.point(c).line.unit_degree
            if ring.l_sup_standard(v, [c]) != unit * rep.l_prime:
                bad.append(_v("drop-formula", m=m, c=c))
    return n, bad, {}


# -- theta --------------------------------------------------------------------

def _halves(lo, hi):
    return [Fraction(k, 2) for k in range(2 * lo, 2 * hi + 1)]


@prop("chain-commutation", "socle commutes with adjoining the chain b, ..., b-a when c is not b or b-a-1")
def p_lemma_com(corpus, spec, sweep=(-3, 3), max_degree=4, max_a=3):
    bad, fails, n = [], [], 0
    hs = _halves(*sweep)
    for m in corpus:
        if m.degree > max_degree:
            continue
        for a in range(max_a + 1):
            for b in hs:
                for c in hs:
                    n += 1
                    r = theta.lemma_com_check(m, a, b, c)
                    if r.equal:
                        continue
                    row = {"m_prime": str(m), "a": a, "b": str(b), "c": str(c), **r.as_dict()}
                    (bad if r.condition_holds else fails).append(
                        {"property": "chain-commutation", **{k: str(v) for k, v in row.items()}})
    return n, bad, {"excluded_failures": len(fails), "examples": fails[:5]}


@prop("theta-commutation", "theta*_M(socle(rho x pi_1)) agrees with the lifted socle unless excluded")
def p_cor_comb(corpus, spec, sweep=(-3, 3), max_n=3, extra=3):
    bad, fails, n = [], [], 0
    hs = _halves(*sweep)
    for m in corpus:
        deg = m.degree + 1
        if deg > max_n:
            continue
        for M in range(deg, deg + extra + 1):
            for c in hs:
                n += 1
                r = theta.cor_comb_check(m, deg, M, c)
                if r.equal:
                    continue
                row = {"property": "theta-commutation", "m1": str(m), "n": str(deg), "M": str(M),
                       "c": str(c), **{k: str(v) for k, v in r.as_dict().items()}}
                (bad if r.condition_holds else fails).append(row)
    return n, bad, {"excluded_failures": len(fails), "examples": fails[:5]}


@prop("theta-shape", "theta* has degree M, reduces to the contragredient at M = n, chain is rangé")
def p_theta_shape(corpus, spec):
    bad, n = [], 0
    for m in corpus:
        if m.degree > 4:
            continue
        for M in range(m.degree, m.degree + 4):
            n += 1
            out = theta.theta_star(theta.ThetaQuery(m, m.degree, M))
            ch = theta.chain(m.degree, M)
            ok = out.degree == M
            ok = ok and (M != m.degree or out == reflect(m))
            ok = ok and not any(precedes(ch[i], ch[j]) for i in range(len(ch)) for j in range(i + 1, len(ch)))
            if not ok:
                bad.append(_v("theta-shape", m=m, M=M))
    return n, bad, {}


# -- driver -------------------------------------------------------------------

DEFAULT_SUITE = (
    "involution", "dual-singletons", "dual-support", "dual-reflect", "dual-trace",
    "peel-independence", "qs-identity", "lprime-shift", "candidates", "support-shift",
    "matching-invariants", "mirror", "side-exchange", "irreducible-single", "permutation",
    "margins", "lemme2",
)


@dataclass
class RunReport:
    command: list
    elapsed: float
    result: dict
    violations: list = field(default_factory=list)
    schema: str = SCHEMA

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {"schema": self.schema, "command": self.command, "elapsed": round(self.elapsed, 6),
                "result": self.result, "violations": self.violations}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)


def run_properties(spec: CorpusSpec = DEFAULT_CORPUS, suite=DEFAULT_SUITE,
                   command=None, max_violations: int = 50) -> RunReport:
    unknown = [s for s in suite if s not in REGISTRY]
    if unknown:
        raise KeyError(f"unknown properties: {', '.join(unknown)}")
    start = time.perf_counter()
    corpus = list(enumerate_corpus(spec))
    result, violations = {}, []
    for name in suite:
        checked, bad, extra = REGISTRY[name](corpus, spec)
        result[name] = {"checked": checked, "violations": len(bad), **extra}
        violations.extend(bad[:max_violations])
    return RunReport(command or ["check", *suite], time.perf_counter() - start, result, violations)
