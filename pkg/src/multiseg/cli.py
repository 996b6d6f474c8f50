"""Command-line front end.  Every subcommand is a thin adapter over the library."""
from __future__ import annotations

import argparse
import sys
import time

from . import duality, matching, properties, ring, socle, theta
from .core import (IrreducibleParam, Param, ParseError, parse_multisegment, parse_number,
                   parse_point, parse_segment)
from .corpus import CorpusSpec, enumerate_corpus

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _param(args) -> Param:
    return Param(args.param)


def _range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise UsageError(f"expected lo:hi, got {text!r}") from None


def _gamma(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _corpus_spec(args) -> CorpusSpec:
    return CorpusSpec(_range(args.window), args.max_segments, args.max_multiplicity, args.lines)


# -- handlers: each returns (result payload, violations) ----------------------

def cmd_socle(args, mode):
    m = parse_multisegment(args.m)
    side = socle.RIGHT if args.side == "right" else socle.LEFT
    q = socle.SocleQuery(IrreducibleParam(_param(args), m), parse_point(args.c), side, mode)
    out = socle.socle_cosocle(q)
    return {"param": out.param.value, "m": str(out.m)}, []


def cmd_irreducible(args):
    m, c = parse_multisegment(args.m), parse_point(args.c)
    rep, rep_p = matching.matching(m, c), matching.matching_primed(m, c)
    return {"irreducible": socle.is_irreducible_with_cuspidal(m, c),
            "u": rep.u, "u_primed": rep_p.u}, []


def cmd_qc(args):
    m, c = parse_multisegment(args.m), parse_point(args.c)
    out = {"m": str(socle.Q(m, c)), "matching": matching.matching(m, c).as_dict()}
    return out, []


def cmd_sc(args):
    m, c = parse_multisegment(args.m), parse_point(args.c)
    s = socle.S(m, c)
    return {"m": None if s is socle.NOT_IN_IMAGE else str(s),
            "in_image": s is not socle.NOT_IN_IMAGE}, []


def cmd_lprime(args):
    m, c = parse_multisegment(args.m), parse_point(args.c)
    lp = socle.l_prime_invariant(m, c)
    return {"l_prime": lp, "l_sup": socle.l_sup_formula(m, c, c.line.unit_degree)}, []


def cmd_condition_c(args):
    return {"condition_C": socle.condition_C(parse_multisegment(args.m))}, []


def cmd_dual(args):
    m = parse_multisegment(args.m)
    tr = duality.dual_with_trace(m)
    out = {"m": str(tr.result)}
    if args.trace:
        out["steps"] = [{"c": str(c), "peeled": str(p)} for c, p in tr.steps]
    return out, []


def cmd_jacquet(args):
    std = ring.StandardProduct(parse_multisegment(args.std), _param(args))
    return {"terms": ring.jacquet(std, _gamma(args.gamma)).to_json()}, []


def cmd_multiplicity(args):
    std = ring.StandardProduct(parse_multisegment(args.std), _param(args))
    target = [parse_multisegment(t) for t in args.target.split("|")]
    return {"multiplicity": ring.multiplicity(std, target, _gamma(args.gamma))}, []


def cmd_lemme2(args):
    v = ring.lemme2_jac(parse_segment(args.delta), parse_segment(args.delta_p))
    return {"zero": not v, "terms": v.to_json()}, []


def cmd_lsup(args):
    std = ring.StandardProduct(parse_multisegment(args.std), _param(args))
    support = [parse_point(p) for p in args.support.split(",")]
    return {"l_sup": ring.l_sup_standard(std, support)}, []


def cmd_theta(args):
    q = theta.ThetaQuery(parse_multisegment(args.m), args.n, args.M)
    return {"m": str(theta.theta_star(q))}, []


def _sweep_result(name, args):
    spec = _corpus_spec(args)
    corpus = list(enumerate_corpus(spec))
    fn = properties.REGISTRY[name]
    checked, bad, extra = fn(corpus, spec, sweep=_range(args.sweep))
    return {"checked": checked, "violations": len(bad), **extra}, bad


def cmd_check_com(args):
    if args.sweep:
        return _sweep_result("chain-commutation", args)
    if None in (args.m, args.a, args.b, args.c):
        raise UsageError("check-com needs M A B C or --sweep")
    r = theta.lemma_com_check(parse_multisegment(args.m), int(args.a),
                              parse_number(args.b), parse_number(args.c))
    bad = [r.as_dict()] if r.condition_holds and not r.equal else []
    return r.as_dict(), bad


def cmd_check_comb(args):
    if args.sweep:
        return _sweep_result("theta-commutation", args)
    if None in (args.m, args.n, args.M, args.c):
        raise UsageError("check-comb needs M1 N M C or --sweep")
    r = theta.cor_comb_check(parse_multisegment(args.m), int(args.n), int(args.M),
                             parse_number(args.c))
    bad = [r.as_dict()] if r.condition_holds and not r.equal else []
    return {**r.as_dict(), "excluded": r.excluded}, bad


def cmd_enumerate(args):
    return {"items": [str(m) for m in enumerate_corpus(_corpus_spec(args))]}, []


def cmd_check(args):
    suite = tuple(args.suite.split(",")) if args.suite else properties.DEFAULT_SUITE
    try:
        rep = properties.run_properties(_corpus_spec(args), suite)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    return rep.result, rep.violations


def _text(result) -> str:
    if isinstance(result, dict) and set(result) == {"m"}:
        return result["m"]
    lines = []
    for k, v in result.items():
        if isinstance(v, list) and k in ("items", "terms", "steps"):
            lines.append(f"{k}:")
            lines.extend(f"  {item}" for item in v)
        else:
            lines.append(f"{k}: {v}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="multiseg", description=__doc__)
    p.add_argument("--json", action="store_true", help="emit the versioned JSON report")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, handler, *pos, param=False, side=False, corpus=False, help=None):
        sp = sub.add_parser(name, help=help)
        for a in pos:
            if isinstance(a, tuple):
                sp.add_argument(a[0], **a[1])
            else:
                sp.add_argument(a)
        if param:
            sp.add_argument("--param", choices=["langlands", "zelevinsky"], default="langlands")
        if side:
            sp.add_argument("--side", choices=["left", "right"], default="right",
                            help="right: pi x rho, left: rho x pi")
        if corpus:
            sp.add_argument("--window", default="0:4")
            sp.add_argument("--max-segments", type=int, default=4)
            sp.add_argument("--max-multiplicity", type=int, default=2)
            sp.add_argument("--lines", type=int, default=1)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        sp.set_defaults(handler=handler)
        return sp

    add("socle", lambda a: cmd_socle(a, socle.SOCLE), "m", "c", param=True, side=True,
        help="socle of pi x rho (or rho x pi with --side left)")
    add("cosocle", lambda a: cmd_socle(a, socle.COSOCLE), "m", "c", param=True, side=True,
        help="cosocle of pi x rho (or rho x pi with --side left)")
    add("irreducible", cmd_irreducible, "m", "c", help="is <m>^t x nu^c irreducible")
    add("qc", cmd_qc, "m", "c", help="creation operator Q_c with its matching")
    add("sc", cmd_sc, "m", "c", help="annihilation operator S_c")
    add("lprime", cmd_lprime, "m", "c", help="l' and the Jacquet drop n l'")
    add("condition-c", cmd_condition_c, "m", help="socle-uniqueness condition (C)")
    sp = add("dual", cmd_dual, "m", help="Zelevinsky involution")
    sp.add_argument("--trace", action="store_true")
    add("jacquet", cmd_jacquet, "std", "gamma", param=True, help="geometric-lemma Jacquet restriction")
    add("multiplicity", cmd_multiplicity, "std", ("target", {"help": "slots separated by |"}),
        "gamma", param=True, help="coefficient of a tensor term in a Jacquet restriction")
    add("lemme2", cmd_lemme2, "delta", "delta_p", help="Jac_b of <delta, delta'>^t")
    add("lsup", cmd_lsup, "std", ("support", {"help": "comma-separated points"}), param=True,
        help="largest Jacquet drop toward a support")
    add("theta", cmd_theta, "m", ("n", {"type": int}), ("M", {"type": int}), help="theta*_M")
    for name, handler, names in (("check-com", cmd_check_com, ("m", "a", "b", "c")),
                                 ("check-comb", cmd_check_comb, ("m", "n", "M", "c"))):
        sp = add(name, handler, *[(x, {"nargs": "?"}) for x in names], corpus=True)
        sp.add_argument("--sweep", metavar="lo:hi", help="sweep half-integers in [lo, hi] over the corpus; write --sweep=-3:3 for negative bounds")
    add("enumerate", cmd_enumerate, corpus=True, help="list the corpus")
    sp = add("check", cmd_check, corpus=True, help="run invariant suites over the corpus")
    sp.add_argument("--suite", help="comma-separated property names (default: core suite)")
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        result, violations = args.handler(args)
    except (ParseError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = properties.RunReport(argv, time.perf_counter() - start, result, violations)
    if getattr(args, "json", False):
        print(report.to_json())
    else:
        print(_text(result))
        for v in violations[:20]:
            print(f"VIOLATION {v}")
    return EXIT_VIOLATION if violations else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
