"""Command-line front end.

Exit codes: 0 success, 1 verification failures, 2 usage or configuration
errors (including an element outside the centralizer).
"""

from __future__ import annotations

import argparse
import importlib
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .errors import ConfigurationError, NotInCentralizerError, QSuperError

MAX_K = 4
MAX_DEGREE_SUM = 8
# the independence witness is symbolic only, so it gets its own bounds
MAX_S = 4
MAX_XS_N = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


# --- suites ---------------------------------------------------------------

def _independence(s: int, N: int, M: int | None = None):
    from .grsym import XsSubstitution, xs_independence_check

    return xs_independence_check(XsSubstitution(s, N, M))


def _task(module: str, func: str, **kwargs):
    return (module, func, tuple(sorted(kwargs.items())))


def desk_profile(seed: int) -> dict[str, list[tuple]]:
    """Suite name -> tasks at the acceptance sizes."""
    fg, ce, ya, gs = "qyangian.fgen", "qyangian.centralizer", "qyangian.yangian", "qyangian.grsym"
    contexts = [(0, 1), (1, 1), (1, 2), (2, 1)]
    return {
        "bracket": [_task("qyangian.core", "verify_bracket", K=2)],
        "fnr": [_task(fg, "verify_fnr", K=K, nmax=4) for K in (1, 2)],
        "prop31": [
            _task(fg, "verify_prop31", K=1, mmax=4, nmax=4),
            _task(fg, "verify_prop31", K=2, mmax=3, nmax=3),
        ],
        "defrel": [
            _task(fg, "verify_defrel", K=1, mmax=4, nmax=4),
            _task(fg, "verify_defrel", K=2, mmax=3, nmax=3),
        ],
        "central": [_task(fg, "verify_centrality", K=K) for K in (1, 2, 3)],
        "prop14": [_task(ce, "verify_prop14", N=N, M=M, nmax=3) for N, M in contexts],
        "alpha_hom": [
            _task(ce, "verify_alpha_homomorphism", N=N, M=M, sample_count=25, seed=seed)
            for N, M in contexts
        ],
        "omega": [_task(ya, "verify_omega_correspondence", N=N, mmax=2, nmax=2) for N in (1, 2)],
        "series": [_task(ya, "verify_series_equivalence", N=1, degmax=4)],
        "tau": [
            _task(ya, "verify_tau_relations", N=1, M=M, degmax=4) for M in (0, 1, 2)
        ],
        "coassoc": [_task(ya, "verify_coassociativity", N=N, nmax=3) for N in (1, 2)],
        "primitive": [_task(ya, "verify_primitive", N=N) for N in (1, 2)],
        "phipsi": [_task(gs, "verify_phi_psi", n=n, K=K) for K in (1, 2) for n in (1, 2, 3)],
        "eh": [_task(gs, "verify_eh", n=n, K=K) for K in (1, 2) for n in (1, 2, 3)],
        "vanish": [
            _task(gs, "verify_vanishing_sums", n=n, K=K) for K in (1, 2) for n in (1, 2, 3, 4)
        ],
        "independence": [
            _task("qyangian.cli", "_independence", s=s, N=N)
            for s, N in ((1, 1), (2, 1), (3, 1), (2, 2))
        ],
    }


PROFILES = {"desk": desk_profile}


def run_task(task: tuple):
    module, func, kwargs = task
    return getattr(importlib.import_module(module), func)(**dict(kwargs))


def run_tasks(tasks: list[tuple], jobs: int) -> list:
    if jobs <= 1 or len(tasks) <= 1:
        return [run_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_task, tasks))


# --- output ---------------------------------------------------------------

def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _emit_value(value, fmt: str) -> None:
    if fmt == "json":
        print(_dump(value.to_dict()))
    else:
        print(str(value))


def _emit_reports(reports: list, fmt: str) -> int:
    ok = all(r.ok for r in reports)
    if fmt == "json":
        print(_dump({"ok": ok, "reports": [r.to_dict() for r in reports]}))
    else:
        for r in reports:
            print(r.summary())
            for f in r.failures[:10]:
                print(f"  failing {f.tuple}")
            if len(r.failures) > 10:
                print(f"  ... {len(r.failures) - 10} more")
    return 0 if ok else 1


def _read_json():
    text = sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"standard input is not valid JSON: {exc}") from None


# --- bounds ---------------------------------------------------------------

def _bounds(args) -> None:
    if getattr(args, "unsafe_large", False):
        return
    sizes = []
    if getattr(args, "K", None) is not None:
        sizes.append(args.K)
    if getattr(args, "N", None) is not None:
        sizes.append(args.N + (getattr(args, "M", None) or 0))
    if args.verb == "sym" and getattr(args, "what", None) == "independence":
        sizes = []  # X_s lives in a large S(q_K) but never needs U(q_K)
        if args.s > MAX_S or args.N > MAX_XS_N:
            raise ConfigurationError(
                f"independence is bounded by s <= {MAX_S}, N <= {MAX_XS_N}; pass --unsafe-large"
            )
    for k in sizes:
        if k > MAX_K:
            raise ConfigurationError(f"algebra size {k} exceeds {MAX_K}; pass --unsafe-large")
    degs = [getattr(args, a, None) for a in ("nmax", "mmax")]
    if sum(d for d in degs if d) > MAX_DEGREE_SUM:
        raise ConfigurationError(f"nmax + mmax exceeds {MAX_DEGREE_SUM}; pass --unsafe-large")
    for a in ("n", "m", "degmax"):
        v = getattr(args, a, None)
        if v is not None and v > MAX_DEGREE_SUM:
            raise ConfigurationError(f"--{a} exceeds {MAX_DEGREE_SUM}; pass --unsafe-large")


# --- verbs ----------------------------------------------------------------

def _cmd_f(args) -> int:
    from .fgen import f_element

    _emit_value(f_element(args.i, args.j, args.n, args.K), args.format)
    return 0


def _cmd_c(args) -> int:
    from .fgen import c_element

    _emit_value(c_element(args.n, args.K), args.format)
    return 0


def _cmd_bracket(args) -> int:
    from .core import bracket_generators, canonicalize

    K = args.K
    out = bracket_generators(canonicalize(K, args.i, args.j), canonicalize(K, args.k, args.l))
    _emit_value(out, args.format)
    return 0


def _cmd_mul(args) -> int:
    from .pbw import Element, multiply

    data = _read_json()
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list) or not data:
        raise ConfigurationError("mul expects a JSON list of elements")
    elems = [Element.from_dict(d) for d in data]
    out = elems[0]
    for e in elems[1:]:
        out = multiply(out, e)
    _emit_value(out, args.format)
    return 0


def _cmd_alpha(args) -> int:
    from .centralizer import CentralizerContext, alpha_projection
    from .pbw import Element

    ctx = CentralizerContext(args.N, args.M)
    a = Element.from_dict(_read_json())
    if a.K != ctx.K:
        raise ConfigurationError(f"element lives in q_{a.K}, expected q_{ctx.K}")
    _emit_value(alpha_projection(a, ctx), args.format)
    return 0


def _cmd_yang(args) -> int:
    from . import yangian as Y

    if args.action == "expand":
        what = args.what
        if what == "rel":
            out = Y.yang_relation_coeff(args.m, args.n, args.i, args.j, args.k, args.l, args.N)
        elif what == "defrel":
            out = Y.defrel_element(args.m, args.n, args.i, args.j, args.k, args.l, args.N)
        elif what == "omega":
            out = Y.omega_image(
                Y.defrel_element(args.m, args.n, args.i, args.j, args.k, args.l, args.N)
            )
        elif what == "comult":
            out = Y.comult_coeff(args.i, args.j, args.n, args.N)
        elif what == "tau":
            out = Y.tau_image(args.i, args.j, args.n, args.N, args.M)
        else:
            raise ConfigurationError(f"unknown expansion {what!r}")
        _emit_value(out, args.format)
        return 0
    what = args.what
    if what == "omega":
        rep = Y.verify_omega_correspondence(args.N, args.mmax, args.nmax)
    elif what == "tau":
        rep = Y.verify_tau_relations(args.N, args.M, args.degmax)
    elif what == "series":
        rep = Y.verify_series_equivalence(args.N, args.degmax)
    elif what == "coassoc":
        rep = Y.verify_coassociativity(args.N, args.nmax)
    elif what == "primitive":
        rep = Y.verify_primitive(args.N)
    else:
        raise ConfigurationError(f"unknown suite {what!r}")
    return _emit_reports([rep], args.format)


def _cmd_sym(args) -> int:
    from . import grsym as G
    from .core import canonicalize
    from .pbw import Element

    if args.action == "symbol":
        a = Element.from_dict(_read_json())
        out = G.symbol(a, args.n) if args.n is not None else G.leading_symbol(a)
        _emit_value(out, args.format)
        return 0
    if args.action == "phi":
        _emit_value(G.phi_map(G.TensorElement.from_dict(_read_json())), args.format)
        return 0
    if args.action == "psi":
        data = _read_json()
        if not isinstance(data, list) or not data:
            raise ConfigurationError("psi expects a JSON list of generators")
        gens = []
        for g in data:
            i, j = (g["i"], g["j"]) if isinstance(g, dict) else g
            gens.append(canonicalize(args.K, int(i), int(j)))
        _emit_value(G.psi_map(gens), args.format)
        return 0
    what = args.what
    if what == "eh":
        rep = G.verify_eh(args.n, args.K)
    elif what == "vanish":
        rep = G.verify_vanishing_sums(args.n, args.K)
    elif what == "phipsi":
        rep = G.verify_phi_psi(args.n, args.K)
    elif what == "independence":
        rep = _independence(args.s, args.N, args.M)
    else:
        raise ConfigurationError(f"unknown suite {what!r}")
    return _emit_reports([rep], args.format)


def _cmd_verify_all(args) -> int:
    profile = PROFILES[args.profile](args.seed)
    names = list(profile)
    if args.only:
        names = [x.strip() for x in args.only.split(",") if x.strip()]
        unknown = [x for x in names if x not in profile]
        if unknown:
            raise ConfigurationError(f"unknown suites {unknown}; known: {sorted(profile)}")
    tasks = [t for name in names for t in profile[name]]
    if args.jobs < 1:
        raise ConfigurationError("--jobs must be at least 1")
    return _emit_reports(run_tasks(tasks, args.jobs), args.format)


# --- parser ---------------------------------------------------------------

def _common(p: argparse.ArgumentParser, *flags: str, required: Sequence[str] = ()) -> None:
    for f in flags:
        p.add_argument(f"--{f}", type=int, required=f in required, default=None)
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.add_argument("--unsafe-large", action="store_true", dest="unsafe_large")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qyangian", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("f", help="F(n)_ij in U(q_K)")
    _common(p, "K", "i", "j", "n", required=("K", "i", "j", "n"))
    p.set_defaults(func=_cmd_f)

    p = sub.add_parser("c", help="C(n) in U(q_K)")
    _common(p, "K", "n", required=("K", "n"))
    p.set_defaults(func=_cmd_c)

    p = sub.add_parser("bracket", help="[F_ij, F_kl] in q_K")
    _common(p, "K", "i", "j", "k", "l", required=("K", "i", "j", "k", "l"))
    p.set_defaults(func=_cmd_bracket)

    p = sub.add_parser("mul", help="product of a JSON list of elements read from stdin")
    _common(p)
    p.set_defaults(func=_cmd_mul)

    p = sub.add_parser("alpha", help="centralizer projection of a JSON element from stdin")
    _common(p, "N", "M", required=("N", "M"))
    p.set_defaults(func=_cmd_alpha)

    p = sub.add_parser("yang", help="Yangian relations, maps and suites")
    ysub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = ysub.add_parser("expand")
    q.add_argument("what", choices=("rel", "defrel", "omega", "comult", "tau"))
    _common(q, "N", "M", "i", "j", "k", "l", "m", "n", required=("N",))
    q.set_defaults(func=_cmd_yang)
    q = ysub.add_parser("verify")
    q.add_argument("what", choices=("omega", "tau", "series", "coassoc", "primitive"))
    _common(q, "N", "M", "mmax", "nmax", "degmax", required=("N",))
    q.set_defaults(func=_cmd_yang)

    p = sub.add_parser("sym", help="symmetric algebra, tensor maps and suites")
    ssub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = ssub.add_parser("symbol")
    _common(q, "n")
    q.set_defaults(func=_cmd_sym)
    q = ssub.add_parser("phi")
    _common(q)
    q.set_defaults(func=_cmd_sym)
    q = ssub.add_parser("psi")
    _common(q, "K", required=("K",))
    q.set_defaults(func=_cmd_sym)
    q = ssub.add_parser("verify")
    q.add_argument("what", choices=("eh", "vanish", "phipsi", "independence"))
    _common(q, "K", "N", "M", "n", "s")
    q.set_defaults(func=_cmd_sym)

    p = sub.add_parser("verify-all", help="run every suite of a profile")
    _common(p)
    p.add_argument("--profile", choices=sorted(PROFILES), default="desk")
    p.add_argument("--only", default=None, help="comma-separated suite names")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=12345)
    p.set_defaults(func=_cmd_verify_all)
    return parser


def _require(args) -> None:
    """Per-action required flags that argparse cannot express."""
    need: tuple = ()
    if args.verb == "yang":
        need = {
            "rel": ("m", "n", "i", "j", "k", "l"),
            "defrel": ("m", "n", "i", "j", "k", "l"),
            "omega": ("m", "n", "i", "j", "k", "l") if args.action == "expand" else ("mmax", "nmax"),
            "comult": ("i", "j", "n"),
            "tau": ("M", "i", "j", "n") if args.action == "expand" else ("M", "degmax"),
            "series": ("degmax",),
            "coassoc": ("nmax",),
            "primitive": (),
        }[args.what]
    elif args.verb == "sym" and args.action == "verify":
        need = {"eh": ("n", "K"), "vanish": ("n", "K"), "phipsi": ("n", "K"),
                "independence": ("s", "N")}[args.what]
    missing = [f"--{a}" for a in need if getattr(args, a, None) is None]
    if missing:
        raise UsageError(f"missing required flags: {' '.join(missing)}")


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _require(args)
        _bounds(args)
        return args.func(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except NotInCentralizerError as exc:
        print(f"not-in-centralizer: {exc}", file=sys.stderr)
        return 2
    except (QSuperError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
