"""jpk command line: compute polynomials and run identity suites.

Exit codes: 0 all pass, 1 an identity failed, 2 invalid input,
3 specialization singularity.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import binomialtype as bt
from .interpolation import SingularVanishingSystem, verify_difference_eq, verify_ijack_pieri
from .jack import (
    ZeroNormalization,
    jack_table,
    verify_lemma_sum,
    verify_pieri_classical,
    verify_sekiguchi,
    verify_twisted_falling,
    verify_twisted_raising,
)
from .operators import apply_H_literal
from .partitions import InvalidPartition, parse_partition, partitions_upto, subsets
from .scalars import PoleAtSpecialization, SpecializationZeroD, field_from_literal
from .serialize import (
    CacheMismatch,
    kernel_to_json,
    load_cache,
    store_cache,
    sympoly_latex,
    sympoly_text,
    sympoly_to_json,
)

log = logging.getLogger("jpk")

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_SINGULAR = 0, 1, 2, 3

SINGULAR = (PoleAtSpecialization, ZeroNormalization, SingularVanishingSystem)

COMPUTE_KINDS = ("jack", "jack-phi", "jack-psi", "ijack", "bernoulli", "binomial-family", "kernel")
SUITES = ("sekiguchi-eigen", "pieri-classical", "twisted-falling", "twisted-raising",
          "lemma-sum", "ijack-difference", "ijack-pieri", "exp-binomial",
          "kernel-intertwine", "psi-pieri", "binomial-shift", "binomial-twisted")


class InputError(ValueError):
    pass


@dataclass
class RunConfig:
    r: int = 2
    d: str = "symbolic"
    max_weight: int = 4
    trunc: int = 4
    seed: int = 0
    output_format: str = "text"
    cache_path: str | None = None
    box: int = 4
    jobs: int = 4
    series: str = "one"
    trace: bool = False

    def __post_init__(self):
        if self.r < 1:
            raise InputError("--r must be at least 1")
        if self.max_weight < 0 or self.trunc < 0 or self.box < 0:
            raise InputError("weights and truncation must be nonnegative")
        if self.jobs < 1:
            raise InputError("--jobs must be at least 1")
        try:
            self.field = field_from_literal(self.d)
        except SpecializationZeroD as exc:
            raise InputError(str(exc)) from exc
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad --d literal {self.d!r}") from exc


@dataclass
class SuiteResult:
    suite: str
    reports: list = field(default_factory=list)
    wall: float = 0.0
    singular: list = field(default_factory=list)

    @property
    def counts(self):
        fail = sum(not r.passed for r in self.reports)
        return {"pass": len(self.reports) - fail, "fail": fail, "skip": len(self.singular)}


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------


def _series(cfg, N):
    if cfg.series == "bernoulli":
        return bt.bernoulli_series(cfg.r, N, cfg.field)
    if cfg.series == "one":
        return bt.SeriesF.one(cfg.r, N, cfg.field)
    raise InputError(f"unknown series {cfg.series!r}")


def cmd_compute(kind, m, cfg: RunConfig) -> str:
    table = jack_table(cfg.r, cfg.field)
    if kind == "kernel":
        kern = bt.kernel_0F0(cfg.r, cfg.trunc, cfg.field)
        if cfg.output_format == "json":
            return json.dumps(kernel_to_json(kern, cfg.field), sort_keys=True)
        return _render_family(kern.terms, cfg, "\\Phi")
    if kind == "binomial-family":
        N = sum(m)
        fam = bt.binomial_family(_series(cfg, N), N, table)
        return _render_family(fam, cfg, "f")
    if kind == "jack":
        f = table.P(m)
    elif kind == "jack-phi":
        f = table.Phi(m)
    elif kind == "jack-psi":
        f = table.Psi(m)
    elif kind == "ijack":
        f = table.interp().ip(m)
    elif kind == "bernoulli":
        f = bt.bernoulli_poly(m, cfg.field)
    else:
        raise InputError(f"unknown kind {kind!r}")
    if cfg.output_format == "json":
        return json.dumps(sympoly_to_json(f, cfg.field, jack_basis=list(m)), sort_keys=True)
    if cfg.output_format == "latex":
        return sympoly_latex(f)
    return sympoly_text(f)


def _render_family(fam, cfg, name):
    keys = sorted(fam, key=lambda k: (sum(k), k))
    if cfg.output_format == "json":
        return json.dumps([{"index": list(k), "poly": sympoly_to_json(fam[k], cfg.field)}
                           for k in keys], sort_keys=True)
    out = []
    for k in keys:
        idx = ",".join(map(str, k))
        if cfg.output_format == "latex":
            out.append(f"{name}_{{({idx})}} = {sympoly_latex(fam[k])}")
        else:
            out.append(f"({idx}): {sympoly_text(fam[k])}")
    return "\n".join(out)


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def suite_tasks(suite, cfg: RunConfig):
    """Deterministically ordered (label, thunk) pairs for one suite."""
    r, fld = cfg.r, cfg.field
    t = jack_table(r, fld)
    W, N = cfg.max_weight, cfg.trunc
    parts = partitions_upto(W, r)
    ls = range(r + 1)
    if suite == "sekiguchi-eigen":
        return [(m, lambda m=m: _sekiguchi(m, t, cfg)) for m in parts]
    if suite == "pieri-classical":
        return [((m, l), lambda m=m, l=l: verify_pieri_classical(m, l, t)) for m in parts for l in ls]
    if suite == "twisted-falling":
        return [((m, l), lambda m=m, l=l: verify_twisted_falling(m, l, t)) for m in parts for l in ls]
    if suite == "twisted-raising":
        return [((m, l), lambda m=m, l=l: verify_twisted_raising(m, l, t)) for m in parts for l in ls]
    if suite == "lemma-sum":
        return [(I, lambda I=I: verify_lemma_sum(r, I, fld, 20, cfg.seed)) for I in subsets(r)]
    if suite == "ijack-difference":
        it = t.interp()
        return [(k, lambda k=k: verify_difference_eq(k, cfg.box, it)) for k in parts]
    if suite == "ijack-pieri":
        it = t.interp()
        return [(k, lambda k=k: verify_ijack_pieri(k, cfg.box, it)) for k in parts]
    if suite == "exp-binomial":
        return [(k, lambda k=k: bt.verify_exp_binomial(k, N, t)) for k in partitions_upto(min(W, N), r)]
    if suite == "kernel-intertwine":
        tasks = [(l, lambda l=l: bt.verify_intertwine(l, N, t)) for l in ls]
        tasks.append(("symmetry", lambda: bt.verify_kernel_symmetry(N, t)))
        return tasks
    if suite == "psi-pieri":
        return [((m, l), lambda m=m, l=l: bt.verify_psi_pieri(m, l, t)) for m in parts for l in ls]
    if suite in ("binomial-shift", "binomial-twisted"):
        M = min(W, N)
        tasks = []
        for name in ("one", "bernoulli"):
            F = bt.SeriesF.one(r, N, fld) if name == "one" else bt.bernoulli_series(r, N, fld)
            fam = _Lazy(lambda F=F: bt.binomial_family(F, M, t))
            for m in partitions_upto(M, r):
                if suite == "binomial-shift":
                    tasks.append(((name, m), lambda F=F, m=m, fam=fam:
                                  bt.verify_binomial_shift(F, m, fam(), t)))
                else:
                    for l in ls:
                        tasks.append(((name, m, l), lambda F=F, m=m, l=l, fam=fam:
                                      bt.verify_twisted_pieri_binomial(F, m, l, fam(), t)))
        return tasks
    raise InputError(f"unknown suite {suite!r}")


class _Lazy:
    def __init__(self, fn):
        self.fn = fn
        self.value = None
        self.lock = threading.Lock()

    def __call__(self):
        with self.lock:
            if self.value is None:
                self.value = self.fn()
        return self.value


def _sekiguchi(m, t, cfg):
    rep = verify_sekiguchi(m, t)
    if cfg.trace:
        for p in range(1, t.r + 1):
            apply_H_literal(p, t.P(m), t.d, trace=lambda s, m=m, p=p: log.debug("H m=%s p=%d %s", m, p, s))
    return rep


def cmd_verify(suite, cfg: RunConfig) -> SuiteResult:
    start = time.perf_counter()
    res = SuiteResult(suite)
    tasks = suite_tasks(suite, cfg)

    def run(task):
        label, thunk = task
        try:
            return label, thunk(), None
        except SINGULAR as exc:
            return label, None, f"{type(exc).__name__}: {exc}"

    with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
        outcomes = list(pool.map(run, tasks))
    for label, rep, err in outcomes:
        if err is not None:
            res.singular.append((label, err))
        else:
            log.debug("%s", rep.line())
            res.reports.append(rep)
    res.wall = time.perf_counter() - start
    return res


def render_results(results, cfg: RunConfig) -> str:
    if cfg.output_format == "json":
        doc = {
            "config": {"r": cfg.r, "d": cfg.field.key, "max_weight": cfg.max_weight,
                       "trunc": cfg.trunc, "box": cfg.box, "seed": cfg.seed},
            "suites": [{
                "suite": s.suite,
                "counts": s.counts,
                "reports": [r.to_json() for r in s.reports],
                "singular": [[str(l), e] for l, e in s.singular],
            } for s in results],
        }
        return json.dumps(doc, sort_keys=True, indent=1)
    lines = []
    if cfg.output_format == "latex":
        lines.append("\\begin{tabular}{lll}")
        lines.append("suite & verdict & checks \\\\")
        for s in results:
            for r in s.reports:
                v = "pass" if r.passed else "fail"
                lines.append(f"{s.suite} & {v} & {r.checks} \\\\")
        lines.append("\\end{tabular}")
        return "\n".join(lines)
    lines.append(f"# r={cfg.r} d={cfg.field.key} max_weight={cfg.max_weight} "
                 f"trunc={cfg.trunc} box={cfg.box} seed={cfg.seed}")
    for s in results:
        for r in s.reports:
            lines.append(r.line())
            if s.suite == "lemma-sum" and r.notes:
                lines.append("      points: " + " ".join(r.notes))
        for label, err in s.singular:
            lines.append(f"SKIP  {s.suite:<28} {label}  {err}")
        c = s.counts
        lines.append(f"== {s.suite}: {c['pass']} pass, {c['fail']} fail, {c['skip']} skip")
    return "\n".join(lines)


def exit_code(results) -> int:
    if any(s.counts["fail"] for s in results):
        return EXIT_FAIL
    if any(s.singular for s in results):
        return EXIT_SINGULAR
    return EXIT_PASS


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", type=int, default=2)
    common.add_argument("--d", default="symbolic", help='"symbolic" or a rational "p/q"')
    common.add_argument("--max-weight", type=int, default=4)
    common.add_argument("--trunc", type=int, default=4)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "latex", "text"), default="text")
    common.add_argument("--cache")
    common.add_argument("--trace", action="store_true")
    common.add_argument("--box", type=int, default=4, help="x_1 bound for interpolation suites")
    common.add_argument("--jobs", type=int, default=4)

    p = argparse.ArgumentParser(prog="jpk", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("compute", parents=[common])
    c.add_argument("kind", choices=COMPUTE_KINDS)
    c.add_argument("--m", default="")
    c.add_argument("--series", choices=("one", "bernoulli"), default="one")
    v = sub.add_parser("verify", parents=[common])
    v.add_argument("suite", choices=SUITES + ("all",))
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_PASS
    if args.trace:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr, format="%(message)s")
    try:
        cfg = RunConfig(r=args.r, d=args.d, max_weight=args.max_weight, trunc=args.trunc,
                        seed=args.seed, output_format=args.format,
                        cache_path=os.environ.get("JPK_CACHE") or args.cache,
                        box=args.box, jobs=args.jobs,
                        series=getattr(args, "series", "one"), trace=args.trace)
        table = jack_table(cfg.r, cfg.field)
        if cfg.cache_path:
            load_cache(cfg.cache_path, table)
        if args.command == "compute":
            m = parse_partition(args.m, cfg.r)
            print(cmd_compute(args.kind, m, cfg))
            code = EXIT_PASS
        else:
            suites = SUITES if args.suite == "all" else (args.suite,)
            results = [cmd_verify(s, cfg) for s in suites]
            print(render_results(results, cfg))
            for s in results:
                print(f"{s.suite}: {s.wall:.2f}s", file=sys.stderr)
            code = exit_code(results)
        if cfg.cache_path:
            store_cache(cfg.cache_path, table)
        return code
    except (InputError, InvalidPartition, CacheMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SINGULAR as exc:
        print(f"singular specialization: {exc}", file=sys.stderr)
        return EXIT_SINGULAR


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
