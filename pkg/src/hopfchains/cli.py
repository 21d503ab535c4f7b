"""Command-line front end: build rings, run law suites, emit reports.

Every command produces a report of named verdict rows.  Exit status is 0
when every verdict is equal/accept, 1 on any failure, 2 on a config
error.  With a fixed config and seed the JSON report is byte-identical
across runs (timings are reported in text format only; the JSON keeps a
zero placeholder so the schema is stable).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import asdict, dataclass

from . import __version__
from .chains import random_bicomplex, random_complex, second_differential
from .diffhopf import (
    GradedCarrier, NotAdmissible, brute_force_carrier_check,
    build_differential_hopf, check_differential_carrier,
)
from .grading import Bicharacter, GradedModule, graded_to_comodule, laurent_hopf, sign_coelement
from .laws import check_bialgebra_laws, check_coelement, plain_swap
from .pareigis import (
    chain_to_comodule, chain_to_wcomodule, comodule_to_chain,
    differential_comodule_bimonoid, identify_semidirect, ring_by_name,
)
from .semidirect import comparison_f, comparison_f_inverse, tensor_wcomodule
from .laws import tensor_comodule
from .linalg import equal_on_window

COMMANDS = ("check-axioms", "build-semidirect", "verify-pareigis",
            "roundtrip", "carrier-check", "bicomplex-check")


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    ring: str = "pareigis"
    carrier_file: str | None = None
    window: int = 6
    trials: int = 25
    seed: int = 0
    s: int = -1
    format: str = "json"
    output: str | None = None

    def validate(self):
        if self.command not in COMMANDS:
            raise ConfigError("unknown command %r" % self.command)
        if self.window < 1:
            raise ConfigError("window must be >= 1")
        if self.trials < 1:
            raise ConfigError("trials must be >= 1")
        if self.s not in (-1, 1):
            raise ConfigError("s must be -1 or 1")
        if self.format not in ("json", "text"):
            raise ConfigError("format must be json or text")


class Rows:
    "Accumulates named verdict rows with per-row wall time."

    def __init__(self):
        self.rows = []

    def add(self, name, verdict, instances, counterexample=None, millis=0):
        self.rows.append({"name": name, "verdict": verdict,
                          "instances": instances,
                          "counterexample": counterexample,
                          "millis": millis})

    def add_check(self, prefix, result, millis=0):
        cx = result.counterexample.to_json() if result.counterexample else None
        self.add("%s/%s" % (prefix, result.law), result.verdict,
                 result.instances, cx, millis)

    def extend_report(self, prefix, report, millis=0):
        for r in report:
            self.add_check(prefix, r, millis)

    def ok(self):
        return all(r["verdict"] in ("equal", "accept") for r in self.rows)

    def sorted(self):
        return sorted(self.rows, key=lambda r: r["name"])


def _timed(fn):
    t0 = time.monotonic()
    out = fn()
    return out, int((time.monotonic() - t0) * 1000)


def cmd_check_axioms(cfg, rows):
    if cfg.ring == "laurent":
        ring = laurent_hopf(1)
        report, ms = _timed(lambda: check_bialgebra_laws(ring, plain_swap(), cfg.window))
        rows.extend_report("laws", report, ms)
        for kappa in (1, -1):
            coel = sign_coelement(Bicharacter(1, (kappa,)), ring)
            report, ms = _timed(lambda: check_coelement(coel, cfg.window))
            rows.extend_report("coelement[kappa=%+d]" % kappa, report, ms)
    else:
        try:
            ring = ring_by_name(cfg.ring)
        except KeyError:
            raise ConfigError("unknown ring %r (try pareigis, pareigis-plus, laurent)"
                              % cfg.ring)
        report, ms = _timed(lambda: check_bialgebra_laws(ring, plain_swap(), cfg.window))
        rows.extend_report("laws", report, ms)


def _carrier_from_file(path):
    try:
        with open(path) as fh:
            doc = json.load(fh)
        return GradedCarrier.from_json(doc)
    except (OSError, ValueError, KeyError, TypeError) as err:
        raise ConfigError("cannot read carrier file %s: %s" % (path, err))


def cmd_build_semidirect(cfg, rows):
    if cfg.carrier_file:
        carrier = _carrier_from_file(cfg.carrier_file)
        if carrier.rank != 1:
            raise ConfigError("build-semidirect needs a rank-1 carrier")
        if any(order != 0 for _, order in carrier.summands):
            raise ConfigError("build-semidirect needs a free carrier "
                              "(torsion summands cannot be based)")
        comps = {}
        for deg, _ in carrier.summands:
            comps[deg] = comps.get(deg, 0) + 1
        dmod = GradedModule.of(comps, rank=1, name="d")
    else:
        dmod = GradedModule.of({cfg.s: 1}, rank=1, name="d")
    gamma = sign_coelement(Bicharacter(1, (-1,)))
    t0 = time.monotonic()
    try:
        hb = build_differential_hopf(graded_to_comodule(dmod, gamma.ring), gamma,
                                     window=cfg.window)
    except NotAdmissible as err:
        rows.add("admissibility", "reject", 1, {"reason": str(err)},
                 int((time.monotonic() - t0) * 1000))
        return
    rows.add("admissibility", "accept", 1, None,
             int((time.monotonic() - t0) * 1000))
    sd, ms = _timed(lambda: hb.product(cfg.window))
    report, ms2 = _timed(lambda: check_bialgebra_laws(sd, plain_swap(), cfg.window))
    rows.extend_report("semidirect", report, ms + ms2)


def cmd_verify_pareigis(cfg, rows):
    report, ms = _timed(lambda: identify_semidirect(cfg.s, K=cfg.window))
    rows.extend_report("identify[s=%+d]" % cfg.s, report, ms)


def cmd_roundtrip(cfg, rows):
    rng = random.Random(cfg.seed)
    for s in (-1, 1):
        t0 = time.monotonic()
        bad = None
        for trial in range(cfg.trials):
            X = random_complex(rng, name="rt%d" % trial)
            com = chain_to_comodule(X, s)
            back = comodule_to_chain(com)
            if back != X:
                bad = {"trial": trial, "ranks": {str(n): r for n, r in X.ranks.items()}}
                break
        rows.add("chain-comodule[s=%+d]" % s,
                 "equal" if bad is None else "differ",
                 cfg.trials, bad, int((time.monotonic() - t0) * 1000))

    hb = differential_comodule_bimonoid(cfg.s)
    t0 = time.monotonic()
    bad = None
    mono_bad = None
    n_mono = 0
    for trial in range(cfg.trials):
        X = random_complex(rng, name="fw%d" % trial, max_window=4, max_rank=3)
        B = chain_to_wcomodule(X, cfg.s, hb)
        FB = comparison_f(B, window=0)
        back = comparison_f_inverse(FB, window=0)
        for b in B.carrier.enumerate(0):
            if (back.alpha.apply(b) != B.alpha.apply(b)
                    or back.chi.apply(b) != B.chi.apply(b)):
                bad = {"trial": trial}
                break
        if bad:
            break
        if trial % 5 == 0:
            Y = random_complex(rng, name="mw%d" % trial, max_window=3, max_rank=2)
            C = chain_to_wcomodule(Y, cfg.s, hb)
            lhs = comparison_f(tensor_wcomodule(B, C, window=0), window=0)
            rhs = tensor_comodule(FB, comparison_f(C, window=0), check_window=None)
            n_mono += 1
            verdict = equal_on_window(lhs.coaction, rhs.coaction, 0, law="monoidal")
            if not verdict.equal:
                mono_bad = {"trial": trial}
                break
    ms = int((time.monotonic() - t0) * 1000)
    rows.add("comparison-inverse", "equal" if bad is None else "differ",
             cfg.trials, bad, ms)
    rows.add("comparison-monoidal", "equal" if mono_bad is None else "differ",
             n_mono, mono_bad, ms)


def cmd_carrier_check(cfg, rows):
    if not cfg.carrier_file:
        raise ConfigError("carrier-check needs --carrier-file")
    carrier = _carrier_from_file(cfg.carrier_file)
    bich = Bicharacter(carrier.rank, (-1,) * carrier.rank)
    (verdict, oracle), ms = _timed(lambda: (
        check_differential_carrier(carrier, bich),
        brute_force_carrier_check(carrier, bich)))
    cx = None
    if not verdict.accepted:
        cx = {"diagnostics": list(verdict.diagnostics)}
    rows.add("carrier-decision", "accept" if verdict.accepted else "reject",
             len(carrier.summands) or 1, cx, ms)
    rows.add("carrier-oracle-agreement",
             "equal" if oracle == verdict.accepted else "differ", 1, None, ms)


def cmd_bicomplex_check(cfg, rows):
    rng = random.Random(cfg.seed)
    for kappa in (-1, 1):
        t0 = time.monotonic()
        bad = None
        cells = 0
        for trial in range(cfg.trials):
            B = random_bicomplex(rng, kappa, cfg.s)
            res = second_differential(B, kappa, cfg.s)
            cells += len(B.cells())
            if not (res.accepted and res.chain_compat and res.chain_compat.equal):
                bad = {"trial": trial, "violations": [list(v) for v in res.violations]}
                break
        rows.add("bicomplex[kappa=%+d]" % kappa,
                 "accept" if bad is None else "reject",
                 cells, bad, int((time.monotonic() - t0) * 1000))


RUNNERS = {
    "check-axioms": cmd_check_axioms,
    "build-semidirect": cmd_build_semidirect,
    "verify-pareigis": cmd_verify_pareigis,
    "roundtrip": cmd_roundtrip,
    "carrier-check": cmd_carrier_check,
    "bicomplex-check": cmd_bicomplex_check,
}


def run_command(cfg):
    "Execute a validated config; returns (exit_status, report dict)."
    cfg.validate()
    rows = Rows()
    RUNNERS[cfg.command](cfg, rows)
    echo = asdict(cfg)
    del echo["output"]  # destination, not input: keep reports reproducible
    report = {
        "version": __version__,
        "config": echo,
        "results": rows.sorted(),
    }
    return (0 if rows.ok() else 1), report


def render_json(report):
    doc = json.loads(json.dumps(report))  # deep copy
    for row in doc["results"]:
        row["millis"] = 0  # keep reports byte-identical across runs
        if row["counterexample"] is None:
            del row["counterexample"]
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def render_text(report):
    lines = ["hopfchains %s: %s" % (report["version"], report["config"]["command"])]
    for row in report["results"]:
        lines.append("%-40s %-7s instances=%-6d millis=%d"
                     % (row["name"], row["verdict"], row["instances"], row["millis"]))
        if row["counterexample"]:
            lines.append("    counterexample: %s" % json.dumps(row["counterexample"]))
    return "\n".join(lines) + "\n"


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hopfchains",
        description="Exact verification suites for the grading/differential "
                    "Hopf rings, their semidirect product, and the chain "
                    "complex equivalence.")
    parser.add_argument("--command", required=True, choices=COMMANDS)
    parser.add_argument("--ring", default="pareigis",
                        help="ring name for check-axioms "
                             "(pareigis, pareigis-plus, laurent)")
    parser.add_argument("--carrier-file", default=None,
                        help="JSON graded-carrier description")
    parser.add_argument("--window", type=int, default=6)
    parser.add_argument("--trials", type=int, default=25)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--s", type=int, default=-1, choices=(-1, 1),
                        help="degree of the differential")
    parser.add_argument("--format", default="json", choices=("json", "text"))
    parser.add_argument("--output", default=None, help="path or stdout if omitted")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    cfg = RunConfig(command=args.command, ring=args.ring,
                    carrier_file=args.carrier_file, window=args.window,
                    trials=args.trials, seed=args.seed, s=args.s,
                    format=args.format, output=args.output)
    try:
        status, report = run_command(cfg)
    except ConfigError as err:
        print("config error: %s" % err, file=sys.stderr)
        return 2
    text = render_json(report) if cfg.format == "json" else render_text(report)
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
