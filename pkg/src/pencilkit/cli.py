"""Command-line front end and the seeded fuzz harness.

Every command reads pencil or invariant files (JSON with exact rational
strings) and writes a single JSON document to standard output.  Exit
codes: 0 success, 1 property violation (fuzz), 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import perturb, weyr
from .partitions import headed_conjugate, partition_to_json
from .ratpoly import hif_divides
from .pencil import (
    INFINITY,
    KroneckerInvariants,
    Pencil,
    canonical_pencil,
    extract_invariants,
    invariants_from_json,
    invariants_to_json,
    nonrational_degree,
    pencil_add,
    pencil_from_json,
    pencil_to_json,
    random_equiv,
    random_invariants,
    random_rank_one,
    spectrum_from_invariants,
)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def parse_lambda(text: str):
    if text.strip() == "inf":
        return INFINITY
    return Fraction(text)


def format_lambda(lam) -> str:
    return "inf" if lam == INFINITY else str(Fraction(lam))


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def load_pencil(path: str) -> Pencil:
    return pencil_from_json(_load_json(path))


def load_invariants(path: str) -> KroneckerInvariants:
    return invariants_from_json(_load_json(path))


# ---------------------------------------------------------------------------
# fuzz harness
# ---------------------------------------------------------------------------


@dataclass
class FuzzReport:
    trials: int
    seed: int
    max_rows: int
    max_cols: int
    violations: list = field(default_factory=list)
    witness_attempts: int = 0
    witness_hits: int = 0
    witness_trials: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        hit_rate = (
            self.witness_hits / self.witness_trials if self.witness_trials else None
        )
        return {
            "trials": self.trials,
            "seed": self.seed,
            "max_rows": self.max_rows,
            "max_cols": self.max_cols,
            "violations": self.violations,
            "diagnostics": {
                "witness_attempts_per_trial": self.witness_attempts,
                "witness_trials": self.witness_trials,
                "witness_hits": self.witness_hits,
                "witness_hit_rate": hit_rate,
            },
        }


def _eigenvalues_to_check(ka: KroneckerInvariants, kb: KroneckerInvariants) -> list:
    lams = spectrum_from_invariants(ka) | spectrum_from_invariants(kb) | {INFINITY}
    return sorted(lams, key=lambda x: (x == INFINITY, x))


def _gap_ranges_hold(ka: KroneckerInvariants, kb: KroneckerInvariants) -> bool:
    """Conjugate-difference pattern on a same-rank, same-rmi pair: equality
    below the first disagreement, then the two bounded ranges, with the
    one-sided factor divisibility forced whenever an annotated extreme is
    attained."""
    gaps = perturb.conjugate_gap_ranges(ka, kb)
    r = headed_conjugate(ka.cmi)
    s = headed_conjugate(kb.cmi)
    if any(s.at(i) != r.at(i) for i in range(gaps.x)):
        return False
    top = max(r.support(), s.support()) + 1
    consequences = {"phi|psi": None, "psi|phi": None}
    for span in gaps.ranges:
        end = span.end if span.end is not None else top
        for i in range(span.start, end + 1):
            diff = s.at(i) - r.at(i)
            if not span.lo <= diff <= span.hi:
                return False
            if diff == span.lo and span.divides_at_lo:
                consequences[span.divides_at_lo] = True
            if diff == span.hi and span.divides_at_hi:
                consequences[span.divides_at_hi] = True
    rho = min(ka.rank, kb.rank)
    if consequences["phi|psi"]:
        if not all(hif_divides(ka.hif[i], kb.hif[i]) for i in range(rho)):
            return False
    if consequences["psi|phi"]:
        if not all(hif_divides(kb.hif[i], ka.hif[i]) for i in range(rho)):
            return False
    return True


def _transposed(inv: KroneckerInvariants) -> KroneckerInvariants:
    return KroneckerInvariants(inv.q, inv.p, inv.rank, inv.hif, inv.rmi, inv.cmi)


def _trial_properties(ka, kb):
    """All fuzz properties for one realized perturbation pair; yields
    (name, holds) so the harness can report the first failure."""
    yield "interlacing", perturb.interlaces(ka.hif, kb.hif)
    decision = perturb.decide_rank_one(ka, kb)
    conj = perturb.decide_rank_one_conj(ka, kb)
    yield "decision-yes", decision.answer in (perturb.YES, perturb.EQUIVALENT)
    yield "decision-form-agreement", decision.answer == conj.answer
    if decision.answer == perturb.YES and decision.case_tag == "2":
        yield "conjugate-gap-ranges", _gap_ranges_hold(ka, kb)
    if decision.answer == perturb.YES and decision.case_tag == "3":
        # the row-side instance is the column-side instance of the transposes
        yield "conjugate-gap-ranges@transposed", _gap_ranges_hold(_transposed(ka), _transposed(kb))
    profile = perturb.bounds_profile(ka, kb)
    shift = kb.rank - ka.rank
    for lam in _eigenvalues_to_check(ka, kb):
        w_a = weyr.weyr_from_invariants(ka, lam)
        w_b = weyr.weyr_from_invariants(kb, lam)
        yield f"weyr-bounds@{format_lambda(lam)}", perturb.check_bounds(profile, w_a, w_b)
        reg_a = weyr.finite_weyr(ka, lam)
        reg_b = weyr.finite_weyr(kb, lam)
        window_ok = all(
            shift - 1 <= reg_b.at(i) - reg_a.at(i) <= shift + 1
            for i in range(1, max(len(reg_a), len(reg_b)) + 1)
        )
        yield f"finite-weyr-window@{format_lambda(lam)}", window_ok


def run_fuzz(
    trials: int,
    max_rows: int,
    max_cols: int,
    seed: int,
    witness_attempts: int = 1,
    dump_dir: str | None = None,
) -> FuzzReport:
    """Seeded end-to-end property fuzz: perturb a random pencil by a random
    rank-one pencil and verify the decision, interlacing, and bound
    properties on the realized pair.  Counterexample pencils are dumped as
    JSON files next to the report."""
    report = FuzzReport(trials, seed, max_rows, max_cols,
                        witness_attempts=witness_attempts)
    master = random.Random(seed)
    for _ in range(trials):
        trial_seed = master.randrange(2**32)
        rng = random.Random(trial_seed)
        p = rng.randint(1, max_rows)
        q = rng.randint(1, max_cols)
        ka = random_invariants(p, q, rng)
        base = random_equiv(canonical_pencil(ka), rng)
        bump = random_rank_one(p, q, rng)
        perturbed = pencil_add(base, bump)
        kb = extract_invariants(perturbed)
        failed = None
        # the negated perturbation realizes the reverse move, so the pair
        # is checked in both directions (this is what exercises the
        # rank-decreasing cases)
        for pair_ka, pair_kb, suffix in ((ka, kb, ""), (kb, ka, "@reversed")):
            for name, holds in _trial_properties(pair_ka, pair_kb):
                if not holds:
                    failed = name + suffix
                    break
            if failed:
                break
        if failed is not None:
            files = _dump_counterexample(dump_dir, trial_seed, base, bump, perturbed)
            report.violations.append(
                {"seed": trial_seed, "property": failed, "files": files}
            )
            continue
        if witness_attempts > 0 and ka != kb:
            report.witness_trials += 1
            for _ in range(witness_attempts):
                candidate = random_rank_one(p, q, rng)
                if extract_invariants(pencil_add(base, candidate)) == kb:
                    report.witness_hits += 1
                    break
    return report


def _dump_counterexample(dump_dir, trial_seed, base, bump, perturbed):
    target = Path(dump_dir) if dump_dir else Path.cwd()
    target.mkdir(parents=True, exist_ok=True)
    files = []
    for label, pen in (("A", base), ("P", bump), ("B", perturbed)):
        path = target / f"fuzz_fail_{trial_seed}_{label}.json"
        path.write_text(_dump(pencil_to_json(pen)), encoding="utf-8")
        files.append(str(path))
    return files


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_invariants(args) -> int:
    inv = extract_invariants(load_pencil(args.file))
    doc = invariants_to_json(inv)
    doc["nonrational_spectrum_degree"] = nonrational_degree(inv)
    sys.stdout.write(_dump(doc))
    return 0


def _cmd_weyr(args) -> int:
    inv = extract_invariants(load_pencil(args.file))
    w = weyr.weyr_from_invariants(inv, parse_lambda(args.lam))
    sys.stdout.write(_dump(partition_to_json(w)))
    return 0


def _cmd_canonical(args) -> int:
    pen = canonical_pencil(load_invariants(args.invfile))
    text = _dump(pencil_to_json(pen))
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_decide(args) -> int:
    ka = extract_invariants(load_pencil(args.file_a))
    kb = extract_invariants(load_pencil(args.file_b))
    chain = perturb.decide_rank_one(ka, kb)
    conj = perturb.decide_rank_one_conj(ka, kb)
    sys.stdout.write(
        _dump(
            {
                "chain": perturb.decision_to_json(chain),
                "conjugate": perturb.decision_to_json(conj),
                "agreement": chain.answer == conj.answer,
            }
        )
    )
    return 0


def _cmd_bounds(args) -> int:
    ka = extract_invariants(load_pencil(args.file_a))
    kb = extract_invariants(load_pencil(args.file_b))
    profile = perturb.bounds_profile(ka, kb)
    lams = [parse_lambda(t) for t in args.lam] if args.lam else _eigenvalues_to_check(ka, kb)
    checks = {}
    for lam in lams:
        w_a = weyr.weyr_from_invariants(ka, lam)
        w_b = weyr.weyr_from_invariants(kb, lam)
        checks[format_lambda(lam)] = perturb.check_bounds(profile, w_a, w_b)
    sys.stdout.write(_dump({"profile": perturb.profile_to_json(profile), "checks": checks}))
    return 0


def _cmd_fuzz(args) -> int:
    seed = int(os.environ["PENCIL_SEED"]) if os.environ.get("PENCIL_SEED") else args.seed
    report = run_fuzz(
        args.trials,
        args.rows,
        args.cols,
        seed,
        witness_attempts=args.witness_attempts,
        dump_dir=args.dump_dir,
    )
    text = _dump(report.to_json())
    sys.stdout.write(text)
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    return 0 if report.ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pencilkit",
        description="Exact Kronecker invariants, Weyr characteristics, and "
        "rank-one perturbation analysis of matrix pencils.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cmd = sub.add_parser("invariants", help="extract complete invariants of a pencil file")
    cmd.add_argument("file")
    cmd.set_defaults(run=_cmd_invariants)

    cmd = sub.add_parser("weyr", help="generalized Weyr characteristic at an eigenvalue")
    cmd.add_argument("file")
    cmd.add_argument("--lambda", dest="lam", required=True,
                     help="rational literal like 3/2, or 'inf'")
    cmd.set_defaults(run=_cmd_weyr)

    cmd = sub.add_parser("canonical", help="canonical pencil from an invariant file")
    cmd.add_argument("invfile")
    cmd.add_argument("-o", "--output", default=None)
    cmd.set_defaults(run=_cmd_canonical)

    cmd = sub.add_parser("decide", help="rank-one reachability between two pencil files")
    cmd.add_argument("file_a")
    cmd.add_argument("file_b")
    cmd.set_defaults(run=_cmd_decide)

    cmd = sub.add_parser("bounds", help="Weyr-difference bound profile and per-eigenvalue check")
    cmd.add_argument("file_a")
    cmd.add_argument("file_b")
    cmd.add_argument("--lambda", dest="lam", action="append", default=None,
                     help="eigenvalue to check; repeatable; default: joint spectrum plus inf")
    cmd.set_defaults(run=_cmd_bounds)

    cmd = sub.add_parser("fuzz", help="seeded end-to-end property fuzz")
    cmd.add_argument("--trials", type=int, default=500)
    cmd.add_argument("--rows", type=int, default=6, help="row-count cap per trial")
    cmd.add_argument("--cols", type=int, default=6, help="column-count cap per trial")
    cmd.add_argument("--seed", type=int, default=0,
                     help="master seed (env PENCIL_SEED overrides)")
    cmd.add_argument("--report", default=None, help="also write the report JSON here")
    cmd.add_argument("--dump-dir", default=None,
                     help="directory for counterexample pencil dumps")
    cmd.add_argument("--witness-attempts", type=int, default=1,
                     help="random witness searches per trial (diagnostic only)")
    cmd.set_defaults(run=_cmd_fuzz)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
