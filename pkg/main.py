"""
SUPERBRANCH: branching rules and highest weight vectors for gl(p|q)
Command-line orchestrator over the library modules.

COMMANDS:
- kostka  : skew Kostka number K_{F/D, alpha}
- lr      : Littlewood-Richardson coefficient c^F_{D,E}
- branch  : branching tables (--to pair | even | m | sub)
- weights : weight multiplicities of L^F_{p|q}
- dim     : dimension of L^F_{p|q}
- hwv     : tableau pairs, column determinants and leading monomials
- verify  : highest weight vector verification report
- oracle  : kernel oracle sweep against the multiplicity formulas

JSON goes to stdout, logs go to stderr.
"""

import argparse
import sys
import traceback
from typing import List, Optional

from src.algebra.lie_action import oracle_branch_N, oracle_lr
from src.algebra.superalgebra import Ambient, SuperPolynomial, leading_monomial, leading_monomial_of_product, multiply
from src.combinatorics.partitions import Partition, SkewShape, in_hook, partitions_of
from src.combinatorics.tableaux import enumerate_pairs, star_compose
from src.io.arguments import RunConfig
from src.logic.hwv import (
    VerificationSettings,
    check_pair_inputs,
    delta_factors,
    monomial_of_pair,
    profiles_of,
    verify_basis,
)
from src.logic.multiplicities import (
    branch_to_even,
    branch_to_m,
    branch_to_pair,
    branch_to_sub,
    dim_irrep,
    kostka,
    lr_coefficient,
    weight_table,
)
from src.logic.output_generator import OutputGenerator
from src.utils.config import load_config
from src.utils.logger import get_logger, setup_logging
from src.utils.stopwatch import Stopwatch

COMMANDS = ["kostka", "lr", "branch", "weights", "dim", "hwv", "verify", "oracle"]


class ArgumentError(ValueError):
    """Bad command-line input; exits with code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ArgumentError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="superbranch", description="Branching rules and highest weight vectors for gl(p|q)")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--F", help="outer partition, e.g. 5,4,3,3,3,3,2")
    parser.add_argument("--D", help="inner partition")
    parser.add_argument("--E", help="third partition (lr)")
    parser.add_argument("--alpha", help="content, e.g. 2,3")
    parser.add_argument("--beta", help="content, e.g. 3,4")
    for name in ("n", "p", "q", "r", "s"):
        parser.add_argument(f"--{name}", type=int)
    parser.add_argument("--to", choices=["pair", "even", "m", "sub"], default="pair")
    parser.add_argument("--format", choices=["json", "text"], default=None)
    parser.add_argument("--max-size", dest="max_size", type=int)
    parser.add_argument("--config", default="config.yaml")
    parser.add_argument("--log-level", dest="log_level")
    return parser


class SuperbranchSystem:
    """Runs one CLI command end to end."""

    def __init__(self, config_path: str = "config.yaml", log_level: Optional[str] = None):
        self.config = load_config(config_path)
        setup_logging(log_level or self.config["logging"]["level"])
        self.logger = get_logger("cli")
        self.settings = VerificationSettings.from_config(self.config)
        self.output_gen = OutputGenerator(indent=self.config["output"]["indent"])

    def run(self, run: RunConfig) -> int:
        """
        Dispatch to the command handler and print its result.

        Args:
            run: Parsed arguments

        Returns:
            Process exit code
        """
        if run.format is None:
            run.format = self.config["output"]["format"]
        watch = Stopwatch()
        self.logger.info(f"Running {run.command}")
        handler = getattr(self, f"cmd_{run.command}")
        payload, text, ok = handler(run)
        if run.format == "text":
            print(text)
        else:
            print(self.output_gen.to_json(payload))
        self.logger.info(f"{run.command} finished in {watch.elapsed():.2f}s")
        return 0 if ok else 1

    def cmd_kostka(self, run: RunConfig):
        run.require("F", "alpha")
        D = run.D or Partition(())
        value = kostka(SkewShape(run.F, D), run.alpha)
        payload = {"F": str(run.F), "D": str(D), "alpha": list(run.alpha.counts), "kostka": value}
        return payload, f"K = {value}", True

    def cmd_lr(self, run: RunConfig):
        run.require("F", "D", "E")
        value = lr_coefficient(run.F, run.D, run.E)
        payload = {"F": str(run.F), "D": str(run.D), "E": str(run.E), "lr": value}
        return payload, f"c = {value}", True

    def cmd_branch(self, run: RunConfig):
        run.require("F", "p", "q")
        n = run.resolved_n()
        if run.to == "even":
            table = branch_to_even(run.F, run.p, run.q, n)
        else:
            run.check_split()
            if run.to == "pair":
                table = branch_to_pair(run.F, run.r, run.s, run.rprime, run.sprime, n)
            elif run.to == "m":
                table = branch_to_m(run.F, run.p, run.q, run.r, run.s, n)
            else:
                table = branch_to_sub(run.F, run.p, run.q, run.r, run.s, n)
        self.logger.info(f"{len(table)} components for --to {run.to}")
        return table.to_rows(), self.output_gen.format_table(table), True

    def cmd_weights(self, run: RunConfig):
        run.require("F", "p", "q")
        table = weight_table(run.F, run.p, run.q)
        return table.to_rows(), self.output_gen.format_table(table), True

    def cmd_dim(self, run: RunConfig):
        run.require("F", "p", "q")
        value = dim_irrep(run.F, run.p, run.q)
        return {"F": str(run.F), "p": run.p, "q": run.q, "dim": value}, f"dim = {value}", True

    def _pair_context(self, run: RunConfig):
        run.require("F", "alpha", "beta")
        run.check_split()
        if run.r + run.s > 0:
            run.require("D")
        D = run.D or Partition(())
        if len(run.alpha) != run.rprime or len(run.beta) != run.sprime:
            raise ValueError(f"--alpha needs {run.rprime} entries and --beta {run.sprime}")
        check_pair_inputs(run.F, D, run.alpha, run.beta, run.r, run.s)
        return D, run.resolved_n()

    def cmd_hwv(self, run: RunConfig):
        D, n = self._pair_context(run)
        ambient = Ambient(n, run.p, run.q)
        entries, text = [], []
        for pair in enumerate_pairs(run.F, D, run.alpha, run.beta, n):
            composed = star_compose(pair, run.r)
            factors = delta_factors(pair, ambient, run.r, run.s)
            lm = leading_monomial_of_product(factors, run.r, run.s, self.settings.lm_search_limit)
            entry = pair.to_dict()
            entry["composed"] = composed.to_dict()
            entry["columns"] = [
                {"type": profile.type_tag, "terms": len(x), "lm": _column_lm(x, run.r, run.s)}
                for profile, x in zip(profiles_of(pair, run.r, run.s), factors)
            ]
            entry["lm"] = lm.render(run.r, run.s)
            entry["monomial"] = monomial_of_pair(pair, run.r, run.s).render(run.r, run.s)
            if _product_size(factors) <= self.settings.expand_limit:
                delta = SuperPolynomial.one(ambient)
                for x in factors:
                    delta = multiply(delta, x)
                entry["delta"] = delta.render(run.r, run.s)
            entries.append(entry)
            text.append(self.output_gen.format_tableau(composed))
            text.append(f"LM = {entry['lm']}\n")
        return entries, self.output_gen.format_lines(text), True

    def cmd_verify(self, run: RunConfig):
        D, n = self._pair_context(run)
        report = verify_basis(run.F, D, run.alpha, run.beta, n, run.p, run.q, run.r, run.s, self.settings)
        return report.to_dict(), self.output_gen.format_report(report), report.passed

    def cmd_oracle(self, run: RunConfig):
        max_size = run.max_size if run.max_size is not None else self.config["oracle"]["max_size"]
        if run.p is not None and run.q is not None:
            pq_pairs = [(run.p, run.q)]
        else:
            pq_pairs = [tuple(pair) for pair in self.config["oracle"]["pairs"]]
        checked, mismatches = 0, []
        watch = Stopwatch()
        for p, q in pq_pairs:
            for size in range(1, max_size + 1):
                for F in partitions_of(size):
                    if not in_hook(F, p, q):
                        continue
                    n = F.depth()
                    for r in range(p + 1):
                        for s in range(q + 1):
                            for row in _oracle_rows(run.to, F, p, q, r, s, n):
                                checked += 1
                                if row["formula"] != row["oracle"]:
                                    mismatches.append(row)
            self.logger.debug(f"gl({p}|{q}) swept in {watch.lap(f'{p}|{q}'):.2f}s")
        self.logger.info(f"Oracle compared {checked} multiplicities, {len(mismatches)} mismatches")
        payload = {"checked": checked, "mismatches": mismatches, "max_size": max_size, "to": run.to}
        text = f"checked {checked}, mismatches {len(mismatches)}"
        return payload, text, not mismatches


def _oracle_rows(to: str, F: Partition, p: int, q: int, r: int, s: int, n: int) -> List[dict]:
    rows = []
    base = {"F": str(F), "p": p, "q": q, "r": r, "s": s}
    if to == "pair":
        for (D, E), mult in branch_to_pair(F, r, s, p - r, q - s, n).items():
            rows.append({**base, "D": str(D), "E": str(E), "formula": mult, "oracle": oracle_lr(F, D, E, p, q, r, s, n)})
    else:
        for (D, alpha, beta), mult in branch_to_m(F, p, q, r, s, n).items():
            value = oracle_branch_N(F, D, alpha, beta, p, q, r, s, n)
            rows.append({**base, "D": str(D), "alpha": list(alpha.counts), "beta": list(beta.counts), "formula": mult, "oracle": value})
    return rows


def _product_size(factors) -> int:
    size = 1
    for x in factors:
        size *= len(x)
    return size


def _column_lm(x, r, s) -> str:
    return leading_monomial(x, r, s).render(r, s)


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point."""
    try:
        args = build_parser().parse_args(argv)
        run = RunConfig.from_namespace(args)
        system = SuperbranchSystem(args.config, args.log_level)
        return system.run(run)
    except ValueError as e:
        print(f"[ERROR] {e}", file=sys.stderr)
        return 2
    except KeyboardInterrupt:
        print("\n[SYSTEM] Interrupted by user", file=sys.stderr)
        return 1
    except Exception as e:
        print(f"\n[ERROR] {e}", file=sys.stderr)
        traceback.print_exc()
        return 1


if __name__ == "__main__":
    sys.exit(main())
