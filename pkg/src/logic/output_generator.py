"""
Output generator - converts computation results to JSON payloads and readable text.
"""

import json
from typing import List, Optional

from src.combinatorics.tableaux import Tableau
from src.logic.hwv import VerificationReport
from src.logic.multiplicities import BranchingTable


class OutputGenerator:
    """Formats tables, tableaux and reports for stdout."""

    def __init__(self, indent: Optional[int] = 2):
        self.indent = indent

    def to_json(self, payload) -> str:
        """
        Serialize a payload deterministically.

        Args:
            payload: JSON-compatible data

        Returns:
            JSON text with sorted keys
        """
        return json.dumps(payload, indent=self.indent, sort_keys=True)

    def format_tableau(self, T: Tableau) -> str:
        """
        Draw a tableau as rows of right-aligned entries, "." for inner boxes.

        Args:
            T: Tableau to draw

        Returns:
            Multi-line text
        """
        rows = T.rows()
        if not rows:
            return "(empty)"
        width = max(len(str(v)) for row in rows for v in row if v is not None) if T.cells else 1
        lines = []
        for row in rows:
            lines.append(" ".join(".".rjust(width) if v is None else str(v).rjust(width) for v in row))
        return "\n".join(lines)

    def format_table(self, table: BranchingTable) -> str:
        if len(table) == 0:
            return "No components"
        lines = []
        for row in table.to_rows():
            mult = row.pop("mult")
            label = ", ".join(f"{key}={value}" for key, value in sorted(row.items()))
            lines.append(f"  {label}  ->  {mult}")
        return "\n".join(lines)

    def format_report(self, report: VerificationReport) -> str:
        status = "PASS" if report.passed else "FAIL"
        lines = [
            f"F=({report.F}) D=({report.D}) alpha={report.alpha} beta={report.beta}",
            f"n={report.n} p={report.p} q={report.q} r={report.r} s={report.s} mode={report.mode}",
            f"pairs={report.basis_size} N={report.predicted} oracle={report.oracle}",
        ]
        for k, check in enumerate(report.pairs):
            mark = "✓" if not check.failures else "✗"
            lines.append(f"{mark} pair {k}: LM = {check.lm}")
        lines.extend(f"note: {note}" for note in report.notes)
        lines.extend(f"failure: {failure}" for failure in report.failures)
        lines.append(status)
        return "\n".join(lines)

    def format_lines(self, items: List[str]) -> str:
        return "\n".join(items)
