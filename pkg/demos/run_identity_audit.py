"""Sweep the whole identity registry over the standard grid and summarize.

This is the same grid behind FINDINGS.md.  Run:
python demos/run_identity_audit.py
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from dcsums import (
    format_rational,
    registry_ids,
    report_to_json,
    run_check,
    standard_audit_grid,
    sweep,
)

grid = standard_audit_grid()
report = sweep(registry_ids(), grid)

print(f"{len(report.results)} check instances evaluated\n")
print(f"{'check':<20} {'pass':>5} {'fail':>5} {'skip':>5}")
for check_id in registry_ids():
    counts = report.summary[check_id]
    print(f"{check_id:<20} {counts['pass']:>5} {counts['fail']:>5} {counts['skip']:>5}")

print("\nA few individual instances:")
for check_id, params in [
    ("thm8_periodic", {"p": 3, "h": 1, "k": 3}),
    ("lemma1_printed", {"p": 1}),
    ("thm9", {"p": 3, "h": 1, "k": 1}),
    ("eq7_printed", {"n": 2, "l": 1}),
]:
    r = run_check(check_id, params)
    tag = "holds" if r.holds else "FAILS"
    print(f"  {check_id}{tuple(r.params.values())}: lhs {format_rational(r.lhs)}, "
          f"rhs {format_rational(r.rhs)}, residual {format_rational(r.residual)} -> {tag}")

print("\nDeterminism: rerunning the sweep serializes byte-identically:",
      report_to_json(sweep(registry_ids(), grid)) == report_to_json(report))
