"""Charts and a summary table from the desk archive.

Run after ``demos/desk_experiments.py``; writes SVG charts next to the
archived reports.
"""
import os
import sys
from pathlib import Path

from spadpose.evaluate import read_report
from spadpose.plotting import orientation_heads, plot_iou_table, plot_polar_error

ROOT = Path(__file__).resolve().parent.parent
ARCHIVE = Path(os.environ.get("SPADPOSE_DESK_ARCHIVE", ROOT / "desk" / "archive"))

reports = sorted(p for p in ARCHIVE.glob("*.tsv") if not p.name.endswith(".history.tsv")
                 and p.name not in ("timings.tsv", "matrix.tsv"))
if not reports:
    sys.exit(f"no reports under {ARCHIVE}; run demos/desk_experiments.py first")

for path in reports:
    report = read_report(path)
    for (head, metric), s in sorted(report.summary.items()):
        print(f"{head:36s} {metric:12s} {s.mean:6.2f} +- {s.std:5.2f}  (n={s.support})")
    if orientation_heads(report):
        print("  ->", plot_polar_error(report, path.with_suffix(".svg")))
    elif any(m.startswith("iou_") for _, m in report.summary):
        print("  ->", plot_iou_table(report, path.with_suffix(".svg")))

matrix = ARCHIVE / "matrix.tsv"
if matrix.is_file():
    for (head, metric), (dm, ds) in sorted(read_report(matrix).deltas.items()):
        print(f"ablation {head} {metric}: {dm:+.2f} ; {ds:+.2f}")
