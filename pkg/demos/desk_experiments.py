"""Desk-scale training runs behind the ordinal acceptance checks.

Everything runs on one CPU core. The script is resumable: each cell's best
checkpoint is archived, and a rerun only re-evaluates finished cells.

    python3 demos/desk_experiments.py            # all cells
    python3 demos/desk_experiments.py id seg     # a subset, by cell-name prefix

Data goes to ``desk/data`` (about 2 GB) and results to ``desk/archive``;
override with SPADPOSE_DESK_DATA and SPADPOSE_DESK_ARCHIVE.
"""
from __future__ import annotations

import logging
import os
import sys
import time
from dataclasses import replace
from pathlib import Path

from spadpose.dataset import Dataset, generate_dataset
from spadpose.evaluate import format_report
from spadpose.experiments import Cell, ablation_deltas, run_cell
from spadpose.evaluate import EvalReport
from spadpose.train import TrainConfig

ROOT = Path(__file__).resolve().parent.parent
DATA = Path(os.environ.get("SPADPOSE_DESK_DATA", ROOT / "desk" / "data"))
ARCHIVE = Path(os.environ.get("SPADPOSE_DESK_ARCHIVE", ROOT / "desk" / "archive"))

# name -> (drone, regime, count, master seed)
FILES = {
    "a-level": ("a", "reduced-level", 5000, 103),
    "b-level": ("b", "reduced-level", 2000, 102),
    "a-full": ("a", "full", 5000, 104),
    "a-level-val": ("a", "reduced-level", 1000, 203),
    "b-level-val": ("b", "reduced-level", 500, 202),
    "a-full-val": ("a", "full", 1000, 204),
}

ORIENT = TrainConfig(batch_size=8, lr=5e-4, max_epochs=8, patience=3)
CONFIGS = {
    "id": replace(ORIENT, task="id", max_epochs=2, patience=1),
    "seg": replace(ORIENT, task="seg", max_epochs=6, patience=2),
}

CELLS = [
    Cell("id", None, "reduced-level"),
    Cell("seg", "a", "reduced-level"),
    Cell("pitch", "a", "full"),
    Cell("roll", "a", "reduced-level"),
    Cell("roll", "a", "full"),
    Cell("yaw", "a", "full"),
    Cell("yaw", "a", "full", "intensity-only"),
]


def data_file(name: str) -> Path:
    path = DATA / f"{name}.dpc"
    if not path.is_file():
        drone, regime, count, seed = FILES[name]
        t0 = time.perf_counter()
        generate_dataset(drone, regime, count, seed, path)
        print(f"generated {name}: {count} samples in {time.perf_counter() - t0:.0f}s", flush=True)
    return path


def datasets(cell: Cell) -> tuple[Dataset, Dataset]:
    if cell.task == "id":
        # 2000 training and 500 validation samples per drone
        a, b = Dataset.open(data_file("a-level")), Dataset.open(data_file("b-level"))
        va, vb = Dataset.open(data_file("a-level-val")), Dataset.open(data_file("b-level-val"))
        return a.subset(range(2000)).concat(b), va.subset(range(500)).concat(vb)
    name = "a-full" if cell.regime == "full" else "a-level"
    train, val = Dataset.open(data_file(name)), Dataset.open(data_file(name + "-val"))
    if cell.task == "seg":
        train = train.subset(range(2000))
    return train, val


def main(prefixes: list[str]) -> None:
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")
    DATA.mkdir(parents=True, exist_ok=True)
    ARCHIVE.mkdir(parents=True, exist_ok=True)
    cells = [c for c in CELLS if not prefixes or any(c.name.startswith(p) for p in prefixes)]
    matrix = EvalReport()
    timing = ARCHIVE / "timings.tsv"
    times = dict(l.split("\t") for l in timing.read_text().splitlines()) if timing.is_file() else {}
    for cell in cells:
        train, val = datasets(cell)
        fresh = not (ARCHIVE / f"{cell.name}.dpw").is_file()
        t0 = time.perf_counter()
        rep = run_cell(cell, train, val, ARCHIVE, CONFIGS.get(cell.task, ORIENT))
        if fresh:
            times[cell.name] = f"{time.perf_counter() - t0:.1f}"
            timing.write_text("".join(f"{k}\t{v}\n" for k, v in sorted(times.items())))
        matrix.summary.update(rep.summary)
        for (head, metric), s in sorted(rep.summary.items()):
            print(f"{head:36s} {metric:12s} {s.mean:6.2f} +- {s.std:5.2f}", flush=True)
    ablation_deltas(matrix, cells)
    (ARCHIVE / "matrix.tsv").write_text(format_report(matrix), encoding="utf-8")


if __name__ == "__main__":
    main(sys.argv[1:])
