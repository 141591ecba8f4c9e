"""Report serialization: JSON documents, flat CSV tables, and figures.

The infinite radius sentinel is serialized as the string "INFINITE" in
JSON and CSV output.
"""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

CSV_HEADER = ["id", "alpha", "beta", "r", "n", "lhs", "rhs", "slack", "holds"]


def sanitize(obj):
    """Replace non-finite floats so the document stays valid JSON."""
    if isinstance(obj, dict):
        return {k: sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [sanitize(v) for v in obj]
    if isinstance(obj, float) and not math.isfinite(obj):
        return "INFINITE" if obj > 0 else str(obj)
    return obj


def write_json(path, doc: dict) -> None:
    Path(path).write_text(json.dumps(sanitize(doc), indent=2, sort_keys=True) + "\n")


def report_csv_row(report) -> list:
    p = report.params
    return [
        report.id.value,
        p.alpha,
        p.beta,
        p.r,
        p.n,
        report.lhs if math.isfinite(report.lhs) else "INFINITE",
        report.rhs if math.isfinite(report.rhs) else "INFINITE",
        report.slack if math.isfinite(report.slack) else "INFINITE",
        report.holds,
    ]


class CsvWriter:
    def __init__(self, path, header=CSV_HEADER):
        self.path = Path(path)
        self._fh = self.path.open("w", newline="")
        self._writer = csv.writer(self._fh)
        self._writer.writerow(header)

    def writerow(self, row) -> None:
        self._writer.writerow(row)

    def close(self) -> None:
        self._fh.close()


def write_rows_csv(path, header, rows) -> None:
    with Path(path).open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)


def render_slack_figure(summaries: dict, path) -> None:
    """Horizontal bar chart of the minimum observed slack per inequality id."""
    labels, values = [], []
    for prefix, summary in summaries.items():
        for key, stats in summary.per_id.items():
            if stats.trials:
                labels.append(f"{prefix}:{key}")
                values.append(max(stats.min_slack, 1e-16))
    fig, ax = plt.subplots(figsize=(8, max(3, 0.28 * len(labels))))
    ax.barh(labels, values, color="#336699")
    ax.set_xscale("log")
    ax.set_xlabel("minimum slack (rhs - lhs)")
    ax.set_title("Worst-case slack per inequality over the randomized suite")
    ax.invert_yaxis()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_sturm_figure(rows: list, path) -> None:
    """Computed vs closed-form radius and relative error over grid sizes."""
    ns = [r["N"] for r in rows]
    computed = [r["computed"] for r in rows]
    exact = [r["exact"] for r in rows]
    fig, axes = plt.subplots(1, 2, figsize=(10, 4))
    axes[0].plot(ns, computed, "o-", label="computed")
    if all(e is not None for e in exact):
        axes[0].plot(ns, exact, "s--", label="closed form")
        rel = [r["rel_err"] for r in rows]
        axes[1].semilogy(ns, [max(v, 1e-18) for v in rel], "o-")
        axes[1].set_ylabel("relative error")
    axes[0].set_xlabel("grid points N")
    axes[0].set_ylabel("weighted numerical radius")
    axes[0].legend()
    axes[1].set_xlabel("grid points N")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
