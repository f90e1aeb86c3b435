"""Render summary figures for a batch run next to its JSON-lines report."""

from __future__ import annotations

from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

FIGSIZE = (6.4, 4.0)
OUTCOME_ORDER = ("found", "none", "budget", "error")
OUTCOME_COLORS = {
    "found": "#2a9d8f",
    "none": "#e9c46a",
    "budget": "#f4a261",
    "error": "#e76f51",
}


def _save(fig, out_dir: Path, name: str) -> Path:
    path = out_dir / name
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def outcomes_by_k(records: list[dict], out_dir: Path) -> Path:
    ks = sorted({r["k"] for r in records})
    counts = {o: [0] * len(ks) for o in OUTCOME_ORDER}
    for r in records:
        counts[r["outcome"]][ks.index(r["k"])] += 1
    fig, ax = plt.subplots(figsize=FIGSIZE)
    bottom = [0] * len(ks)
    for outcome in OUTCOME_ORDER:
        vals = counts[outcome]
        if not any(vals):
            continue
        ax.bar([str(k) for k in ks], vals, bottom=bottom,
               label=outcome, color=OUTCOME_COLORS[outcome])
        bottom = [b + v for b, v in zip(bottom, vals)]
    ax.set_xlabel("target size k")
    ax.set_ylabel("graphs")
    ax.set_title("Outcomes per target size")
    ax.legend()
    return _save(fig, out_dir, "outcomes_by_k.png")


def case_tag_counts(records: list[dict], out_dir: Path) -> Path:
    tags = Counter()
    for r in records:
        for level in r.get("case_trace") or []:
            tags[level["case"]] += 1
    fig, ax = plt.subplots(figsize=FIGSIZE)
    if tags:
        names = sorted(tags)
        ax.barh(names, [tags[t] for t in names], color="#457b9d")
    ax.set_xlabel("levels")
    ax.set_title("Construction steps by case")
    return _save(fig, out_dir, "case_tags.png")


def runtime_by_size(records: list[dict], out_dir: Path) -> Path:
    fig, ax = plt.subplots(figsize=FIGSIZE)
    for outcome in OUTCOME_ORDER:
        xs = [r["n"] for r in records if r["outcome"] == outcome]
        ys = [r["elapsed_ms"] for r in records if r["outcome"] == outcome]
        if xs:
            ax.scatter(xs, ys, s=12, alpha=0.6, label=outcome,
                       color=OUTCOME_COLORS[outcome])
    ax.set_xlabel("vertices")
    ax.set_ylabel("elapsed (ms)")
    ax.set_title("Per-graph runtime")
    if ax.get_legend_handles_labels()[0]:
        ax.legend()
    return _save(fig, out_dir, "runtime_by_size.png")


def render_report_figures(records: list[dict], out_dir: str | Path) -> list[Path]:
    """Write the standard report figures; returns the created file paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if not records:
        return []
    return [
        outcomes_by_k(records, out),
        case_tag_counts(records, out),
        runtime_by_size(records, out),
    ]
