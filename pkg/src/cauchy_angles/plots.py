"""Figure rendering for experiment reports.

Numeric row series become line plots; verdicts become a bar chart of
statistic-to-threshold ratios with the pass line at 1.  The figure is
written next to the delimited report when plotting is requested.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .report import ExperimentReport

__all__ = ["render_report"]

_MAX_SERIES = 10


def _numeric_series(report: ExperimentReport) -> dict:
    series: dict[str, tuple[list, list]] = {}
    for row in report.rows:
        if isinstance(row.x, (int, float)) and isinstance(row.value, (int, float)):
            xs, ys = series.setdefault(row.label, ([], []))
            xs.append(float(row.x))
            ys.append(float(row.value))
    return series


def render_report(report: ExperimentReport, path: str) -> str:
    """Render the report to a PNG at ``path`` and return the path."""
    series = _numeric_series(report)
    n_panels = (1 if series else 0) + (1 if report.verdicts else 0)
    if n_panels == 0:
        n_panels = 1
    fig, axes = plt.subplots(n_panels, 1, figsize=(8, 4 * n_panels), squeeze=False)
    axes = axes.ravel()
    panel = 0

    if series:
        ax = axes[panel]
        panel += 1
        for i, (label, (xs, ys)) in enumerate(sorted(series.items())):
            if i >= _MAX_SERIES:
                break
            order = sorted(range(len(xs)), key=xs.__getitem__)
            ax.plot([xs[k] for k in order], [ys[k] for k in order], lw=1.2, label=label)
        ax.set_title(f"{report.experiment}: data rows")
        ax.legend(fontsize=7, ncol=2)
        ax.grid(True, alpha=0.3)

    if report.verdicts:
        ax = axes[panel]
        names = [v.name for v in report.verdicts]
        ratios = [v.statistic / v.threshold for v in report.verdicts]
        colors = ["#2a7" if v.passed else "#c33" for v in report.verdicts]
        ax.bar(range(len(names)), ratios, color=colors)
        ax.axhline(1.0, color="k", lw=0.8, ls="--")
        ax.set_xticks(range(len(names)))
        ax.set_xticklabels(names, rotation=90, fontsize=6)
        ax.set_ylabel("statistic / threshold")
        ax.set_title(f"{report.experiment}: verdicts (below dashed line = pass)")

    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
