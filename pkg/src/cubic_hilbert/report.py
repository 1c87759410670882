"""Rendering of family reports: delimited output and overview figures.

The sweep pipeline emits one row per family; this module turns a list
of reports into CSV and, on request, a (d, g)-plane picture of the
verdicts with the g = 3d - 18 threshold drawn in.  Figures are rendered
off-screen; nothing here feeds back into the numeric paths.
"""

from __future__ import annotations

import csv
from typing import IO, Iterable, Sequence

from .classifier import FamilyReport, Verdict

CSV_COLUMNS = (
    "a", "b1", "b2", "b3", "b4", "b5", "b6",
    "d", "g", "in_omega", "dim_w", "chi_n",
    "h1_ideal_3", "h1_ideal_1", "h1_oc3", "h0_normal",
    "verdict", "literature_flags",
)


def csv_row(report: FamilyReport) -> dict:
    row = {"a": report.key.a}
    for k, x in enumerate(report.key.b, start=1):
        row[f"b{k}"] = x
    row.update(
        d=report.d, g=report.g,
        in_omega="true" if report.in_omega else "false",
        dim_w=report.dim_w, chi_n=report.chi_n,
        h1_ideal_3=report.h1_ideal_3, h1_ideal_1=report.h1_ideal_1,
        h1_oc3=report.h1_oc3, h0_normal=report.h0_normal,
        verdict=report.verdict.value,
        literature_flags=";".join(sorted(report.literature_flags)),
    )
    return row


def write_csv(reports: Iterable[FamilyReport], fp: IO[str]) -> int:
    """Write one CSV row per report; returns the number of rows."""
    writer = csv.DictWriter(fp, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    n = 0
    for report in reports:
        writer.writerow(csv_row(report))
        n += 1
    return n


_VERDICT_STYLE = {
    Verdict.REDUCED_COMPONENT: ("tab:green", "reduced component"),
    Verdict.NON_REDUCED_COMPONENT: ("tab:red", "non-reduced component"),
    Verdict.NOT_COMPONENT: ("tab:gray", "not a component"),
    Verdict.OPEN: ("tab:orange", "open"),
    Verdict.BELOW_OMEGA: ("lightsteelblue", "below threshold"),
}


def save_verdict_figure(reports: Sequence[FamilyReport], path: str) -> None:
    """Scatter the reports in the (d, g) plane, coloured by verdict."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(8, 6))
    # several verdicts can share a lattice point; nudge each verdict a
    # little so coincident families stay visible
    for idx, (verdict, (color, label)) in enumerate(_VERDICT_STYLE.items()):
        pts = [(r.d, r.g) for r in reports if r.verdict is verdict]
        if not pts:
            continue
        off = 0.08 * idx
        ax.scatter([p[0] + off for p in pts], [p[1] + off for p in pts],
                   s=14, color=color, label=f"{label} ({len(pts)})")
    if reports:
        lo = min(r.d for r in reports)
        hi = max(r.d for r in reports)
        ds = list(range(lo, hi + 1))
        ax.plot(ds, [3 * d - 18 for d in ds], "k--", linewidth=1,
                label="g = 3d - 18")
    ax.set_xlabel("degree d")
    ax.set_ylabel("genus g")
    ax.set_title("Hilbert-scheme verdicts for curve families on the cubic surface")
    if ax.get_legend_handles_labels()[0]:
        ax.legend(loc="upper left", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
