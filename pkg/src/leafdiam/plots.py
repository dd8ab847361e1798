"""Figure rendering for the table report path.

Uses matplotlib's object API directly (no pyplot, no global state) so the
CLI can write figures headlessly next to its CSV output.  Enumerated extrema
are drawn as markers with the closed forms as thin lines underneath, so a
formula/enumeration mismatch is visible at a glance.
"""

from __future__ import annotations

from matplotlib.figure import Figure

from .formulas import max_diameter, max_leaves, min_diameter, min_leaves
from .oracle import ExtremalTable


def render_table_figure(table: ExtremalTable, path: str) -> None:
    """Render the two extremal curves of one order to an image file."""
    fig = Figure(figsize=(9.0, 3.8))
    ax_leaves, ax_diam = fig.subplots(1, 2)
    n = table.n

    ds = sorted(table.by_diameter)
    ax_leaves.plot(ds, [min_leaves(n, d) for d in ds], "-", lw=1, color="tab:blue")
    ax_leaves.plot(ds, [max_leaves(n, d) for d in ds], "-", lw=1, color="tab:red")
    ax_leaves.plot(ds, [table.by_diameter[d][0] for d in ds], "o",
                   color="tab:blue", label="min leaves")
    ax_leaves.plot(ds, [table.by_diameter[d][1] for d in ds], "s",
                   color="tab:red", label="max leaves")
    ax_leaves.set_xlabel("diameter d")
    ax_leaves.set_ylabel("leaf count")
    ax_leaves.set_title(f"leaf extrema, order {n}")
    ax_leaves.legend()

    fs = sorted(f for f in table.by_leaves if f < n)
    ax_diam.plot(fs, [min_diameter(n, f) for f in fs], "-", lw=1, color="tab:blue")
    ax_diam.plot(fs, [max_diameter(n, f) for f in fs], "-", lw=1, color="tab:red")
    ax_diam.plot(fs, [table.by_leaves[f][0] for f in fs], "o",
                 color="tab:blue", label="min diameter")
    ax_diam.plot(fs, [table.by_leaves[f][1] for f in fs], "s",
                 color="tab:red", label="max diameter")
    ax_diam.set_xlabel("leaf count f")
    ax_diam.set_ylabel("diameter")
    ax_diam.set_title(f"diameter extrema, order {n}")
    ax_diam.legend()

    for ax in (ax_leaves, ax_diam):
        ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
