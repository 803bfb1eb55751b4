"""matplotlib figures for reports: Hasse windows and per-cell dimension charts."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .poset import Poset  # noqa: E402

plt.rcParams.update(
    {
        "font.size": 9,
        "axes.spines.top": False,
        "axes.spines.right": False,
        "savefig.dpi": 150,
        "svg.hashsalt": "semigrass",
    }
)


def _save(fig, path):
    # fixed metadata keeps repeated runs byte-identical
    meta = {"Date": None} if str(path).endswith((".svg", ".pdf")) else {"Software": None}
    fig.savefig(path, bbox_inches="tight", metadata=meta)
    plt.close(fig)


def plot_hasse(poset: Poset, path, kmax: int = 0, highlight=()):
    """Hasse window drawn like the usual picture: x = i + j, y = i - j."""
    cells = poset.window(kmax)
    hl = set(highlight)
    fig, ax = plt.subplots(figsize=(0.7 * (len(cells) ** 0.5 + 4), 0.5 * (poset.n + 2)))
    for a, b in poset.hasse_edges(kmax):
        solid = poset.clause(a, b) == "i"
        ax.plot(
            [a.i + a.j, b.i + b.j],
            [a.i - a.j, b.i - b.j],
            color="black" if solid else "gray",
            linestyle="-" if solid else "--",
            linewidth=0.8 if solid else 0.6,
            zorder=1,
        )
    for c in cells:
        ax.text(
            c.i + c.j,
            c.i - c.j,
            f"$q_{{{c.i},{c.j}}}$",
            ha="center",
            va="center",
            fontsize=7,
            zorder=2,
            bbox={"boxstyle": "round,pad=0.15", "fc": "cyan" if c in hl else "white", "ec": "none"},
        )
    ax.set_axis_off()
    ax.set_title(f"{poset.kind}({poset.p},{poset.n}), levels <= {kmax}")
    _save(fig, path)


def plot_cells(cells: list, path):
    """Grouped bars of component dimension per (m, e) cell and family.

    ``cells`` are verify-report rows with keys m, e, family, dim, expected, status.
    """
    keys = sorted({(c["m"], c["e"]) for c in cells})
    families = sorted({c["family"] for c in cells})
    width = 0.8 / max(len(families), 1)
    fig, ax = plt.subplots(figsize=(max(4, 0.6 * len(keys) + 2), 3))
    for t, fam in enumerate(families):
        rows = {(c["m"], c["e"]): c for c in cells if c["family"] == fam}
        xs = [x + t * width for x in range(len(keys))]
        dims = [rows[k]["dim"] if k in rows else 0 for k in keys]
        colors = ["tab:blue" if rows.get(k, {}).get("status") == "ok" else "tab:red" for k in keys]
        ax.bar(xs, dims, width=width, color=colors, alpha=0.6 + 0.3 * t, label=fam)
        for x, k in zip(xs, keys):
            if k in rows:
                ax.plot(x, rows[k]["expected"], marker="_", color="black", markersize=10)
    ax.set_xticks([x + width * (len(families) - 1) / 2 for x in range(len(keys))])
    ax.set_xticklabels([f"({m},{e})" for m, e in keys])
    ax.set_xlabel("component (m, e)")
    ax.set_ylabel("dimension")
    ax.legend(frameon=False)
    _save(fig, path)
