"""Figures for check reports. matplotlib is imported lazily with the Agg
backend so the rest of the package never needs a display."""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path
from typing import Sequence

from .verify import CheckOutcome


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def plot_outcomes(outcomes: Sequence[CheckOutcome], path: str | Path,
                  title: str | None = None) -> Path:
    """One panel per claim: computed side against the bound, failures in red."""
    plt = _pyplot()
    by_claim: dict[str, list[CheckOutcome]] = defaultdict(list)
    for o in outcomes:
        by_claim[o.claim_id].append(o)
    claims = sorted(by_claim) or ["(none)"]
    fig, axes = plt.subplots(len(claims), 1, figsize=(8, 2.6 * len(claims)), squeeze=False)
    for ax, claim in zip(axes[:, 0], claims):
        rows = by_claim.get(claim, [])
        xs = range(len(rows))
        ax.step(xs, [o.rhs for o in rows], where="mid", color="0.4", lw=1, label="bound")
        ok = [(i, o.lhs) for i, o in enumerate(rows) if o.holds]
        bad = [(i, o.lhs) for i, o in enumerate(rows) if not o.holds]
        if ok:
            ax.scatter(*zip(*ok), s=12, color="tab:blue", label="holds")
        if bad:
            ax.scatter(*zip(*bad), s=30, color="tab:red", marker="x", label="fails")
        ax.set_ylabel(claim)
        ax.set_xlim(-1, max(len(rows), 1))
        ax.legend(loc="upper left", fontsize=8, frameon=False)
    axes[-1, 0].set_xlabel("instance")
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_m_histogram(ms: Sequence[int], ceilings: Sequence[int], path: str | Path) -> Path:
    """Distribution of m-numbers next to the distribution of degree ceilings."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(5, 3.2))
    top = max(list(ms) + list(ceilings) + [2])
    bins = [x - 0.5 for x in range(1, top + 2)]
    ax.hist([list(ms), list(ceilings)], bins=bins, label=["m", "ceiling"],
            color=["tab:blue", "0.6"])
    ax.set_xlabel("value")
    ax.set_ylabel("graphs")
    ax.legend(frameon=False)
    fig.tight_layout()
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
