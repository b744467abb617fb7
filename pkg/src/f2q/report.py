"""Figure rendering for sweep results.

Two standard views of a precision sweep: estimate error against total gate
count (one series per encoding/order/ordering), and the gate savings of
one encoding over another as a function of the target precision.  Figures
are written straight to files; no interactive backend is required.
"""

from __future__ import annotations

import math
from collections import defaultdict
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .spectral import CHEMICAL_PRECISION, SpectralResult

_SERIES_STYLE = {
    1: dict(marker="o", linestyle="-"),
    2: dict(marker="s", linestyle="-."),
    3: dict(marker="^", linestyle=":"),
    4: dict(marker="d", linestyle="--"),
}


def _grouped(results: Sequence[SpectralResult]):
    groups: dict[tuple[str, int, str], list[SpectralResult]] = defaultdict(list)
    for r in results:
        groups[(r.encoding, r.order, r.ordering)].append(r)
    for key in groups:
        groups[key].sort(key=lambda r: r.steps)
    return dict(sorted(groups.items()))


def plot_error_vs_gates(
    results: Sequence[SpectralResult],
    path: str,
    threshold: float = CHEMICAL_PRECISION,
) -> None:
    """Log-log error versus total gates, with the precision threshold marked."""
    fig, ax = plt.subplots(figsize=(7.0, 5.0))
    for (encoding, order, ordering), rs in _grouped(results).items():
        gates = [r.gates.total for r in rs]
        errors = [max(r.error, 1e-18) for r in rs]
        label = f"{encoding or 'op'} order {order} ({ordering})"
        ax.plot(gates, errors, label=label, markersize=4, linewidth=1.0,
                **_SERIES_STYLE.get(order, {}))
    ax.axhline(threshold, color="black", linewidth=0.8)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("total gates")
    ax.set_ylabel("absolute eigenvalue error (hartree)")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def gates_to_reach(results: Sequence[SpectralResult], precision: float) -> int | None:
    """Cheapest total gate count among results meeting the precision."""
    within = [r.gates.total for r in results if r.error <= precision]
    return min(within) if within else None


def plot_gate_savings(
    results: Sequence[SpectralResult],
    path: str,
    baseline_encoding: str,
    compared_encoding: str,
    threshold: float = CHEMICAL_PRECISION,
) -> None:
    """Gate savings of ``compared`` relative to ``baseline`` versus precision.

    For each order, scans a log-spaced precision grid and plots the
    difference of the cheapest gate counts reaching that precision.
    """
    by_order: dict[int, dict[str, list[SpectralResult]]] = defaultdict(
        lambda: defaultdict(list)
    )
    for r in results:
        by_order[r.order][r.encoding].append(r)

    fig, ax = plt.subplots(figsize=(7.0, 5.0))
    for order in sorted(by_order):
        base = by_order[order].get(baseline_encoding, [])
        comp = by_order[order].get(compared_encoding, [])
        if not base or not comp:
            continue
        errors = [r.error for r in base + comp if r.error > 0]
        if not errors:
            continue
        lo = max(min(errors), 1e-16)
        hi = max(errors)
        grid = [
            10 ** (math.log10(lo) + k * (math.log10(hi) - math.log10(lo)) / 60)
            for k in range(61)
        ]
        xs, ys = [], []
        for p in grid:
            gb = gates_to_reach(base, p)
            gc = gates_to_reach(comp, p)
            if gb is not None and gc is not None:
                xs.append(p)
                ys.append(gb - gc)
        if xs:
            ax.plot(xs, ys, label=f"order {order}", markersize=3,
                    **_SERIES_STYLE.get(order, {}))
    ax.axvline(threshold, color="black", linewidth=0.8)
    ax.set_xscale("log")
    ax.invert_xaxis()
    ax.set_xlabel("target precision (hartree)")
    ax.set_ylabel(f"gate savings ({baseline_encoding} minus {compared_encoding})")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
