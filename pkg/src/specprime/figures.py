"""Rendered Hasse diagrams: the same posets the DOT exporter emits, drawn
with matplotlib and written to image files next to the delimited reports."""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bitset import bits, bitstring
from .correspondence import ring_xspace
from .dot import _mask_of_point, sprime_label
from .posets import FinitePoset
from .rings import spec
from .sprimes import hull_kernel_space


def _levels(poset: FinitePoset):
    """Longest-chain height of every point (minimal points at level 0)."""
    level = [0] * poset.n
    changed = True
    while changed:
        changed = False
        for i, j in poset.covering_pairs():
            if level[j] < level[i] + 1:
                level[j] = level[i] + 1
                changed = True
    return level


def render_hasse(poset: FinitePoset, labels, width: int, path, title=None):
    """Draw the Hasse diagram bottom-to-top and save it to `path`."""
    level = _levels(poset)
    by_level = {}
    order = sorted(range(poset.n),
                   key=lambda i: bitstring(_mask_of_point(poset.points[i]), width))
    for i in order:
        by_level.setdefault(level[i], []).append(i)
    pos = {}
    for lv, row in by_level.items():
        for k, i in enumerate(row):
            pos[i] = (k - (len(row) - 1) / 2.0, lv)

    n_levels = max(level) + 1 if poset.n else 1
    widest = max((len(r) for r in by_level.values()), default=1)
    fig, ax = plt.subplots(figsize=(max(3.0, 1.6 * widest), max(2.4, 1.2 * n_levels)))
    for i, j in poset.covering_pairs():
        (x0, y0), (x1, y1) = pos[i], pos[j]
        ax.plot([x0, x1], [y0, y1], color="0.55", lw=1.0, zorder=1)
    for i in range(poset.n):
        x, y = pos[i]
        ax.text(x, y, labels[i], ha="center", va="center", fontsize=9, zorder=2,
                bbox=dict(boxstyle="round,pad=0.3", fc="white", ec="0.3"))
    ax.set_axis_off()
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_ring_spaces(ring, out_dir, stem):
    """PNG Hasse figures for the spectrum, the semigroup primes, and the
    x-space of one ring; returns the written paths."""
    written = []
    primes, poset = spec(ring)
    p_labels = [p.short_label() for p in primes]
    path = out_dir / f"{stem}.spec.png"
    render_hasse(poset, p_labels, ring.n, path, title=f"Spec {ring.label}")
    written.append(path)

    space = hull_kernel_space(ring)
    s_labels = [sprime_label(ring, q) for q in space.primes]
    path = out_dir / f"{stem}.sprimes.png"
    render_hasse(space.order, s_labels, ring.n, path,
                 title=f"Semigroup primes of {ring.label}")
    written.append(path)

    xorder, _ = ring_xspace(ring)
    x_labels = ["{" + ",".join(p_labels[i] for i in bits(ds.members)) + "}"
                for ds in xorder.points]
    path = out_dir / f"{stem}.xspace.png"
    render_hasse(xorder, x_labels, len(primes), path,
                 title=f"Inverse-closed prime sets of {ring.label}")
    written.append(path)
    return written
