"""Tuples of integers, one bump train per axis.

Separability makes the d-dimensional integral a product of one-dimensional
partial sums, so cancellation depth multiplies across axes.  This script
maps a 2-D grid, finds the index tuples below a cancellation threshold, and
contrasts joint recovery with the simpler per-axis route.
"""

import numpy as np

from smoothint import (
    Canonical,
    EncoderConfig,
    MultiEncoderConfig,
    build_table,
    coordinatewise_recover,
    integral_multi,
    recover_multi,
)

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None


def main() -> None:
    config = MultiEncoderConfig.isotropic(Canonical(), 2, delta=0.2)

    print("a corner of the 2-D integral grid:")
    header = "        " + "".join(f"N2={j:<9d}" for j in range(1, 6))
    print(header)
    for i in range(1, 6):
        row = "".join(f"{integral_multi(config, (i, j)):+.6f}  " for j in range(1, 6))
        print(f"  N1={i}  {row}")

    epsilon = 1e-4
    first = recover_multi(config, 30, epsilon)
    print()
    print(f"first tuple with |I| < {epsilon}: {first}")
    print(f"  |I{first}| = {abs(integral_multi(config, first)):.3e}")

    front = recover_multi(config, 30, epsilon, pareto=True)
    print(f"pareto-minimal qualifying tuples: {front}")
    print("  (no tuple on this list is dominated componentwise by another)")

    print()
    print("coordinatewise recovery, given one observed integral per axis:")
    table = build_table(EncoderConfig(family=Canonical(), delta=0.2), 30)
    targets = (table.value_at(4), table.value_at(11))
    recovered = coordinatewise_recover(config, targets, 1e-9, 30)
    print(f"  targets {tuple(round(t, 6) for t in targets)} -> {recovered}")

    if plt is not None:
        grid = np.empty((30, 30))
        for i in range(1, 31):
            for j in range(1, 31):
                grid[i - 1, j - 1] = abs(integral_multi(config, (i, j)))
        fig, ax = plt.subplots(figsize=(5.5, 4.5))
        im = ax.imshow(
            np.log10(grid), origin="lower", extent=(1, 30, 1, 30), cmap="viridis"
        )
        fig.colorbar(im, label="log10 |I(N1, N2)|")
        ax.set_xlabel("N2")
        ax.set_ylabel("N1")
        ax.set_title("cancellation depth across the grid")
        fig.tight_layout()
        fig.savefig("multidim_grid.png", dpi=120)
        print("wrote multidim_grid.png")
    else:
        print("matplotlib not installed; skipping the picture")


if __name__ == "__main__":
    main()
