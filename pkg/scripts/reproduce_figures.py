"""Write the data series behind the four figures to CSV.

    python scripts/reproduce_figures.py --out figures/ [--plot]

--plot additionally renders PNGs if matplotlib is importable.
"""

import argparse
from pathlib import Path

import numpy as np

from channel_coherence.cli import figure_series, render_csv
from channel_coherence.potential import DoubleWell, analyze, evaluate


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=Path("figures"))
    parser.add_argument("--plot", action="store_true")
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    well = DoubleWell(m=1.0, omega=1.0, a=1.0)
    geom = analyze(well)
    xs = np.linspace(-1.0, 9.0, 401)
    series = {"fig1": (("x", "V"), [(x, evaluate(well, x)) for x in xs])}
    thetas = np.linspace(0.05, 20.0, 400)
    series["fig2"] = figure_series("fig2", thetas)
    series["fig3"] = figure_series("fig3", thetas)
    series["fig4"] = figure_series("fig4", np.linspace(0.0, 0.99, 400))

    for name, (header, rows) in series.items():
        (args.out / f"{name}.csv").write_text(render_csv(header, rows))
    print(f"wrote {len(series)} series to {args.out}; epsilon0={geom.epsilon0:g}, w={geom.w:g}")

    if args.plot:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        for name, (header, rows) in series.items():
            x, y = np.array(rows, dtype=float).T
            fig, ax = plt.subplots(figsize=(5, 3.5))
            ax.plot(x, y)
            ax.set_xlabel(header[0])
            ax.set_ylabel(header[1])
            fig.tight_layout()
            fig.savefig(args.out / f"{name}.png", dpi=120)
            plt.close(fig)


if __name__ == "__main__":
    main()
