"""Plan the 4 speed x 3 heel-strike-angle grid and print the summary table.

    python scripts/run_grid.py --out results/grid --steps 2
"""
import argparse

from saddle_walk.grid import run_grid, summary_table
from saddle_walk.io import DEFAULT_HS_ANGLES, DEFAULT_VELOCITIES, RunConfig


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="results/grid")
    ap.add_argument("--steps", type=int, default=2)
    ap.add_argument("--height", type=float, default=1.79)
    ap.add_argument("--mass", type=float, default=63.3)
    ap.add_argument("--dt", type=float, default=0.08)
    args = ap.parse_args()
    cfg = RunConfig(n_steps=args.steps, body_height=args.height, mass=args.mass, dt=args.dt,
                    velocities=DEFAULT_VELOCITIES, hs_angles_deg=DEFAULT_HS_ANGLES,
                    output_dir=args.out)
    print(summary_table(run_grid(cfg)))


if __name__ == "__main__":
    main()
