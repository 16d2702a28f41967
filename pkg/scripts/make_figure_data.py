#!/usr/bin/env python3
"""Generate the four bound-sweep CSV files.

Each file tabulates the min-entropy lower bounds over the full admissible
range of the index parameter for one design/grouping combination:

  sweep_octahedron_single.csv        3-design, one 6-outcome POVM
  sweep_octahedron_mub.csv           same vectors split into 3 bases
  sweep_icosahedron_single.csv       5-design, one 12-outcome POVM
  sweep_icosidodecahedron_single.csv 5-design, one 30-outcome POVM

Note the abscissa column is the index parameter itself, not a rescaled
display value.  Usage: python scripts/make_figure_data.py [outdir]
"""

import pathlib
import sys

from design_uncertainty.cli import main as cli_main

SWEEPS = [
    ("sweep_octahedron_single.csv", ["--design", "octahedron"]),
    ("sweep_octahedron_mub.csv",
     ["--design", "octahedron", "--grouping", "mub"]),
    ("sweep_icosahedron_single.csv", ["--design", "icosahedron"]),
    ("sweep_icosidodecahedron_single.csv",
     ["--design", "icosidodecahedron"]),
]


def run(outdir):
    outdir = pathlib.Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for fname, flags in SWEEPS:
        target = outdir / fname
        code = cli_main(["sweep", *flags, "--points", "200",
                         "--alphas", "10", "--output", str(target)])
        if code != 0:
            raise SystemExit(f"sweep failed for {fname} (exit {code})")
        print(f"wrote {target}")


if __name__ == "__main__":
    run(sys.argv[1] if len(sys.argv) > 1 else "figure_data")
