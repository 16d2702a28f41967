#!/usr/bin/env python3
"""Steering-detection demo on a noisy Bell state family.

Sweeps the isotropic family rho(v) = v |Phi+><Phi+| + (1-v) I/4 and prints,
for each visibility v, both steering inequalities under matched mutually
unbiased qubit measurement pairs.  The min-entropy inequality flips from
satisfied to violated as v grows; the reported thresholds bracket where
each witness starts detecting steerability.
"""

import math

import numpy as np

from design_uncertainty import (assign_povms, builtin_design,
                                matched_alice_povms, mub_grouping,
                                steering_check_maxprob, steering_check_renyi)


def isotropic(v):
    phi = np.zeros(4)
    phi[0] = phi[3] = 1 / math.sqrt(2)
    return v * np.outer(phi, phi) + (1 - v) * np.eye(4) / 4


def run():
    mub = assign_povms(builtin_design("octahedron"), mub_grouping())
    alice = matched_alice_povms(mub)
    dims = (2, 2)
    print(f"{'v':>5} {'renyi lhs':>10} {'renyi rhs':>10} {'ok':>3} "
          f"{'mprob lhs':>10} {'mprob rhs':>10} {'ok':>3}")
    for v in np.linspace(0.0, 1.0, 21):
        r = steering_check_renyi(isotropic(v), dims, alice, mub, math.inf)
        m = steering_check_maxprob(isotropic(v), dims, alice, mub)
        print(f"{v:5.2f} {r.lhs:10.6f} {r.rhs:10.6f} {str(r.satisfied)[0]:>3} "
              f"{m.lhs:10.6f} {m.rhs:10.6f} {str(m.satisfied)[0]:>3}")


if __name__ == "__main__":
    run()
