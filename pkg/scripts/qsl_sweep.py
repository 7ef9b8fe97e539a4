"""Sweep the spinor-curvature term against the sigma/chi decomposition.

Prints, per sample, the relative residual of
    qsl = sigma * EH + chi * EP
and of the opposite-sign combination -sigma*A + chi*B, plus the same
quantity with the hermitian gamma5 insert (which comes out imaginary).
"""

from __future__ import annotations

import argparse

from spinor_forge.clifford import gamma5
from spinor_forge.forms import eh_density, eh_term, ep_density, ep_term, qsl_curvature_matrix, qsl_curvature_term
from spinor_forge.spinors import bilinears, dirac_dual
from spinor_forge.verify import random_curvature, random_spinor, sample_rngs


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=200)
    args = ap.parse_args()

    r_same, r_opp, herm_ratio = [], [], []
    for rng in sample_rngs(args.seed, args.samples):
        psi, om = random_spinor(rng), random_curvature(rng)
        cov = bilinears(psi)
        q = qsl_curvature_term(psi, om)
        same = cov.sigma * eh_density(om) + cov.chi * ep_density(om)
        opp = -cov.sigma * eh_term(om) + cov.chi * ep_term(om)
        r_same.append(abs(q - same) / max(abs(same), 1.0))
        r_opp.append(abs(q - opp) / max(abs(opp), 1.0))
        h = 2.0 * (dirac_dual(psi) @ qsl_curvature_matrix(om, gamma5()) @ psi)
        herm_ratio.append(abs(h.real) / max(abs(h), 1e-300))

    print(f"samples                      {args.samples}")
    print(f"max rel |qsl - (s EH + c EP)|  {max(r_same):.3e}")
    print(f"min rel |qsl - (-s A + c B)|   {min(r_opp):.3e}")
    print(f"max |Re|/|.| with gamma5 insert {max(herm_ratio):.3e}")


if __name__ == "__main__":
    main()
