"""Tabulate the four ELKO spinors at one momentum with their checks."""

from __future__ import annotations

import argparse

import numpy as np

from spinor_forge.elko import Momentum, dual_norm, elko_family, scalar_boost_factor
from spinor_forge.lounesto import classify
from spinor_forge.spinors import charge_conjugate


def fmt(z):
    return f"{z.real:+.4f}{z.imag:+.4f}i"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m", type=float, default=1.0)
    ap.add_argument("--p", type=float, default=0.75)
    ap.add_argument("--theta", type=float, default=0.6)
    ap.add_argument("--phi", type=float, default=1.2)
    args = ap.parse_args()

    mom = Momentum(args.m, args.p, args.theta, args.phi)
    fam = elko_family(mom)
    print(f"m={mom.m} |p|={mom.p_mag} E={mom.energy:.6f} theta={mom.theta} phi={mom.phi}")
    print(f"{'type':>4} {'pair':>4}  {'components':<58} {'C':>3} {'class':>8} {'norm':>10} {'boost':>8}")
    for (ct, pr), lam in fam.items():
        c = charge_conjugate(lam.psi)
        ev = "+1" if np.allclose(c, lam.psi) else ("-1" if np.allclose(c, -lam.psi) else "?")
        comps = " ".join(fmt(z) for z in lam.psi)
        n = dual_norm(lam, fam)
        k = classify(lam.psi).klass.label
        print(f"{ct:>4} {pr:>4}  {comps:<58} {ev:>3} {k:>8} {n.real:>10.6f} {scalar_boost_factor(pr, mom):>8.5f}")


if __name__ == "__main__":
    main()
