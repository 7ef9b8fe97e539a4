"""Probe the mapping constraint surface.

The first two common conditions sum to sigma/2, so any spinor meeting them
has sigma = 0. This script checks that numerically and counts, for random
and constructed inputs, how many land on each class's condition set.
"""

from __future__ import annotations

import argparse
from collections import Counter

import numpy as np

from spinor_forge.elko import elko_family
from spinor_forge.lounesto import classify
from spinor_forge.mapping import common_conditions, is_mappable
from spinor_forge.spinors import bilinears
from spinor_forge.verify import random_momentum, random_spinor, sample_rngs


def census(psis):
    hits = Counter()
    for psi in psis:
        for c in (1, 2, 3):
            if is_mappable(psi, c).mappable:
                hits[c] += 1
    return dict(hits)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=1000)
    args = ap.parse_args()
    rngs = sample_rngs(args.seed, args.samples)

    rand = [random_spinor(r) for r in rngs]
    gap = max(abs(common_conditions(p)[:2].sum() - bilinears(p).sigma / 2) for p in rand)
    print(f"max |r0 + r1 - sigma/2| over random spinors: {gap:.3e}")
    print("random spinors mappable per class:", census(rand))

    # (u, -i u) with u1^* u2 real: on the common surface with chi != 0
    built = []
    for r in rngs:
        u = r.standard_normal(2) * np.exp(1j * r.uniform(0, 2 * np.pi))
        built.append(np.concatenate([u, -1j * u]))
    classes = Counter(int(classify(p).klass) for p in built)
    print("constructed (u, -iu) classes:", dict(classes), "mappable:", census(built))

    worst = Counter()
    for r in rngs[: max(1, args.samples // 10)]:
        for lam in elko_family(random_momentum(r)).values():
            res = np.abs(common_conditions(lam.psi / np.linalg.norm(lam.psi)))
            for k, v in enumerate(res):
                worst[k] = max(worst[k], float(v))
    print("ELKO common residuals, worst per condition:", {k: f"{v:.3e}" for k, v in sorted(worst.items())})


if __name__ == "__main__":
    main()
