"""Time both routes to the defining polynomial as k, l grow.

Route one multiplies out the relator word in the trace algebra; route two
substitutes the trace of w_k into the Chebyshev curve and multiplies by the
reducible factor.  Both must agree exactly.
"""

import argparse
import time
from dataclasses import dataclass

from charvar.variety import natural_model, reducible_poly
from charvar.words import link_words, phi_via_traces


@dataclass
class ScalingConfig:
    max_kl: int = 15
    step: int = 2


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", dest="max_kl", type=int, default=15)
    ap.add_argument("--step", type=int, default=2)
    cfg = ScalingConfig(**vars(ap.parse_args(argv)))
    kappa = reducible_poly()
    print(f"{'k':>4} {'l':>4} {'len(r)':>7} {'terms':>7} {'deg':>4} {'traces_s':>9} {'closed_s':>9} agree")
    for v in range(3, cfg.max_kl + 1, cfg.step):
        k = l = v
        t0 = time.perf_counter()
        phi = phi_via_traces(k, l)
        t1 = time.perf_counter()
        closed = kappa * natural_model(k, l)
        t2 = time.perf_counter()
        r = link_words((k - 1) // 2, (l - 1) // 2).r
        print(f"{k:>4} {l:>4} {len(r):>7} {len(phi.terms):>7} {phi.degree():>4} "
              f"{t1 - t0:>9.3f} {t2 - t1:>9.3f} {phi == closed}")


if __name__ == "__main__":
    main()
