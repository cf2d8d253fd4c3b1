"""Compare the Jacobi-sum collection's gamma with two candidate bounds.

Cross inner products of that collection are (J + 1) / d with J a Jacobi
sum of modulus sqrt(q), so gamma <= (sqrt(q) + 1) / d.  The squared form
1/d + (2 sqrt(d+1) + 1)/d^2 undercounts |J + 1|^2 by one.
"""
import argparse
import math
from dataclasses import dataclass

from amub.bases import gamma
from amub.constructions import amub_jacobi
from amub.reports import prime_powers


@dataclass
class Config:
    max_q: int = 64


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-q", type=int, default=Config.max_q)
    cfg = Config(**vars(ap.parse_args()))
    print(f"{'q':>4}{'gamma':>14}{'stated':>14}{'(sqrt q+1)/d':>14}  stated holds")
    for q in prime_powers(4, cfg.max_q):
        d = q - 1
        g = gamma(amub_jacobi(q)).gamma
        stated = math.sqrt(1 / d + (2 * math.sqrt(d + 1) + 1) / d**2)
        shifted = (math.sqrt(q) + 1) / d
        print(f"{q:>4}{g:14.10f}{stated:14.10f}{shifted:14.10f}  {'yes' if g <= stated + 1e-9 else 'NO'}")


if __name__ == "__main__":
    main()
