"""Search diagonal sign flips D with (S, S D) a real MUB pair in R^16.

S is the Sylvester matrix of order 16.  S (S D)^T / 4 is Hadamard exactly
when the sign pattern is a bent function on F_2^4; the script counts them.
"""
import argparse
import itertools
from dataclasses import dataclass

import numpy as np

from amub.combinatorics import hadamard_sylvester, real_mub_hadamard_criterion


@dataclass
class Config:
    k: int = 4
    limit: int = 5


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=Config.k, help="order 2^k, k even and <= 4")
    ap.add_argument("--limit", type=int, default=Config.limit, help="patterns to print")
    cfg = Config(**vars(ap.parse_args()))
    s = hadamard_sylvester(cfg.k).entries
    d = s.shape[0]
    found = 0
    for bits in itertools.product((1, -1), repeat=d - 1):
        signs = np.array((1,) + bits)
        if real_mub_hadamard_criterion(s, s * signs[None, :]):
            found += 1
            if found <= cfg.limit:
                print("".join("+" if x > 0 else "-" for x in signs))
    print(f"order {d}: {found} sign patterns with first entry + give an unbiased pair")


if __name__ == "__main__":
    main()
