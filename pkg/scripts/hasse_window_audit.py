"""List curves whose point count leaves p +/- 2 sqrt(p) but obeys Hasse's p + 1 +/- 2 sqrt(p)."""
import argparse
from dataclasses import dataclass

from amub.algebra import is_prime
from amub.elliptic import Curve, enumerate_group, hasse_weil_window, shifted_window
from amub.errors import SingularCurve


@dataclass
class Config:
    max_p: int = 13


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-p", type=int, default=Config.max_p)
    cfg = Config(**vars(ap.parse_args()))
    for p in filter(is_prime, range(5, cfg.max_p + 1)):
        lo, hi = shifted_window(p)
        hlo, hhi = hasse_weil_window(p)
        total = outside = 0
        for a in range(p):
            for b in range(p):
                try:
                    d = enumerate_group(Curve(p, a, b)).d
                except SingularCurve:
                    continue
                total += 1
                assert hlo <= d <= hhi
                if not lo <= d <= hi:
                    outside += 1
                    print(f"p={p} a={a} b={b}: d={d} > {hi:.3f}")
        print(f"p={p}: {outside} of {total} curves outside p +/- 2 sqrt(p)")


if __name__ == "__main__":
    main()
