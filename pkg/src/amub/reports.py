"""Table 1 reproduction at desk scale and the bound-calculator report."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .algebra import is_prime, prime_power
from .bases import gamma, realify_collection, tolerance
from .bounds import (
    complex_mub_lower_bound,
    delta_bound,
    real_mub_upper_bound,
    welch_bound,
)
from .combinatorics import mols_lower_bound
from .constructions import amub_elliptic, amub_gauss, amub_jacobi, mub_prime_power
from .elliptic import Curve, enumerate_group
from .errors import AmubError, SingularCurve


@dataclass
class TableRow:
    row: int
    params: str
    D: int
    n: int
    bound: float
    measured: float | None = None
    generated: bool = True

    @property
    def status(self) -> str:
        if not self.generated:
            return "not generated"
        return "ok" if self.measured <= self.bound + tolerance(self.D) else "VIOLATED"


def prime_powers(lo: int, hi: int) -> list[int]:
    out = []
    for q in range(max(lo, 2), hi + 1):
        try:
            prime_power(q)
        except AmubError:
            continue
        out.append(q)
    return out


def largest_curve(p: int, m: int = 2) -> Curve:
    """The nonsingular curve over F_p with the most points (ties: smallest (a, b))."""
    best, best_d = None, -1
    for a in range(p):
        for b in range(p):
            try:
                c = Curve(p, a, b)
            except SingularCurve:
                continue
            d = enumerate_group(c).d
            if d > best_d and m <= d - 1:
                best, best_d = c, d
    return best


def _measure(coll) -> float:
    return gamma(realify_collection(coll)).gamma


def table1_rows(max_q: int = 13, max_p: int = 13) -> list[TableRow]:
    rows: list[TableRow] = []
    for q in prime_powers(2, max_q):
        D = 2 * q
        rows.append(TableRow(1, f"p^m={q}", D, q + 1, math.sqrt(2) / math.sqrt(D),
                             _measure(mub_prime_power(q))))
    rows.append(TableRow(2, "d=6", 12, 3, math.sqrt(2) / math.sqrt(12), generated=False))
    rows.append(TableRow(3, "d=7", 98, 6, math.sqrt(2) / math.sqrt(98), generated=False))
    m = 2
    for p in range(5, max_p + 1):
        if not is_prime(p):
            continue
        c = largest_curve(p, m)
        coll = amub_elliptic(p, c.a, c.b, m)
        D = 2 * coll.d
        bound = 2 * math.sqrt(2) * m / math.sqrt(D) + 4 * m / D
        rows.append(TableRow(4, f"p={p},a={c.a},b={c.b},m={m},d={coll.d}", D, coll.n, bound,
                             _measure(coll)))
    for q in prime_powers(4, max_q):
        d = q - 1
        bound = math.sqrt(1 / d + (1 + 2 * math.sqrt(d + 1)) / d**2)
        rows.append(TableRow(5, f"q={q}", 2 * d, q, bound, _measure(amub_jacobi(q))))
    for q in prime_powers(3, max_q):
        d = q - 1
        bound = math.sqrt(1 / d + 1 / d**2)
        rows.append(TableRow(6, f"q={q}", 2 * d, q + 1, bound, _measure(amub_gauss(q))))
    for q in prime_powers(2, max_q):
        d = q + 1
        bound = math.sqrt(1 / d + 2 * math.sqrt(d - 1) / d**2)
        rows.append(TableRow(7, f"q={q}", 2 * d, q, bound, generated=False))
    r = 2
    while 2**r <= max_q:
        d = 2**r * (2**r - 1)
        rows.append(TableRow(8, f"r={r}", 2 * d, 2**r + 1, 1 / (2**r - 1), generated=False))
        r += 1
    rows.sort(key=lambda row: row.row)
    return rows


def render_table1(rows: list[TableRow]) -> str:
    head = f"{'No.':<5}{'params':<30}{'D':>5}{'n':>5}{'bound':>14}{'measured':>14}  status"
    lines = [head, "-" * len(head)]
    for r in rows:
        meas = f"{r.measured:14.10f}" if r.measured is not None else f"{'-':>14}"
        lines.append(f"({r.row}){'':<2}{r.params:<30}{r.D:>5}{r.n:>5}{r.bound:14.10f}{meas}  {r.status}")
    bad = [r for r in rows if r.status == "VIOLATED"]
    lines.append(f"generated rows: {sum(r.generated for r in rows)}, violations: {len(bad)}")
    return "\n".join(lines)


def table1_json(rows: list[TableRow]) -> list[dict]:
    return [dict(asdict(r), status=r.status) for r in rows]


def bounds_report(d: int, n: int | None = None, field: str = "C") -> dict:
    """Welch bounds, MUB caps and combinatorial bounds for one dimension."""
    if n is None:
        n = d + 1 if field == "C" else max(2, real_mub_upper_bound(d).cap)
    out: dict = {"d": d, "n": n, "field": field}
    for t in (1, 2):
        w = welch_bound(d, n, t, field)
        out[f"welch_t{t}"] = f"{w.numerator}/{w.denominator}"
        out[f"welch_t{t}_float"] = float(w)
    if field == "C":
        out["mub_upper"] = d + 1
        out["mub_lower"] = complex_mub_lower_bound(d)
    else:
        cap = real_mub_upper_bound(d)
        out["mub_upper"] = cap.cap
        out["mub_upper_reason"] = cap.reason
    out["mols_lower"] = mols_lower_bound(d)
    root = math.isqrt(d)
    if root * root == d and root % 4 == 0 and root // 4 >= 2:
        m4 = root // 4
        out["delta"] = {"m": m4, "n": 4 * m4 - 3, "value": delta_bound(m4, 4 * m4 - 3)}
    return out


def render_bounds(rep: dict) -> str:
    lines = [f"dimension {rep['d']}  field {rep['field']}  n {rep['n']}"]
    for t in (1, 2):
        lines.append(f"welch t={t}: gamma^{2 * t} >= {rep[f'welch_t{t}']} ({rep[f'welch_t{t}_float']:.10f})")
    if rep["field"] == "C":
        lines.append(f"N_C(d) <= {rep['mub_upper']}")
        lines.append(f"N_C(d) >= {rep['mub_lower']}  (tensor of prime-power MUBs)")
    else:
        lines.append(f"N_R(d) <= {rep['mub_upper']}  ({rep['mub_upper_reason']})")
    lines.append(f"M(d) >= {rep['mols_lower']}  (MOLS)")
    if "delta" in rep:
        dl = rep["delta"]
        lines.append(f"Delta(m={dl['m']}, n={dl['n']}) = {dl['value']}")
    return "\n".join(lines)

