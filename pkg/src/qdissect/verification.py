"""The theorem suite: congruence sweeps, equidistribution checks, the
coefficient relation behind the mod-11 congruence, and negative controls.

Every check emits a machine-readable Report.  A check that would need
more series coefficients than the run's precision reports "skipped",
never a false "pass".
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from . import combinatorics as comb
from . import theta
from .series import QSeries

DEFAULT_PRECISION = 2000
ENUM_CHECK_LIMIT = 10  # q-degrees up to which enumeration cross-checks run


@dataclass(frozen=True)
class CongruenceSpec:
    """source[a*n + b] == 0 (mod modulus) for 0 <= n <= n_max.

    ``modulus`` None demands exact zero coefficients.
    """

    id: str
    series: str
    param: Optional[int]
    step: int
    offset: int
    modulus: Optional[int]
    n_max: int
    expect: str = "pass"  # negative controls set "fail"

    def __post_init__(self):
        if self.step < 1 or not 0 <= self.offset < self.step:
            raise ValueError("need step >= 1 and 0 <= offset < step")
        if self.modulus is not None and self.modulus < 2:
            raise ValueError("modulus must be >= 2 (or None for exact zero)")

    def statement(self) -> str:
        name = self.series + (f"_{self.param}" if self.param is not None else "")
        rel = "= 0" if self.modulus is None else f"== 0 (mod {self.modulus})"
        return f"{name}({self.step}n+{self.offset}) {rel} for n <= {self.n_max}"


@dataclass(frozen=True)
class EquidistributionSpec:
    """All residue classes of the statistic mod m are equal on a progression."""

    id: str
    family: str
    t: Optional[int]
    statistic_modulus: int
    step: int
    offset: int
    n_max: int

    def statement(self) -> str:
        fam = f"V_{self.t}" if self.family == "V" else "W2"
        return (
            f"{fam} statistic classes mod {self.statistic_modulus} are equal "
            f"at {self.step}n+{self.offset} for n <= {self.n_max}"
        )


@dataclass
class Report:
    id: str
    kind: str
    statement: str
    status: str                      # "pass" | "fail" | "skipped"
    checked: str = ""
    detail: str = ""
    counterexample: Optional[dict] = None
    millis: float = 0.0

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "kind": self.kind,
            "statement": self.statement,
            "status": self.status,
            "checked": self.checked,
            "millis": round(self.millis, 3),
        }
        if self.detail:
            out["detail"] = self.detail
        if self.counterexample is not None:
            out["counterexample"] = {
                k: str(v) if isinstance(v, int) else v
                for k, v in self.counterexample.items()
            }
        return out


def _timed(report: Report, start: float) -> Report:
    report.millis = (time.perf_counter() - start) * 1000.0
    return report


def check_congruence(spec: CongruenceSpec, precision: int = DEFAULT_PRECISION) -> Report:
    start = time.perf_counter()
    needed = spec.step * spec.n_max + spec.offset + 1
    if needed > precision:
        return _timed(
            Report(
                spec.id,
                "congruence",
                spec.statement(),
                "skipped",
                detail=f"needs precision {needed}, have {precision}",
            ),
            start,
        )
    series = theta.build(spec.series, precision, spec.param)
    for n in range(spec.n_max + 1):
        value = series[spec.step * n + spec.offset]
        bad = value != 0 if spec.modulus is None else value % spec.modulus != 0
        if bad:
            return _timed(
                Report(
                    spec.id,
                    "congruence",
                    spec.statement(),
                    "fail",
                    checked=f"n <= {spec.n_max}",
                    counterexample={
                        "n": n,
                        "index": spec.step * n + spec.offset,
                        "value": value,
                    },
                ),
                start,
            )
    return _timed(
        Report(spec.id, "congruence", spec.statement(), "pass", checked=f"n <= {spec.n_max}"),
        start,
    )


def check_equidistribution(
    spec: EquidistributionSpec, precision: int = DEFAULT_PRECISION
) -> Report:
    start = time.perf_counter()
    m = spec.statistic_modulus
    needed = spec.step * spec.n_max + spec.offset + 1
    if needed > precision:
        return _timed(
            Report(
                spec.id,
                "equidistribution",
                spec.statement(),
                "skipped",
                detail=f"needs precision {needed}, have {precision}",
            ),
            start,
        )
    # generating-function route, with z-exponents folded mod m
    gf = comb.series_counts(spec.family, spec.t, needed, z_mod=m)
    buckets = gf.residue_buckets(m)
    w_param = spec.t if spec.family == "V" else 2
    totals = theta.build("w", needed, w_param)
    for n in range(spec.n_max + 1):
        idx = spec.step * n + spec.offset
        values = [b[idx] for b in buckets]
        if len(set(values)) != 1 or values[0] * m != totals[idx]:
            return _timed(
                Report(
                    spec.id,
                    "equidistribution",
                    spec.statement(),
                    "fail",
                    checked=f"n <= {spec.n_max}",
                    counterexample={"n": n, "index": idx, "classes": str(values)},
                ),
                start,
            )
    # enumeration route on the small degrees of the progression
    for n in range(spec.n_max + 1):
        idx = spec.step * n + spec.offset
        if idx > ENUM_CHECK_LIMIT:
            break
        dist = comb.statistic_distribution(spec.family, spec.t, idx)
        classes = [
            sum(c for mm, c in dist.items() if mm % m == k) for k in range(m)
        ]
        if classes != [b[idx] for b in buckets]:
            return _timed(
                Report(
                    spec.id,
                    "equidistribution",
                    spec.statement(),
                    "fail",
                    detail="enumeration disagrees with generating function",
                    counterexample={"index": idx, "classes": str(classes)},
                ),
                start,
            )
    return _timed(
        Report(
            spec.id,
            "equidistribution",
            spec.statement(),
            "pass",
            checked=f"n <= {spec.n_max} (gf), degrees <= {ENUM_CHECK_LIMIT} (enumeration)",
        ),
        start,
    )


def check_relation_chl(n_max: int = 150, precision: int = DEFAULT_PRECISION) -> Report:
    """a2(11n + 120) = 11^4 * a2(n/11), with a2(x) = 0 off integers,
    where a2 is the coefficient family of f2^14 / f1^4."""
    start = time.perf_counter()
    statement = f"a2(11n+120) = 11^4 a2(n/11) for n <= {n_max}"
    needed = 11 * n_max + 121
    if needed > precision:
        return _timed(
            Report(
                "chl-relation",
                "relation",
                statement,
                "skipped",
                detail=f"needs precision {needed}, have {precision}",
            ),
            start,
        )
    a2 = theta.build("a2", precision)
    for n in range(n_max + 1):
        left = a2[11 * n + 120]
        right = 11 ** 4 * a2[n // 11] if n % 11 == 0 else 0
        if left != right:
            return _timed(
                Report(
                    "chl-relation",
                    "relation",
                    statement,
                    "fail",
                    checked=f"n <= {n_max}",
                    counterexample={"n": n, "left": left, "right": right},
                ),
                start,
            )
    return _timed(
        Report("chl-relation", "relation", statement, "pass", checked=f"n <= {n_max}"),
        start,
    )


def check_oracle_agreement(
    family: str, t: Optional[int], n_limit: int = ENUM_CHECK_LIMIT
) -> Report:
    """Enumeration distributions vs generating-function z-coefficients,
    plus symmetry, totals, and (for V) nonnegativity."""
    start = time.perf_counter()
    fam = f"V_{t}" if family == "V" else "W2"
    statement = (
        f"{fam}: enumeration = gf coefficients, symmetric, totals w(n), n <= {n_limit}"
    )
    gf = comb.series_counts(family, t, n_limit + 1)
    w = theta.build("w", n_limit + 1, t if family == "V" else 2)

    def failure(detail, ce):
        return _timed(
            Report("oracle-" + fam.lower(), "oracle", statement, "fail",
                   detail=detail, counterexample=ce),
            start,
        )

    if not gf.is_z_symmetric():
        return failure("generating function not symmetric under z -> 1/z", None)
    for n in range(n_limit + 1):
        dist = comb.statistic_distribution(family, t, n)
        if dist != gf.z_coefficients(n):
            return failure("enumeration disagrees with gf", {"n": n})
        if any(dist.get(-m, 0) != c for m, c in dist.items()):
            return failure("distribution not symmetric", {"n": n})
        if sum(dist.values()) != w[n]:
            return failure("total differs from w(n)", {"n": n})
        if family == "V" and any(c < 0 for c in dist.values()):
            return failure("negative weighted count", {"n": n})
    return _timed(
        Report("oracle-" + fam.lower(), "oracle", statement, "pass",
               checked=f"n <= {n_limit}"),
        start,
    )


def check_table_v4_n3() -> Report:
    """The 28 vectors of V_4 at n = 3 and their weight/multirank multiset."""
    start = time.perf_counter()
    statement = "V_4 at n=3: 28 vectors, residue classes mod 5 all 4, total 20"
    vectors = comb.enumerate_vectors("V", 4, 3)
    dist = comb.statistic_distribution("V", 4, 3)
    classes = [sum(c for m, c in dist.items() if m % 5 == k) for k in range(5)]
    ok = (
        len(vectors) == 28
        and classes == [4, 4, 4, 4, 4]
        and sum(dist.values()) == 20
    )
    return _timed(
        Report(
            "table-v4-n3",
            "table",
            statement,
            "pass" if ok else "fail",
            counterexample=None if ok else {"vectors": len(vectors), "classes": str(classes)},
        ),
        start,
    )


def _check_parity_weighted(precision: int) -> list:
    """Section-4 style checks on c_t(n), d(n), and p(n)."""
    reports = []

    # d(n): series coefficient == pentagonal formula, and == parity-weighted
    # enumeration over W2 for small n
    start = time.perf_counter()
    statement = "d(n) matches the pentagonal formula for n <= 200"
    if precision < 201:
        reports.append(Report("d-pentagonal", "relation", statement, "skipped",
                              detail=f"needs precision 201, have {precision}"))
    else:
        d = theta.build("d", precision)
        bad = next(
            (n for n in range(201) if d[n] != comb.pentagonal_d(n)), None
        )
        reports.append(_timed(Report(
            "d-pentagonal", "relation", statement,
            "pass" if bad is None else "fail",
            checked="n <= 200",
            counterexample=None if bad is None else {"n": bad, "value": d[bad]},
        ), start))

    start = time.perf_counter()
    statement = "d(n) = parity-weighted count over W2 for n <= 10"
    if precision < 11:
        reports.append(Report("d-enumeration", "relation", statement, "skipped",
                              detail=f"needs precision 11, have {precision}"))
    else:
        d = theta.build("d", precision)
        bad = next(
            (
                n
                for n in range(11)
                if d[n] != comb.parity_weighted_enumeration("W2", None, n)
            ),
            None,
        )
        reports.append(_timed(Report(
            "d-enumeration", "relation", statement,
            "pass" if bad is None else "fail",
            checked="n <= 10",
            counterexample=None if bad is None else {"n": bad},
        ), start))

    start = time.perf_counter()
    statement = "c_4(2k) = p(k) for k <= 100 and c_4(odd) = 0"
    if precision < 202:
        reports.append(Report("c4-partition", "relation", statement, "skipped",
                              detail=f"needs precision 202, have {precision}"))
    else:
        c4 = theta.build("c", precision, 4)
        bad = None
        for k in range(101):
            if c4[2 * k] != comb.partition_p(k):
                bad = 2 * k
                break
        if bad is None:
            bad = next((n for n in range(1, 202, 2) if c4[n] != 0), None)
        reports.append(_timed(Report(
            "c4-partition", "relation", statement,
            "pass" if bad is None else "fail",
            checked="k <= 100",
            counterexample=None if bad is None else {"index": bad, "value": c4[bad]},
        ), start))

    start = time.perf_counter()
    statement = "c_t(n) = parity-weighted count over V_t for t in {1,4}, n <= 8"
    if precision < 9:
        reports.append(Report("c-enumeration", "relation", statement, "skipped",
                              detail=f"needs precision 9, have {precision}"))
    else:
        bad = None
        for t in (1, 4):
            ct = theta.build("c", precision, t)
            for n in range(9):
                if ct[n] != comb.parity_weighted_enumeration("V", t, n):
                    bad = (t, n)
                    break
        reports.append(_timed(Report(
            "c-enumeration", "relation", statement,
            "pass" if bad is None else "fail",
            checked="n <= 8",
            counterexample=None if bad is None else {"t": bad[0], "n": bad[1]},
        ), start))

    return reports


def congruence_catalog() -> list:
    """Every congruence sweep in the suite, negative controls included."""
    specs = []

    # parity of w_t on odd indices, t even
    for t in (2, 4, 6):
        specs.append(CongruenceSpec(f"mod4-w{t}-2n1", "w", t, 2, 1, 4, 100))
    # 3-dissection corollaries, t divisible by 3
    for t in (3, 6):
        specs.append(CongruenceSpec(f"mod4-w{t}-3n1", "w", t, 3, 1, 4, 100))
        specs.append(CongruenceSpec(f"mod9-w{t}-3n2", "w", t, 3, 2, 9, 100))
    # the 24n+23 family
    specs.append(CongruenceSpec("mod27-w3-24n23", "w", 3, 24, 23, 27, 80))
    specs.append(CongruenceSpec("mod729-w3-24n23", "w", 3, 24, 23, 729, 40))
    # mod 5 family by residue of t
    for t in (5, 10):
        specs.append(CongruenceSpec(f"mod5-w{t}-5n3", "w", t, 5, 3, 5, 100))
        specs.append(CongruenceSpec(f"mod5-w{t}-5n4", "w", t, 5, 4, 5, 100))
    for t in (1, 6):
        specs.append(CongruenceSpec(f"mod5-w{t}-5n4", "w", t, 5, 4, 5, 100))
    for t in (4, 9):
        specs.append(CongruenceSpec(f"mod5-w{t}-5n3", "w", t, 5, 3, 5, 100))
    # mod 7 and mod 11 for w_2
    specs.append(CongruenceSpec("mod7-w2-7n4", "w", 2, 7, 4, 7, 100))
    specs.append(CongruenceSpec("mod11-w2-11n10", "w", 2, 11, 10, 11, 100))
    # 25-power step of the w_4 family (offset 23: the least positive
    # reciprocal of 12 modulo 25; the mod-5 step is the t=4 sweep above)
    specs.append(CongruenceSpec("mod25-w4-25n23", "w", 4, 25, 23, 25, 40))
    # parity-weighted counts c_t
    for t in (5, 10):
        specs.append(CongruenceSpec(f"zero-c{t}-5n3", "c", t, 5, 3, None, 100))
        specs.append(CongruenceSpec(f"zero-c{t}-5n4", "c", t, 5, 4, None, 100))
    for t in (1, 6):
        specs.append(CongruenceSpec(f"mod5-c{t}-5n4", "c", t, 5, 4, 5, 100))
    for t in (4, 9):
        specs.append(CongruenceSpec(f"mod5-c{t}-5n3", "c", t, 5, 3, 5, 100))
    specs.append(CongruenceSpec("mod25-c4-25n23", "c", 4, 25, 23, 25, 40))
    # negative controls: these progressions carry no claim and must fail
    specs.append(CongruenceSpec("control-w2-7n3", "w", 2, 7, 3, 7, 20, expect="fail"))
    specs.append(CongruenceSpec("control-w4-5n1", "w", 4, 5, 1, 5, 20, expect="fail"))
    specs.append(CongruenceSpec("control-w2-11n7", "w", 2, 11, 7, 11, 20, expect="fail"))
    return specs


def equidistribution_catalog() -> list:
    specs = []
    for t in (1, 6):
        specs.append(EquidistributionSpec(f"equi-v{t}-5n4", "V", t, 5, 5, 4, 30))
    for t in (4, 9):
        specs.append(EquidistributionSpec(f"equi-v{t}-5n3", "V", t, 5, 5, 3, 30))
    for t in (5, 10):
        specs.append(EquidistributionSpec(f"equi-v{t}-5n3", "V", t, 5, 5, 3, 30))
        specs.append(EquidistributionSpec(f"equi-v{t}-5n4", "V", t, 5, 5, 4, 30))
    specs.append(EquidistributionSpec("equi-w2-7n4", "W2", None, 7, 7, 4, 10))
    return specs


def _apply_expectation(report: Report, expect: str) -> Report:
    if expect == "fail":
        report.kind = "control"
        if report.status == "fail":
            report.status = "pass"
            report.detail = "negative control failed as required"
        elif report.status == "pass":
            report.status = "fail"
            report.detail = "negative control unexpectedly passed"
    return report


def run_suite(
    precision: int = DEFAULT_PRECISION,
    name_filter: Optional[str] = None,
    enum_limit: int = ENUM_CHECK_LIMIT,
) -> list:
    """Run every suite item; one report per item, in a stable order."""
    reports = []

    for entry in theta.catalog():
        if entry.default_precision > precision:
            reports.append(Report(
                f"identity-{entry.id}", "identity", entry.description, "skipped",
                detail=f"needs precision {entry.default_precision}, have {precision}",
            ))
            continue
        r = theta.verify_entry(entry)
        reports.append(Report(
            f"identity-{entry.id}", "identity", entry.description, r.status,
            checked=f"N = {r.precision}",
            counterexample=None if r.status == "pass" else {
                "index": r.mismatch_index,
                "left": r.mismatch_left,
                "right": r.mismatch_right,
            },
            millis=r.millis,
        ))

    for spec in congruence_catalog():
        reports.append(_apply_expectation(check_congruence(spec, precision), spec.expect))

    for espec in equidistribution_catalog():
        reports.append(check_equidistribution(espec, precision))

    reports.append(check_relation_chl(150, precision))
    reports.append(check_table_v4_n3())

    for family, t in (("V", 1), ("V", 2), ("V", 4), ("V", 5), ("W2", None)):
        reports.append(check_oracle_agreement(family, t, enum_limit))

    reports.extend(_check_parity_weighted(precision))

    if name_filter:
        reports = [r for r in reports if name_filter in r.id]
    return reports


def suite_failed(reports: list) -> bool:
    return any(r.status == "fail" for r in reports)
