"""Per-q-degree Laurent polynomials in a marker variable z.

Used to carry rank/crank generating functions: the coefficient of
z^m q^n is a weighted count of vector partitions of n with statistic m.
Residue bucketing replaces root-of-unity specializations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import QSeries


@dataclass(frozen=True)
class BivariateSeries:
    """``rows[n]`` maps z-exponent to the coefficient of z^m q^n.

    Stored entries are nonzero; absent exponents mean zero.  Treat the
    row dicts as immutable.
    """

    rows: tuple

    @property
    def precision(self) -> int:
        return len(self.rows)

    def coefficient(self, n: int, m: int) -> int:
        if not 0 <= n < len(self.rows):
            raise IndexError(
                f"q-degree {n} is outside known precision {len(self.rows)}"
            )
        return self.rows[n].get(m, 0)

    def z_coefficients(self, n: int) -> dict:
        if not 0 <= n < len(self.rows):
            raise IndexError(
                f"q-degree {n} is outside known precision {len(self.rows)}"
            )
        return dict(self.rows[n])

    def specialize_z_one(self) -> QSeries:
        return QSeries(tuple(sum(row.values()) for row in self.rows))

    def residue_buckets(self, m: int) -> list:
        """m univariate series; bucket k collects z-exponents == k (mod m)."""
        if m < 1:
            raise ValueError("bucket modulus must be >= 1")
        buckets = [[0] * len(self.rows) for _ in range(m)]
        for n, row in enumerate(self.rows):
            for e, c in row.items():
                buckets[e % m][n] += c
        return [QSeries(tuple(b)) for b in buckets]

    def is_z_symmetric(self) -> bool:
        """True if every q-degree is invariant under z -> 1/z."""
        return all(
            all(row.get(-e, 0) == c for e, c in row.items()) for row in self.rows
        )
