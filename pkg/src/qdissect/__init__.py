"""Exact q-series arithmetic and weighted 7-colored partition verification.

The package has two independent computation routes for every statement
it checks: generating-function coefficient extraction (series, products,
theta) and definition-level enumeration (combinatorics).  The
verification module pits them against each other and against the
congruence/identity catalog.
"""

from .bivariate import BivariateSeries
from .combinatorics import (
    VectorPartition,
    crank,
    enumerate_class,
    enumerate_vectors,
    multirank_spec,
    partition_p,
    pentagonal_d,
    series_counts,
    statistic_distribution,
    vector_crank_spec,
    weighted_count,
)
from .products import Factor, ProductSpec, eta_quotient, expand
from .series import (
    NonUnitError,
    QSeries,
    SeriesComparison,
    equal_upto,
    pochhammer_series,
)
from .theta import (
    IdentityEntry,
    IdentityReport,
    build,
    catalog,
    verify_entry,
)
from .verification import (
    CongruenceSpec,
    EquidistributionSpec,
    Report,
    check_congruence,
    check_equidistribution,
    check_relation_chl,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "BivariateSeries",
    "CongruenceSpec",
    "EquidistributionSpec",
    "Factor",
    "IdentityEntry",
    "IdentityReport",
    "NonUnitError",
    "ProductSpec",
    "QSeries",
    "Report",
    "SeriesComparison",
    "VectorPartition",
    "build",
    "catalog",
    "check_congruence",
    "check_equidistribution",
    "check_relation_chl",
    "crank",
    "enumerate_class",
    "enumerate_vectors",
    "equal_upto",
    "eta_quotient",
    "expand",
    "multirank_spec",
    "partition_p",
    "pentagonal_d",
    "pochhammer_series",
    "run_suite",
    "series_counts",
    "statistic_distribution",
    "vector_crank_spec",
    "verify_entry",
    "weighted_count",
]
