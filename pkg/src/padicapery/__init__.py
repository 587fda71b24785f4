"""Exact approximant tables and p-adic irrationality certificates.

The package computes, in exact rational arithmetic, the Apery-style
approximant sequences attached to 2-adic and 3-adic zeta values and to
the 2-adic Catalan constant, evaluates the target limits independently
through p-adic interpolation of classical L-values, and checks a
finite-range irrationality criterion that compares the two.
"""

from .curves import CaseConfig, FAMILIES, IdentityError, catalog, run_canaries
from .diophantine import (
    Certificate,
    CertificationReport,
    check_height_bound,
    criterion_check,
    resolve_sign,
    slope_empirical,
    theta_closed,
)
from .exactnum import INFINITY, lcm_upto, log_size, padic_digits, vp
from .expansion import (
    IntegralityError,
    IntegralityReport,
    SequenceRow,
    SequenceTable,
    integrality_report,
    max_terms_cap,
    reexpand,
    sequences,
)
from .oracle import (
    OracleInconsistency,
    PadicValue,
    catalan_2adic_oracle,
    zeta_p_oracle,
)
from .qseries import ProductRecipe, QSeries, expand_product
from .recurrence import (
    RecurrenceSpec,
    catalan_recurrence,
    fit_recurrence,
    residual,
    run_recurrence,
    verify_recurrence,
)

__version__ = "0.1.0"

__all__ = [
    "CaseConfig",
    "Certificate",
    "CertificationReport",
    "FAMILIES",
    "INFINITY",
    "IdentityError",
    "IntegralityError",
    "IntegralityReport",
    "OracleInconsistency",
    "PadicValue",
    "ProductRecipe",
    "QSeries",
    "RecurrenceSpec",
    "SequenceRow",
    "SequenceTable",
    "catalan_2adic_oracle",
    "catalan_recurrence",
    "catalog",
    "check_height_bound",
    "criterion_check",
    "expand_product",
    "fit_recurrence",
    "integrality_report",
    "lcm_upto",
    "log_size",
    "max_terms_cap",
    "padic_digits",
    "reexpand",
    "residual",
    "resolve_sign",
    "run_canaries",
    "run_recurrence",
    "sequences",
    "slope_empirical",
    "theta_closed",
    "verify_recurrence",
    "vp",
    "zeta_p_oracle",
]
