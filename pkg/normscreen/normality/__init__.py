"""Normality tests against a fitted normal model."""
from .anderson_darling import (
    anderson_darling,
    anderson_darling_p_value,
    anderson_darling_statistic,
)
from .battery import DEFAULT_TESTS, EXTENDED_TESTS, run_battery, select_tests
from .chi_squared import chi_squared_test
from .cramer_von_mises import (
    cramer_von_mises,
    cramer_von_mises_p_value,
    cramer_von_mises_statistic,
)
from .jarque_bera import jarque_bera
from .kolmogorov import (
    kolmogorov_sf,
    kolmogorov_sf_theta,
    kolmogorov_smirnov,
    kolmogorov_smirnov_one_sided,
    ks_p_value,
    ks_statistics,
    kuiper,
    kuiper_p_value,
    smirnov_p_value,
)
from .result import KSDecomposition, TestName, TestResult, rejections
from .shapiro_wilk import wilks_shapiro
from .z_statistics import (
    c4,
    z_kurtosis,
    z_mean,
    z_skewness,
    z_statistics,
    z_std_dev,
    z_variance,
)


__all__ = [
    "DEFAULT_TESTS",
    "EXTENDED_TESTS",
    "KSDecomposition",
    "TestName",
    "TestResult",
    "anderson_darling",
    "anderson_darling_p_value",
    "anderson_darling_statistic",
    "c4",
    "chi_squared_test",
    "cramer_von_mises",
    "cramer_von_mises_p_value",
    "cramer_von_mises_statistic",
    "jarque_bera",
    "kolmogorov_sf",
    "kolmogorov_sf_theta",
    "kolmogorov_smirnov",
    "kolmogorov_smirnov_one_sided",
    "ks_p_value",
    "ks_statistics",
    "kuiper",
    "kuiper_p_value",
    "rejections",
    "run_battery",
    "select_tests",
    "smirnov_p_value",
    "wilks_shapiro",
    "z_kurtosis",
    "z_mean",
    "z_skewness",
    "z_statistics",
    "z_std_dev",
    "z_variance",
]
