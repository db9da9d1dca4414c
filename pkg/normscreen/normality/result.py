"""Test result records."""
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, List, Mapping, Optional, Tuple

import numpy as np


class TestName(Enum):
    """Statistics computed by the normality battery."""

    __test__ = False

    CHI_SQUARED = "ChiSquared"
    KS_D_MINUS = "KS_Dminus"
    KS_D_PLUS = "KS_Dplus"
    KS_D = "KS_D"
    KUIPER_V = "Kuiper_V"
    ANDERSON_DARLING = "AndersonDarling"
    WILKS_SHAPIRO = "WilksShapiro"
    CRAMER_VON_MISES = "CramerVonMises"
    JARQUE_BERA = "JarqueBera"
    Z_MEAN = "ZMean"
    Z_VARIANCE = "ZVariance"
    Z_STD_DEV = "ZStdDev"
    Z_SKEWNESS = "ZSkewness"
    Z_KURTOSIS = "ZKurtosis"

    @property
    def label(self) -> str:
        """Human readable name used in text reports."""
        return _LABELS[self]


_LABELS = {
    TestName.CHI_SQUARED: "Chi Squared",
    TestName.KS_D_MINUS: "Kolmogorov-Smirnov D-",
    TestName.KS_D_PLUS: "Kolmogorov-Smirnov D+",
    TestName.KS_D: "Kolmogorov-Smirnov",
    TestName.KUIPER_V: "Kuiper V",
    TestName.ANDERSON_DARLING: "Anderson-Darling",
    TestName.WILKS_SHAPIRO: "Wilks-Shapiro",
    TestName.CRAMER_VON_MISES: "Cramer-von Mises",
    TestName.JARQUE_BERA: "Jarque-Bera",
    TestName.Z_MEAN: "Z Mean",
    TestName.Z_VARIANCE: "Z Variance",
    TestName.Z_STD_DEV: "Z St.Dev",
    TestName.Z_SKEWNESS: "Z Skewness",
    TestName.Z_KURTOSIS: "Z Kurtosis",
}

_WITH_DF = (TestName.CHI_SQUARED, TestName.JARQUE_BERA)


@dataclass(frozen=True)
class TestResult:
    """Outcome of one statistic of the battery.

    Parameters
    ----------
    test : TestName
        Statistic identifier.
    statistic : float
        Value of the statistic, NaN when the test failed.
    p_values : Tuple[Tuple[str, float], ...]
        ``(method, p)`` pairs. The first one is the primary p-value.
    alpha : float
        Significance level.
    df : Optional[int], optional
        Degrees of freedom, only for chi-squared and Jarque-Bera.
    self_referential : bool, optional
        The statistic compares the sample against parameters estimated from
        itself. Such results are reported but never counted as rejections.
    metadata : Mapping[str, float], optional
        Auxiliary values (variance, corrected statistic, ...).
    error : Optional[str], optional
        Message of the error that prevented the computation.
    """

    __test__ = False

    test: TestName
    statistic: float
    p_values: Tuple[Tuple[str, float], ...]
    alpha: float
    df: Optional[int] = None
    self_referential: bool = False
    metadata: Mapping[str, float] = field(default_factory=dict)
    error: Optional[str] = None

    def __post_init__(self) -> None:
        if not 0 < self.alpha <= 0.5:
            raise ValueError(f"alpha must be in (0, 0.5], got {self.alpha}.")

        for method, p in self.p_values:
            if not 0.0 <= p <= 1.0:
                raise ValueError(
                    f"{self.test.value}: p-value '{method}' = {p} is outside "
                    "[0, 1]."
                )

        if self.error is None:
            if not self.p_values:
                raise ValueError(f"{self.test.value}: no p-value given.")
            if (self.df is not None) != (self.test in _WITH_DF):
                raise ValueError(
                    f"{self.test.value}: df is only reported for "
                    "chi-squared and Jarque-Bera."
                )

    @classmethod
    def failed(
        cls, test: TestName, alpha: float, error: Exception
    ) -> "TestResult":
        """Build the record of a statistic that could not be computed.

        Parameters
        ----------
        test : TestName
            Statistic identifier.
        alpha : float
            Significance level.
        error : Exception
            Raised error.

        Returns
        -------
        TestResult
            Result with NaN statistic, no p-values and no rejection.
        """
        return cls(
            test=test,
            statistic=np.nan,
            p_values=(),
            alpha=alpha,
            error=f"{type(error).__name__}: {error}",
        )

    @property
    def p(self) -> Optional[float]:
        """Primary p-value, None when the test failed."""
        if not self.p_values:
            return None
        return self.p_values[0][1]

    @property
    def reject(self) -> bool:
        """Whether the primary p-value falls below alpha."""
        return self.p is not None and self.p < self.alpha

    @property
    def counted(self) -> bool:
        """Whether the result takes part in the normality decision."""
        return self.error is None and not self.self_referential


@dataclass(frozen=True)
class KSDecomposition:
    r"""One-sided Kolmogorov-Smirnov distances and derived statistics.

    .. math::
        D = \max(D^-, D^+) \qquad V = D^- + D^+

    Parameters
    ----------
    d_minus : float
        Largest excess of the model cdf over the ECDF.
    d_plus : float
        Largest excess of the ECDF over the model cdf.
    """

    d_minus: float
    d_plus: float

    def __post_init__(self) -> None:
        if self.d_minus < 0 or self.d_plus < 0:
            raise ValueError("One-sided distances must be non-negative.")

    @property
    def d(self) -> float:
        """Kolmogorov-Smirnov two-sided distance."""
        return max(self.d_minus, self.d_plus)

    @property
    def v(self) -> float:
        """Kuiper statistic."""
        return self.d_minus + self.d_plus


def rejections(results: Iterable[TestResult]) -> List[TestResult]:
    """Results that reject normality and count toward the decision."""
    return [r for r in results if r.counted and r.reject]
