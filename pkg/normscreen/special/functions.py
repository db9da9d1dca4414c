"""Special functions and distribution tails.

Thin, validated wrappers over the :mod:`scipy.special` kernels. The
regularized incomplete gamma is evaluated by series below ``a + 1`` and by
continued fraction above it, and the incomplete beta by a continued fraction
with symmetry reflection, which is what the Cephes routines behind
``gammaincc`` and ``betainc`` do.
"""
from enum import Enum
from typing import Union

from normscreen.errors import DomainError

import numpy as np
from numpy.typing import NDArray

from scipy import special

RealLike = Union[float, NDArray[np.float64]]


class TailKind(Enum):
    """Tail selector for distribution probabilities.

    ``TWO_SIDED`` is only meaningful for symmetric distributions (normal and
    Student t).
    """

    LOWER = "lower"
    UPPER = "upper"
    TWO_SIDED = "two-sided"


def _as_result(value: NDArray[np.float64]) -> RealLike:
    """Return a python float for 0-d arrays."""
    if np.ndim(value) == 0:
        return float(value)
    return value


def ln_gamma(x: RealLike) -> RealLike:
    r"""Natural logarithm of the gamma function.

    .. math::
        \ln \Gamma(x) = \ln \int_0^\infty t^{x-1} e^{-t} dt

    Parameters
    ----------
    x : Union[float, NDArray[np.float64]]
        Strictly positive argument.

    Returns
    -------
    Union[float, NDArray[np.float64]]
        :math:`\ln \Gamma(x)`.

    Raises
    ------
    DomainError
        If any ``x <= 0``.
    """
    x = np.asarray(x, dtype=np.float64)

    if np.any(~(x > 0)):
        raise DomainError(f"ln_gamma requires x > 0, got {x}.")

    return _as_result(special.gammaln(x))


def normal_cdf(z: RealLike) -> RealLike:
    r"""Standard normal cumulative distribution function.

    .. math::
        \Phi(z) = \frac{1}{2} \left(1 + erf\left(\frac{z}{\sqrt{2}}\right)
        \right)

    Parameters
    ----------
    z : Union[float, NDArray[np.float64]]
        Standard score. ``±inf`` map to 0 and 1.

    Returns
    -------
    Union[float, NDArray[np.float64]]
        :math:`\Phi(z)`.
    """
    return _as_result(special.ndtr(np.asarray(z, dtype=np.float64)))


def normal_tail(
    z: RealLike, sides: TailKind = TailKind.TWO_SIDED
) -> RealLike:
    """Tail probability of the standard normal distribution.

    Parameters
    ----------
    z : Union[float, NDArray[np.float64]]
        Standard score.
    sides : TailKind, optional
        Tail to integrate, by default two-sided.

    Returns
    -------
    Union[float, NDArray[np.float64]]
        ``P(Z < z)``, ``P(Z > z)`` or ``P(|Z| > |z|)``.
    """
    z = np.asarray(z, dtype=np.float64)

    if sides is TailKind.LOWER:
        tail = special.ndtr(z)
    elif sides is TailKind.UPPER:
        tail = special.ndtr(-z)
    else:
        tail = 2.0 * special.ndtr(-np.abs(z))

    return _as_result(tail)


def chi2_sf(x: RealLike, df: float) -> RealLike:
    r"""Chi-squared survival function.

    .. math::
        P(\chi^2_{df} > x) = Q\left(\frac{df}{2}, \frac{x}{2}\right)

    | :math:`Q`: regularized upper incomplete gamma function.

    Parameters
    ----------
    x : Union[float, NDArray[np.float64]]
        Non-negative statistic.
    df : float
        Degrees of freedom, at least 1.

    Returns
    -------
    Union[float, NDArray[np.float64]]
        Upper tail probability.

    Raises
    ------
    DomainError
        If ``x < 0`` or ``df < 1``.
    """
    x = np.asarray(x, dtype=np.float64)

    if not df >= 1:
        raise DomainError(f"chi2_sf requires df >= 1, got {df}.")
    if np.any(~(x >= 0)):
        raise DomainError(f"chi2_sf requires x >= 0, got {x}.")

    return _as_result(special.gammaincc(0.5 * df, 0.5 * x))


def student_t_tail(
    t: RealLike, df: float, sides: TailKind = TailKind.UPPER
) -> RealLike:
    r"""Tail probability of the Student t distribution.

    .. math::
        P(|T| > |t|) = I_{\frac{df}{df + t^2}}\left(\frac{df}{2},
        \frac{1}{2}\right)

    | :math:`I_x(a, b)`: regularized incomplete beta function.

    Parameters
    ----------
    t : Union[float, NDArray[np.float64]]
        Statistic.
    df : float
        Degrees of freedom, at least 1.
    sides : TailKind, optional
        Tail to integrate, by default the upper tail.

    Returns
    -------
    Union[float, NDArray[np.float64]]
        ``P(T < t)``, ``P(T > t)`` or ``P(|T| > |t|)``.

    Raises
    ------
    DomainError
        If ``df < 1`` or ``t`` is NaN.
    """
    t = np.asarray(t, dtype=np.float64)

    if not df >= 1:
        raise DomainError(f"student_t_tail requires df >= 1, got {df}.")
    if np.any(np.isnan(t)):
        raise DomainError("student_t_tail requires a non-NaN statistic.")

    two_sided = special.betainc(0.5 * df, 0.5, df / (df + t * t))

    if sides is TailKind.TWO_SIDED:
        return _as_result(two_sided)

    half = 0.5 * two_sided

    if sides is TailKind.UPPER:
        return _as_result(np.where(t >= 0, half, 1.0 - half))

    return _as_result(np.where(t <= 0, half, 1.0 - half))
