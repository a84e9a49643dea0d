"""Operational calculus for the Fourier transform on GL(2,R).

Exact normal forms for the correspondence between polynomial differential
operators on the group and differential-difference operators on the
representation-parameter side, plus the numerical verification suites.
"""

from ._core import (
    OperatorParseError,
    PoleError,
    UnknownSuiteError,
    apply_image,
    eval_kernel,
    j_transform,
    kernel_of_operator,
    normal_form,
    theta_image,
    theta_image_grouped,
    verify,
)

__all__ = [
    "OperatorParseError",
    "PoleError",
    "UnknownSuiteError",
    "apply_image",
    "eval_kernel",
    "j_transform",
    "kernel_of_operator",
    "normal_form",
    "theta_image",
    "theta_image_grouped",
    "verify",
]
