"""Numerical verification toolkit for the quasi-convex field
u(x, y, z) = z**a (x**(-a) + y**(-a)) on the open positive octant.

Library modules: ``field`` (closed forms and monotone maps), ``fdiff``
(finite-difference oracles), ``eig`` (small symmetric eigensolvers),
``quasiconvex`` (segment and slice-reweighting tests), ``obstruction``
(convexification obstruction certificates), ``convexify`` (exponential
threshold search), ``report``/``cli`` (orchestration and the ``qcx``
command), ``figures`` (PNG rendering of reports).
"""

from .convexify import (
    LambdaResult,
    NotConvexifiableError,
    convexification_matrix,
    min_convexifying_lambda,
)
from .field import (
    DEFAULT_TEST_MAPS,
    DomainError,
    MonotoneMap,
    PowerOverflowError,
    compose_hessian,
)
from .obstruction import (
    IndefinitenessCertificate,
    SignFlipResult,
    alpha_one_sign_flip,
    composed_hessian_indefinite,
    det_factor,
    find_certificate,
    lift_tangent,
    reduced_form,
    tangent_form,
)
from .report import ConfigError, Report, RunConfig, run

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "DomainError",
    "PowerOverflowError",
    "MonotoneMap",
    "DEFAULT_TEST_MAPS",
    "compose_hessian",
    "lift_tangent",
    "reduced_form",
    "tangent_form",
    "det_factor",
    "find_certificate",
    "alpha_one_sign_flip",
    "composed_hessian_indefinite",
    "IndefinitenessCertificate",
    "SignFlipResult",
    "convexification_matrix",
    "min_convexifying_lambda",
    "LambdaResult",
    "NotConvexifiableError",
    "RunConfig",
    "Report",
    "ConfigError",
    "run",
]
