"""Hurwitz stability analysis of monic real polynomials.

Decides stability through the Lienard-Chipart criterion, produces cheap
inequality certificates for instability and (degree five) stability,
cross-validates every verdict against an independent root-finding
oracle, and lifts the instability certificates to interval coefficient
boxes.  Shipped as a library, an HTTP service and a thin CLI client.
"""

__version__ = "0.1.0"

from .criteria import (  # noqa: F401
    Certificate,
    CertificateKind,
    GammaReport,
    StabilityVerdict,
    Verdict,
    analyze,
    lienard_chipart,
    lienard_chipart_odd,
    routh_hurwitz_full,
)
from .hurwitz import (  # noqa: F401
    HurwitzMinorSet,
    all_minors,
    delta2,
    delta4_expanded,
    delta4_factored,
    hurwitz_matrix,
    hurwitz_minor_det,
)
from .poly import (  # noqa: F401
    Polynomial,
    Scalar,
    all_coeffs_positive,
    make_polynomial,
    to_float,
)
from .roots import Classification, RootReport, classify, find_roots, find_roots_many  # noqa: F401
from .boxes import IntervalBox, box_cor1, box_cor3, box_sample_verdicts, make_box  # noqa: F401
