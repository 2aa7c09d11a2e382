"""Statistics of the ratio of two independent squared alpha-mu variates.

Closed-form PDF/CDF/MGF/moments through a from-scratch Fox H-function
evaluator (Mellin-Barnes contour quadrature and residue series), classical
special cases, three wireless-performance applications, and a seedable
Monte Carlo engine validating every analytic quantity.
"""

from .apps import (
    CognitiveScenario,
    FullDuplexScenario,
    SecrecyScenario,
    cognitive_outage,
    fullduplex_floor,
    fullduplex_outage,
    sop_lower_bound,
)
from .dists import (
    AlphaMuChannel,
    SampleStream,
    envelope_cdf,
    envelope_moment,
    envelope_pdf,
    inverse_envelope_moment,
    regularized_lower_gamma,
    sample_envelope,
    sample_snr,
    snr_cdf,
    snr_pdf,
)
from .foxh import (
    FoxHParams,
    QuadratureConfig,
    SeriesConfig,
    choose_contour_offset,
    foxh_contour,
    foxh_series_h1,
    foxh_series_h2,
    foxh_series_h3,
    log_gamma_complex,
    meijer_g,
    theta,
)
from .mc import (
    McConfig,
    McReport,
    estimate_cr_outage,
    estimate_fd_outage,
    estimate_ratio_cdf,
    estimate_ratio_ks,
    estimate_ratio_mgf,
    estimate_ratio_moment,
    estimate_ratio_pdf,
    estimate_sop_bound,
    estimate_sop_exact,
)
from .ratio import (
    EvalMethod,
    RatioPair,
    SpecialCaseKind,
    make_special_case,
    ratio_cdf,
    ratio_mgf,
    ratio_moment,
    ratio_pdf,
)

__version__ = "0.1.0"
