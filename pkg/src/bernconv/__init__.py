"""Bernoulli convolutions: measure engines, symbolic addresses, and the
two-dimensional density field.

The family nu_t, 1/2 <= t < 1, consists of the self-similar measures of the
two contractions f_0(x) = t x and f_1(x) = t x + 1 - t with equal weights.
This package approximates the measures by three independent algorithms,
manipulates the symbolic layer (binary itineraries, kneading sequences,
address curves, overlap horns), locates and classifies the algebraic
landmark parameters produced by curve intersections, and renders the stacked
density field over a parameter range.
"""

from .algebraic import (NumberClass, SingularityResult, classify,
                        classify_from_t_polynomial, feng_wang_test,
                        growth_rate, local_dim_bound, singularity_test)
from .curves import (AddressCurve, HornWord, IntersectionRecord, curve_of,
                     curve_intersection, horn_borders, horn_contains,
                     landmark_scan, orbit_outside_D, t_star)
from .errors import (BernconvError, ConvergenceError, DomainError,
                     FieldColumnError, ParseError, ResourceError)
from .field import (DensityField, RenderSpec, compute_field, export_raw,
                    import_raw, render)
from .measure import (CDFTable, Histogram, LocalDimFit, OrbitReport,
                      GOLDEN_T, KOMORNIK_LORETI_T, SQRT2_T, TRIBONACCI_T,
                      cdf, chaos_measure, conjugacy_residual, inverse_measure,
                      local_dimension, phase_of, quantile, transfer_measure,
                      unique_address_check, zero_regions)
from .polynomial import (IntegerPolynomial, all_roots, cyclotomic,
                         real_roots_in_interval)
from .sequences import (BinarySequence, ItineraryCheck, from_rational,
                        parse_sequence)

__version__ = "0.1.0"

__all__ = [
    "AddressCurve", "BernconvError", "BinarySequence", "CDFTable",
    "ConvergenceError", "DensityField", "DomainError", "FieldColumnError",
    "GOLDEN_T", "Histogram", "HornWord", "IntegerPolynomial",
    "IntersectionRecord", "ItineraryCheck", "KOMORNIK_LORETI_T",
    "LocalDimFit", "NumberClass", "OrbitReport", "ParseError", "RenderSpec",
    "ResourceError", "SQRT2_T", "SingularityResult", "TRIBONACCI_T",
    "all_roots", "cdf", "chaos_measure", "classify",
    "classify_from_t_polynomial", "compute_field", "conjugacy_residual",
    "curve_intersection", "curve_of", "cyclotomic", "export_raw",
    "feng_wang_test", "from_rational", "growth_rate", "horn_borders",
    "horn_contains", "import_raw", "inverse_measure", "landmark_scan",
    "local_dim_bound", "local_dimension", "orbit_outside_D", "parse_sequence",
    "phase_of", "quantile", "real_roots_in_interval", "render",
    "singularity_test", "t_star", "transfer_measure", "unique_address_check",
    "zero_regions",
]
