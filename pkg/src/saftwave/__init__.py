"""Special affine Fourier transform, sampling, multiresolution analysis,
and chirped-Haar collocation approximation."""

from .params import (FIGURE1, FIGURE2, PRESETS, NonpositiveB, NotUnimodular,
                     SaftParams, invert_params, prefactor, validate)
from .signal import SampledFunction, UniformGrid
from .core import (DEFAULT_EDGE_TOL, EdgeMassTooLarge, ZeroScale, chirp_dilate,
                   energy, forward, inverse, inverse_kernel, kernel)
from .sampling import BandlimitSpec, PeriodMismatch, SampleSet, reconstruct
from .mra import (BOX_SCALING, SINC_SCALING, FilterSequence, ScalingFunction,
                  periodization_defect, phi_family, qmf_defect, symbol,
                  synthesize_psi, wavelet_coeffs)
from .wavelets import (WaveletFamily, haar_filters, haar_psi, shannon_filters,
                       shannon_psi)
from .approx import (CLASSICAL_HAAR, SPECIAL_AFFINE, ApproxResult, BasisIndex,
                     CollocationProblem, error_table, linf_error, solve)

__version__ = "0.1.0"

__all__ = [
    "FIGURE1", "FIGURE2", "PRESETS", "SaftParams", "NotUnimodular",
    "NonpositiveB", "invert_params", "prefactor", "validate",
    "SampledFunction", "UniformGrid",
    "DEFAULT_EDGE_TOL", "EdgeMassTooLarge", "ZeroScale", "chirp_dilate",
    "energy", "forward", "inverse", "inverse_kernel", "kernel",
    "BandlimitSpec", "PeriodMismatch", "SampleSet", "reconstruct",
    "BOX_SCALING", "SINC_SCALING", "FilterSequence", "ScalingFunction",
    "periodization_defect", "phi_family", "qmf_defect", "symbol",
    "synthesize_psi", "wavelet_coeffs",
    "WaveletFamily", "haar_filters", "haar_psi", "shannon_filters",
    "shannon_psi",
    "CLASSICAL_HAAR", "SPECIAL_AFFINE", "ApproxResult", "BasisIndex",
    "CollocationProblem", "error_table", "linf_error", "solve",
]
