"""Gershgorin-disc relative-error bounds for well separated matrices."""

__version__ = "0.1.0"

from .matrix import DenseMatrix, as_array, as_dense
from .gershgorin import (
    GershgorinDisc, SeparationReport, classify_separation, compute_discs, separation_report,
)
from .eigen import SpectralPair, SpectrumReport, eig_general, eig_symmetric, match_to_discs
from .bounds import (
    ConditionBound, ErrorRegion, InvertedDisc, condition_bound, condition_number,
    corollary_bound, error_region, estimate_k, invert_disc, lemma_entry_bound, oval_sample,
    relative_error, spectral_norm,
)
from .perturb import (
    InterlaceResult, PerturbSpec, check_interlacing, gen_hessenberg_positive,
    gen_separated_symmetric, gen_structured_S, truncate_offdiag,
)
from .perron import PowerTrace, compare_starts, gen_perron_test, perron_seed, power_method
from .mmio import ResultTable, read_matrix_market, write_matrix_market, write_table
