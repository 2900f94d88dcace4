"""Fast Fourier transforms on odd-dimensional state spaces.

Two fast backends share one centered-index convention: a balanced radix
transform for ``D = d**n`` and a prime-factor transform for pairwise coprime
``D = d_0 ... d_{n-1}``.  The prime-factor layout also drives fast Weyl and
Wigner functions.  ``dft_direct`` is the O(D^2) reference for all of them.
"""
from .errors import (CapacityError, CoprimalityError, DimensionMismatchError,
                     FileFormatError, InvalidDigitError, InvalidModulusError,
                     NoInverseError, OddFFTError, UnsupportedBackendError,
                     VerificationError)
from .numtheory import (CenteredResidue, CrtBasis, RadixDigits, centered_reduce,
                        coprime_factors, crt_basis, crt_decode, crt_decode_hat,
                        crt_encode, crt_encode_hat, half_inverse, mod_inverse,
                        omega, radix_decode, radix_encode)
from .pfa import (PfaPlan, assemble_pfa_factorized, fft_pfa, fft_pfa_factorized,
                  ifft_pfa, pfa_product_state, plan_pfa)
from .phase_space import (PhaseSpaceTable, weyl_direct, weyl_fast, weyl_rows,
                          wigner_direct, wigner_fast, wigner_rows)
from .radix import (RadixPlan, assemble_factorized, factorization_necessary_check,
                    fft_radix, fft_radix_factorized, ifft_radix, plan_radix,
                    product_state)
from .reference import (OpStats, StateVector, delta_state, dft_direct,
                        dft_matrix_element, idft_direct, random_state,
                        uniform_state)

__version__ = "0.1.0"

__all__ = [
    "CapacityError", "CoprimalityError", "DimensionMismatchError",
    "FileFormatError", "InvalidDigitError", "InvalidModulusError",
    "NoInverseError", "OddFFTError", "UnsupportedBackendError",
    "VerificationError",
    "CenteredResidue", "CrtBasis", "RadixDigits", "centered_reduce",
    "coprime_factors", "crt_basis", "crt_decode", "crt_decode_hat",
    "crt_encode", "crt_encode_hat", "half_inverse", "mod_inverse", "omega",
    "radix_decode", "radix_encode",
    "PfaPlan", "assemble_pfa_factorized", "fft_pfa", "fft_pfa_factorized",
    "ifft_pfa", "pfa_product_state", "plan_pfa",
    "PhaseSpaceTable", "weyl_direct", "weyl_fast", "weyl_rows",
    "wigner_direct", "wigner_fast", "wigner_rows",
    "RadixPlan", "assemble_factorized", "factorization_necessary_check",
    "fft_radix", "fft_radix_factorized", "ifft_radix", "plan_radix",
    "product_state",
    "OpStats", "StateVector", "delta_state", "dft_direct",
    "dft_matrix_element", "idft_direct", "random_state", "uniform_state",
]
