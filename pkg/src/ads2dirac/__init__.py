"""Dirac modes on the AdS2 strip: self-adjoint boundary conditions, spectra,
mode functions, representation labels, and truncated Fock realizations."""

from ._kernels import BACKEND as kernel_backend

__version__ = "0.1.0"

__all__ = ["kernel_backend", "__version__"]
