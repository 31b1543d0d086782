"""Desk-scale simulator for non-unitary dynamics of the interacting
Hatano-Nelson chain: Krylov-propagated quenches, biorthogonal spectra,
densities and entanglement, free-fermion fast paths, GGE/quasiparticle
theory curves, and scaling fits."""

from ._kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = ["KERNEL_BACKEND", "__version__"]
