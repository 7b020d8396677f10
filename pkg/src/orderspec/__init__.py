"""Element-order spectra of finite groups and spectral recognition of Suzuki squares."""

__version__ = "0.1.0"
