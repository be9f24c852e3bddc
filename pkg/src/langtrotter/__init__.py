"""Lang-Trotter toolkit for genus-2 compatible systems."""

__version__ = "0.1.0"
