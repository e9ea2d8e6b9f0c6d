"""Mollow spectrum of hydrogen 1S-2P with relativistic and radiative corrections."""

__version__ = "0.1.0"
