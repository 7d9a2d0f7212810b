"""Gaussian-process emulator."""
