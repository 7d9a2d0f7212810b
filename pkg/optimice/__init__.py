"""Batch Gaussian-process optimization with mutual-information pure exploration."""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version('optimice')
except PackageNotFoundError:
    __version__ = '0.0.0'
