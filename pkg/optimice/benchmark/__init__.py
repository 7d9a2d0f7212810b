"""Benchmark functions."""
