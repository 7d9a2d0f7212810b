"""Batch optimizer."""
