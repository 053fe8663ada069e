"""Persistent homology with the Grassmannian-bundle distance."""

__version__ = "0.1.0"
