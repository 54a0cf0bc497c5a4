"""Octahedrites, i-hedrites and i-self-hedrites: generation and analysis."""
