"""Directed graphs, preorders, simplicial complexes and example instances."""
