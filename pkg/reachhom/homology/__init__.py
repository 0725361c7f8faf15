"""Chain complexes, reachability homology and the checks built on it."""
