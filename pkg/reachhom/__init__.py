"""
Reachability homology of directed graphs.

Chain-level computations over Z, Q and GF(p) together with checks of
homotopy invariance, Kunneth, excision, Mayer-Vietoris and the
magnitude-path spectral sequence on concrete instances.
"""

__version__ = "0.3.0"
