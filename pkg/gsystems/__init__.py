"""
gsystems is an exact computer-algebra engine for formal G-amplitudes: truncated
formal symbols, their composition (star) product, the cochain complex of a finite
group acting affinely on R^d, Maurer-Cartan (G-system) verification, order-by-order
extension and gauge (rigidity) analysis.

All arithmetic is exact over the Gaussian rationals.
"""

__version__ = "0.1-beta"
