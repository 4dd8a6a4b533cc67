"""
Lahseries: Exact Lah Polynomials and Involutory Power Series
============================================================

Exact-arithmetic toolkit that:
- Builds partial Bell, multivariate Stirling (first kind) and Lah polynomial triangles
- Composes, inverts and evaluates truncated power series in the exponential convention
- Generates involutions f o f = id from free even coefficients
- Decomposes involutions as g o (-id) o inverse(g) and tests the odd-transfer criterion
- Verifies the underlying identities and reproduces published worked examples

Version: 1.0.0
"""

__version__ = "1.0.0"
__author__ = "Lahseries Team"
