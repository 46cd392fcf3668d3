# Dyadic effect bounds
"""
Dyadic Effect Bounds
====================

Dyad counts, dyadicity and heterophilicity, degree-sequence bounds on m11 and
m10, and exact phase diagrams for labeled simple graphs.
"""

__version__ = "1.0.0"
__author__ = "Dyadbound Team"
