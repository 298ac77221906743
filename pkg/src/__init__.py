"""
Root package of the Z2 gauge-theory METTS toolkit.
"""

__version__ = "0.1.0"
