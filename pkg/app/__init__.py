# app/__init__.py

"""
Exact symmetric group characters of the shapes (n, lambda): degree and
character-value expansions through the skew shapes lambda/(1^j), the
Jacobi-Trudi identities behind them, and brute-force oracles to check them.
"""

__version__ = "0.1.0"
