"""
Taucheck - τ-tilting theory over finite fields

Exact computations with modules over bound quiver algebras over F_p:
resolutions, Ext/Tor, τ-tilting classification, delooping levels and
verification suites for the equivalences relating them.
"""

__version__ = "0.1.0"

from .errors import TaucheckError

__all__ = ["TaucheckError", "__version__"]
