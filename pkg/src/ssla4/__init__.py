"""Similar sublattices of the four-dimensional root lattice A4.

Submodules: :mod:`golden` (the ring Z[tau]), :mod:`quatk` (quaternions over
Q(sqrt 5)), :mod:`icosian` (the icosian ring), :mod:`sslgen` (construction),
:mod:`counting` (closed forms), :mod:`oracle` (brute force), :mod:`cli`.
"""
from .errors import BudgetExceeded, InvalidArgument, SSLError

__version__ = "0.1.0"

__all__ = ["BudgetExceeded", "InvalidArgument", "SSLError", "__version__"]
