"""Exact-arithmetic kernel for twisted infinitesimal bialgebras.

Structure constants over Q, exhaustive axiom checkers with pinpoint
violation reports, and executable constructions: twists, duals, weighted
tensor products, element- and form-induced (co)products, Yang-Baxter
residuals and searches, Rota-Baxter / dendriform / pre-Lie derivations,
and Hopf-module builders.
"""

from . import axioms, catalog, constructions, exactcore, models, structures, ybe

__all__ = ["axioms", "catalog", "constructions", "exactcore", "models",
           "structures", "ybe"]
__version__ = "0.1.0"
