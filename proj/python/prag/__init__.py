"""Discourse semantics for a controlled English fragment.

Parses a small fragment of English, interprets each sentence as an effectful
computation over a discourse context, and discharges the effects into
first-order formulas that can be checked against finite models.
"""

try:
    from ._prag import *  # noqa: F401,F403
    from ._prag import __doc__ as _doc
except ImportError:  # extension built outside the package (development tree)
    from _prag import *  # noqa: F401,F403
    from _prag import __doc__ as _doc

__all__ = [
    "Term",
    "Formula",
    "Model",
    "Lexicon",
    "Session",
    "RunResult",
    "EquivalenceResult",
    "PragError",
    "UnresolvedAnaphora",
    "PresuppositionFailure",
    "parse_formula",
    "pretty",
    "substitute",
    "parse_model",
    "eval_formula",
    "equivalent_up_to",
    "load_lexicon",
    "run_discourse",
]
