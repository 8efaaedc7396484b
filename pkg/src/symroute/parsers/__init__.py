"""Text grammars for the three symbolic formats.

Each ``parse_*`` function either returns a validated task or raises
:class:`ParseError`, whose ``diagnostic`` pinpoints the first problem.
"""

from ._scan import ParseDiagnostic, ParseError
from .csp import parse_csp, render_constraint, render_csp
from .fol import parse_fol, parse_formula, render_fol, render_formula
from .lp import parse_lp, render_lp

__all__ = [
    "ParseDiagnostic",
    "ParseError",
    "parse_csp",
    "parse_fol",
    "parse_formula",
    "parse_lp",
    "render_constraint",
    "render_csp",
    "render_fol",
    "render_formula",
    "render_lp",
]
