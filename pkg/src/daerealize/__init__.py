"""Exact realizability of single-input single-output DAEs by rational
dynamical systems: decision, construction, and verification."""

from .diffring import d_u, ord_u, ord_y, total_derivative
from .dynsys import (DynSystem, Parametrization, io_equation, lie_derivative,
                     lie_sequence, solve_realization, verify_realization)
from .errors import (DaerealizeError, ExactDivisionError, ParseError,
                     PoleError, UnsupportedError)
from .factor import Factorization, factor
from .mpoly import MPoly, poly_text
from .param_engine import ChartSearch, hypersurface_charts
from .parser import parse_dae, parse_expr
from .ratfunc import RatFunc, poly_subs
from .realize import NO, REALIZED, UNSUPPORTED, RealizeResult, realize
from .srgs import SolutionFamily, srgs_solve
from .sysio import (load_system, system_from_dict, system_text,
                    system_to_dict)
from .variables import Kind, Var, ansatz, input_jet, output_jet, param, state

__version__ = "0.1.0"

__all__ = [
    "ChartSearch", "DaerealizeError", "DynSystem", "ExactDivisionError",
    "Factorization", "Kind", "MPoly", "NO", "Parametrization", "ParseError",
    "PoleError", "RatFunc", "REALIZED", "RealizeResult", "SolutionFamily",
    "UNSUPPORTED", "UnsupportedError", "Var", "ansatz", "d_u", "factor",
    "hypersurface_charts", "input_jet", "io_equation", "lie_derivative",
    "lie_sequence", "load_system", "ord_u", "ord_y", "output_jet", "param",
    "parse_dae", "parse_expr", "poly_subs", "poly_text", "realize",
    "solve_realization", "state", "system_from_dict", "system_text",
    "system_to_dict", "total_derivative", "verify_realization",
]
