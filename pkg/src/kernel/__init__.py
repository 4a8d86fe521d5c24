"""
Arbitrary-precision real arithmetic with midpoint-radius error brackets.
"""

from src.kernel.bracket import Bracket, bracket_sum, to_bracket
from src.kernel.elementary import cosh, exp, generalized_binomial, ln, pi, power_real
from src.kernel.precision import working_precision

__all__ = ['Bracket', 'bracket_sum', 'to_bracket', 'pi', 'exp', 'ln', 'cosh', 'power_real',
           'generalized_binomial', 'working_precision']
