"""
Zeta, Hurwitz zeta, polygamma and Dirichlet series evaluators returning rigorous enclosures.
"""

from src.zeta.dirichlet import delta_via_functional_equation, dirichlet_series, dirichlet_series_many
from src.zeta.hurwitz import euler_maclaurin_caps, hurwitz_zeta, riemann_zeta
from src.zeta.lambert import lambert_series
from src.zeta.polygamma import polygamma_34, polygamma_34_series, polygamma_from_hurwitz

__all__ = ['hurwitz_zeta', 'riemann_zeta', 'euler_maclaurin_caps', 'polygamma_34', 'polygamma_34_series',
           'polygamma_from_hurwitz', 'dirichlet_series', 'dirichlet_series_many',
           'delta_via_functional_equation', 'lambert_series']
