"""
One verifier per identity: each computes both sides independently and reports whether their
enclosures agree.
"""

from src.identities.hurwitz_identities import (verify_catalan, verify_euler_even, verify_lemma1,
                                               verify_odd_shift_pair, verify_plouffe_zeta7, verify_polygamma,
                                               verify_ramanujan_zeta3)
from src.identities.series_identities import (verify_allouche_cohen_ratio, verify_allouche_cohen_recursion,
                                              verify_corollary, verify_delta_relation, verify_lemma4,
                                              verify_lemma4_numerator, verify_split_exact, verify_theorem1,
                                              verify_theorem1_coefficients, verify_toth)
from src.identities.suite import REGISTRY, default_grid, resolve_selection, run_suite

__all__ = ['verify_lemma1', 'verify_polygamma', 'verify_euler_even', 'verify_ramanujan_zeta3',
           'verify_plouffe_zeta7', 'verify_catalan', 'verify_odd_shift_pair', 'verify_delta_relation',
           'verify_split_exact', 'verify_lemma4', 'verify_lemma4_numerator', 'verify_corollary', 'verify_toth',
           'verify_theorem1', 'verify_theorem1_coefficients', 'verify_allouche_cohen_ratio',
           'verify_allouche_cohen_recursion', 'REGISTRY', 'default_grid', 'resolve_selection', 'run_suite']
