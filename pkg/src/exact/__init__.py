"""
Exact arithmetic: Euler and Bernoulli tables and the rational coefficients of the closed forms.
"""

from src.exact.coefficients import (corollary_denominator, euler_even_coefficient, lemma4_coefficient,
                                    pi_coefficient)
from src.exact.numbers import EulerTable, bernoulli_numbers, binomial, euler_numbers

__all__ = ['EulerTable', 'binomial', 'euler_numbers', 'bernoulli_numbers', 'pi_coefficient',
           'lemma4_coefficient', 'corollary_denominator', 'euler_even_coefficient']
