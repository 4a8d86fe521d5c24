"""
Automatic sequences and the coefficient streams built from them.
"""

from src.sequences.automatic import paperfolding, signed_value, thue_morse
from src.sequences.streams import CoefficientStream, StreamKind, stream_coefficient

__all__ = ['thue_morse', 'paperfolding', 'signed_value', 'CoefficientStream', 'StreamKind',
           'stream_coefficient']
