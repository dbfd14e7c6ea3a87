"""Constrained codes for DNA data storage.

Exact and asymptotic enumeration of homopolymer-run-limited and
AT/GC-balanced quaternary sequences, plus working encoders and decoders
for translating byte payloads into constrained strands.
"""

from .asymptotics import (
    CapacityResult,
    capacity,
    combined_redundancy,
    efficiency_eta,
    gamma_binary,
    gamma_quaternary,
    leading_coefficient,
    q_function,
    rll_count_approx,
    rll_redundancy,
)
from .counting import (
    WeightProfile,
    balance_redundancy,
    binomial_weight_count,
    near_balanced_count,
    rll_count,
    rll_count_gf,
    rll_weight_count_binary,
    rll_weight_count_quaternary,
    weight_profile,
)
from .words import oligo_to_text, text_to_oligo

__version__ = "0.1.0"
