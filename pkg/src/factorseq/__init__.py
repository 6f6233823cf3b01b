"""Degree-sequence conditions for factors, matchings, hamiltonicity and toughness."""

from __future__ import annotations

from .conditions import (
    Outcome,
    Verdict,
    Witness,
    WitnessKind,
    chvatal_hamiltonian,
    deficiency_at_most,
    forcibly_k_factor,
    forcibly_one_factor,
    forcibly_t_tough,
    forcibly_two_factor,
    potentially_k_factor,
)
from .enumeration import (
    DeficiencyAtMost,
    Hamiltonian,
    KFactor,
    Toughness,
    all_graphical_sequences,
    count_realizations,
    forcibly_oracle,
    potentially_oracle,
    realizations,
)
from .errors import FactorSeqError
from .graph import SmallGraph
from .oracle import (
    TutteCertificate,
    deficiency,
    find_tutte_pair,
    has_k_factor,
    is_hamiltonian,
    odd_components,
    theta,
    toughness_at_least,
)
from .seqcore import DegreeSequence, is_graphical, majorizes, parse_sequence, realize, render

__version__ = "0.1.0"
