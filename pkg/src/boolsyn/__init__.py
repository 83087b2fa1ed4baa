"""Evolving ring-lattice boolean networks toward redundancy, synergy and TSE complexity."""

from .network import (
    BooleanNetwork,
    constant_network,
    identity_network,
    load_genome,
    random_network,
    save_genome,
    shift_network,
    step,
    transition_map,
)
from .info import (
    CountDistribution,
    intervention_distribution,
    lagged_mutual_information,
    marginal_entropy,
    o_information,
    total_correlation,
    tse_complexity,
)
from .dynamics import derrida_coefficient, find_attractors
from .phi import Bipartition, integrated_information, phi_r, phi_wms
from .evolve import EvolutionConfig, Objective, run_evolution

__version__ = "0.1.0"
