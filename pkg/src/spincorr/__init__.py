"""Spin-correlation indicator and concurrence for qubit pairs."""

from .errors import (
    CapacityError,
    DomainError,
    NumericalError,
    ShapeError,
    SpinCorrError,
    ValidationError,
)
from .measures import (
    Classification,
    MeasureReport,
    SpinCorrelationMatrix,
    analyze,
    concurrence,
    concurrence_x_state,
    indicator,
    multipartite_indicator,
    rank2_mu,
    spin_correlation_matrix,
    werner_mu,
)
from .pauli import PauliAxis, correlator, marginal, pauli_matrix
from .states import DensityMatrix, PureState, from_matrix, from_pure, purity, reduce, sample_random

__version__ = "0.1.0"
