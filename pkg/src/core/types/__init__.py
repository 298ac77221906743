from .collapse_schedule import CollapseSchedule
from .enums import BackendKind, Basis, ExperimentKind, TieBreak
from .eom_solution import EomSolution
from .evolution_report import EvolutionReport, GrowthEvent
from .metts_record import MettsRecord
from .occupation_profile import OccupationProfile
from .operator_pool import OperatorPool
from .pauli_string import PauliString
from .pauli_term import PauliTerm
from .product_state import ClassicalProductState
from .statevector import Statevector
