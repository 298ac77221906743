from src.statevector.collapse import StateCollapser
from src.statevector.ed_thermal import EigenBlock, ThermalOracle, ed_thermal
from src.statevector.imaginary_time import exact_ite, propagator_for
from src.statevector.krylov import KrylovPropagator
from src.statevector.overlap import born_probability, check_normalized, fidelity
from src.statevector.product_state import EIGENBASES, ProductStateFactory

cps_to_state = ProductStateFactory.cps_to_state
collapse = StateCollapser.collapse

__all__ = [
    "EIGENBASES",
    "EigenBlock",
    "KrylovPropagator",
    "ProductStateFactory",
    "StateCollapser",
    "ThermalOracle",
    "born_probability",
    "check_normalized",
    "collapse",
    "cps_to_state",
    "ed_thermal",
    "exact_ite",
    "fidelity",
    "propagator_for",
]
