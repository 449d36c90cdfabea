"""Spiking networks that count input spikes: FCSC and TSC constructions,
a discrete-time engine to run them, and exhaustive checkers."""
from .engine import (
    FiringState,
    InputSequence,
    Network,
    Neuron,
    StructuralError,
    Synapse,
    Trace,
    run,
    run_batch,
    step,
    validate_network,
)
from .constructions import (
    Layout,
    build_fcsc,
    build_fcsc_counter,
    build_mod2_base,
    build_mod4,
    build_tsc,
    build_unary_time0_counter,
    decode_fcsc,
    decode_tsc,
)

__version__ = "0.1.0"
