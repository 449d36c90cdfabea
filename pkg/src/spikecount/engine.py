"""Memoryless, synchronous, deterministic spiking-neuron engine.

A non-input neuron ``z`` fires at time ``t`` iff

    sum(w[y, z] * y(t-1) for y in presynaptic(z)) - bias[z] > 0

(strict Heaviside). Non-input neurons are silent at ``t = 0``; the single
input neuron is driven externally.

Weights and biases are kept as :class:`fractions.Fraction`. For stepping,
a network is compiled to an integer matrix by scaling every constant with
the common denominator, so threshold comparisons stay exact.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

ROLES = ("input", "output", "hidden")


class StructuralError(ValueError):
    """Raised when a state or network does not fit the network it is used with."""


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        # go through repr so 0.1 means 1/10, not the nearest binary double
        return Fraction(repr(value))
    return Fraction(value)


@dataclass(frozen=True)
class Neuron:
    id: int
    label: str
    role: str
    bias: Fraction

    def __post_init__(self):
        if self.role not in ROLES:
            raise ValueError(f"unknown role {self.role!r} for neuron {self.label!r}")
        object.__setattr__(self, "bias", as_fraction(self.bias))


@dataclass(frozen=True)
class Synapse:
    src: int
    dst: int
    weight: Fraction

    def __post_init__(self):
        object.__setattr__(self, "weight", as_fraction(self.weight))


@dataclass(frozen=True)
class Network:
    """Immutable weighted digraph of threshold neurons.

    Construction does not validate; use :func:`validate_network` for a
    report, or any stepping function, which compiles (and rejects broken
    structure) on first use.
    """

    neurons: tuple[Neuron, ...]
    synapses: tuple[Synapse, ...]

    def __post_init__(self):
        object.__setattr__(self, "neurons", tuple(self.neurons))
        object.__setattr__(self, "synapses", tuple(self.synapses))

    def __len__(self) -> int:
        return len(self.neurons)

    @cached_property
    def by_label(self) -> dict[str, int]:
        return {n.label: n.id for n in self.neurons}

    def id_of(self, label: str) -> int:
        try:
            return self.by_label[label]
        except KeyError:
            raise KeyError(f"no neuron labelled {label!r}") from None

    def label_of(self, nid: int) -> str:
        return self.neurons[nid].label

    @property
    def input_id(self) -> int:
        ids = [n.id for n in self.neurons if n.role == "input"]
        if len(ids) != 1:
            raise StructuralError(f"expected exactly one input neuron, found {len(ids)}")
        return ids[0]

    @property
    def output_labels(self) -> list[str]:
        return [n.label for n in self.neurons if n.role == "output"]

    @property
    def computing_count(self) -> int:
        """Number of non-input neurons."""
        return sum(1 for n in self.neurons if n.role != "input")

    def weight(self, src: str, dst: str) -> Fraction | None:
        s, d = self.id_of(src), self.id_of(dst)
        for syn in self.synapses:
            if syn.src == s and syn.dst == d:
                return syn.weight
        return None

    def presynaptic(self, label: str) -> list[str]:
        d = self.id_of(label)
        return [self.label_of(s.src) for s in self.synapses if s.dst == d]

    def with_bias(self, label: str, bias) -> "Network":
        nid = self.id_of(label)
        neurons = list(self.neurons)
        old = neurons[nid]
        neurons[nid] = Neuron(old.id, old.label, old.role, as_fraction(bias))
        return Network(tuple(neurons), self.synapses)

    def with_weight(self, src: str, dst: str, weight) -> "Network":
        """Copy with synapse src->dst set to ``weight`` (added if missing)."""
        s, d = self.id_of(src), self.id_of(dst)
        synapses = [syn for syn in self.synapses if (syn.src, syn.dst) != (s, d)]
        synapses.append(Synapse(s, d, as_fraction(weight)))
        synapses.sort(key=lambda syn: (syn.dst, syn.src))
        return Network(self.neurons, tuple(synapses))

    @cached_property
    def compiled(self) -> "CompiledNetwork":
        return CompiledNetwork.from_network(self)


@dataclass(frozen=True)
class CompiledNetwork:
    """Integer-scaled form of a network used for stepping.

    ``weights[src, dst]`` and ``bias`` are the original rationals multiplied
    by ``scale``; the firing test ``W.T @ prev - bias > 0`` is therefore exact.
    """

    weights: np.ndarray
    bias: np.ndarray
    scale: int
    input_id: int

    @classmethod
    def from_network(cls, net: Network) -> "CompiledNetwork":
        report = validate_network(net)
        if not report.valid:
            raise StructuralError("; ".join(report.problems))
        consts = [n.bias for n in net.neurons] + [s.weight for s in net.synapses]
        scale = 1
        for c in consts:
            scale = math.lcm(scale, c.denominator)
        n = len(net.neurons)
        weights = np.zeros((n, n), dtype=np.int64)
        for s in net.synapses:
            weights[s.src, s.dst] = int(s.weight * scale)
        bias = np.array([int(nr.bias * scale) for nr in net.neurons], dtype=np.int64)
        limit = int(np.abs(weights).sum(axis=0).max(initial=0) + np.abs(bias).max(initial=0))
        if limit >= 2**62:
            raise OverflowError("network constants too large for exact int64 stepping")
        return cls(weights, bias, scale, net.input_id)

    def advance(self, prev: np.ndarray, input_bits: np.ndarray | int) -> np.ndarray:
        """Step a (..., N) 0/1 array; ``input_bits`` is the input for the new time."""
        potential = prev.astype(np.int64) @ self.weights - self.bias
        nxt = (potential > 0).astype(np.uint8)
        nxt[..., self.input_id] = input_bits
        return nxt


@dataclass(frozen=True)
class FiringState:
    fired: tuple[bool, ...]
    time: int = 0

    def __post_init__(self):
        object.__setattr__(self, "fired", tuple(bool(b) for b in self.fired))

    def __getitem__(self, nid: int) -> bool:
        return self.fired[nid]

    def value(self, net: Network, label: str) -> int:
        return int(self.fired[net.id_of(label)])

    def fired_labels(self, net: Network) -> list[str]:
        return [net.label_of(i) for i, b in enumerate(self.fired) if b]

    @classmethod
    def from_labels(cls, net: Network, labels: Iterable[str], time: int = 0) -> "FiringState":
        bits = [False] * len(net)
        for lab in labels:
            bits[net.id_of(lab)] = True
        return cls(tuple(bits), time)

    @classmethod
    def initial(cls, net: Network, input_bit: bool) -> "FiringState":
        """The t=0 state: only the input may fire."""
        bits = [False] * len(net)
        bits[net.input_id] = bool(input_bit)
        return cls(tuple(bits), 0)


@dataclass(frozen=True)
class InputSequence:
    bits: tuple[bool, ...]
    horizon_T: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(bool(int(b)) for b in self.bits))
        if self.horizon_T is not None:
            if self.horizon_T < 1:
                raise ValueError("horizon_T must be positive")
            if len(self.bits) > self.horizon_T:
                raise ValueError(f"input of length {len(self.bits)} exceeds T={self.horizon_T}")

    @classmethod
    def parse(cls, text: str, horizon_T: int | None = None) -> "InputSequence":
        text = text.strip()
        for ch in text:
            if ch not in "01":
                raise ValueError(f"invalid bit {ch!r} in input {text!r}")
        return cls(tuple(ch == "1" for ch in text), horizon_T)

    def __len__(self) -> int:
        return len(self.bits)

    def at(self, t: int) -> bool:
        return self.bits[t] if 0 <= t < len(self.bits) else False

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)


@dataclass(frozen=True)
class Trace:
    states: tuple[FiringState, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.states)

    def __getitem__(self, t: int) -> FiringState:
        return self.states[t - self.states[0].time]

    def series(self, net: Network, label: str) -> list[int]:
        nid = net.id_of(label)
        return [int(s.fired[nid]) for s in self.states]

    def records(self, net: Network) -> list[dict]:
        return [{"t": s.time, "fired": s.fired_labels(net)} for s in self.states]


@dataclass
class ValidationReport:
    problems: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.problems


def validate_network(net: Network) -> ValidationReport:
    report = ValidationReport()
    n = len(net.neurons)
    for i, nr in enumerate(net.neurons):
        if nr.id != i:
            report.problems.append(f"neuron ids not dense: position {i} holds id {nr.id}")
    labels = [nr.label for nr in net.neurons]
    if len(set(labels)) != len(labels):
        report.problems.append("duplicate labels")
    inputs = [nr.id for nr in net.neurons if nr.role == "input"]
    if len(inputs) > 1:
        report.problems.append(f"multiple inputs: {[net.neurons[i].label for i in inputs]}")
    elif not inputs:
        report.problems.append("no input neuron")
    seen = set()
    for s in net.synapses:
        for end in (s.src, s.dst):
            if not 0 <= end < n:
                report.problems.append(f"dangling endpoint {end} in synapse {s.src}->{s.dst}")
        if (s.src, s.dst) in seen:
            report.problems.append(f"duplicate synapse {s.src}->{s.dst}")
        seen.add((s.src, s.dst))
        if s.dst in inputs:
            report.problems.append(f"incoming synapse into input neuron from {s.src}")
    return report


def _check_state(net: Network, state: FiringState) -> None:
    if len(state.fired) != len(net.neurons):
        raise StructuralError(
            f"state has {len(state.fired)} entries, network has {len(net.neurons)} neurons"
        )


def potential(net: Network, prev: FiringState, label: str) -> Fraction:
    """Exact rational potential of ``label`` given the previous state, minus its bias."""
    _check_state(net, prev)
    d = net.id_of(label)
    total = sum((s.weight for s in net.synapses if s.dst == d and prev.fired[s.src]), Fraction(0))
    return total - net.neurons[d].bias


def step(net: Network, prev: FiringState, input_bit: bool) -> FiringState:
    _check_state(net, prev)
    nxt = net.compiled.advance(np.array(prev.fired, dtype=np.uint8), int(bool(input_bit)))
    return FiringState(tuple(bool(b) for b in nxt), prev.time + 1)


def run(
    net: Network,
    inputs: InputSequence | Sequence[bool] | str,
    horizon: int,
    start: FiringState | None = None,
) -> Trace:
    """Simulate from the t=0 state (or ``start``) for ``horizon`` steps.

    Input bit ``k`` drives the input neuron at time ``start.time + k``; past the
    end of the sequence the input is 0. The trace holds ``horizon + 1`` states.
    """
    if isinstance(inputs, str):
        inputs = InputSequence.parse(inputs)
    elif not isinstance(inputs, InputSequence):
        inputs = InputSequence(tuple(inputs))
    if horizon < len(inputs):
        raise ValueError(f"horizon {horizon} is shorter than the input ({len(inputs)})")
    if start is None:
        state = FiringState.initial(net, inputs.at(0))
    else:
        _check_state(net, start)
        bits = list(start.fired)
        bits[net.input_id] = inputs.at(0)
        state = FiringState(tuple(bits), start.time)
    states = [state]
    for k in range(1, horizon + 1):
        state = step(net, state, inputs.at(k))
        states.append(state)
    return Trace(tuple(states))


def run_batch(net: Network, inputs: np.ndarray, horizon: int) -> np.ndarray:
    """Simulate many input sequences at once from the t=0 state.

    ``inputs`` is a (B, L) 0/1 array. Returns a (B, horizon + 1, N) uint8 array.
    """
    inputs = np.asarray(inputs, dtype=np.uint8)
    if inputs.ndim != 2:
        raise ValueError("inputs must be a 2-d array")
    batch, length = inputs.shape
    if horizon < length:
        raise ValueError(f"horizon {horizon} is shorter than the input ({length})")
    comp = net.compiled
    padded = np.zeros((batch, horizon + 1), dtype=np.uint8)
    padded[:, :length] = inputs
    out = np.zeros((batch, horizon + 1, len(net)), dtype=np.uint8)
    out[:, 0, comp.input_id] = padded[:, 0]
    for t in range(1, horizon + 1):
        out[:, t] = comp.advance(out[:, t - 1], padded[:, t])
    return out
