"""Builders for the counting networks and decoders for their output states.

Neuron labels follow the usual naming: ``x`` is the input; ``z<i>``/``in<i>``
are counter digits and their carry helpers; ``y<i>`` and ``s`` form the
capture stage; ``f0..f3`` are the mod-4 ring; ``c<i>`` the unary chain.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .engine import FiringState, Network, Neuron, Synapse

HALF = Fraction(1, 2)

# Capture-stage output threshold. The firing-rule argument compares against
# 0.1; at 0.5 a held y_i with (x=1, s=1, z_i=0) sits exactly at threshold.
CAPTURE_BIAS = Fraction(1, 10)
# f3->f1 and f0->f1 weights in the mod-4 ring; -3 / absent breaks the f1 rule.
F3_TO_F1 = Fraction(-7, 10)
F0_TO_F1 = Fraction(3, 10)


class NotCleanError(ValueError):
    """Raised when a TSC state has two or more hot f neurons."""


def digits_for(T: int) -> int:
    """Highest digit index n = ceil(log2(T + 1)) used by both count networks."""
    if T < 1:
        raise ValueError(f"T must be >= 1, got {T}")
    return T.bit_length()  # == ceil(log2(T+1)) for T >= 1


class _Builder:
    def __init__(self):
        self.neurons: list[Neuron] = []
        self.weights: dict[tuple[int, int], Fraction] = {}
        self.ids: dict[str, int] = {}

    def neuron(self, label: str, bias, role: str = "hidden") -> int:
        if label in self.ids:
            raise ValueError(f"duplicate neuron {label!r}")
        nid = len(self.neurons)
        self.neurons.append(Neuron(nid, label, role, Fraction(bias)))
        self.ids[label] = nid
        return nid

    def connect(self, src: str, dst: str, weight) -> None:
        key = (self.ids[src], self.ids[dst])
        if key in self.weights:
            raise ValueError(f"duplicate synapse {src}->{dst}")
        self.weights[key] = Fraction(weight)

    def network(self) -> Network:
        synapses = tuple(
            Synapse(s, d, w) for (s, d), w in sorted(self.weights.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        )
        return Network(tuple(self.neurons), synapses)


@dataclass(frozen=True)
class Layout:
    """Where the output digits of a built network live.

    ``kind`` is ``"fcsc"``, ``"tsc"`` or ``"unary"``. ``n`` is the highest
    binary digit index (unused for unary).
    """

    kind: str
    T: int
    n: int
    output_labels: tuple[str, ...]
    ids: dict[str, int] = field(default_factory=dict, compare=False, repr=False)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "T": self.T, "n": self.n, "output_labels": list(self.output_labels)}

    @classmethod
    def from_dict(cls, data: dict, net: Network) -> "Layout":
        labels = tuple(data["output_labels"])
        for lab in labels:
            net.id_of(lab)
        return cls(data["kind"], int(data["T"]), int(data["n"]), labels, dict(net.by_label))

    def bit(self, state: FiringState, label: str) -> int:
        return int(state.fired[self.ids[label]])


# Kept as distinct names so call sites read like the layouts they expect.
FcscLayout = Layout
TscLayout = Layout


def _add_mod2(b: _Builder, z0_role: str = "hidden") -> None:
    b.neuron("z0", HALF, z0_role)
    b.connect("x", "z0", 1)
    b.connect("z0", "z0", -1)


def build_mod2_base() -> Network:
    b = _Builder()
    b.neuron("x", 0, "input")
    _add_mod2(b, "output")
    return b.network()


def _add_counter(b: _Builder, n: int, z_role: str = "hidden") -> None:
    _add_mod2(b, z_role)
    for i in range(1, n + 1):
        b.neuron(f"z{i}", 2 * i + HALF, z_role)
        b.neuron(f"in{i}", i - HALF)
    for i in range(1, n + 1):
        b.connect("x", f"z{i}", i + 1)
        for j in range(i):
            b.connect(f"z{j}", f"z{i}", 1)
        for k in range(1, i + 1):
            b.connect(f"z{k}", f"in{i}", 1)
        b.connect(f"in{i}", f"z{i}", -(i + 1))
        b.connect(f"z{i}", f"z{i}", i)


def build_fcsc_counter(n: int) -> Network:
    """Binary counter stage: z_0..z_n track the number of consecutive input spikes."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    b = _Builder()
    b.neuron("x", 0, "input")
    _add_counter(b, n, z_role="output")
    return b.network()


def build_fcsc(T: int, capture_bias=CAPTURE_BIAS) -> tuple[Network, Layout]:
    """Counter stage plus capture stage sharing the z neurons.

    The capture stage latches z_0..z_n into y_0..y_n at the first quiet step
    after the first spike run, then holds it via the s neuron.
    """
    n = digits_for(T)
    net = _fcsc_network(n, Fraction(capture_bias))
    outputs = tuple(f"y{i}" for i in range(n + 1))
    return net, Layout("fcsc", T, n, outputs, dict(net.by_label))


@lru_cache(maxsize=64)
def _fcsc_network(n: int, capture_bias: Fraction) -> Network:
    b = _Builder()
    b.neuron("x", 0, "input")
    _add_counter(b, n)
    for i in range(n + 1):
        b.neuron(f"y{i}", capture_bias, "output")
    b.neuron("s", HALF)
    for i in range(n + 1):
        b.connect("x", f"y{i}", -2)
        b.connect(f"y{i}", f"y{i}", 4)
        b.connect(f"z{i}", f"y{i}", 1)
        b.connect(f"z{i}", "s", 1)
        b.connect(f"y{i}", "s", 1)
        b.connect("s", f"y{i}", Fraction(-3, 2))
    b.connect("x", "s", -n - 1)
    b.connect("s", "s", n + 2)
    return b.network()


def _add_mod4(b: _Builder, f3_to_f1=F3_TO_F1, f0_to_f1=F0_TO_F1) -> None:
    for i in range(4):
        b.neuron(f"f{i}", HALF if i == 1 else Fraction(3, 2), "output")
    for i in range(4):
        b.connect("x", f"f{i}", 1)
        b.connect(f"f{i}", f"f{i}", 2)
    for j in range(3):
        b.connect(f"f{j + 1}", f"f{j}", -3)
    b.connect("f1", "f2", 1)
    b.connect("f2", "f3", 1)
    b.connect("f3", "f0", 1)
    b.connect("f0", "f3", -3)
    b.connect("f3", "f1", f3_to_f1)
    if f0_to_f1:
        b.connect("f0", "f1", f0_to_f1)


def build_mod4(f3_to_f1=F3_TO_F1, f0_to_f1=F0_TO_F1) -> Network:
    b = _Builder()
    b.neuron("x", 0, "input")
    _add_mod4(b, f3_to_f1, f0_to_f1)
    return b.network()


def build_tsc(T: int) -> tuple[Network, Layout]:
    """Mod-4 ring for the two low digits plus carry-driven digits z_2..z_n."""
    n = digits_for(T)
    net = _tsc_network(n)
    outputs = tuple(f"f{i}" for i in range(4)) + tuple(f"z{i}" for i in range(2, n + 1))
    return net, Layout("tsc", T, n, outputs, dict(net.by_label))


@lru_cache(maxsize=64)
def _tsc_network(n: int) -> Network:
    b = _Builder()
    b.neuron("x", 0, "input")
    _add_mod4(b)
    for i in range(2, n + 1):
        b.neuron(f"z{i}", i + Fraction(3, 2), "output")
        b.neuron(f"in{i}", i + Fraction(5, 2))
    for i in range(2, n + 1):
        for dst in (f"z{i}", f"in{i}"):
            b.connect("f3", dst, 3)
            b.connect("f0", dst, -1)
            b.connect("x", dst, 1)
            for j in range(2, i):
                b.connect(f"z{j}", dst, 1)
        b.connect(f"in{i}", f"z{i}", -(i + 3))
        b.connect(f"z{i}", f"in{i}", 1)
        b.connect(f"z{i}", f"z{i}", i + 3)
    return b.network()


def build_unary_time0_counter(T: int) -> tuple[Network, Layout]:
    """Chain c_1..c_T that counts spikes in unary with no settling delay."""
    if T < 1:
        raise ValueError(f"T must be >= 1, got {T}")
    b = _Builder()
    b.neuron("x", 0, "input")
    for i in range(1, T + 1):
        b.neuron(f"c{i}", HALF if i == 1 else Fraction(3, 2), "output")
    for i in range(1, T + 1):
        b.connect("x", f"c{i}", 1)
        b.connect(f"c{i}", f"c{i}", 2)
        if i > 1:
            b.connect(f"c{i - 1}", f"c{i}", 1)
    net = b.network()
    outputs = tuple(f"c{i}" for i in range(1, T + 1))
    return net, Layout("unary", T, 0, outputs, dict(net.by_label))


def decode_fcsc(state: FiringState, layout: Layout) -> int:
    return sum(layout.bit(state, f"y{i}") << i for i in range(layout.n + 1))


def decode_tsc(state: FiringState, layout: Layout) -> int:
    hot = [i for i in range(4) if layout.bit(state, f"f{i}")]
    if len(hot) > 1:
        raise NotCleanError(f"not a clean state: f{hot} fire together")
    low = hot[0] if hot else 0
    return low + sum(layout.bit(state, f"z{i}") << i for i in range(2, layout.n + 1))


def decode_unary(state: FiringState, layout: Layout) -> int:
    return sum(layout.bit(state, lab) for lab in layout.output_labels)


DECODERS = {"fcsc": decode_fcsc, "tsc": decode_tsc, "unary": decode_unary}


def decode(state: FiringState, layout: Layout) -> int:
    return DECODERS[layout.kind](state, layout)


@dataclass(frozen=True)
class CleanState:
    value: int
    time: int = 0


def clean_state(net: Network, layout: Layout, X: int, time: int = 0) -> FiringState:
    """Build the TSC clean state storing ``X`` with every carry neuron silent."""
    if layout.kind != "tsc":
        raise ValueError("clean states are defined for TSC layouts only")
    if not 0 <= X < 2 ** (layout.n + 1):
        raise ValueError(f"value {X} does not fit in digits 0..{layout.n}")
    labels = [f"f{X % 4}"] + [f"z{k}" for k in range(2, layout.n + 1) if X >> k & 1]
    return FiringState.from_labels(net, labels, time)
