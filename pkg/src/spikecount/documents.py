"""On-disk formats: network documents (JSON), traces (JSON lines), DOT export."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .engine import Network, Neuron, Synapse, StructuralError, Trace, validate_network

FORMAT_VERSION = 1

_NEURON_FIELDS = {"id", "label", "role", "bias"}
_SYNAPSE_FIELDS = {"src", "dst", "weight"}
_TOP_FIELDS = {"version", "neurons", "synapses", "layout"}


class DocumentError(ValueError):
    pass


def format_rational(q: Fraction) -> str:
    """Exact decimal string when one exists (``-0.7``), else ``p/q``."""
    den = q.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{q.numerator}/{q.denominator}"
    digits = max(twos, fives)
    if digits == 0:
        return str(q.numerator)
    scaled = abs(q.numerator) * (10**digits // q.denominator)
    sign = "-" if q < 0 else ""
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def parse_rational(text: Any, where: str) -> Fraction:
    if not isinstance(text, str):
        raise DocumentError(f"{where}: expected a decimal string, got {type(text).__name__}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise DocumentError(f"{where}: not a rational number: {text!r}") from None


def to_document(net: Network, layout: dict | None = None) -> dict:
    report = validate_network(net)
    if not report.valid:
        raise StructuralError("; ".join(report.problems))
    doc = {
        "version": FORMAT_VERSION,
        "neurons": [
            {"id": n.id, "label": n.label, "role": n.role, "bias": format_rational(n.bias)}
            for n in net.neurons
        ],
        "synapses": [
            {"src": s.src, "dst": s.dst, "weight": format_rational(s.weight)}
            for s in net.synapses
        ],
    }
    if layout is not None:
        doc["layout"] = layout
    return doc


def _require(entry: Any, fields: set[str], where: str, strict: bool) -> None:
    if not isinstance(entry, dict):
        raise DocumentError(f"{where}: expected an object")
    missing = fields - entry.keys()
    if missing:
        raise DocumentError(f"{where}: missing field(s) {sorted(missing)}")
    extra = entry.keys() - fields
    if strict and extra:
        raise DocumentError(f"{where}: unknown field(s) {sorted(extra)}")


def from_document(doc: Any, strict: bool = True) -> tuple[Network, dict | None]:
    """Parse a document; returns the network and the optional layout block."""
    if not isinstance(doc, dict):
        raise DocumentError("document must be an object")
    for key in ("version", "neurons", "synapses"):
        if key not in doc:
            raise DocumentError(f"missing top-level field {key!r}")
    if strict and doc.keys() - _TOP_FIELDS:
        raise DocumentError(f"unknown top-level field(s) {sorted(doc.keys() - _TOP_FIELDS)}")
    if doc["version"] != FORMAT_VERSION:
        raise DocumentError(f"unsupported document version {doc['version']!r}")
    neurons = []
    for k, entry in enumerate(doc["neurons"]):
        where = f"neurons[{k}]"
        _require(entry, _NEURON_FIELDS, where, strict)
        try:
            neurons.append(
                Neuron(int(entry["id"]), str(entry["label"]), entry["role"],
                       parse_rational(entry["bias"], where + ".bias"))
            )
        except (TypeError, ValueError) as exc:
            raise DocumentError(f"{where}: {exc}") from None
    synapses = []
    for k, entry in enumerate(doc["synapses"]):
        where = f"synapses[{k}]"
        _require(entry, _SYNAPSE_FIELDS, where, strict)
        synapses.append(
            Synapse(int(entry["src"]), int(entry["dst"]),
                    parse_rational(entry["weight"], where + ".weight"))
        )
    net = Network(tuple(neurons), tuple(synapses))
    report = validate_network(net)
    if not report.valid:
        raise DocumentError("invalid network: " + "; ".join(report.problems))
    return net, doc.get("layout")


def dumps(net: Network, layout: dict | None = None) -> str:
    return json.dumps(to_document(net, layout), indent=2) + "\n"


def loads(text: str, strict: bool = True) -> tuple[Network, dict | None]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    return from_document(doc, strict=strict)


def serialize(net: Network) -> str:
    return dumps(net)


def deserialize(text: str, strict: bool = True) -> Network:
    return loads(text, strict=strict)[0]


def trace_lines(net: Network, trace: Trace) -> str:
    return "".join(json.dumps(rec) + "\n" for rec in trace.records(net))


def to_dot(net: Network, name: str = "network") -> str:
    """Byte-stable DOT rendering: nodes by id, edges by (src, dst)."""
    shapes = {"input": "doublecircle", "output": "box", "hidden": "circle"}
    lines = [f"digraph {json.dumps(name)} {{", "  rankdir=LR;"]
    for n in sorted(net.neurons, key=lambda n: n.id):
        label = f"{n.label}({format_rational(n.bias)})"
        lines.append(f"  n{n.id} [label={json.dumps(label)}, shape={shapes[n.role]}];")
    for s in sorted(net.synapses, key=lambda s: (s.src, s.dst)):
        lines.append(f"  n{s.src} -> n{s.dst} [label={json.dumps(format_rational(s.weight))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
