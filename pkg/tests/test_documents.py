import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from spikecount import constructions as C
from spikecount.documents import (
    DocumentError,
    deserialize,
    dumps,
    format_rational,
    loads,
    serialize,
    to_dot,
    trace_lines,
)
from spikecount.engine import run


@pytest.mark.parametrize(
    "net",
    [C.build_mod2_base(), C.build_mod4(), C.build_fcsc(8)[0], C.build_tsc(8)[0],
     C.build_unary_time0_counter(5)[0]],
    ids=["mod2", "mod4", "fcsc8", "tsc8", "unary5"],
)
def test_round_trip(net):
    back = deserialize(serialize(net))
    assert back == net
    assert len(back) == len(net)


def test_values_are_exact_decimal_strings():
    doc = json.loads(serialize(C.build_mod4()))
    weights = {(s["src"], s["dst"]): s["weight"] for s in doc["synapses"]}
    assert weights[(4, 2)] == "-0.7"  # f3 -> f1
    assert weights[(1, 2)] == "0.3"   # f0 -> f1
    assert {n["label"]: n["bias"] for n in doc["neurons"]}["f1"] == "0.5"


@pytest.mark.parametrize(
    "q, text",
    [(Fraction(1, 10), "0.1"), (Fraction(-7, 10), "-0.7"), (Fraction(5, 2), "2.5"),
     (Fraction(-3), "-3"), (Fraction(1, 3), "1/3"), (Fraction(-1, 40), "-0.025")],
)
def test_format_rational(q, text):
    assert format_rational(q) == text


@given(st.fractions())
def test_format_rational_round_trips(q):
    assert Fraction(format_rational(q)) == q


def test_missing_bias_is_a_parse_error():
    doc = json.loads(serialize(C.build_mod2_base()))
    del doc["neurons"][1]["bias"]
    with pytest.raises(DocumentError, match="bias"):
        loads(json.dumps(doc))


def test_unknown_field_rejected_in_strict_mode_only():
    doc = json.loads(serialize(C.build_mod2_base()))
    doc["neurons"][0]["colour"] = "red"
    with pytest.raises(DocumentError, match="unknown"):
        loads(json.dumps(doc))
    net, _ = loads(json.dumps(doc), strict=False)
    assert net == C.build_mod2_base()


def test_float_weights_rejected():
    doc = json.loads(serialize(C.build_mod2_base()))
    doc["synapses"][0]["weight"] = 0.5
    with pytest.raises(DocumentError):
        loads(json.dumps(doc))


def test_malformed_json():
    with pytest.raises(DocumentError):
        loads("{not json")


def test_dangling_document_rejected():
    doc = json.loads(serialize(C.build_mod2_base()))
    doc["synapses"].append({"src": 1, "dst": 99, "weight": "1"})
    with pytest.raises(DocumentError, match="dangling"):
        loads(json.dumps(doc))


def test_layout_travels_with_document():
    net, layout = C.build_fcsc(8)
    back, data = loads(dumps(net, layout.to_dict()))
    assert data == {"kind": "fcsc", "T": 8, "n": 4, "output_labels": ["y0", "y1", "y2", "y3", "y4"]}
    assert C.Layout.from_dict(data, back) == layout


def test_trace_lines():
    net = C.build_mod2_base()
    lines = trace_lines(net, run(net, "11", 2)).splitlines()
    assert [json.loads(l) for l in lines] == [
        {"t": 0, "fired": ["x"]},
        {"t": 1, "fired": ["x", "z0"]},
        {"t": 2, "fired": []},
    ]


def test_dot_mod2():
    dot = to_dot(C.build_mod2_base(), "mod2")
    assert 'n0 -> n1 [label="1"];' in dot
    assert 'n1 -> n1 [label="-1"];' in dot
    assert dot.count("[label=") == 4  # 2 nodes + 2 edges
    assert 'label="z0(0.5)"' in dot


def test_dot_mod4_counts():
    dot = to_dot(C.build_mod4())
    assert dot.count(" -> ") == 17
    assert dot.count("shape=") == 5


def test_dot_is_byte_stable():
    net = C.build_tsc(8)[0]
    assert to_dot(net) == to_dot(deserialize(serialize(net)))
