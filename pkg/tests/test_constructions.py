import math
from fractions import Fraction

import pytest

from spikecount import constructions as C
from spikecount.engine import FiringState, run

F = Fraction


def weights(net):
    return {(net.label_of(s.src), net.label_of(s.dst)): s.weight for s in net.synapses}


def biases(net):
    return {n.label: n.bias for n in net.neurons}


def test_mod2_parameters():
    net = C.build_mod2_base()
    assert weights(net) == {("x", "z0"): 1, ("z0", "z0"): -1}
    assert biases(net)["z0"] == F(1, 2)
    assert len(net) == 2


def test_mod2_counts_parity():
    net = C.build_mod2_base()
    assert run(net, "111111", 6).series(net, "z0")[:6] == [0, 1, 0, 1, 0, 1]
    assert set(run(net, "", 4).series(net, "z0")) == {0}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_counter_parameters(n):
    net = C.build_fcsc_counter(n)
    w, b = weights(net), biases(net)
    expected = {("x", "z0"): 1, ("z0", "z0"): -1}
    for i in range(1, n + 1):
        expected[("x", f"z{i}")] = i + 1
        expected.update({(f"z{j}", f"z{i}"): 1 for j in range(i)})
        expected.update({(f"z{k}", f"in{i}"): 1 for k in range(1, i + 1)})
        expected[(f"in{i}", f"z{i}")] = -(i + 1)
        expected[(f"z{i}", f"z{i}")] = i
        assert b[f"z{i}"] == 2 * i + F(1, 2)
        assert b[f"in{i}"] == i - F(1, 2)
    assert w == expected


def test_counter_rejects_nonpositive_n():
    with pytest.raises(ValueError):
        C.build_fcsc_counter(0)


def test_counter_binary_n3():
    net = C.build_fcsc_counter(3)
    trace = run(net, [True] * 16, 16)
    for t in range(16):
        assert [trace[t].value(net, f"z{i}") for i in range(4)] == [t >> i & 1 for i in range(4)]
    # in_2 fires iff t mod 8 in {7, 0}, from t = 1 on (t = 0 is the silent start)
    assert [t for t in range(1, 16) if trace[t].value(net, "in2")] == [7, 8, 15]


def test_counter_silent_on_zero_input():
    net = C.build_fcsc_counter(2)
    assert all(not any(s.fired) for s in run(net, "0000", 6).states)


def test_capture_parameters():
    net, layout = C.build_fcsc(4)
    n = layout.n
    w, b = weights(net), biases(net)
    for i in range(n + 1):
        assert w[("x", f"y{i}")] == -2
        assert w[(f"y{i}", f"y{i}")] == 4
        assert w[(f"z{i}", f"y{i}")] == 1
        assert w[(f"z{i}", "s")] == w[(f"y{i}", "s")] == 1
        assert w[("s", f"y{i}")] == F(-3, 2)
        assert b[f"y{i}"] == F(1, 10)
    assert w[("x", "s")] == -n - 1
    assert w[("s", "s")] == n + 2
    assert b["s"] == F(1, 2)


def test_fcsc_t4_layout():
    net, layout = C.build_fcsc(4)
    assert layout.n == 3
    assert net.computing_count == 12
    assert layout.output_labels == ("y0", "y1", "y2", "y3")


def test_fcsc_t4_converges_after_first_run():
    net, layout = C.build_fcsc(4)
    trace = run(net, "0110", 6)
    assert [C.decode_fcsc(trace[t], layout) for t in range(4, 7)] == [2, 2, 2]


def test_fcsc_t8_capture_timing():
    # first run starts at 1 with length 4; y latches one step after the quiet step at t=5
    net, layout = C.build_fcsc(8)
    trace = run(net, "01111000", 12)
    decoded = [C.decode_fcsc(trace[t], layout) for t in range(13)]
    assert decoded[5] == 0
    assert decoded[6:] == [4] * 7


def test_fcsc_zero_input():
    net, layout = C.build_fcsc(8)
    trace = run(net, "0" * 8, 10)
    assert all(C.decode_fcsc(s, layout) == 0 for s in trace.states)


def test_mod4_parameters():
    w, b = weights(C.build_mod4()), biases(C.build_mod4())
    assert w == {
        ("x", "f0"): 1, ("x", "f1"): 1, ("x", "f2"): 1, ("x", "f3"): 1,
        ("f0", "f0"): 2, ("f1", "f1"): 2, ("f2", "f2"): 2, ("f3", "f3"): 2,
        ("f1", "f0"): -3, ("f2", "f1"): -3, ("f3", "f2"): -3,
        ("f1", "f2"): 1, ("f2", "f3"): 1, ("f3", "f0"): 1,
        ("f0", "f3"): -3, ("f3", "f1"): F(-7, 10), ("f0", "f1"): F(3, 10),
    }
    assert b == {"x": 0, "f0": F(3, 2), "f1": F(1, 2), "f2": F(3, 2), "f3": F(3, 2)}


def hot(net, s):
    return {i for i in range(4) if s.value(net, f"f{i}")}


def test_mod4_single_spike_from_zero():
    net = C.build_mod4()
    trace = run(net, "1", 3, start=FiringState.from_labels(net, ["f0"]))
    assert hot(net, trace[1]) == {0, 1}
    assert hot(net, trace[2]) == {1}


def test_mod4_two_spikes_from_three():
    net = C.build_mod4()
    trace = run(net, "11", 4, start=FiringState.from_labels(net, ["f3"]))
    assert hot(net, trace[1]) == {3, 0}
    assert hot(net, trace[2]) == {0, 1}
    assert hot(net, trace[3]) == {1}


def test_tsc_parameters():
    net, layout = C.build_tsc(15)
    w, b = weights(net), biases(net)
    assert layout.n == 4
    for i in range(2, 5):
        for dst in (f"z{i}", f"in{i}"):
            assert w[("f3", dst)] == 3
            assert w[("f0", dst)] == -1
            assert w[("x", dst)] == 1
            for j in range(2, i):
                assert w[(f"z{j}", dst)] == 1
        assert w[(f"in{i}", f"z{i}")] == -(i + 3)
        assert w[(f"z{i}", f"in{i}")] == 1
        assert w[(f"z{i}", f"z{i}")] == i + 3
        assert b[f"z{i}"] == i + F(3, 2)
        assert b[f"in{i}"] == i + F(5, 2)


def test_tsc_t8_counts_total():
    net, layout = C.build_tsc(8)
    trace = run(net, "101101", 12)
    assert [C.decode_tsc(trace[t], layout) for t in range(7, 13)] == [4] * 6


def test_tsc_t4_all_ones_reaches_clean_four():
    net, layout = C.build_tsc(4)
    trace = run(net, "1111", 6)
    assert trace[5].fired_labels(net) == ["f0", "z2"]


def test_tsc_zero_input():
    net, layout = C.build_tsc(8)
    trace = run(net, "0" * 8, 10)
    assert all(not any(s.fired) for s in trace.states)
    assert C.decode_tsc(trace[10], layout) == 0


class TestDecode:
    def test_fcsc_place_value(self):
        net, layout = C.build_fcsc(4)
        assert C.decode_fcsc(FiringState.from_labels(net, ["y2"]), layout) == 4
        assert C.decode_fcsc(FiringState.from_labels(net, []), layout) == 0

    def test_tsc(self):
        net, layout = C.build_tsc(8)
        assert C.decode_tsc(FiringState.from_labels(net, ["f2", "z2"]), layout) == 6
        assert C.decode_tsc(FiringState.from_labels(net, []), layout) == 0

    def test_tsc_rejects_two_hot(self):
        net, layout = C.build_tsc(8)
        with pytest.raises(C.NotCleanError):
            C.decode_tsc(FiringState.from_labels(net, ["f1", "f2"]), layout)


def test_unary_parameters():
    net, _ = C.build_unary_time0_counter(3)
    assert weights(net) == {
        ("x", "c1"): 1, ("c1", "c1"): 2,
        ("x", "c2"): 1, ("c1", "c2"): 1, ("c2", "c2"): 2,
        ("x", "c3"): 1, ("c2", "c3"): 1, ("c3", "c3"): 2,
    }
    assert biases(net) == {"x": 0, "c1": F(1, 2), "c2": F(3, 2), "c3": F(3, 2)}


def test_unary_chain_grows():
    net, _ = C.build_unary_time0_counter(3)
    trace = run(net, "111", 3)
    assert [set(trace[t].fired_labels(net)) - {"x"} for t in range(1, 4)] == [
        {"c1"}, {"c1", "c2"}, {"c1", "c2", "c3"}]
    assert all(not any(s.fired) for s in run(net, "000", 5).states)


def test_unary_single_spike():
    net, _ = C.build_unary_time0_counter(2)
    trace = run(net, "10", 6)
    assert trace.series(net, "c1") == [0, 1, 1, 1, 1, 1, 1]
    assert set(trace.series(net, "c2")) == {0}


@pytest.mark.parametrize("T", [1, 2, 3, 4, 7, 8, 9, 100, 1023, 1024])
def test_size_laws(T):
    n = math.ceil(math.log2(T + 1))
    assert C.digits_for(T) == n
    assert C.build_fcsc(T)[0].computing_count == 3 * n + 3
    assert C.build_tsc(T)[0].computing_count == 2 * n + 2


@pytest.mark.parametrize("builder", [C.build_fcsc, C.build_tsc, C.build_unary_time0_counter])
def test_builders_reject_nonpositive_T(builder):
    with pytest.raises(ValueError):
        builder(0)


def test_clean_state_builder():
    net, layout = C.build_tsc(15)
    assert C.clean_state(net, layout, 13).fired_labels(net) == ["f1", "z2", "z3"]
    with pytest.raises(ValueError):
        C.clean_state(net, layout, 32)
