"""Oracles, exhaustive checkers and the time-0 chain certificate.

Everything here compares the engine against something computed without it:
plain-Python oracles for the counting problems, and hand-written boolean
predicates for each one-step firing rule.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from . import constructions as C
from .engine import FiringState, InputSequence, Network, run, run_batch, step

DEFAULT_BOUND = 12


# ---------------------------------------------------------------- oracles

def spike_runs(bits: Sequence[bool]) -> list[tuple[int, int]]:
    """Maximal runs of 1s as (start, length), in time order."""
    runs = []
    t = 0
    while t < len(bits):
        if bits[t]:
            start = t
            while t < len(bits) and bits[t]:
                t += 1
            runs.append((start, t - start))
        else:
            t += 1
    return runs


def oracle_first_run_length(bits: Sequence[bool]) -> int:
    runs = spike_runs(bits)
    return runs[0][1] if runs else 0


def oracle_total_spikes(bits: Sequence[bool]) -> int:
    return sum(1 for b in bits if b)


def convergence_time(kind: str, bits: Sequence[bool], fcsc_lag: int = 1) -> int | None:
    """Earliest time from which the decoded output must already be final.

    FCSC: first run start + its length + ``fcsc_lag`` (the capture needs one
    quiet step, so the true lag is 1). TSC: end of the last run + 1.
    ``None`` when the input has no spikes.
    """
    runs = spike_runs(bits)
    if not runs:
        return None
    if kind == "fcsc":
        start, length = runs[0]
        return start + length + fcsc_lag
    if kind == "tsc":
        start, length = runs[-1]
        return start + length + 1
    raise ValueError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------- reports

@dataclass
class Counterexample:
    time: int
    neuron: str
    expected: object
    observed: object
    input: InputSequence | None = None
    assignment: dict[str, int] | None = None

    def describe(self) -> str:
        parts = []
        if self.input is not None:
            parts.append(f"input={self.input or '<empty>'}")
        if self.assignment is not None:
            parts.append("prev={" + ", ".join(f"{k}={v}" for k, v in self.assignment.items()) + "}")
        parts.append(f"t={self.time} {self.neuron}: expected {self.expected}, observed {self.observed}")
        return " ".join(parts)

    def to_dict(self) -> dict:
        d = {"time": self.time, "neuron": self.neuron,
             "expected": self.expected, "observed": self.observed}
        if self.input is not None:
            d["input"] = str(self.input)
        if self.assignment is not None:
            d["assignment"] = self.assignment
        return d


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    counterexample: Counterexample | None = None
    passing: int | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        if self.passing is not None:
            text = f"[{status}] {self.name}: {self.passing}/{self.cases} inputs pass"
        else:
            text = f"[{status}] {self.name}: {self.cases} cases"
        if self.counterexample is not None:
            text += f"; first counterexample: {self.counterexample.describe()}"
        return text


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def add(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    def to_text(self) -> str:
        lines = [c.line() for c in self.checks]
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "cases": c.cases, "passing": c.passing,
                 "counterexample": c.counterexample.to_dict() if c.counterexample else None}
                for c in self.checks
            ],
        }


# ---------------------------------------------------------------- exhaustive sweeps

def all_inputs(T: int) -> np.ndarray:
    """Every 0/1 sequence of length T, lexicographic (row k is k in binary, MSB first)."""
    if T == 0:
        return np.zeros((1, 0), dtype=np.uint8)
    return np.array(list(itertools.product((0, 1), repeat=T)), dtype=np.uint8)


def _decode_batch(kind: str, states: np.ndarray, layout: C.Layout) -> np.ndarray:
    """Decode (..., N) states; TSC states with two hot f neurons decode to -1."""
    ids = layout.ids
    if kind == "fcsc":
        cols = [ids[f"y{i}"] for i in range(layout.n + 1)]
        weights = np.array([1 << i for i in range(layout.n + 1)], dtype=np.int64)
        return states[..., cols].astype(np.int64) @ weights
    f = states[..., [ids[f"f{i}"] for i in range(4)]].astype(np.int64)
    low = f @ np.arange(4, dtype=np.int64)
    value = low.copy()
    for i in range(2, layout.n + 1):
        value += states[..., ids[f"z{i}"]].astype(np.int64) << i
    return np.where(f.sum(axis=-1) > 1, -1, value)


def exhaustive_verify(
    kind: str,
    T: int,
    settle: int = 2,
    bound: int = DEFAULT_BOUND,
    fcsc_lag: int = 1,
    network: tuple[Network, C.Layout] | None = None,
) -> VerificationReport:
    """Run every input of length T and compare decoded outputs with the oracle.

    Two checks: the time-1 claim (correct at every t in [T+1, T+1+settle]) and
    early convergence (correct at every t >= :func:`convergence_time` up to the
    same horizon). ``network`` overrides the default construction, e.g. with a
    mutated copy.
    """
    if kind not in ("fcsc", "tsc"):
        raise ValueError(f"unknown kind {kind!r}; expected 'fcsc' or 'tsc'")
    if T > bound:
        raise ValueError(
            f"T={T} exceeds the exhaustive bound {bound} (2^{T} inputs); "
            f"pass a larger bound explicitly (--bound) if you really want this"
        )
    if T < 1 or settle < 1:
        raise ValueError("need T >= 1 and settle >= 1")
    if network is None:
        network = C.build_fcsc(T) if kind == "fcsc" else C.build_tsc(T)
    net, layout = network
    oracle = oracle_first_run_length if kind == "fcsc" else oracle_total_spikes

    inputs = all_inputs(T)
    horizon = T + 1 + settle
    traces = run_batch(net, inputs, horizon)
    decoded = _decode_batch(kind, traces, layout)

    expected = np.array([oracle(bits) for bits in inputs], dtype=np.int64)
    conv = np.array([convergence_time(kind, bits, fcsc_lag) or 0 for bits in inputs])
    times = np.arange(horizon + 1)
    wrong = decoded != expected[:, None]

    def first_violation(mask: np.ndarray) -> Counterexample | None:
        rows = np.flatnonzero(mask.any(axis=1))
        if not len(rows):
            return None
        row = rows[0]
        t = int(np.argmax(mask[row]))
        return Counterexample(t, "decoded", int(expected[row]), int(decoded[row, t]),
                              InputSequence(tuple(inputs[row]), T))

    time1_mask = wrong & (times >= T + 1)
    early_mask = wrong & (times >= conv[:, None])
    time1_cx = first_violation(time1_mask)
    early_cx = first_violation(early_mask)
    time1_bad = time1_mask.any(axis=1)
    early_bad = early_mask.any(axis=1)
    report = VerificationReport()
    n_cases = len(inputs)
    report.add(CheckResult(f"{kind}(T={T}) time-1 output", time1_cx is None, n_cases, time1_cx,
                           int(n_cases - time1_bad.sum())))
    lag = f", lag {fcsc_lag}" if kind == "fcsc" else ""
    report.add(CheckResult(f"{kind}(T={T}) early convergence{lag}", early_cx is None, n_cases,
                           early_cx, int(n_cases - early_bad.sum())))
    return report


# ---------------------------------------------------------------- firing rules

@dataclass(frozen=True)
class RuleClause:
    """One neuron's firing rule: ``fires(prev) <=> predicate(prev)``."""

    target: str
    named: tuple[str, ...]
    predicate: Callable[[dict[str, int]], bool]


def _fcsc_z(net: Network) -> list[RuleClause]:
    clauses = []
    i = 1
    while f"in{i}" in net.by_label:
        def pred(a, i=i):
            carry = all(a[f"z{j}"] for j in range(i)) or a[f"z{i}"]
            return bool(a["x"] and not a[f"in{i}"] and carry)
        named = ("x", f"in{i}") + tuple(f"z{j}" for j in range(i + 1))
        clauses.append(RuleClause(f"z{i}", named, pred))
        i += 1
    return clauses


def _fcsc_in(net: Network) -> list[RuleClause]:
    clauses = []
    i = 1
    while f"in{i}" in net.by_label:
        named = tuple(f"z{j}" for j in range(1, i + 1))
        clauses.append(RuleClause(f"in{i}", named, lambda a, named=named: all(a[k] for k in named)))
        i += 1
    return clauses


def _capture_digits(net: Network) -> int:
    n = 0
    while f"y{n + 1}" in net.by_label:
        n += 1
    return n


def _capture_y(net: Network) -> list[RuleClause]:
    clauses = []
    for i in range(_capture_digits(net) + 1):
        def pred(a, i=i):
            return bool(a[f"y{i}"] or (not a["x"] and not a["s"] and a[f"z{i}"]))
        clauses.append(RuleClause(f"y{i}", (f"y{i}", "x", "s", f"z{i}"), pred))
    return clauses


def _capture_s(net: Network) -> list[RuleClause]:
    n = _capture_digits(net)
    zs = tuple(f"z{i}" for i in range(n + 1))
    ys = tuple(f"y{i}" for i in range(n + 1))

    def pred(a):
        return bool(a["s"] or (any(a[k] for k in zs + ys) and not a["x"]))
    return [RuleClause("s", ("s", "x") + zs + ys, pred)]


_F = tuple(f"f{i}" for i in range(4))


def _mod4_f1(net: Network) -> list[RuleClause]:
    def pred(a):
        return bool(not a["f2"] and ((a["x"] and not a["f3"]) or a["f1"] or (a["x"] and a["f0"])))
    return [RuleClause("f1", ("x",) + _F, pred)]


def _mod4_f(net: Network) -> list[RuleClause]:
    clauses = []
    for i in (0, 2, 3):
        nxt, prv = f"f{(i + 1) % 4}", f"f{(i - 1) % 4}"

        def pred(a, i=i, nxt=nxt, prv=prv):
            return bool(not a[nxt] and ((a["x"] and a[prv]) or a[f"f{i}"]))
        clauses.append(RuleClause(f"f{i}", ("x",) + _F, pred))
    return clauses


def _tsc_digits(net: Network) -> range:
    i = 2
    while f"z{i}" in net.by_label and f"f0" in net.by_label:
        i += 1
    return range(2, i)


def _tsc_carry(a, i) -> bool:
    return bool(a["f3"] and not a["f0"] and a["x"] and all(a[f"z{j}"] for j in range(2, i)))


def _tsc_z(net: Network) -> list[RuleClause]:
    clauses = []
    for i in _tsc_digits(net):
        def pred(a, i=i):
            return bool(not a[f"in{i}"] and (_tsc_carry(a, i) or a[f"z{i}"]))
        named = ("x", "f3", "f0", f"in{i}") + tuple(f"z{j}" for j in range(2, i + 1))
        clauses.append(RuleClause(f"z{i}", named, pred))
    return clauses


def _tsc_in(net: Network) -> list[RuleClause]:
    clauses = []
    for i in _tsc_digits(net):
        def pred(a, i=i):
            return bool(a[f"z{i}"] and _tsc_carry(a, i))
        named = ("x", "f3", "f0") + tuple(f"z{j}" for j in range(2, i + 1))
        clauses.append(RuleClause(f"in{i}", named, pred))
    return clauses


RULES: dict[str, Callable[[Network], list[RuleClause]]] = {
    "fcsc-z": _fcsc_z,
    "fcsc-in": _fcsc_in,
    "capture-y": _capture_y,
    "capture-s": _capture_s,
    "mod4-f1": _mod4_f1,
    "mod4-f": _mod4_f,
    "tsc-z": _tsc_z,
    "tsc-in": _tsc_in,
}

# rule families, one per firing-rule lemma
FAMILIES = {
    "counter": ("fcsc-z", "fcsc-in"),
    "capture": ("capture-y", "capture-s"),
    "mod4": ("mod4-f1", "mod4-f"),
    "tsc": ("tsc-z", "tsc-in"),
}


def reachable_states(net: Network, limit: int = 1 << 20) -> np.ndarray:
    """All states reachable from t=0 under arbitrary input, as a (K, N) array."""
    comp = net.compiled
    start = np.zeros((2, len(net)), dtype=np.uint8)
    start[1, comp.input_id] = 1
    seen = {row.tobytes() for row in start}
    frontier = start
    found = [start]
    while len(frontier):
        succ = np.concatenate([comp.advance(frontier, 0), comp.advance(frontier, 1)])
        succ = np.unique(succ, axis=0)
        fresh = [row for row in succ if row.tobytes() not in seen]
        for row in fresh:
            seen.add(row.tobytes())
        if len(seen) > limit:
            raise RuntimeError(f"more than {limit} reachable states")
        frontier = np.array(fresh, dtype=np.uint8).reshape(-1, len(net))
        found.append(frontier)
    return np.concatenate(found)


def check_firing_rule(net: Network, rule: str, scope: str = "free") -> CheckResult:
    """Check one rule against every predecessor assignment.

    ``scope="free"`` treats the target's presynaptic neurons (plus any neuron
    the rule mentions) as independent booleans: 2^k assignments. ``"reachable"``
    only uses assignments that occur in states reachable from t=0.
    """
    if rule not in RULES:
        raise ValueError(f"unknown rule {rule!r}; known: {sorted(RULES)}")
    if scope not in ("free", "reachable"):
        raise ValueError(f"unknown scope {scope!r}")
    try:
        clauses = RULES[rule](net)
    except KeyError:
        clauses = []
    if not clauses or any(k not in net.by_label for c in clauses for k in (c.target,) + c.named):
        raise ValueError(f"rule {rule!r} does not apply to this network")
    reachable = reachable_states(net) if scope == "reachable" else None
    zero = [False] * len(net)
    cases = 0
    for clause in clauses:
        free = list(dict.fromkeys(list(clause.named) + net.presynaptic(clause.target)))
        ids = [net.id_of(k) for k in free]
        if reachable is None:
            assignments = itertools.product((0, 1), repeat=len(free))
        else:
            assignments = sorted({tuple(int(v) for v in row[ids]) for row in reachable})
        target = net.id_of(clause.target)
        for values in assignments:
            cases += 1
            bits = list(zero)
            for nid, v in zip(ids, values):
                bits[nid] = bool(v)
            nxt = step(net, FiringState(tuple(bits), 0), False)
            assign = dict(zip(free, values))
            expected = clause.predicate(assign)
            if nxt.fired[target] != expected:
                cx = Counterexample(1, clause.target, int(expected), int(nxt.fired[target]),
                                    assignment=assign)
                return CheckResult(f"rule {rule} [{scope}]", False, cases, cx)
    return CheckResult(f"rule {rule} [{scope}]", True, cases)


def rule_networks(max_n: int = 4) -> dict[str, list[tuple[str, Network]]]:
    """Networks each rule family is checked on, for digit counts up to ``max_n``."""
    fcsc = [(f"fcsc(n={n})", C.build_fcsc((1 << n) - 1)[0]) for n in range(1, max_n + 1)]
    tsc = [(f"tsc(n={n})", C.build_tsc((1 << n) - 1)[0]) for n in range(2, max_n + 1)]
    return {
        "counter": [(f"counter(n={n})", C.build_fcsc_counter(n)) for n in range(1, max_n + 1)] + fcsc,
        "capture": fcsc,
        "mod4": [("mod4", C.build_mod4())] + tsc,
        "tsc": tsc,
    }


def verify_firing_rules(max_n: int = 4, scope: str = "free") -> VerificationReport:
    report = VerificationReport()
    nets = rule_networks(max_n)
    for family, rules in FAMILIES.items():
        for rule in rules:
            for name, net in nets[family]:
                res = check_firing_rule(net, rule, scope)
                res.name = f"{res.name} on {name}"
                report.add(res)
    return report


# ---------------------------------------------------------------- theorems on traces

def verify_binary_counter(n: int = 4, first_t: int = 0) -> VerificationReport:
    """All-ones input: z_i is bit i of t, in_i fires iff t mod 2^(i+1) in {0, 2^(i+1)-1}."""
    net = C.build_fcsc_counter(n)
    last = (1 << (n + 1)) - 1
    trace = run(net, [True] * (last + 1), last + 1)
    report = VerificationReport()
    z_cx = in_cx = None
    z_cases = in_cases = 0
    for t in range(first_t, last + 1):
        state = trace[t]
        for i in range(n + 1):
            z_cases += 1
            got = state.value(net, f"z{i}")
            if z_cx is None and got != (t >> i & 1):
                z_cx = Counterexample(t, f"z{i}", t >> i & 1, got, InputSequence((True,) * (last + 1)))
        for i in range(1, n + 1):
            in_cases += 1
            m = 1 << (i + 1)
            want = int(t % m in (0, m - 1))
            got = state.value(net, f"in{i}")
            if in_cx is None and got != want:
                in_cx = Counterexample(t, f"in{i}", want, got, InputSequence((True,) * (last + 1)))
    span = f"t in [{first_t}, {last}]"
    report.add(CheckResult(f"counter(n={n}) z_i = bit i of t, {span}", z_cx is None, z_cases, z_cx))
    report.add(CheckResult(f"counter(n={n}) in_i carry rule, {span}", in_cx is None, in_cases, in_cx))
    return report


def verify_capture(n: int = 3, max_prefix: int = 2, suffix: int = 4) -> VerificationReport:
    """Capture theorem on every realizable stop: prefix zeros, run of length L, a zero, any suffix.

    t' is read off the trace as the first time x = 0 while some z fires.
    Then y_i(t) must equal z_i(t') for all t > t'.
    """
    net, layout = C.build_fcsc((1 << n) - 1)
    assert layout.n == n
    cases = 0
    cx = None
    for pre in range(max_prefix + 1):
        for L in range(1, 1 << (n + 1)):
            for tail in itertools.product((False, True), repeat=suffix):
                bits = (False,) * pre + (True,) * L + (False,) + tail
                horizon = len(bits) + 3
                trace = run(net, bits, horizon)
                x = trace.series(net, "x")
                zs = [trace.series(net, f"z{i}") for i in range(n + 1)]
                stop = next(t for t in range(horizon + 1)
                            if not x[t] and any(z[t] for z in zs))
                cases += 1
                for t in range(stop + 1, horizon + 1):
                    for i in range(n + 1):
                        got = trace[t].value(net, f"y{i}")
                        if got != zs[i][stop]:
                            cx = cx or Counterexample(t, f"y{i}", zs[i][stop], got, InputSequence(bits))
    report = VerificationReport()
    report.add(CheckResult(f"capture(n={n}) y freezes to z(t')", cx is None, cases, cx))
    return report


def verify_mod4_lemma(max_L: int = 8, settle: int = 3) -> VerificationReport:
    """From every clean value and burst length: two-hot shape mid-burst, clean (i+L) mod 4 after."""
    net = C.build_mod4()
    shape_cx = clean_cx = stable_cx = None
    cases = 0
    for start in range(4):
        init = FiringState.from_labels(net, [f"f{start}"])
        for L in range(1, max_L + 1):
            cases += 1
            bits = (True,) * L
            trace = run(net, bits, L + 1 + settle, start=init)
            for t in range(1, L + 1):
                hot = {i for i in range(4) if trace[t].value(net, f"f{i}")}
                want = {(start + t) % 4, (start + t - 1) % 4}
                if hot != want and shape_cx is None:
                    shape_cx = Counterexample(t, "f*", sorted(want), sorted(hot), InputSequence(bits))
            want_clean = {(start + L) % 4}
            for t in range(L + 1, L + 2 + settle):
                hot = {i for i in range(4) if trace[t].value(net, f"f{i}")}
                if hot != want_clean:
                    cx = Counterexample(t, "f*", sorted(want_clean), sorted(hot), InputSequence(bits))
                    if t == L + 1:
                        clean_cx = clean_cx or cx
                    else:
                        stable_cx = stable_cx or cx
    report = VerificationReport()
    report.add(CheckResult("mod4 mid-burst two-hot shape", shape_cx is None, cases, shape_cx))
    report.add(CheckResult("mod4 clean value (i+L) mod 4 at t'+L+1", clean_cx is None, cases, clean_cx))
    report.add(CheckResult("mod4 clean state stable under zero input", stable_cx is None, cases, stable_cx))
    return report


def check_clean_state(state: FiringState, X: int, layout: C.Layout) -> bool:
    if X < 0 or X >= 1 << (layout.n + 1):
        return False
    hot = [i for i in range(4) if layout.bit(state, f"f{i}")]
    if hot != [X % 4] and not (X == 0 and not hot):
        return False
    for k in range(2, layout.n + 1):
        if layout.bit(state, f"z{k}") != (X >> k & 1):
            return False
        m = 1 << (k + 1)
        if X % m == m - 1 and layout.bit(state, f"in{k}"):
            return False
    return True


def verify_tsc_lemma(n: int = 4, max_X: int = 12, max_L: int = 8, settle: int = 2) -> VerificationReport:
    """Clean X, burst L, one quiet step: clean X+L at t'+L+1, and it stays clean."""
    net, layout = C.build_tsc((1 << n) - 1)
    assert layout.n == n
    cx = stable_cx = None
    cases = 0
    for X in range(max_X + 1):
        init = C.clean_state(net, layout, X)
        for L in range(1, max_L + 1):
            if X + L >= 2 ** (n + 1):
                break  # the digits cannot hold X + L
            cases += 1
            bits = (True,) * L
            trace = run(net, bits, L + 1 + settle, start=init)
            if cx is None and not check_clean_state(trace[L + 1], X + L, layout):
                cx = Counterexample(L + 1, "clean", X + L, trace[L + 1].fired_labels(net),
                                    InputSequence(bits))
            for t in range(L + 2, L + 2 + settle):
                if stable_cx is None and not check_clean_state(trace[t], X + L, layout):
                    stable_cx = Counterexample(t, "clean", X + L, trace[t].fired_labels(net),
                                               InputSequence(bits))
    report = VerificationReport()
    report.add(CheckResult(f"tsc(n={n}) clean X+L at t'+L+1", cx is None, cases, cx))
    report.add(CheckResult(f"tsc(n={n}) clean state stable under zero input", stable_cx is None,
                           cases, stable_cx))
    return report


# ---------------------------------------------------------------- time-0 lower bound

@dataclass
class ChainCertificate:
    sets: list[frozenset[str]]
    strict: bool
    outputs: tuple[str, ...]
    positive_input_weights: bool

    @property
    def implied_min_outputs(self) -> int:
        """A strict chain S_0 < ... < S_T forces |S_T| >= T."""
        return len(self.sets) - 1 if self.strict else 0

    @property
    def consistent(self) -> bool:
        return len(self.outputs) >= self.implied_min_outputs


@dataclass
class NotTime0Solver:
    time: int
    expected: int
    observed: int | str


def time0_chain_certificate(
    net: Network,
    outputs: Iterable[str],
    decoder: Callable[[FiringState], int],
    T: int,
) -> ChainCertificate | NotTime0Solver:
    """Run the all-ones input of length T; if the decoded output equals the
    running count at every t in 1..T, return the chain of output firing sets."""
    if T < 1:
        raise ValueError("T must be >= 1")
    outputs = tuple(outputs)
    trace = run(net, [True] * T, T)
    for t in range(1, T + 1):
        try:
            got = decoder(trace[t])
        except ValueError as exc:
            return NotTime0Solver(t, t, f"undecodable ({exc})")
        if got != t:
            return NotTime0Solver(t, t, got)
    ids = [net.id_of(o) for o in outputs]
    sets = [frozenset(o for o, i in zip(outputs, ids) if trace[t].fired[i]) for t in range(T + 1)]
    strict = all(a < b for a, b in zip(sets, sets[1:]))
    positive = all((net.weight("x", o) or 0) > 0 for o in sets[-1])
    return ChainCertificate(sets, strict, outputs, positive)


def verify_time0(T: int) -> VerificationReport:
    """FCSC(t)/TSC(t) networks fail the time-0 contract; the unary chain yields a strict chain."""
    report = VerificationReport()
    for kind, build in (("fcsc", C.build_fcsc), ("tsc", C.build_tsc)):
        for t in range(2, T + 1):
            net, layout = build(t)
            res = time0_chain_certificate(net, layout.output_labels, lambda s, l=layout: C.decode(s, l), t)
            ok = isinstance(res, NotTime0Solver)
            cx = None if ok else Counterexample(t, "time0", "not-time0-solver", "strict chain")
            report.add(CheckResult(f"{kind}(T={t}) is not a time-0 solver", ok, 1, cx))
    net, layout = C.build_unary_time0_counter(T)
    res = time0_chain_certificate(net, layout.output_labels, lambda s: C.decode(s, layout), T)
    ok = (isinstance(res, ChainCertificate) and res.strict and res.consistent
          and res.implied_min_outputs == T)
    cx = None if ok else Counterexample(T, "chain", "strict chain of length T+1", res)
    report.add(CheckResult(f"unary(T={T}) strict chain, >= {T} outputs", ok, 1, cx))
    return report
