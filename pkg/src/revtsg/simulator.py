"""Netlist evaluation, truth tables, circuit bijectivity and adder checks.

Evaluation is vectorised: a batch of input assignments is an ``(cases,
lines)`` uint8 array and every gate is applied to all cases at once by a
table lookup.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .gates import FREDKIN
from .netlist import Constant, GatePort, Netlist, PrimaryInput, Source

MAX_ENUMERATION_BITS = 20
MAX_EXHAUSTIVE_ADDER_WIDTH = 10


class SimulationError(ValueError):
    pass


@dataclass
class SimulationResult:
    ports: dict  # GatePort -> int
    outputs: tuple[int, ...]

    def __str__(self) -> str:
        return "".join(map(str, self.outputs))


def _lookup(values: dict, src: Source, cases: int) -> np.ndarray:
    if isinstance(src, (GatePort, PrimaryInput)):
        return values[src]
    if isinstance(src, Constant):
        return np.full(cases, src.bit, dtype=np.uint8)
    raise SimulationError(f"unknown source {src!r}")


def evaluate(netlist: Netlist, inputs: np.ndarray,
             constants: dict | None = None) -> dict:
    """Evaluate a batch of assignments.

    ``inputs`` has shape ``(cases, num_primary_inputs)``.  ``constants`` may
    override individual constant gate inputs, keyed by ``(instance id,
    input position)``, which is how constants are freed for bijectivity
    checks.  Returns the value array of every source, keyed by source.
    """
    inputs = np.asarray(inputs, dtype=np.uint8)
    if inputs.ndim != 2 or inputs.shape[1] != netlist.num_primary_inputs:
        raise SimulationError(
            f"expected assignments with {netlist.num_primary_inputs} bits, got shape {inputs.shape}")
    cases = inputs.shape[0]
    constants = constants or {}
    values: dict = {PrimaryInput(i): inputs[:, i] for i in range(netlist.num_primary_inputs)}
    for inst in netlist.instances:
        index = np.zeros(cases, dtype=np.int64)
        for j, src in enumerate(inst.inputs):
            col = constants.get((inst.id, j))
            if col is None:
                col = _lookup(values, src, cases)
            index |= col.astype(np.int64) << j
        table = np.asarray(inst.gate.table, dtype=np.int64)
        out = table[index]
        for p in range(inst.gate.arity):
            values[GatePort(inst.id, p)] = ((out >> p) & 1).astype(np.uint8)
    return values


def output_matrix(netlist: Netlist, values: dict, cases: int) -> np.ndarray:
    cols = [_lookup(values, src, cases) for src in netlist.primary_outputs]
    if not cols:
        return np.zeros((cases, 0), dtype=np.uint8)
    return np.stack(cols, axis=1)


def simulate_batch(netlist: Netlist, inputs: np.ndarray) -> np.ndarray:
    """Primary output bits for each row of ``inputs``."""
    inputs = np.asarray(inputs, dtype=np.uint8)
    values = evaluate(netlist, inputs)
    return output_matrix(netlist, values, inputs.shape[0])


def simulate(netlist: Netlist, assignment: Sequence[int]) -> SimulationResult:
    assignment = list(assignment)
    if len(assignment) != netlist.num_primary_inputs:
        raise SimulationError(
            f"{netlist.name} has {netlist.num_primary_inputs} inputs, got {len(assignment)} bits")
    if any(b not in (0, 1) for b in assignment):
        raise SimulationError("assignment bits must be 0 or 1")
    values = evaluate(netlist, np.array([assignment], dtype=np.uint8))
    ports = {src: int(v[0]) for src, v in values.items() if isinstance(src, GatePort)}
    outputs = tuple(int(v) for v in output_matrix(netlist, values, 1)[0])
    return SimulationResult(ports, outputs)


def enumerate_inputs(n: int) -> np.ndarray:
    """All ``2**n`` assignments, line 0 as the slowest-changing column."""
    rows = np.arange(1 << n, dtype=np.int64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    return ((rows[:, None] >> shifts) & 1).astype(np.uint8)


def _guard(n: int, what: str):
    if n > MAX_ENUMERATION_BITS:
        raise SimulationError(
            f"{what} needs 2^{n} cases; exhaustive enumeration is limited to "
            f"{MAX_ENUMERATION_BITS} free bits")


def truth_table(netlist: Netlist) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All rows ``(inputs, primary outputs)`` in printed order.

    Rows are sorted as a printed table with line 0 as the leftmost column,
    so a single TSG instance reproduces its reference table row by row.
    """
    n = netlist.num_primary_inputs
    _guard(n, "truth table")
    inputs = enumerate_inputs(n)
    outputs = simulate_batch(netlist, inputs)
    return [(tuple(map(int, i)), tuple(map(int, o))) for i, o in zip(inputs, outputs)]


def constant_slots(netlist: Netlist) -> list[tuple[str, int]]:
    return [(inst.id, j) for inst in netlist.instances
            for j, src in enumerate(inst.inputs) if isinstance(src, Constant)]


def interface_outputs(netlist: Netlist) -> list[Source]:
    """The full reversible output interface of a netlist.

    Gate output ports no gate consumes, then primary inputs that feed no
    gate (wires passing straight through).
    """
    used = netlist.consumers()
    lines: list[Source] = [p for p in netlist.output_ports() if not used[p]]
    lines += [PrimaryInput(i) for i in range(netlist.num_primary_inputs)
              if not used[PrimaryInput(i)]]
    return lines


def is_bijective_netlist(netlist: Netlist) -> bool:
    """Injectivity of (primary inputs + freed constants) -> interface outputs."""
    slots = constant_slots(netlist)
    n_free = netlist.num_primary_inputs + len(slots)
    _guard(n_free, "bijectivity check")
    cases = 1 << n_free
    free = enumerate_inputs(n_free)
    inputs = free[:, :netlist.num_primary_inputs]
    overrides = {slot: free[:, netlist.num_primary_inputs + k] for k, slot in enumerate(slots)}
    values = evaluate(netlist, inputs, overrides)
    lines = interface_outputs(netlist)
    if len(lines) < n_free:
        return False
    image = np.stack([_lookup(values, s, cases) for s in lines], axis=1)
    return len(np.unique(image, axis=0)) == cases


@dataclass
class VerificationReport:
    mode: str
    checked: int
    failures: list = field(default_factory=list)  # (inputs, expected, actual) bit strings
    failure_count: int = 0
    seed: int | None = None
    trials: int | None = None

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def summary(self) -> str:
        ok = self.checked - self.failure_count
        return f"{ok}/{self.checked} ok"


def _bits_to_ints(bits: np.ndarray) -> list[int]:
    """Rows of LSB-first bits to Python integers (any width)."""
    packed = np.packbits(bits, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def check_adder_layout(netlist: Netlist, width: int):
    if netlist.num_primary_inputs != 2 * width + 1 or len(netlist.primary_outputs) != width + 1:
        raise SimulationError(
            f"{netlist.name} does not have the adder layout for width {width}: expected "
            f"{2 * width + 1} inputs and {width + 1} outputs, found "
            f"{netlist.num_primary_inputs} and {len(netlist.primary_outputs)}")


def verify_adder(netlist: Netlist, width: int, mode: str = "exhaustive",
                 trials: int = 100_000, seed: int = 42, max_failures: int = 16) -> VerificationReport:
    """Compare (Sum, Cout) against integer addition ``A + B + Cin``.

    Inputs are laid out as A[0..width), B[0..width), Cin and outputs as
    Sum[0..width), Cout, all least significant bit first.
    """
    check_adder_layout(netlist, width)
    lines = 2 * width + 1
    if mode == "exhaustive":
        if width > MAX_EXHAUSTIVE_ADDER_WIDTH:
            raise SimulationError(
                f"exhaustive verification is limited to width {MAX_EXHAUSTIVE_ADDER_WIDTH}")
        x = np.arange(1 << lines, dtype=np.int64)
        inputs = ((x[:, None] >> np.arange(lines)) & 1).astype(np.uint8)
        report = VerificationReport("exhaustive", len(x))
    elif mode == "random":
        rng = np.random.default_rng(seed)
        inputs = rng.integers(0, 2, size=(trials, lines), dtype=np.uint8)
        report = VerificationReport("random", trials, seed=seed, trials=trials)
    else:
        raise ValueError(f"unknown mode {mode!r}")

    outputs = simulate_batch(netlist, inputs)
    a = _bits_to_ints(inputs[:, :width])
    b = _bits_to_ints(inputs[:, width:2 * width])
    got = _bits_to_ints(outputs)
    cin = inputs[:, 2 * width].tolist()
    for k in range(len(got)):
        expected = a[k] + b[k] + cin[k]
        if got[k] != expected:
            report.failure_count += 1
            if len(report.failures) < max_failures:
                exp_bits = "".join(str((expected >> i) & 1) for i in range(width + 1))
                report.failures.append((
                    "".join(map(str, inputs[k])), exp_bits, "".join(map(str, outputs[k]))))
    return report


@dataclass
class SkipProbe:
    instance: str
    cases_with_propagate: int
    violations: int

    @property
    def passed(self) -> bool:
        return self.violations == 0 and self.cases_with_propagate > 0


def probe_skip_mux(netlist: Netlist, instance: str) -> SkipProbe:
    """Check that a skip multiplexer passes its block carry-in whenever its
    control line is 1, for both values of the internal carry.

    Runs all assignments of the netlist's primary inputs, reads the control
    and carry-in lines the mux actually receives, and re-evaluates the mux
    with the internal-carry line forced to 0 and to 1.
    """
    inst = netlist.instance(instance)
    if inst.gate != FREDKIN:
        raise SimulationError(f"{instance} is not a Fredkin gate")
    _guard(netlist.num_primary_inputs, "skip probe")
    inputs = enumerate_inputs(netlist.num_primary_inputs)
    cases = len(inputs)
    values = evaluate(netlist, inputs)
    control, _, cin = (_lookup(values, s, cases) for s in inst.inputs)
    actual = values[GatePort(instance, 1)]
    mask = control == 1
    violations = int(np.count_nonzero(actual[mask] != cin[mask]))
    for c4 in (0, 1):
        for p, c in set(zip(control[mask].tolist(), cin[mask].tolist())):
            if FREDKIN(p, c4, c)[1] != c:
                violations += 1
    return SkipProbe(instance, int(mask.sum()), violations)


def equivalent(a: Netlist, b: Netlist) -> bool:
    """Exhaustive equality of primary outputs over all inputs."""
    if a.num_primary_inputs != b.num_primary_inputs:
        return False
    _guard(a.num_primary_inputs, "equivalence check")
    inputs = enumerate_inputs(a.num_primary_inputs)
    return bool(np.array_equal(simulate_batch(a, inputs), simulate_batch(b, inputs)))
