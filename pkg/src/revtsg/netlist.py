"""Acyclic netlists of reversible gate instances.

A netlist has ``num_primary_inputs`` input lines, a topologically ordered
list of gate instances whose inputs are :data:`Source` references, and a
list of primary outputs.  Every gate output port is either a primary output,
consumed by a later gate, or garbage.

Fanout rules: primary inputs and constants may feed several gate inputs
(reported as a warning).  A gate output port may feed at most one gate
input unless the netlist lists it in ``shared_ports``; declared sharing is
reported as a warning, undeclared sharing is an error.
"""

from __future__ import annotations

import enum
import graphlib
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .gates import GateSpec


@dataclass(frozen=True)
class PrimaryInput:
    index: int


@dataclass(frozen=True)
class Constant:
    bit: int


@dataclass(frozen=True)
class GatePort:
    instance: str
    port: int


Source = Union[PrimaryInput, Constant, GatePort]


@dataclass(frozen=True)
class GateInstance:
    id: str
    gate: GateSpec
    inputs: tuple[Source, ...]


@dataclass(frozen=True)
class Netlist:
    name: str
    num_primary_inputs: int
    instances: tuple[GateInstance, ...]
    primary_outputs: tuple[Source, ...]
    metadata: dict = field(default_factory=dict, compare=False, hash=False)
    shared_ports: frozenset[GatePort] = frozenset()

    def instance(self, id: str) -> GateInstance:
        for inst in self.instances:
            if inst.id == id:
                return inst
        raise KeyError(id)

    def output_ports(self) -> list[GatePort]:
        return [GatePort(inst.id, p) for inst in self.instances for p in range(inst.gate.arity)]

    def consumers(self) -> Counter:
        """Count gate-input uses of every source."""
        return Counter(src for inst in self.instances for src in inst.inputs)


class NetlistError(ValueError):
    def __init__(self, diagnostics: Sequence["Diagnostic"]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics))


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "error" or "warning"
    message: str
    instance: str | None = None

    def __str__(self) -> str:
        return self.message


def validate(netlist: Netlist) -> list[Diagnostic]:
    """Check every structural invariant; an empty list means a clean netlist.

    Warnings (input fanout, declared port sharing) do not make a netlist
    invalid; use :func:`errors` to keep only the fatal ones.
    """
    diags: list[Diagnostic] = []
    err = lambda msg, inst=None: diags.append(Diagnostic("error", msg, inst))
    warn = lambda msg, inst=None: diags.append(Diagnostic("warning", msg, inst))

    position: dict[str, int] = {}
    for i, inst in enumerate(netlist.instances):
        if inst.id in position:
            err(f"duplicate instance id {inst.id!r}", inst.id)
        position.setdefault(inst.id, i)

    def check_source(src, where, inst_id=None, pos=None):
        if isinstance(src, PrimaryInput):
            if not 0 <= src.index < netlist.num_primary_inputs:
                err(f"{where}: primary input {src.index} out of range", inst_id)
        elif isinstance(src, Constant):
            if src.bit not in (0, 1):
                err(f"{where}: constant must be 0 or 1, got {src.bit!r}", inst_id)
        elif isinstance(src, GatePort):
            if src.instance not in position:
                err(f"{where}: dangling reference to {src.instance!r}", inst_id)
                return
            target = netlist.instances[position[src.instance]]
            if not 0 <= src.port < target.gate.arity:
                err(f"{where}: port {src.port} out of range for {src.instance!r}", inst_id)
            if pos is not None and position[src.instance] >= pos and src.instance != inst_id:
                err(f"{where}: not topologically ordered (uses later instance {src.instance!r})",
                    inst_id)
        else:
            err(f"{where}: unknown source {src!r}", inst_id)

    graph: dict[str, set[str]] = {}
    for i, inst in enumerate(netlist.instances):
        if len(inst.inputs) != inst.gate.arity:
            err(f"{inst.id}: arity mismatch, {inst.gate.name} takes {inst.gate.arity} inputs, "
                f"got {len(inst.inputs)}", inst.id)
        deps = set()
        for j, src in enumerate(inst.inputs):
            check_source(src, f"{inst.id}.in{j}", inst.id, i)
            if isinstance(src, GatePort):
                deps.add(src.instance)
        graph[inst.id] = deps
    for k, src in enumerate(netlist.primary_outputs):
        check_source(src, f"output {k}")

    try:
        tuple(graphlib.TopologicalSorter(graph).static_order())
    except graphlib.CycleError as exc:
        cycle = exc.args[1]
        err("cycle: " + " -> ".join(cycle), cycle[0])

    for src, n in sorted(netlist.consumers().items(), key=lambda kv: repr(kv[0])):
        if n < 2:
            continue
        if isinstance(src, PrimaryInput):
            warn(f"primary-input fanout {n} on input {src.index}")
        elif isinstance(src, GatePort):
            where = f"{src.instance}.out{src.port}"
            if src in netlist.shared_ports:
                warn(f"gate-output fanout {n} on shared port {where}", src.instance)
            else:
                err(f"gate-output fanout {n} on {where}", src.instance)
    for port in netlist.shared_ports:
        if port.instance not in position:
            err(f"shared port refers to unknown instance {port.instance!r}")
    return diags


def errors(diagnostics: Iterable[Diagnostic]) -> list[Diagnostic]:
    return [d for d in diagnostics if d.severity == "error"]


class NetlistBuilder:
    """Single-use helper that assembles and validates a :class:`Netlist`."""

    def __init__(self, num_inputs: int, name: str = "netlist"):
        if num_inputs < 0:
            raise ValueError("num_inputs must be non-negative")
        self.name = name
        self.num_inputs = num_inputs
        self._instances: list[GateInstance] = []
        self._ids: dict[str, GateInstance] = {}
        self._uses: Counter = Counter()
        self._shared: set[GatePort] = set()
        self._done = False

    def input(self, index: int) -> PrimaryInput:
        return PrimaryInput(index)

    def share(self, port: GatePort) -> GatePort:
        """Allow ``port`` to feed more than one gate input."""
        self._shared.add(port)
        return port

    def add_gate(self, gate: GateSpec, inputs: Sequence[Source], id: str | None = None) -> str:
        if self._done:
            raise RuntimeError("builder already finished")
        id = id if id is not None else f"g{len(self._instances)}"
        if id in self._ids:
            raise NetlistError([Diagnostic("error", f"duplicate instance id {id!r}", id)])
        inputs = tuple(inputs)
        if len(inputs) != gate.arity:
            raise NetlistError([Diagnostic(
                "error", f"{id}: arity mismatch, {gate.name} takes {gate.arity} inputs, "
                f"got {len(inputs)}", id)])
        for j, src in enumerate(inputs):
            self._check(src, f"{id}.in{j}", id)
            if isinstance(src, GatePort):
                if self._uses[src] >= 1 and src not in self._shared:
                    raise NetlistError([Diagnostic(
                        "error", f"gate-output fanout {self._uses[src] + 1} on "
                        f"{src.instance}.out{src.port}", id)])
        self._uses.update(inputs)
        inst = GateInstance(id, gate, inputs)
        self._instances.append(inst)
        self._ids[id] = inst
        return id

    def _check(self, src, where, id=None):
        problem = None
        if isinstance(src, GatePort):
            target = self._ids.get(src.instance)
            if target is None:
                problem = f"{where}: not topologically ordered (unknown instance {src.instance!r})"
            elif not 0 <= src.port < target.gate.arity:
                problem = f"{where}: port {src.port} out of range for {src.instance!r}"
        elif isinstance(src, PrimaryInput):
            if not 0 <= src.index < self.num_inputs:
                problem = f"{where}: primary input {src.index} out of range"
        elif isinstance(src, Constant):
            if src.bit not in (0, 1):
                problem = f"{where}: constant must be 0 or 1"
        else:
            problem = f"{where}: unknown source {src!r}"
        if problem:
            raise NetlistError([Diagnostic("error", problem, id)])

    def set_primary_outputs(self, sources: Sequence[Source], **metadata) -> Netlist:
        for k, src in enumerate(sources):
            self._check(src, f"output {k}")
        netlist = Netlist(
            name=self.name,
            num_primary_inputs=self.num_inputs,
            instances=tuple(self._instances),
            primary_outputs=tuple(sources),
            metadata=dict(metadata),
            shared_ports=frozenset(self._shared),
        )
        bad = errors(validate(netlist))
        if bad:
            raise NetlistError(bad)
        self._done = True
        return netlist


def build(num_inputs: int, name: str = "netlist") -> NetlistBuilder:
    return NetlistBuilder(num_inputs, name)


class PortRole(enum.Enum):
    PRIMARY = "primary"
    CONSUMED = "consumed"
    GARBAGE = "garbage"


@dataclass(frozen=True)
class OutputClassification:
    roles: dict  # GatePort -> PortRole

    def count(self, role: PortRole) -> int:
        return sum(1 for r in self.roles.values() if r is role)

    @property
    def primary(self) -> int:
        return self.count(PortRole.PRIMARY)

    @property
    def consumed(self) -> int:
        return self.count(PortRole.CONSUMED)

    @property
    def garbage(self) -> int:
        return self.count(PortRole.GARBAGE)

    def garbage_ports(self) -> list[GatePort]:
        return [p for p, r in self.roles.items() if r is PortRole.GARBAGE]


def classify_outputs(netlist: Netlist) -> OutputClassification:
    """Tag every gate output port.

    A port that is a primary output is PRIMARY (even if also consumed);
    otherwise a port read by some gate is CONSUMED; everything else is
    GARBAGE: neither a primary output nor an input to another gate.
    """
    outputs = set(netlist.primary_outputs)
    used = netlist.consumers()
    roles = {}
    for port in netlist.output_ports():
        if port in outputs:
            roles[port] = PortRole.PRIMARY
        elif used[port]:
            roles[port] = PortRole.CONSUMED
        else:
            roles[port] = PortRole.GARBAGE
    return OutputClassification(roles)
