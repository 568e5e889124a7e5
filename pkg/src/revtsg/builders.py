"""Circuit generators: single-TSG configurations and N-bit adders.

Adder layout (stable): inputs ``A[0..n)``, ``B[0..n)``, ``Cin`` and outputs
``Sum[0..n)``, ``Cout``, each bus least significant bit first.

Instance ids are meaningful: ``fa{i}`` is the full adder of bit ``i``,
``and{k}.{j}`` the ``j``-th Fredkin AND of block ``k`` and ``skip{k}`` the
skip multiplexer of block ``k``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .gates import FREDKIN, TSG
from .netlist import (Constant, GatePort, Netlist, NetlistBuilder, PrimaryInput,
                      Source)

MAX_ADDER_WIDTH = 1024

# TSG output lines
P, Q, R, S = range(4)


class Role(enum.Enum):
    NOT = ("NOT", ("a",), {"y": lambda a: 1 - a})
    XOR = ("XOR", ("a", "b"), {"y": lambda a, b: a ^ b})
    NOR = ("NOR", ("a", "b"), {"y": lambda a, b: 1 - (a | b)})
    FULL_ADDER = ("FULL_ADDER", ("a", "b", "cin"), {
        "sum": lambda a, b, c: a ^ b ^ c,
        "cout": lambda a, b, c: (a & b) | (c & (a ^ b)),
    })

    def __init__(self, label, operands, functions):
        self.operands = operands
        self.functions = functions

    def __repr__(self) -> str:
        return f"Role.{self.name}"


@dataclass(frozen=True)
class TsgConfig:
    """A single TSG specialised to a smaller function.

    ``lines[i]`` is either an operand name or a constant bit tied to input
    line ``i``; ``outputs`` maps each function output to a TSG output line.
    """

    role: Role
    lines: tuple
    outputs: dict

    @property
    def constants(self) -> dict:
        return {i: v for i, v in enumerate(self.lines) if isinstance(v, int)}

    @property
    def garbage(self) -> tuple[int, ...]:
        used = set(self.outputs.values())
        return tuple(i for i in range(TSG.arity) if i not in used)

    def netlist(self) -> Netlist:
        """Single-TSG netlist with the operands as primary inputs."""
        ops = self.role.operands
        b = NetlistBuilder(len(ops), name=f"tsg-{self.role.name.lower()}")
        inputs = [PrimaryInput(ops.index(v)) if isinstance(v, str) else Constant(v)
                  for v in self.lines]
        g = b.add_gate(TSG, inputs, id="tsg")
        return b.set_primary_outputs([GatePort(g, self.outputs[k]) for k in self.role.functions],
                                     architecture=f"tsg-{self.role.name.lower()}")


def _realises(lines, outputs: dict, role: Role) -> bool:
    for values in itertools.product((0, 1), repeat=len(role.operands)):
        env = dict(zip(role.operands, values))
        out = TSG(*(env[v] if isinstance(v, str) else v for v in lines))
        for name, fn in role.functions.items():
            if out[outputs[name]] != fn(*values):
                return False
    return True


def tsg_configs(role: Role) -> Iterator[TsgConfig]:
    """Every wiring of one TSG that realises ``role``.

    Each operand goes to exactly one input line, the remaining lines are tied
    to constants, and each function output is read from a distinct line.
    """
    k = len(role.operands)
    names = list(role.functions)
    for placement in itertools.permutations(range(4), k):
        free = [i for i in range(4) if i not in placement]
        for consts in itertools.product((0, 1), repeat=len(free)):
            lines = [None] * 4
            for op, line in zip(role.operands, placement):
                lines[line] = op
            for line, c in zip(free, consts):
                lines[line] = c
            for outs in itertools.permutations(range(4), len(names)):
                outputs = dict(zip(names, outs))
                if _realises(lines, outputs, role):
                    yield TsgConfig(role, tuple(lines), outputs)


def tsg_config(role: Role) -> TsgConfig:
    """The first wiring found by :func:`tsg_configs`, preferring the
    identity operand order and zero-valued constants."""
    for cfg in tsg_configs(role):
        return cfg
    raise LookupError(f"no single-TSG wiring realises {role.name}")


def _full_adder_stage(builder: NetlistBuilder, a: Source, b: Source, cin: Source,
                      id: str) -> str:
    # A, B, 0, Cin -> P=A, Q=A^B, R=sum, S=carry
    return builder.add_gate(TSG, [a, b, Constant(0), cin], id=id)


def build_full_adder() -> Netlist:
    b = NetlistBuilder(3, name="full-adder")
    g = _full_adder_stage(b, PrimaryInput(0), PrimaryInput(1), PrimaryInput(2), "fa0")
    return b.set_primary_outputs([GatePort(g, R), GatePort(g, S)],
                                 width=1, architecture="full-adder")


def _check_width(n: int):
    if not isinstance(n, int) or not 1 <= n <= MAX_ADDER_WIDTH:
        raise ValueError(f"width must be an integer in 1..{MAX_ADDER_WIDTH}, got {n!r}")


def build_ripple_carry(n: int) -> Netlist:
    _check_width(n)
    b = NetlistBuilder(2 * n + 1, name=f"ripple-{n}")
    carry: Source = PrimaryInput(2 * n)
    sums = []
    for i in range(n):
        g = _full_adder_stage(b, PrimaryInput(i), PrimaryInput(n + i), carry, f"fa{i}")
        sums.append(GatePort(g, R))
        carry = GatePort(g, S)
    return b.set_primary_outputs(sums + [carry], width=n, architecture="ripple")


def fredkin_and_tree(builder: NetlistBuilder, signals: Sequence[Source],
                     prefix: str = "and") -> tuple[list[str], Source]:
    """AND ``signals`` with a left-to-right chain of ``len(signals) - 1``
    Fredkin gates, each with a constant-0 third line."""
    if len(signals) < 2:
        raise ValueError("an AND chain needs at least two signals")
    ids = []
    acc = signals[0]
    for j, s in enumerate(signals[1:]):
        g = builder.add_gate(FREDKIN, [acc, s, Constant(0)], id=f"{prefix}.{j}")
        ids.append(g)
        acc = GatePort(g, 2)
    return ids, acc


def build_carry_skip(n: int, block: int = 4) -> Netlist:
    """Carry-skip adder of ``n // block`` blocks.

    Each block is a ripple of TSG full adders whose Q lines (A xor B) feed a
    Fredkin AND chain giving the block propagate P.  A Fredkin mux with
    control P, second line C_last and third line Cin outputs Cin when P=1 and
    the ripple carry otherwise.  The block carry-in therefore feeds two
    gates; for blocks after the first it is a declared shared port.
    """
    _check_width(n)
    if block < 2:
        raise ValueError(f"block must be at least 2, got {block}")
    if n % block:
        raise ValueError(f"block must divide width (width {n}, block {block})")
    b = NetlistBuilder(2 * n + 1, name=f"skip-{n}-b{block}")
    block_cin: Source = PrimaryInput(2 * n)
    sums = []
    for k in range(n // block):
        carry = block_cin
        props = []
        for i in range(k * block, (k + 1) * block):
            g = _full_adder_stage(b, PrimaryInput(i), PrimaryInput(n + i), carry, f"fa{i}")
            sums.append(GatePort(g, R))
            props.append(GatePort(g, Q))
            carry = GatePort(g, S)
        _, propagate = fredkin_and_tree(b, props, prefix=f"and{k}")
        mux = b.add_gate(FREDKIN, [propagate, carry, block_cin], id=f"skip{k}")
        block_cin = GatePort(mux, 1)
        if k < n // block - 1:
            b.share(block_cin)
    return b.set_primary_outputs(sums + [block_cin], width=n, architecture="carry-skip",
                                 block=block)


def skip_instances(netlist: Netlist) -> list[str]:
    return [inst.id for inst in netlist.instances if inst.id.startswith("skip")]

