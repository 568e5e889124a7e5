# Inside a carry-skip block
#
# When every bit of a block propagates, the Fredkin skip multiplexer hands
# the block carry-in straight to the carry-out.  This script lists the block
# propagate signal, the ripple carry and the multiplexer output.

from revtsg import build_carry_skip, simulate
from revtsg.netlist import GatePort
from revtsg.simulator import probe_skip_mux

nl = build_carry_skip(4, block=4)
for inst in nl.instances:
    print(f"{inst.id:7s} {inst.gate.name:8s} inputs={inst.inputs}")

print("\n a  b cin | P  C4  Cout")
for a, b, cin in [(15, 0, 1), (15, 0, 0), (10, 5, 1), (3, 3, 1), (9, 9, 0)]:
    bits = [(a >> i) & 1 for i in range(4)] + [(b >> i) & 1 for i in range(4)] + [cin]
    ports = simulate(nl, bits).ports
    print(f"{a:2d} {b:2d}  {cin}  | {ports[GatePort('and0.2', 2)]}  "
          f"{ports[GatePort('fa3', 3)]}   {ports[GatePort('skip0', 1)]}")

print("\n", probe_skip_mux(nl, "skip0"))
