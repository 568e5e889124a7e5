# Ripple-carry and carry-skip adders built from TSG and Fredkin gates
#
# Builds both adders, adds a few numbers, checks them exhaustively against
# integer addition, and shows the gate/garbage costs growing as N and 2N
# (ripple) or 2N and 3N (carry skip).

from revtsg import build_carry_skip, build_ripple_carry, metrics, simulate, verify_adder


def add(netlist, width, a, b, cin=0):
    bits = [(a >> i) & 1 for i in range(width)] + [(b >> i) & 1 for i in range(width)] + [cin]
    out = simulate(netlist, bits).outputs
    return sum(bit << i for i, bit in enumerate(out))


ripple = build_ripple_carry(8)
skip = build_carry_skip(8, block=4)
for a, b in [(5, 6), (255, 1), (200, 100)]:
    print(f"{a} + {b}: ripple={add(ripple, 8, a, b)} skip={add(skip, 8, a, b)}")

print("\nexhaustive ripple-8:", verify_adder(ripple, 8).summary())
print("exhaustive skip-8:  ", verify_adder(skip, 8).summary())
print("random ripple-64:   ", verify_adder(build_ripple_carry(64), 64, "random",
                                           trials=100_000, seed=42).summary())

print("\n  N  ripple(gates, garbage)  skip(gates, garbage)")
for n in (4, 8, 16, 32):
    r, s = metrics(build_ripple_carry(n)), metrics(build_carry_skip(n, 4))
    print(f"{n:3d}  {r.gate_count:6d} {r.garbage_count:6d}        {s.gate_count:6d} {s.garbage_count:6d}")
