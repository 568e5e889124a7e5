# The TSG gate as a permutation of 4-bit patterns
#
# Prints the gate's truth table, confirms it is reversible, and searches for
# single-gate wirings that realise NOT, XOR, NOR and a full adder.

from revtsg import Role, TSG, FREDKIN, is_bijective, tsg_configs
from revtsg.gates import printed_rows

print("A B C D | P Q R S")
for inputs, outputs in printed_rows(TSG):
    print(" ".join(map(str, inputs)), "|", " ".join(map(str, outputs)))

print("\nTSG reversible:", is_bijective(TSG))
print("Fredkin reversible:", is_bijective(FREDKIN))

# Inverting the gate recovers the input from the output
inverse = TSG.inverse()
print("TSG(1,0,1,1) =", TSG(1, 0, 1, 1), "-> inverse gives", inverse(*TSG(1, 0, 1, 1)))

# Every way to wire one TSG as each function; constants are ints, operands names
for role in Role:
    configs = list(tsg_configs(role))
    first = configs[0]
    print(f"\n{role.name}: {len(configs)} wirings, e.g. lines={first.lines} "
          f"outputs={first.outputs} garbage lines={first.garbage}")
