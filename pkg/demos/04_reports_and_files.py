# Cost comparison tables and netlist files
#
# Prints the full adder, ripple-carry and carry-skip comparison tables, then
# writes a netlist as JSON and Graphviz DOT.  Render the DOT with
# ``dot -Tsvg skip-8.dot -o skip-8.svg`` if Graphviz is installed.

import tempfile
from pathlib import Path

from revtsg import build_carry_skip, comparison_report
from revtsg import serialize

for kind, n in [("full_adder", 1), ("ripple", 8), ("skip", 8)]:
    print(comparison_report(kind, n).render_text(), end="\n\n")

out = Path(tempfile.mkdtemp())
nl = build_carry_skip(8, 4)
serialize.save(nl, out / "skip-8.json")
(out / "skip-8.dot").write_text(serialize.to_dot(nl))
print("wrote", out / "skip-8.json", "and", out / "skip-8.dot")
print("reloaded netlist identical:", serialize.load(out / "skip-8.json") == nl)
