import pytest

from revtsg.builders import build_carry_skip, build_full_adder, build_ripple_carry
from revtsg.metrics import REFERENCE_ROWS, comparison_report, metrics


@pytest.mark.parametrize("netlist, gates, garbage, constants", [
    (build_full_adder(), 1, 2, 1),
    (build_ripple_carry(16), 16, 32, 16),
    (build_carry_skip(16, 4), 32, 48, 16 + 12),
])
def test_metrics(netlist, gates, garbage, constants):
    m = metrics(netlist)
    assert (m.gate_count, m.garbage_count, m.constant_input_count) == (gates, garbage, constants)


def test_fanout_metric():
    assert metrics(build_ripple_carry(4)).fanout_count == 0
    # block carry-in of each of the 4 blocks feeds two gates
    assert metrics(build_carry_skip(16, 4)).fanout_count == 4


def test_full_adder_report():
    rep = comparison_report("full_adder")
    assert rep.rows == [("Proposed Circuit", 1, 2), ("Existing Circuit [6]", 3, 3),
                        ("Existing Circuit [7,8]", 3, 2), ("Existing Circuit [9]", 5, 5),
                        ("Existing Circuit [14]", 2, 2)]
    assert rep.ok


def test_ripple_report():
    rep = comparison_report("ripple", 4)
    assert rep.rows[0] == ("Proposed Circuit", 4, 8)
    assert ("Existing Circuit [9]", 20, 20) in rep.rows
    assert rep.formulas[0] == ("Proposed Circuit", "N", "2N")


def test_skip_report():
    rep = comparison_report("skip", 4)
    assert rep.rows == [("Proposed Circuit", 8, 12), ("Existing Circuit [9]", 24, 48)]
    assert rep.formulas[1] == ("Existing Circuit [9]", "6N", "12N")


def test_discrepancy_flagged():
    rep = comparison_report("ripple", 4, netlist=build_ripple_carry(5))
    assert not rep.ok
    assert len(rep.discrepancies) == 2
    assert "DISCREPANCY" in rep.render_text()


def test_reference_rows_are_stored_not_measured():
    # competitor rows do not move when our measured circuit changes
    a = comparison_report("ripple", 4)
    b = comparison_report("ripple", 4, netlist=build_ripple_carry(5))
    assert a.rows[1:] == b.rows[1:]
    assert len(REFERENCE_ROWS["skip"]) == 2


def test_csv():
    text = comparison_report("skip", 8).to_csv()
    assert text.splitlines()[1] == "Proposed Circuit,16,24,2N,3N"


def test_unknown_kind():
    with pytest.raises(ValueError):
        comparison_report("lookahead", 4)
