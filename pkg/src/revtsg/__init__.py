"""Reversible adders built from the 4x4 TSG gate and Fredkin gates."""

from .builders import (Role, TsgConfig, build_carry_skip, build_full_adder,
                       build_ripple_carry, fredkin_and_tree, tsg_config, tsg_configs)
from .gates import (FREDKIN, TSG, BitPattern, GateError, GateSpec, eval_gate,
                    fredkin_table, gate_from_table, is_bijective, tsg_table)
from .metrics import Metrics, comparison_report, metrics
from .netlist import (Constant, GateInstance, GatePort, Netlist, NetlistBuilder,
                      NetlistError, PrimaryInput, build, classify_outputs, validate)
from .simulator import (VerificationReport, is_bijective_netlist, simulate,
                        truth_table, verify_adder)

__version__ = "0.1.0"
