"""JSON netlist documents and Graphviz DOT export.

Document layout (schema_version 1)::

    {
      "schema_version": 1,
      "name": "ripple-4",
      "num_primary_inputs": 9,
      "gates": [
        {"id": "fa0", "gate": "TSG",
         "inputs": [{"input": 0}, {"input": 4}, {"const": 0}, {"input": 8}]},
        ...
      ],
      "primary_outputs": [{"gate": "fa0", "port": 2}, ...],
      "shared_ports": [{"gate": "skip0", "port": 1}],
      "metadata": {"width": 4, "architecture": "ripple", "block": null},
      "custom_gates": {"NAME": {"arity": 1, "table": [1, 0]}}
    }

A source is ``{"input": i}``, ``{"const": b}`` or ``{"gate": id, "port": p}``.
``custom_gates`` only appears for netlists using gates outside the standard
library and is rejected on load unless explicitly allowed.
"""

from __future__ import annotations

import json
from typing import Any

from .gates import STANDARD_GATES, GateSpec
from .netlist import (Constant, GateInstance, GatePort, Netlist, NetlistError,
                      PrimaryInput, Source, classify_outputs, errors, validate)

SCHEMA_VERSION = 1


class DocumentError(ValueError):
    pass


def _source_doc(src: Source) -> dict:
    if isinstance(src, PrimaryInput):
        return {"input": src.index}
    if isinstance(src, Constant):
        return {"const": src.bit}
    return {"gate": src.instance, "port": src.port}


def _source(doc: Any) -> Source:
    if not isinstance(doc, dict):
        raise DocumentError(f"source must be an object, got {doc!r}")
    if set(doc) == {"input"}:
        return PrimaryInput(int(doc["input"]))
    if set(doc) == {"const"}:
        return Constant(int(doc["const"]))
    if set(doc) == {"gate", "port"}:
        return GatePort(str(doc["gate"]), int(doc["port"]))
    raise DocumentError(f"unrecognised source {doc!r}")


def to_document(netlist: Netlist) -> dict:
    custom = {}
    for inst in netlist.instances:
        if STANDARD_GATES.get(inst.gate.name) != inst.gate:
            custom[inst.gate.name] = {"arity": inst.gate.arity, "table": list(inst.gate.table)}
    meta = {"width": None, "architecture": None, "block": None}
    meta.update(netlist.metadata)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "name": netlist.name,
        "num_primary_inputs": netlist.num_primary_inputs,
        "gates": [{"id": inst.id, "gate": inst.gate.name,
                   "inputs": [_source_doc(s) for s in inst.inputs]}
                  for inst in netlist.instances],
        "primary_outputs": [_source_doc(s) for s in netlist.primary_outputs],
        "shared_ports": [_source_doc(p) for p in
                         sorted(netlist.shared_ports, key=lambda p: (p.instance, p.port))],
        "metadata": meta,
    }
    if custom:
        doc["custom_gates"] = custom
    return doc


def from_document(doc: dict, allow_custom_gates: bool = False) -> Netlist:
    try:
        version = doc["schema_version"]
        if version != SCHEMA_VERSION:
            raise DocumentError(f"unsupported schema_version {version!r}")
        library = dict(STANDARD_GATES)
        custom = doc.get("custom_gates") or {}
        if custom and not allow_custom_gates:
            raise DocumentError("document defines custom gates; loading them must be allowed")
        for name, spec in custom.items():
            if name in STANDARD_GATES:
                raise DocumentError(f"custom gate may not redefine {name}")
            library[name] = GateSpec(name, int(spec["arity"]), tuple(spec["table"]))
        instances = []
        for g in doc["gates"]:
            if g["gate"] not in library:
                raise DocumentError(f"unknown gate {g['gate']!r} in instance {g['id']!r}")
            instances.append(GateInstance(str(g["id"]), library[g["gate"]],
                                          tuple(_source(s) for s in g["inputs"])))
        shared = []
        for s in doc.get("shared_ports", []):
            port = _source(s)
            if not isinstance(port, GatePort):
                raise DocumentError("shared_ports entries must be gate ports")
            shared.append(port)
        meta = {k: v for k, v in (doc.get("metadata") or {}).items() if v is not None}
        netlist = Netlist(
            name=str(doc["name"]),
            num_primary_inputs=int(doc["num_primary_inputs"]),
            instances=tuple(instances),
            primary_outputs=tuple(_source(s) for s in doc["primary_outputs"]),
            metadata=meta,
            shared_ports=frozenset(shared),
        )
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed netlist document: {exc!r}") from exc
    bad = errors(validate(netlist))
    if bad:
        raise NetlistError(bad)
    return netlist


def dumps(netlist: Netlist) -> str:
    return json.dumps(to_document(netlist), indent=2) + "\n"


def loads(text: str, allow_custom_gates: bool = False) -> Netlist:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("netlist document must be a JSON object")
    return from_document(doc, allow_custom_gates)


def save(netlist: Netlist, path) -> None:
    with open(path, "w") as f:
        f.write(dumps(netlist))


def load(path, allow_custom_gates: bool = False) -> Netlist:
    with open(path) as f:
        return loads(f.read(), allow_custom_gates)


def to_dot(netlist: Netlist) -> str:
    """Graphviz description: gates as nodes, wires as edges.

    Garbage ports get a dashed red edge into a small point node.
    """
    roles = classify_outputs(netlist)
    out = [f'digraph "{netlist.name}" {{', "  rankdir=LR;",
           "  node [fontname=Helvetica];"]
    used_inputs = sorted({s.index for inst in netlist.instances for s in inst.inputs
                          if isinstance(s, PrimaryInput)}
                         | {s.index for s in netlist.primary_outputs if isinstance(s, PrimaryInput)})
    for i in used_inputs:
        out.append(f'  in{i} [shape=circle, label="in{i}"];')
    for inst in netlist.instances:
        out.append(f'  "{inst.id}" [shape=box, label="{inst.id}\\n{inst.gate.name}"];')
    for k in range(len(netlist.primary_outputs)):
        out.append(f'  out{k} [shape=doublecircle, label="out{k}"];')

    const_id = 0

    def node(src):
        nonlocal const_id
        if isinstance(src, PrimaryInput):
            return f"in{src.index}", ""
        if isinstance(src, Constant):
            name = f"c{const_id}"
            const_id += 1
            out.append(f'  {name} [shape=plaintext, label="{src.bit}"];')
            return name, ""
        return f'"{src.instance}"', f'taillabel="{src.port}"'

    for inst in netlist.instances:
        for j, src in enumerate(inst.inputs):
            tail, attr = node(src)
            attrs = ", ".join(a for a in (attr, f'headlabel="{j}"') if a)
            out.append(f'  {tail} -> "{inst.id}" [{attrs}];')
    for k, src in enumerate(netlist.primary_outputs):
        tail, attr = node(src)
        out.append(f"  {tail} -> out{k}" + (f" [{attr}]" if attr else "") + ";")
    for n, port in enumerate(roles.garbage_ports()):
        out.append(f'  g{n} [shape=point, color=red];')
        out.append(f'  "{port.instance}" -> g{n} [taillabel="{port.port}", style=dashed, '
                   f'color=red];')
    out.append("}")
    return "\n".join(out) + "\n"
