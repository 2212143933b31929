"""Canonical JSON and DOT renderings.  Output is byte-stable: keys sorted,
members in canonical order, no timestamps."""

from __future__ import annotations

import json
from typing import Any

from .core import Partition, SetClass, SetClassError, SetSeq, Subset, Universe, bits_of

SCHEMA = "setclass/1"


def subset_json(s: Subset) -> list[str]:
    return s.labels()


def subset_key(s: Subset) -> str:
    return str(s)


def class_json(cls: SetClass) -> list[list[str]]:
    return [subset_json(s) for s in cls.members]


def universe_json(u: Universe) -> dict:
    return {"name": u.name, "points": [u.label(i) for i in range(u.size)]}


def partition_json(p: Partition) -> list[list[str]]:
    return [[p.universe.label(i) for i in bits_of(b)] for b in p.blocks]


def dumps(kind: str, payload: dict) -> str:
    doc = {"schema": SCHEMA, "kind": kind}
    doc.update(payload)
    return json.dumps(doc, sort_keys=True, ensure_ascii=False)


def to_json(value: Any) -> str:
    from .boolean_stone import StoneSpace
    from .generate import HierarchyTrace
    from .partitions import PartitionLatticeNode

    if isinstance(value, Universe):
        return dumps("universe", {"universe": universe_json(value)})
    if isinstance(value, SetClass):
        return dumps("class", {"universe": universe_json(value.universe), "members": class_json(value)})
    if isinstance(value, Partition):
        return dumps("partition", {"universe": universe_json(value.universe), "blocks": partition_json(value)})
    if isinstance(value, SetSeq):
        u = value.universe
        return dumps("sequence", {
            "universe": universe_json(u),
            "prefix": [Subset(u, m).labels() for m in value.prefix],
            "cycle": [Subset(u, m).labels() for m in value.cycle],
        })
    if isinstance(value, HierarchyTrace):
        return dumps("hierarchy", value.to_dict())
    if isinstance(value, StoneSpace):
        return dumps("stone_space", value.to_dict())
    if isinstance(value, list) and value and isinstance(value[0], PartitionLatticeNode):
        return dumps("partition_lattice", {
            "nodes": [{"partition": partition_json(n.partition), "covers": n.covers} for n in value]
        })
    raise SetClassError(f"no JSON export for {type(value).__name__}")


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _dot(name: str, nodes: list[tuple[str, str]], edges: list[tuple[str, str]], comments=()) -> str:
    lines = [f"digraph {_quote(name)} {{"]
    lines += [f"  // {c}" for c in comments]
    lines += [f"  {nid} [label={_quote(label)}];" for nid, label in nodes]
    lines += [f"  {a} -> {b};" for a, b in edges]
    lines.append("}")
    return "\n".join(lines)


def partition_label(p: Partition) -> str:
    return str(p)


def to_dot(value: Any, name: str = "G") -> str:
    from .boolean_stone import StoneSpace
    from .generate import HierarchyTrace
    from .partitions import PartitionLatticeNode

    if isinstance(value, list) and value and isinstance(value[0], PartitionLatticeNode):
        nodes = [(f"n{i}", partition_label(n.partition)) for i, n in enumerate(value)]
        # edges point from a partition to the partitions it immediately refines
        edges = [(f"n{j}", f"n{i}") for i, n in enumerate(value) for j in n.covers]
        return _dot(name, nodes, edges)
    if isinstance(value, Partition):
        u = value.universe
        nodes = [(f"b{i}", "{" + ",".join(u.label(k) for k in bits_of(b)) + "}") for i, b in enumerate(value.blocks)]
        return _dot(name, nodes, [])
    if isinstance(value, HierarchyTrace):
        # distinct classes across all stages, with Hasse edges of strict containment
        distinct: list[SetClass] = []
        tags: dict[int, list[str]] = {}
        for s in value.stages:
            for tag, cls in ((f"upper {s.level}", s.upper), (f"lower {s.level}", s.lower)):
                idx = next((i for i, c in enumerate(distinct) if c.masks == cls.masks), None)
                if idx is None:
                    idx = len(distinct)
                    distinct.append(cls)
                tags.setdefault(idx, []).append(tag)
        sets = [c.maskset for c in distinct]
        below = {i: {j for j in range(len(sets)) if j != i and sets[j] < sets[i]} for i in range(len(sets))}
        edges = []
        for i in range(len(sets)):
            for j in sorted(below[i]):
                if not any(j in below[k] for k in below[i]):
                    edges.append((f"c{j}", f"c{i}"))
        nodes = [(f"c{i}", "; ".join(tags[i]) + f" ({len(distinct[i])} sets)") for i in range(len(distinct))]
        return _dot(name, nodes, edges)
    if isinstance(value, StoneSpace):
        from .structures import atoms_masks

        u = value.ring.universe
        atoms = atoms_masks(value.ring.masks)
        nodes = []
        for i, p in enumerate(value.points):
            # each prime omits exactly one atom
            missed = [a for a in atoms if a not in p.maskset]
            nodes.append((f"p{i}", f"p{i}: omits " + ",".join(str(Subset(u, a)) for a in missed)))
        comments = [f"basis {Subset(u, m)}: " + ",".join(f"p{i}" for i in idx)
                    for m, idx in sorted(value.basis.items())]
        return _dot(name, nodes, [], comments)
    raise SetClassError(f"DOT export supports partitions, partition lattices, hierarchies and Stone spaces, "
                        f"not {type(value).__name__}")
