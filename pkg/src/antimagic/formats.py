"""Edge-list / JSON input, labeling documents and DOT output."""

from __future__ import annotations

import json
from typing import Any

from antimagic.graph import OrientedLabeling, Tree, TreeError, vertex_sums


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _intern(names: dict[str, int], order: list[str], name: str) -> int:
    if name not in names:
        names[name] = len(order)
        order.append(name)
    return names[name]


def _check_structure(n: int, edges: list[tuple[int, int]], order: list[str], lines: list[int]) -> None:
    parent = list(range(n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for (u, v), line in zip(edges, lines):
        if u == v:
            raise TreeError(f"line {line}: loop at {order[u]!r}")
        ru, rv = find(u), find(v)
        if ru == rv:
            raise TreeError(f"line {line}: edge {order[u]!r}-{order[v]!r} closes a cycle")
        parent[ru] = rv
    comps: dict[int, list[str]] = {}
    for v in range(n):
        comps.setdefault(find(v), []).append(order[v])
    if len(comps) > 1:
        groups = sorted(comps.values(), key=len)
        raise TreeError(f"graph is disconnected; {len(groups)} components, smallest is {groups[0]}")


def parse_tree(text: str) -> tuple[Tree, list[str]]:
    """Parse an edge list or a JSON ``{"vertices": [...], "edges": [[u, v], ...]}``.

    Edge-list lines hold ``u v``; a lone name declares an isolated vertex,
    ``#`` starts a comment. Names map to indices in first-appearance order.
    """
    if text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno) from exc
        return tree_from_document(doc)
    names: dict[str, int] = {}
    order: list[str] = []
    edges, lines = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        fields = raw.split("#", 1)[0].split()
        if not fields:
            continue
        if len(fields) == 1:
            _intern(names, order, fields[0])
        elif len(fields) == 2:
            edges.append((_intern(names, order, fields[0]), _intern(names, order, fields[1])))
            lines.append(lineno)
        else:
            raise ParseError(f"expected 'u v', got {len(fields)} fields", lineno)
    if not order:
        raise ParseError("no vertices")
    _check_structure(len(order), edges, order, lines)
    return Tree(len(order), edges), order


def tree_from_document(doc: dict[str, Any]) -> tuple[Tree, list[str]]:
    if not isinstance(doc, dict) or "edges" not in doc:
        raise ParseError("document needs an 'edges' list")
    names: dict[str, int] = {}
    order: list[str] = []
    for v in doc.get("vertices", []):
        _intern(names, order, str(v))
    edges = []
    for e in doc["edges"]:
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise ParseError(f"edge {e!r} is not a pair")
        edges.append((_intern(names, order, str(e[0])), _intern(names, order, str(e[1]))))
    if not order:
        raise ParseError("no vertices")
    _check_structure(len(order), edges, order, list(range(1, len(edges) + 1)))
    return Tree(len(order), edges), order


def tree_document(t: Tree, names: list[str] | None = None) -> dict[str, Any]:
    names = names or [str(v) for v in range(t.n)]
    return {"vertices": list(names), "edges": [[names[u], names[v]] for u, v in t.edges]}


def emit_labeling(d: OrientedLabeling, report=None, names: list[str] | None = None) -> dict[str, Any]:
    names = names or [str(v) for v in range(d.n)]
    sums = vertex_sums(d)
    doc: dict[str, Any] = {
        "vertices": list(names),
        "arcs": [{"tail": names[a.tail], "head": names[a.head], "label": a.label} for a in d.arcs],
        "vertex_sums": {names[v]: sums[v] for v in range(d.n)},
    }
    if report is not None:
        doc["verdicts"] = report.to_dict()
    return doc


def parse_labeling(source: str | dict[str, Any]) -> tuple[OrientedLabeling, list[str]]:
    if isinstance(source, str):
        try:
            doc = json.loads(source)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno) from exc
    else:
        doc = source
    if not isinstance(doc, dict) or "arcs" not in doc:
        raise ParseError("labeling document needs an 'arcs' list")
    names: dict[str, int] = {}
    order: list[str] = []
    for v in doc.get("vertices", []):
        _intern(names, order, str(v))
    arcs = []
    for i, a in enumerate(doc["arcs"]):
        try:
            tail, head, label = str(a["tail"]), str(a["head"]), int(a["label"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"arc #{i} is malformed: {a!r}") from exc
        arcs.append((_intern(names, order, tail), _intern(names, order, head), label))
    return OrientedLabeling(len(order), arcs), order


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2) + "\n"


def emit_dot(d: OrientedLabeling, names: list[str] | None = None) -> str:
    names = names or [str(v) for v in range(d.n)]
    sums = vertex_sums(d)
    out = ["digraph antimagic {"]
    for v in range(d.n):
        out.append(f'  "{names[v]}" [label="{names[v]}\\ns={sums[v]}"];')
    for a in d.arcs:
        out.append(f'  "{names[a.tail]}" -> "{names[a.head]}" [label="{a.label}"];')
    out.append("}")
    return "\n".join(out) + "\n"
