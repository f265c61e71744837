"""Stable on-disk formats: graph JSON / edge-list, coloring JSON, DOT export
and the audit discrepancy CSV/JSON. Everything written here reads back to an
identical in-memory value, and all output is deterministic.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Sequence

from .bounds import Discrepancy
from .graph_core import Graph, GraphError, build, edge_list


class ParseError(ValueError):
    """File could not be parsed; carries 1-based line/column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        place = ""
        if line is not None:
            place = f" (line {line}" + (f", column {column}" if column else "") + ")"
        super().__init__(message + place)


@dataclass(frozen=True)
class GraphDocument:
    n: int
    edges: tuple[tuple[int, int], ...]
    name: str | None = None

    def to_graph(self) -> Graph:
        return build(self.n, list(self.edges))

    @staticmethod
    def from_graph(G: Graph, name: str | None = None) -> "GraphDocument":
        return GraphDocument(n=G.n, edges=tuple(edge_list(G)), name=name)


def parse_graph_json(text: str) -> GraphDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ParseError('graph JSON must be an object with "n" and "edges"')
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError('"name" must be a string when present')
    n = data["n"]
    if not isinstance(n, int):
        raise ParseError('"n" must be an integer')
    edges = []
    for idx, pair in enumerate(data["edges"]):
        if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
            raise ParseError(f"edge #{idx} is not a pair: {pair!r}")
        u, v = pair
        if not (isinstance(u, int) and isinstance(v, int)):
            raise ParseError(f"edge #{idx} has non-integer endpoints: {pair!r}")
        edges.append((u, v))
    doc = GraphDocument(n=n, edges=tuple(edges), name=name)
    try:
        doc.to_graph()
    except GraphError as exc:
        raise ParseError(str(exc)) from exc
    return doc


def parse_edgelist(text: str) -> GraphDocument:
    """Plain-text format: first line "n m", then m lines "u v"."""
    lines = text.splitlines()
    meaningful = [
        (no, ln.strip()) for no, ln in enumerate(lines, start=1) if ln.strip()
    ]
    if not meaningful:
        raise ParseError("empty edge-list file", 1)
    head_no, head = meaningful[0]
    parts = head.split()
    if len(parts) != 2:
        raise ParseError('header must be "n m"', head_no)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError('header must be "n m" with integers', head_no) from None
    body = meaningful[1:]
    if len(body) != m:
        raise ParseError(
            f"header declares {m} edges but {len(body)} edge lines found", head_no
        )
    edges = []
    for no, ln in body:
        toks = ln.split()
        if len(toks) != 2:
            raise ParseError(f'edge line must be "u v", got {ln!r}', no)
        try:
            edges.append((int(toks[0]), int(toks[1])))
        except ValueError:
            raise ParseError(f"non-integer vertex id in {ln!r}", no) from None
    doc = GraphDocument(n=n, edges=tuple(edges), name=None)
    try:
        doc.to_graph()
    except GraphError as exc:
        raise ParseError(str(exc)) from exc
    return doc


def parse_graph(text: str) -> GraphDocument:
    """Sniff JSON (leading '{') versus plain edge list."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_graph_json(text)
    return parse_edgelist(text)


def load_graph(path: str) -> GraphDocument:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def graph_to_json(doc: GraphDocument) -> str:
    payload: dict = {"n": doc.n, "edges": [list(e) for e in sorted(doc.edges)]}
    if doc.name is not None:
        payload["name"] = doc.name
    return json.dumps(payload, sort_keys=True, separators=(", ", ": ")) + "\n"


def graph_to_edgelist(doc: GraphDocument) -> str:
    out = [f"{doc.n} {len(doc.edges)}"]
    out.extend(f"{u} {v}" for u, v in sorted(doc.edges))
    return "\n".join(out) + "\n"


def graph_to_dot(doc: GraphDocument, colors: Sequence[int] | None = None) -> str:
    """Write-only DOT export; color indices become vertex labels."""
    name = doc.name or "G"
    lines = [f'graph "{name}" {{']
    for v in range(doc.n):
        if colors is not None:
            lines.append(f'  {v} [label="{v}:c{colors[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in sorted(doc.edges):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_graph(path: str, doc: GraphDocument, fmt: str = "json") -> None:
    if fmt == "json":
        text = graph_to_json(doc)
    elif fmt == "edgelist":
        text = graph_to_edgelist(doc)
    elif fmt == "dot":
        text = graph_to_dot(doc)
    else:
        raise ValueError(f"unknown graph format {fmt!r}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def parse_coloring(text: str) -> tuple[int, tuple[int, ...]]:
    """Coloring JSON object: {"i": budget, "colors": [c_0, ..., c_{n-1}]}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    if not isinstance(data, dict) or "i" not in data or "colors" not in data:
        raise ParseError('coloring JSON must be an object with "i" and "colors"')
    i = data["i"]
    if not isinstance(i, int) or i < 1:
        raise ParseError('"i" must be a positive integer')
    colors = data["colors"]
    if not isinstance(colors, list) or not all(isinstance(c, int) for c in colors):
        raise ParseError('"colors" must be a list of integers')
    return i, tuple(colors)


def load_coloring(path: str) -> tuple[int, tuple[int, ...]]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_coloring(fh.read())


def coloring_to_json(i: int, colors: Sequence[int]) -> str:
    payload = {"colors": list(colors), "i": i}
    return json.dumps(payload, sort_keys=True, separators=(", ", ": ")) + "\n"


def write_coloring(path: str, i: int, colors: Sequence[int]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(coloring_to_json(i, colors))


AUDIT_COLUMNS = ("claim", "graph", "n", "i", "claimed", "oracle", "direction")


def discrepancies_to_csv(rows: Sequence[Discrepancy]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(AUDIT_COLUMNS)
    for row in rows:
        writer.writerow(
            [row.claim, row.graph, row.n, row.i, row.claimed, row.oracle_value, row.direction]
        )
    return buf.getvalue()


def discrepancies_to_json(rows: Sequence[Discrepancy]) -> str:
    payload = [
        {
            "claim": row.claim,
            "graph": row.graph,
            "n": row.n,
            "i": row.i,
            "claimed": row.claimed,
            "oracle": row.oracle_value,
            "direction": row.direction,
        }
        for row in rows
    ]
    return json.dumps(payload, sort_keys=True, separators=(", ", ": ")) + "\n"
