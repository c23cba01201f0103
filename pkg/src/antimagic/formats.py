"""Text and JSON file formats for graphs and labelings, plus DOT export.

Graph text::

    p <vertex_count>
    e <u> <v>
    ...

Lines starting with ``c`` are comments.  ``c role <u> <name>`` comments carry
vertex roles (``v``, ``v3``, ``x``, ``y``); readers that ignore them still get
the same graph.

Labeling text::

    labeling <edge_count>
    <u> <v> <label>
    ...

Labeling JSON: ``{"edges": [{"u": 1, "v": 2, "label": 1}, ...]}``.
"""

from __future__ import annotations

import json

import numpy as np

from .graph import Graph, GraphError, Role
from .labeling import EdgeLabeling, LabelingError, validate, weight_vector


class ParseError(ValueError):
    pass


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line:
            yield lineno, line


def write_graph(g: Graph) -> str:
    out = [f"p {g.vertex_count}"]
    if g.roles is not None:
        for u, r in enumerate(g.roles, start=1):
            out.append(f"c role {u} {r}")
    out.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def read_graph(text: str) -> Graph:
    count = None
    edges = []
    roles = {}
    for lineno, line in _lines(text):
        tok = line.split()
        if tok[0] == "c":
            if len(tok) == 4 and tok[1] == "role":
                try:
                    roles[int(tok[2])] = Role.parse(tok[3])
                except (ValueError, GraphError) as exc:
                    raise ParseError(f"line {lineno}: {exc}") from exc
            continue
        try:
            if tok[0] == "p" and len(tok) == 2:
                if count is not None:
                    raise ParseError(f"line {lineno}: second 'p' line")
                count = int(tok[1])
            elif tok[0] == "e" and len(tok) == 3:
                edges.append((int(tok[1]), int(tok[2])))
            else:
                raise ParseError(f"line {lineno}: cannot parse {line!r}")
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"line {lineno}: {exc}") from exc
        if count is None:
            raise ParseError(f"line {lineno}: edge before the 'p' line")
    if count is None:
        raise ParseError("missing 'p <vertex_count>' line")
    role_list = None
    if roles:
        if sorted(roles) != list(range(1, count + 1)):
            raise ParseError("role comments must cover every vertex exactly once")
        role_list = [roles[u] for u in range(1, count + 1)]
    try:
        return Graph(count, edges, role_list)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def labeling_records(g: Graph, f) -> list[dict]:
    labels = validate(g, f)
    return [{"u": u, "v": v, "label": int(lab)} for (u, v), lab in zip(g.edges, labels)]


def write_labeling(g: Graph, f, fmt: str = "text") -> str:
    records = labeling_records(g, f)
    if fmt == "json":
        return json.dumps({"edges": records}, indent=1) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    out = [f"labeling {len(records)}"]
    out.extend(f"{r['u']} {r['v']} {r['label']}" for r in records)
    return "\n".join(out) + "\n"


def _parse_labeling_records(text: str) -> list[tuple[int, int, int]]:
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
            return [(int(r["u"]), int(r["v"]), int(r["label"])) for r in data["edges"]]
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"bad JSON labeling: {exc}") from exc
    declared = None
    records = []
    for lineno, line in _lines(text):
        tok = line.split()
        if tok[0] == "c":
            continue
        try:
            if tok[0] == "labeling" and len(tok) == 2 and declared is None:
                declared = int(tok[1])
            elif len(tok) == 3 and declared is not None:
                records.append(tuple(int(t) for t in tok))
            else:
                raise ParseError(f"line {lineno}: cannot parse {line!r}")
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"line {lineno}: {exc}") from exc
    if declared is None:
        raise ParseError("missing 'labeling <edge_count>' header")
    if declared != len(records):
        raise ParseError(f"header declares {declared} edges, found {len(records)}")
    return records


def read_labeling(text: str, graph: Graph | None = None) -> tuple[Graph, EdgeLabeling]:
    """Parse a labeling in either format.

    With ``graph`` the records must cover exactly its edges; without it the
    graph is rebuilt from the records.  Raises LabelingError if the labels
    are not a bijection onto 1..|E|.
    """
    records = _parse_labeling_records(text)
    if graph is None:
        top = max((max(u, v) for u, v, _ in records), default=1)
        try:
            graph = Graph(top, [(u, v) for u, v, _ in records])
        except GraphError as exc:
            raise ParseError(str(exc)) from exc
    if len(records) != graph.edge_count:
        raise ParseError(f"labeling has {len(records)} records, graph has {graph.edge_count} edges")
    labels = [0] * graph.edge_count
    seen = set()
    for u, v, lab in records:
        key = (min(u, v), max(u, v))
        k = graph.edge_index.get(key)
        if k is None:
            raise ParseError(f"{{{u}, {v}}} is not an edge of the graph")
        if k in seen:
            raise ParseError(f"edge {{{u}, {v}}} listed twice")
        seen.add(k)
        labels[k] = lab
    f = EdgeLabeling(labels)
    validate(graph, f)
    return graph, f


def _vertex_name(g: Graph, u: int) -> str:
    return str(g.roles[u - 1]) if g.roles is not None else str(u)


def export_dot(g: Graph, labeling=None, weights=None) -> str:
    """DOT text; edges carry labels and vertices their weights when known."""
    if labeling is not None:
        validate(g, labeling)
        if weights is None:
            weights = weight_vector(g, labeling)
    if weights is not None:
        weights = np.asarray(weights).tolist()
        if len(weights) != g.vertex_count:
            raise LabelingError(f"{len(weights)} weights for {g.vertex_count} vertices")
    out = ["graph G {"]
    for u in range(1, g.vertex_count + 1):
        name = _vertex_name(g, u)
        if weights is not None:
            out.append(f'  {u} [label="{name}: {weights[u - 1]}"];')
        else:
            out.append(f'  {u} [label="{name}"];')
    labels = None if labeling is None else validate(g, labeling).tolist()
    for k, (u, v) in enumerate(g.edges):
        if labels is None:
            out.append(f"  {u} -- {v};")
        else:
            out.append(f'  {u} -- {v} [label="{labels[k]}"];')
    out.append("}")
    return "\n".join(out) + "\n"
