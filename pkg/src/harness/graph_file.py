# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import json

from src.signs import Sign
from src.exceptions import GraphFileError, GraphStructureError

'''
Line-oriented graph file:

    # comment
    sg 1
    n <order>
    l <v> <label>        (optional, label is the rest of the line)
    e <u> <v> <+|->

`serialize_graph` writes the header, the order, all labels when the graph has
any, then the edges in lexicographic order. The JSON mirror carries the same
fields.
'''

FORMAT_TAG = 'sg'
FORMAT_VERSION = 1


def serialize_graph(g):
    lines = [f"{FORMAT_TAG} {FORMAT_VERSION}", f"n {g.order}"]
    if g.has_labels:
        for v, lab in enumerate(g.labels):
            if '\n' in lab or '\r' in lab or lab.strip() != lab or lab == '':
                raise GraphStructureError(f"Label {lab!r} cannot be written to a graph file.")
            lines.append(f"l {v} {lab}")
    for u, v, s in g.edges():
        lines.append(f"e {u} {v} {s}")
    return '\n'.join(lines) + '\n'


def _parse_int(token, lineno, what):
    try:
        return int(token)
    except ValueError:
        raise GraphFileError(f"Expected an integer {what}, got {token!r}.", lineno) from None


def parse_graph(text):
    from src.signed_graph_model import SignedGraph

    order = None
    header_seen = False
    labels = {}
    edges = []
    seen_pairs = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line == '' or line.startswith('#'):
            continue
        tokens = line.split()
        if not header_seen:
            if tokens[0] != FORMAT_TAG or len(tokens) != 2:
                raise GraphFileError(f"Expected header '{FORMAT_TAG} {FORMAT_VERSION}'.", lineno)
            if _parse_int(tokens[1], lineno, 'version') != FORMAT_VERSION:
                raise GraphFileError(f"Unsupported format version {tokens[1]}.", lineno)
            header_seen = True
            continue

        kind = tokens[0]
        if kind == 'n':
            if order is not None:
                raise GraphFileError("Repeated order line.", lineno)
            if len(tokens) != 2:
                raise GraphFileError("Order line must be 'n <order>'.", lineno)
            order = _parse_int(tokens[1], lineno, 'order')
            if order < 0:
                raise GraphFileError(f"Negative order {order}.", lineno)
            continue
        if order is None:
            raise GraphFileError("Order line 'n <order>' must come first.", lineno)

        if kind == 'l':
            parts = line.split(None, 2)
            if len(parts) != 3:
                raise GraphFileError("Label line must be 'l <v> <label>'.", lineno)
            v = _parse_int(parts[1], lineno, 'vertex')
            if not 0 <= v < order:
                raise GraphFileError(f"Vertex {v} out of range.", lineno)
            if v in labels:
                raise GraphFileError(f"Repeated label for vertex {v}.", lineno)
            labels[v] = parts[2]
        elif kind == 'e':
            if len(tokens) != 4:
                raise GraphFileError("Edge line must be 'e <u> <v> <+|->'.", lineno)
            u = _parse_int(tokens[1], lineno, 'vertex')
            v = _parse_int(tokens[2], lineno, 'vertex')
            if not (0 <= u < order and 0 <= v < order):
                raise GraphFileError(f"Edge {u} {v} has an endpoint out of range.", lineno)
            if u == v:
                raise GraphFileError(f"Loop at vertex {u}.", lineno)
            pair = (min(u, v), max(u, v))
            if pair in seen_pairs:
                raise GraphFileError(f"Duplicate edge {pair[0]} {pair[1]}.", lineno)
            seen_pairs.add(pair)
            if tokens[3] not in ('+', '-'):
                raise GraphFileError(f"Edge sign must be '+' or '-', got {tokens[3]!r}.", lineno)
            edges.append((u, v, Sign.parse(tokens[3])))
        else:
            raise GraphFileError(f"Unknown line kind {kind!r}.", lineno)

    if not header_seen:
        raise GraphFileError("Missing header line.")
    if order is None:
        raise GraphFileError("Missing order line.")
    label_list = None
    if labels:
        label_list = [labels.get(v, str(v)) for v in range(order)]
    try:
        return SignedGraph.from_edges(order, edges, labels=label_list)
    except GraphStructureError as e:
        raise GraphFileError(str(e)) from e


def graph_to_json(g):
    return {
        'format': FORMAT_TAG,
        'version': FORMAT_VERSION,
        'order': g.order,
        'labels': list(g.labels) if g.has_labels else None,
        'edges': [[u, v, str(s)] for u, v, s in g.edges()],
    }


def graph_from_json(data):
    from src.signed_graph_model import SignedGraph

    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as e:
            raise GraphFileError(f"Invalid JSON: {e.msg}.", e.lineno) from e
    if data.get('format') != FORMAT_TAG or data.get('version') != FORMAT_VERSION:
        raise GraphFileError(f"Expected format '{FORMAT_TAG}' version {FORMAT_VERSION}.")
    try:
        edges = [(u, v, Sign.parse(s)) for u, v, s in data['edges']]
        return SignedGraph.from_edges(int(data['order']), edges, labels=data.get('labels'))
    except (KeyError, TypeError, ValueError) as e:
        raise GraphFileError(f"Malformed graph JSON: {e}") from e


def serialize_graph_json(g):
    return json.dumps(graph_to_json(g), indent=1) + '\n'
