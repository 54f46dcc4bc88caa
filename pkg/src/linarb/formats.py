"""Edge-list and certificate (de)serialization.

Edge list::

    n m
    u v        (m lines, 0 <= u < v < n)

Certificate: ``{"k": int, "n": int, "forests": [[[u, v], ...], ...]}``.
"""

from __future__ import annotations

import json

from .forests import Decomposition, LinearKForest
from .graph import Graph, ParameterError


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def _ints(text: str, count: int, lineno: int) -> list[int]:
    parts = text.split()
    if len(parts) != count:
        raise FormatError(f"expected {count} integers, got {len(parts)}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"not an integer in {text.strip()!r}", lineno) from None


def parse_graph(text: str) -> Graph:
    lines = [(i, ln) for i, ln in enumerate(text.splitlines(), 1) if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise FormatError("missing 'n m' header", 1)
    lineno, header = lines[0]
    n, m = _ints(header, 2, lineno)
    if n < 0 or m < 0:
        raise FormatError("negative count in header", lineno)
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges, found {len(body)}", body[-1][0] if body else lineno)
    seen: set[tuple[int, int]] = set()
    for lineno, line in body:
        u, v = _ints(line, 2, lineno)
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", lineno)
        if not 0 <= u < v < n:
            raise FormatError(f"edge {u} {v} violates 0 <= u < v < {n}", lineno)
        if (u, v) in seen:
            raise FormatError(f"duplicate edge {u} {v}", lineno)
        seen.add((u, v))
    return Graph.from_edges(n, seen)


def format_graph(g: Graph) -> str:
    return "".join([f"{g.n} {g.m}\n"] + [f"{u} {v}\n" for u, v in g.edges])


def emit_certificate(d: Decomposition) -> str:
    payload = {"k": d.k, "n": d.target.n, "forests": [[list(e) for e in f.edges] for f in d.forests]}
    return json.dumps(payload, separators=(",", ":")) + "\n"


def parse_certificate(text: str, target: Graph) -> Decomposition:
    """Decode a certificate for ``target``. Raises :class:`FormatError` on schema problems only.

    Whether the forests are valid is left to ``verify_decomposition``.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(data, dict):
        raise FormatError("certificate must be a JSON object")
    extra = set(data) - {"k", "n", "forests"}
    if extra:
        raise FormatError(f"unknown field(s): {', '.join(sorted(extra))}")
    missing = {"k", "n", "forests"} - set(data)
    if missing:
        raise FormatError(f"missing field(s): {', '.join(sorted(missing))}")
    k, n, forests = data["k"], data["n"], data["forests"]
    if type(k) is not int or k < 1:
        raise FormatError("'k' must be an integer >= 1")
    if type(n) is not int or n < 0:
        raise FormatError("'n' must be a non-negative integer")
    if n != target.n:
        raise FormatError(f"certificate is for {n} vertices, graph has {target.n}")
    if not isinstance(forests, list):
        raise FormatError("'forests' must be a list")
    parsed = []
    for i, forest in enumerate(forests):
        if not isinstance(forest, list):
            raise FormatError(f"forest {i} must be a list of edges")
        edges = []
        for e in forest:
            if not (isinstance(e, list) and len(e) == 2 and all(type(x) is int for x in e)):
                raise FormatError(f"forest {i}: edge {e!r} is not a pair of integers")
            u, v = e
            if not u < v:
                raise FormatError(f"forest {i}: edge {e!r} must satisfy u < v")
            edges.append((u, v))
        try:
            parsed.append(LinearKForest(k, tuple(edges)))
        except ParameterError as exc:
            raise FormatError(f"forest {i}: {exc}") from None
    return Decomposition(k, tuple(parsed), target)
