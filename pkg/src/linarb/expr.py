"""Product expressions such as ``strong(path:4,cycle:5)`` or ``petersen``.

Grammar::

    expr   := family | kind "(" expr "," expr ")"
    family := name [":" int ("," int)*]
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .construct import (
    compose,
    decompose_complete,
    decompose_cycle,
    decompose_path,
    decompose_petersen,
    fold_cartesian,
    compose_join,
)
from .forests import Decomposition
from .graph import FamilySpec, Graph, ParameterError, build_family, empty_graph
from .products import ProductKind, product


@dataclass(frozen=True)
class ProductSpec:
    kind: ProductKind
    left: "Spec"
    right: "Spec"

    def __str__(self) -> str:
        return f"{self.kind}({self.left},{self.right})"


Spec = Union[FamilySpec, ProductSpec]

_TOKEN = re.compile(r"\s*([A-Za-z_]+|\d+|[():,])")


def _tokens(text: str) -> list[str]:
    out, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParameterError(f"unexpected character {text[pos]!r} at offset {pos} in {text!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


def parse_expr(text: str) -> Spec:
    toks = _tokens(text)
    if not toks:
        raise ParameterError("empty expression")
    pos = 0

    def take(expected: str | None = None) -> str:
        nonlocal pos
        if pos >= len(toks):
            raise ParameterError(f"unexpected end of expression {text!r}")
        tok = toks[pos]
        if expected is not None and tok != expected:
            raise ParameterError(f"expected {expected!r}, got {tok!r} in {text!r}")
        pos += 1
        return tok

    def node() -> Spec:
        name = take()
        if pos < len(toks) and toks[pos] == "(":
            try:
                kind = ProductKind(name)
            except ValueError:
                raise ParameterError(f"unknown product kind {name!r}") from None
            take("(")
            left = node()
            take(",")
            right = node()
            take(")")
            return ProductSpec(kind, left, right)
        params = []
        if pos < len(toks) and toks[pos] == ":":
            take(":")
            params.append(_int(take()))
            while pos + 1 < len(toks) and toks[pos] == "," and toks[pos + 1].isdigit():
                take(",")
                params.append(_int(take()))
        return FamilySpec(name, tuple(params))

    result = node()
    if pos != len(toks):
        raise ParameterError(f"trailing input {' '.join(toks[pos:])!r} in {text!r}")
    return result


def _int(tok: str) -> int:
    if not tok.isdigit():
        raise ParameterError(f"expected an integer, got {tok!r}")
    return int(tok)


def build(spec: Spec) -> Graph:
    if isinstance(spec, FamilySpec):
        return build_family(spec)
    return product(spec.kind, build(spec.left), build(spec.right))


def decompose_family(spec: FamilySpec, k: int) -> Decomposition:
    """Constructive decomposition of a named family."""
    kind, p = spec.kind, spec.params
    g = build_family(spec)
    if g.m == 0:
        return Decomposition(k, (), g)
    if kind == "path":
        return decompose_path(p[0], k)
    if kind == "cycle":
        return decompose_cycle(p[0], k)
    if kind == "complete":
        return decompose_complete(p[0], k)
    if kind == "petersen":
        return decompose_petersen(k)
    if kind == "hypercube":
        return fold_cartesian([decompose_path(2, k)] * p[0])
    if kind == "complete_bipartite":
        s, t = p
        left, right = empty_graph(s), empty_graph(t)
        return compose_join(left, right, Decomposition(k, (), left), Decomposition(k, (), right))
    raise ParameterError(f"no construction for family {kind!r}")


def decompose(spec: Spec, k: int) -> Decomposition:
    if isinstance(spec, FamilySpec):
        return decompose_family(spec, k)
    left, right = decompose(spec.left, k), decompose(spec.right, k)
    return compose(spec.kind, left.target, right.target, left, right)
