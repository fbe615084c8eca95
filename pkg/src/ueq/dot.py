"""Graphviz export of the specialization preorder of a finite topology."""

from __future__ import annotations

from .topology import FiniteTopology, specialization_edges


def emit_dot(t: FiniteTopology, name: str = "specialization") -> str:
    """DOT digraph with an edge ``x -> y`` whenever x lies in the closure of {y}.

    Nodes and edges are listed in increasing order; self-loops are omitted.
    """
    lines = [f"digraph {name} {{"]
    lines += [f"  {x};" for x in range(t.n)]
    lines += [f"  {x} -> {y};" for x, y in specialization_edges(t)]
    lines.append("}")
    return "\n".join(lines) + "\n"
