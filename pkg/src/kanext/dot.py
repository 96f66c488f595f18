"""Graphviz DOT renderings of categories, comma categories and extensions.

Identities are left out; a morphism that factors through two non-identity
morphisms is drawn dashed.
"""

from __future__ import annotations

import json

from .category import FinCategory
from .comma import CommaCategory
from .kan import KanExtension
from .sets import SetFunctor


def _q(s):
    return json.dumps(str(s), ensure_ascii=False)


def composites(C):
    """Non-identity morphisms that are composites of two non-identity morphisms."""
    out = set()
    for (g, f), gf in C.composition.items():
        if not (C.is_identity(g) or C.is_identity(f) or C.is_identity(gf)):
            out.add(gf)
    return out


def category_dot(C, name=None):
    lines = [f"digraph {_q(name or C.name or 'C')} {{", "  rankdir=LR;"]
    for a in C.objects:
        lines.append(f"  {_q(a)};")
    dashed = composites(C)
    for f, (d, c) in C.morphisms.items():
        if C.is_identity(f):
            continue
        style = ", style=dashed" if f in dashed else ""
        lines.append(f"  {_q(d)} -> {_q(c)} [label={_q(f)}{style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def extension_dot(kan, name=None):
    """Element graph of a set-valued extension: one cluster per object of B."""
    ext = kan.ext
    if not isinstance(ext, SetFunctor):
        return functor_table_dot(ext, name)
    B = ext.shape
    title = name or ext.name or ("Lan" if kan.direction == "left" else "Ran")
    lines = [f"digraph {_q(title)} {{", "  rankdir=LR;", "  compound=true;"]
    for i, b in enumerate(B.objects):
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(f"    label={_q(b)};")
        for x in ext.sets[b]:
            lines.append(f"    {_q(f'{b}:{x}')} [label={_q(x)}];")
        lines.append("  }")
    dashed = composites(B)
    for g, (b, b2) in B.morphisms.items():
        if B.is_identity(g) or g in dashed:
            continue
        for x, y in ext.fns[g].items():
            lines.append(f"  {_q(f'{b}:{x}')} -> {_q(f'{b2}:{y}')} [label={_q(g)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def functor_table_dot(F, name=None):
    """A functor into a finite category as a bipartite object graph."""
    lines = [f"digraph {_q(name or F.name or 'F')} {{", "  rankdir=LR;"]
    for a in F.source.objects:
        lines.append(f"  {_q('src:' + a)} [label={_q(a)}];")
    for b in F.target.objects:
        lines.append(f"  {_q('tgt:' + b)} [label={_q(b)}, shape=box];")
    for a, b in F.object_map.items():
        lines.append(f"  {_q('src:' + a)} -> {_q('tgt:' + b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(target, name=None):
    """DOT text for a FinCategory, CommaCategory or KanExtension."""
    if isinstance(target, FinCategory):
        return category_dot(target, name)
    if isinstance(target, CommaCategory):
        return category_dot(target.cat, name or target.cat.name)
    if isinstance(target, KanExtension):
        return extension_dot(target, name)
    raise TypeError(f"cannot render {type(target).__name__} as DOT")
