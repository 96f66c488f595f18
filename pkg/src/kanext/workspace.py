"""Loading and saving named catalogs of categories, functors and transformations.

A workspace file is one JSON document with the top-level keys
``categories``, ``functors``, ``setfunctors`` and ``transformations``, each
mapping names to definitions (see ``schema/workspace.schema.json``).  Names
are unique across every kind and every loaded file.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import jsonschema

from .category import (
    FinCategory,
    NatTrans,
    chain_category,
    discrete_category,
    opposite,
    poset_category,
    validate_category,
    validate_functor,
)
from .errors import KanError, NotFound, ValidationError
from .sets import DEFAULT_NATHOM_CAP, SetFunctor, SetNatTrans, set_functor

KINDS = ("categories", "functors", "setfunctors", "transformations")


@dataclass(frozen=True)
class Diagnostic:
    file: str
    line: int | None
    name: str | None
    code: str
    message: str

    def as_dict(self):
        return {"file": self.file, "line": self.line, "name": self.name, "code": self.code, "message": self.message}


class WorkspaceError(KanError):
    code = "workspace"

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        first = self.diagnostics[0] if self.diagnostics else None
        if first is None:
            head = "invalid workspace"
        else:
            head = f"{first.file}:{first.line}: {first.message}" if first.line else f"{first.file}: {first.message}"
        more = len(self.diagnostics) - 1
        super().__init__(head + (f" (and {more} more)" if more > 0 else ""))

    def as_dict(self):
        return {"code": self.code, "message": str(self), "diagnostics": [d.as_dict() for d in self.diagnostics]}


@dataclass
class Workspace:
    categories: dict = field(default_factory=dict)
    functors: dict = field(default_factory=dict)
    setfunctors: dict = field(default_factory=dict)
    transformations: dict = field(default_factory=dict)
    nathom_cap: int = DEFAULT_NATHOM_CAP
    origin: dict = field(default_factory=dict, compare=False)  # name -> (file, line)

    def _get(self, kind, name):
        table = getattr(self, kind)
        if name not in table:
            raise NotFound(f"no {kind[:-1] if kind != 'categories' else 'category'} named {name!r}")
        return table[name]

    def category(self, name):
        return self._get("categories", name)

    def functor(self, name):
        return self._get("functors", name)

    def setfunctor(self, name):
        return self._get("setfunctors", name)

    def transformation(self, name):
        return self._get("transformations", name)

    def names(self):
        return {kind: sorted(getattr(self, kind)) for kind in KINDS}


def schema():
    text = resources.files("kanext").joinpath("schema/workspace.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def _line_of(text, name):
    if text is None or name is None:
        return None
    m = re.search(r'"' + re.escape(name) + r'"\s*:', text)
    return text.count("\n", 0, m.start()) + 1 if m else None


def _closure_poset(spec, name):
    elements = [str(e) for e in spec["elements"]]
    rel = {(x, y) for x in elements for y in elements if x == y}
    rel |= {(str(x), str(y)) for x, y in spec["leq"]}
    changed = True
    while changed:
        changed = False
        for (x, y) in list(rel):
            for (y2, z) in list(rel):
                if y == y2 and (x, z) not in rel:
                    rel.add((x, z))
                    changed = True
    return poset_category(elements, lambda x, y: (x, y) in rel, name=name)


def build_category(name, spec):
    if "poset_chain" in spec:
        return chain_category(spec["poset_chain"], name=name)
    if "discrete" in spec:
        return discrete_category(spec["discrete"], name=name)
    if "poset" in spec:
        return _closure_poset(spec["poset"], name)
    return validate_category(spec, infer_identity_compositions=True, name=name)


def _reject_duplicates(pairs):
    keys = [k for k, _ in pairs]
    dups = sorted({k for k in keys if keys.count(k) > 1})
    if dups:
        raise ValueError(f"duplicate keys {dups}")
    return dict(pairs)


def load(paths, nathom_cap=DEFAULT_NATHOM_CAP):
    """Load and validate workspace files; raises :class:`WorkspaceError` listing every problem."""
    docs, diags = [], []
    validator = jsonschema.Draft7Validator(schema())
    for p in paths:
        path = str(p)
        try:
            text = Path(p).read_text(encoding="utf-8")
        except OSError as exc:
            diags.append(Diagnostic(path, None, None, "io-error", str(exc)))
            continue
        try:
            doc = json.loads(text, object_pairs_hook=_reject_duplicates)
        except json.JSONDecodeError as exc:
            diags.append(Diagnostic(path, exc.lineno, None, "parse-error", exc.msg))
            continue
        except ValueError as exc:
            diags.append(Diagnostic(path, None, None, "name-collision", str(exc)))
            continue
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
        for err in errors:
            where = [str(x) for x in err.absolute_path]
            nm = where[1] if len(where) > 1 else None
            diags.append(Diagnostic(path, _line_of(text, nm), nm, "schema", f"{'/'.join(where) or '<root>'}: {err.message}"))
        if not errors:
            docs.append((path, text, doc))
    ws = Workspace(nathom_cap=nathom_cap)
    for path, text, doc in docs:
        for kind in KINDS:
            for name in doc.get(kind, {}):
                if name in ws.origin:
                    other = ws.origin[name]
                    diags.append(Diagnostic(path, _line_of(text, name), name, "name-collision",
                                            f"{name!r} already defined in {other[0]}" + (f":{other[1]}" if other[1] else "")))
                else:
                    ws.origin[name] = (path, _line_of(text, name))
    if diags:
        raise WorkspaceError(diags)

    def attempt(path, text, name, kind, build):
        try:
            getattr(ws, kind)[name] = build()
        except ValidationError as exc:
            for v in exc.violations:
                diags.append(Diagnostic(path, _line_of(text, name), name, v.code, v.message))
        except KanError as exc:
            diags.append(Diagnostic(path, _line_of(text, name), name, exc.code, str(exc)))
        except (KeyError, ValueError, TypeError) as exc:
            diags.append(Diagnostic(path, _line_of(text, name), name, "invalid", f"{type(exc).__name__}: {exc}"))

    def ref(path, text, name, kind, target):
        table = getattr(ws, kind)
        if target not in table:
            known = target in ws.origin
            msg = (f"{name!r} refers to {target!r}, which failed validation" if known
                   else f"{name!r} refers to undefined {kind[:-1] if kind != 'categories' else 'category'} {target!r}")
            diags.append(Diagnostic(path, _line_of(text, name), name, "dangling-reference", msg))
            return None
        return table[target]

    for path, text, doc in docs:
        for name, spec in doc.get("categories", {}).items():
            attempt(path, text, name, "categories", lambda: build_category(name, spec))
    for path, text, doc in docs:
        for name, spec in doc.get("functors", {}).items():
            A = ref(path, text, name, "categories", spec["source"])
            B = ref(path, text, name, "categories", spec["target"])
            if A is not None and B is not None:
                attempt(path, text, name, "functors",
                        lambda: validate_functor({**spec, "source": A, "target": B}, name=name))
    for path, text, doc in docs:
        for name, spec in doc.get("setfunctors", {}).items():
            C = ref(path, text, name, "categories", spec["shape"])
            if C is not None:
                shape = opposite(C) if spec.get("variance", "co") == "contra" else C
                attempt(path, text, name, "setfunctors",
                        lambda: set_functor(shape, spec["sets"], spec.get("functions", {}), name=name))
    for path, text, doc in docs:
        for name, spec in doc.get("transformations", {}).items():
            kind = "setfunctors" if spec["source"] in ws.setfunctors or spec["source"] not in ws.functors else "functors"
            F = ref(path, text, name, kind, spec["source"])
            G = ref(path, text, name, kind, spec["target"])
            if F is None or G is None:
                continue
            if kind == "setfunctors":
                attempt(path, text, name, "transformations",
                        lambda: SetNatTrans(F, G, {a: dict(c) for a, c in spec["components"].items()}, name=name))
            else:
                attempt(path, text, name, "transformations",
                        lambda: NatTrans(F, G, dict(spec["components"]), name=name))
    if diags:
        raise WorkspaceError(diags)
    return ws


# -- serialisation ----------------------------------------------------------


def dump_category(C: FinCategory):
    return {
        "objects": list(C.objects),
        "morphisms": [[f, d, c] for f, (d, c) in C.morphisms.items()],
        "identities": {a: C.identities[a] for a in C.objects},
        "composition": [[g, f, gf] for (g, f), gf in C.composition.items()],
    }


def _category_name(ws, C):
    for name, D in ws.categories.items():
        if D == C:
            return name, "co"
    for name, D in ws.categories.items():
        if opposite(D) == C:
            return name, "contra"
    raise NotFound(f"category {C!r} is not in the workspace")


def _functor_name(ws, F):
    table = ws.setfunctors if isinstance(F, SetFunctor) else ws.functors
    for name, G in table.items():
        if G == F:
            return name
    raise NotFound(f"functor {F!r} is not in the workspace")


def dump(ws):
    """Canonical JSON-ready form; ``load`` of it reproduces an equal workspace."""
    out = {kind: {} for kind in KINDS}
    for name, C in ws.categories.items():
        out["categories"][name] = dump_category(C)
    for name, F in ws.functors.items():
        out["functors"][name] = {
            "source": _category_name(ws, F.source)[0], "target": _category_name(ws, F.target)[0],
            "objects": dict(F.object_map), "morphisms": dict(F.morphism_map),
        }
    for name, X in ws.setfunctors.items():
        shape, variance = _category_name(ws, X.shape)
        out["setfunctors"][name] = {
            "shape": shape, "variance": variance,
            "sets": {a: list(X.sets[a]) for a in X.shape.objects},
            "functions": {f: dict(X.fns[f]) for f in X.shape.morphisms},
        }
    for name, t in ws.transformations.items():
        comps = {a: (dict(c) if isinstance(c, dict) else c) for a, c in t.components.items()}
        out["transformations"][name] = {"source": _functor_name(ws, t.source), "target": _functor_name(ws, t.target),
                                        "components": comps}
    return out


def dumps(ws, indent=2):
    return json.dumps(dump(ws), indent=indent, ensure_ascii=False)


def save(ws, path, indent=2):
    Path(path).write_text(dumps(ws, indent) + "\n", encoding="utf-8")
