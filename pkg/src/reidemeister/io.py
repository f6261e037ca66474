"""JSON input documents and report rendering.

Kinds: ``heegaard-word``, ``presented-cobordism``, ``knot``,
``closed-manifold``.  Words use the free group syntax (``x1 x2^-1`` or
``a1 b1`` for surface generators), phi-values are integer exponent arrays.
"""

from __future__ import annotations

import json
from typing import Any, Dict, List, Optional

from .cobordism import (
    CYLINDER,
    KINDS,
    LOWER_ALPHA,
    LOWER_BETA,
    CobObject,
    HeegaardWord,
    KnotInput,
    Piece,
    PresentedCobordism,
)
from .coeff import LaurentPoly, RatFunc, format_poly, format_ratfunc, normalize_unit
from .exterior import ProjectiveGradedMap
from .freegroup import AbelMap, FreeHom, format_word, parse_word

DOC_KINDS = ("heegaard-word", "presented-cobordism", "knot", "closed-manifold")


class InputError(ValueError):
    """Malformed or inconsistent input document."""

    def __init__(self, message, code="schema"):
        super().__init__(message)
        self.code = code


def _require(d, key, kind=None):
    if not isinstance(d, dict) or key not in d:
        raise InputError(f"missing field {key!r}" + (f" in {kind}" if kind else ""))
    return d[key]


def _int(x, what):
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{what} must be an integer, got {x!r}")
    return x


def _exps(vals, nvars, what):
    if not isinstance(vals, list):
        raise InputError(f"{what} must be a list of exponent arrays")
    out = []
    for v in vals:
        if not isinstance(v, list) or len(v) != nvars:
            raise InputError(f"{what}: exponent array {v!r} must have length {nvars}")
        out.append(tuple(_int(x, what) for x in v))
    return out


def _word(text, genus, what):
    if not isinstance(text, str):
        raise InputError(f"{what} must be a word string, got {text!r}")
    try:
        return parse_word(text, genus)
    except ValueError as e:
        raise InputError(f"{what}: {e}", "parse") from e


def _words(texts, genus, what):
    if not isinstance(texts, list):
        raise InputError(f"{what} must be a list of words")
    return [_word(t, genus, f"{what}[{i}]") for i, t in enumerate(texts)]


def doc_nvars(doc: Dict[str, Any], default: Optional[int] = None) -> int:
    """Variable count: the document's ``vars`` field, else the session
    default, else inferred from the first phi-value."""
    if "vars" in doc:
        n = _int(doc["vars"], "vars")
        if default is not None and default != n:
            raise InputError(f"document declares {n} variables but the session uses {default}")
        return n
    if default is not None:
        return default
    phi = doc.get("phi") or (doc.get("source") or {}).get("phi")
    if isinstance(phi, list) and phi and isinstance(phi[0], list):
        return len(phi[0])
    if "pd" in doc:
        return 1
    raise InputError("cannot infer the variable count; pass --vars or set \"vars\"")


def parse_object(d, nvars) -> CobObject:
    g = _int(_require(d, "genus", "object"), "genus")
    if g < 0:
        raise InputError("genus must be nonnegative")
    phi = _exps(d.get("phi", [[0] * nvars for _ in range(2 * g)]), nvars, "object phi")
    if len(phi) != 2 * g:
        raise InputError(f"genus {g} object needs {2 * g} phi-values, got {len(phi)}")
    return CobObject(g, phi, nvars)


def parse_piece(d, nvars) -> Piece:
    kind = _require(d, "type", "piece")
    if kind not in KINDS:
        raise InputError(f"unknown piece type {kind!r}; expected one of {', '.join(KINDS)}")
    pad = _int(d.get("pad", 0), "pad")
    lpad = _int(d.get("lpad", 0), "lpad")
    try:
        if kind == CYLINDER:
            fwd = _require(d, "images", "cylinder")
            if not isinstance(fwd, list) or len(fwd) % 2 or not fwd:
                raise InputError("cylinder images must list 2k words")
            k = len(fwd) // 2
            inv = _require(d, "inverse", "cylinder")
            hom = FreeHom(_words(fwd, k, "images"), _words(inv, k, "inverse"))
            return Piece(kind, k, pad, lpad, hom)
        k = _int(_require(d, "k", "piece"), "k")
        phi_new = None
        if "phi_new" in d:
            if kind not in (LOWER_ALPHA, LOWER_BETA):
                raise InputError("phi_new applies only to lower-alpha and lower-beta pieces")
            phi_new = _exps(d["phi_new"], nvars, "phi_new")
        return Piece(kind, k, pad, lpad, None, phi_new)
    except InputError:
        raise
    except ValueError as e:
        raise InputError(str(e)) from e


def parse_document(doc: Dict[str, Any], nvars: Optional[int] = None):
    """Document -> HeegaardWord | PresentedCobordism | KnotInput."""
    if not isinstance(doc, dict):
        raise InputError("document must be a JSON object")
    kind = _require(doc, "kind")
    if kind not in DOC_KINDS:
        raise InputError(f"unknown kind {kind!r}; expected one of {', '.join(DOC_KINDS)}")
    n = doc_nvars(doc, nvars)
    if n < 0:
        raise InputError("vars must be nonnegative")
    if kind == "heegaard-word":
        src = parse_object(_require(doc, "source", kind), n)
        pieces = [parse_piece(p, n) for p in doc.get("pieces", [])]
        w = HeegaardWord(src, pieces)
        if "target" in doc:
            tgt = parse_object(doc["target"], n)
            if tgt != w.target:
                raise InputError(f"declared target {tgt} differs from computed {w.target}")
        return w
    if kind == "presented-cobordism":
        ng = _int(_require(doc, "generators", kind), "generators")
        phi = AbelMap(_exps(_require(doc, "phi", kind), n, "phi"), n)
        rels = _words(doc.get("relators", []), 0, "relators")
        bottom = _words(doc.get("bottom", []), 0, "bottom")
        top = _words(doc.get("top", []), 0, "top")
        return PresentedCobordism(ng, rels, phi, bottom, top)
    if "pd" in doc:
        from .knots import wirtinger
        if n != 1:
            raise InputError("PD codes need a one-variable session")
        try:
            return wirtinger([tuple(_int(x, "pd") for x in c) for c in doc["pd"]])
        except (TypeError, ValueError) as e:
            raise InputError(f"bad PD code: {e}") from e
    ng = _int(_require(doc, "generators", kind), "generators")
    phi = AbelMap(_exps(_require(doc, "phi", kind), n, "phi"), n)
    rels = _words(doc.get("relators", []), 0, "relators")
    parallel = _word(doc["parallel"], 0, "parallel") if "parallel" in doc else None
    if kind == "knot":
        mu = _word(_require(doc, "meridian", kind), 0, "meridian")
    else:
        if parallel is None:
            raise InputError("closed-manifold documents need a parallel word")
        mu = _word(doc["meridian"], 0, "meridian") if "meridian" in doc else ()
    return KnotInput(ng, rels, phi, mu, parallel)


def load_document(path: str, nvars: Optional[int] = None):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}", "io") from e
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})", "parse") from e
    return doc, parse_document(doc, nvars)


# ---------------------------------------------------------------- serialization


def object_doc(o: CobObject):
    return {"genus": o.genus, "phi": [list(e) for e in o.phi]}


def piece_doc(p: Piece):
    d: Dict[str, Any] = {"type": p.kind}
    if p.kind == CYLINDER:
        d["images"] = [format_word(w, p.k) for w in p.hom.fwd]
        d["inverse"] = [format_word(w, p.k) for w in p.hom.inv]
    else:
        d["k"] = p.k
    if p.pad:
        d["pad"] = p.pad
    if p.lpad:
        d["lpad"] = p.lpad
    if p.phi_new is not None:
        d["phi_new"] = [list(e) for e in p.phi_new]
    return d


def word_doc(w: HeegaardWord):
    return {"kind": "heegaard-word", "vars": w.nvars, "source": object_doc(w.source),
            "pieces": [piece_doc(p) for p in w.pieces]}


def presented_doc(p: PresentedCobordism):
    return {"kind": "presented-cobordism", "vars": p.nvars, "generators": p.ngens,
            "relators": [format_word(w) for w in p.relators],
            "phi": [list(e) for e in p.phi.images],
            "bottom": [format_word(w) for w in p.bottom],
            "top": [format_word(w) for w in p.top]}


def knot_doc(k: KnotInput, kind="knot"):
    d = {"kind": kind, "vars": k.nvars, "generators": k.ngens,
         "relators": [format_word(w) for w in k.relators],
         "phi": [list(e) for e in k.phi.images],
         "meridian": format_word(k.meridian)}
    if k.parallel is not None:
        d["parallel"] = format_word(k.parallel)
    return d


def to_document(x):
    if isinstance(x, HeegaardWord):
        return word_doc(x)
    if isinstance(x, PresentedCobordism):
        return presented_doc(x)
    if isinstance(x, KnotInput):
        return knot_doc(x)
    raise TypeError(f"cannot serialize {type(x).__name__}")


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


# ---------------------------------------------------------------- rendering


def subset_name(s, g):
    if not s:
        return "1"
    return "^".join(f"a{i + 1}" if i < g else f"b{i - g + 1}" for i in s)


def render_value(x) -> str:
    if isinstance(x, RatFunc):
        return format_ratfunc(x)
    if isinstance(x, LaurentPoly):
        return format_poly(x)
    return str(x)


def map_report(v) -> Dict[str, Any]:
    """Blocks of the unit-normalized representative."""
    pv = v if isinstance(v, ProjectiveGradedMap) else ProjectiveGradedMap(v)
    m, _ = pv.normalized()
    blocks = []
    for j in sorted(m.blocks):
        entries = []
        for (t, s), c in sorted(m.blocks[j].items()):
            entries.append({"source": subset_name(s, m.g_minus), "target": subset_name(t, m.g_plus),
                            "value": render_value(c)})
        blocks.append({"j": j, "entries": entries})
    return {"g_minus": m.g_minus, "g_plus": m.g_plus, "degree": m.degree, "blocks": blocks}


def normalized_str(f) -> str:
    """Canonical representative of the unit class of f."""
    return render_value(normalize_unit(f)[0])


def render_map_text(rep: Dict[str, Any]) -> List[str]:
    lines = [f"genus {rep['g_minus']} -> {rep['g_plus']}, degree {rep['degree']}"]
    if not rep["blocks"]:
        lines.append("  zero map")
    for b in rep["blocks"]:
        lines.append(f"  block j={b['j']}:")
        for e in b["entries"]:
            lines.append(f"    {e['source']} -> {e['target']}: {e['value']}")
    return lines
