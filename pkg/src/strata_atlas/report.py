"""Tables, diagrams and golden-data checks for GSp(2g) strata.

Every renderer is deterministic: the same request yields byte-identical
text.  Rationals are serialized as strings such as ``"1/2"``.
"""

from __future__ import annotations

import difflib
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from importlib import resources

from .admissible import (
    admissible_set,
    decorate,
    ekor_set,
    kr_fiber,
    kr_records,
    kr_set,
)
from .affweyl import Elt
from .newton import b_leq, b_set, fully_hn_decomposable, leaf_dimension
from .orders import (
    JSON_SCHEMA_VERSION,
    Poset,
    bruhat_poset,
    ekor_poset,
    kr_poset,
    poset_dict,
    poset_from_relation,
    to_dot,
)
from .parabolic import max_section_rep
from .siegel import SiegelLevel, component_count, gsp_context, level_to_parahoric
from .zipdata import ordinary_and_superspecial, zip_datum

ARTIFACTS = ("adm", "ekor", "kr", "hasse-ekor", "hasse-kr", "newton", "zip", "summary", "selfcheck")
FORMATS = ("md", "json", "dot")
GOLDEN_FILE = "gsp4_golden.json"


@dataclass(frozen=True)
class ReportRequest:
    g: int
    level: SiegelLevel
    artifact: str
    format: str = "md"
    notation: str = "word"
    order: str = "ksigma"
    group: str = "gsp"

    def __post_init__(self):
        if self.group != "gsp":
            raise ValueError(f"unknown group {self.group!r}")
        if self.artifact not in ARTIFACTS:
            raise ValueError(f"unknown artifact {self.artifact!r}")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        if self.format == "dot" and not self.artifact.startswith("hasse-"):
            raise ValueError("--format dot is only valid for hasse-* artifacts")
        if self.notation not in ("word", "window"):
            raise ValueError(f"unknown notation {self.notation!r}")
        if self.order not in ("bruhat", "ksigma"):
            raise ValueError(f"unknown order {self.order!r}")
        if self.level[-1] > self.g:
            raise ValueError(f"level indices must lie in 0..{self.g}")


class Session:
    """Group context, admissible set and parahoric for one (g, level)."""

    def __init__(self, g: int, level, notation: str = "word"):
        self.g = g
        self.level = level if isinstance(level, SiegelLevel) else SiegelLevel(level, g)
        self.notation = notation
        self.ctx = gsp_context(g)
        self.adm = admissible_set(self.ctx)
        self.K = level_to_parahoric(self.ctx, self.level)

    def name(self, x: Elt) -> str:
        if self.notation == "window":
            return self.ctx.model.render(x.canonical)
        return str(x)

    def element(self, x: Elt) -> dict:
        return {
            "word": str(x),
            "window": list(x.canonical),
            "length": x.length,
            "p_rank": self.ctx.model.p_rank(x.canonical),
            "kappa": x.omega,
        }

    @cached_property
    def records(self):
        return decorate(self.adm, self.K)

    @cached_property
    def kr_records(self):
        return kr_records(self.adm, self.K)

    @cached_property
    def classes(self):
        return b_set(self.adm, self.K)


def _frac(v) -> str:
    return str(Fraction(v))


def _md_table(header: list[str], rows: list[list]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _envelope(s: Session, artifact: str, payload) -> dict:
    return {
        "schema_version": JSON_SCHEMA_VERSION,
        "group": "gsp",
        "g": s.g,
        "level": list(s.level),
        "artifact": artifact,
        "data": payload,
    }


# -- artifact builders --------------------------------------------------------


def _adm(s: Session, fmt: str) -> str:
    elts = list(s.adm.elements)
    if fmt == "json":
        return _dump(_envelope(s, "adm", [s.element(x) for x in elts]))
    rows = [[s.name(x), x.length, s.element(x)["p_rank"], x.omega] for x in elts]
    return f"Adm(mu), {len(elts)} elements\n\n" + _md_table(["element", "length", "p-rank", "kappa"], rows)


def _class_name(b) -> str:
    return "(" + ", ".join(_frac(v) for v in b.nu.nu) + ")" if b is not None else "-"


def _ekor(s: Session, fmt: str) -> str:
    recs = s.records
    if fmt == "json":
        payload = [
            dict(s.element(r.elt), dim=r.dim, kr_type=str(r.kr_type),
                 sigma_straight=r.sigma_straight,
                 newton=[_frac(v) for v in r.newton.nu.nu] if r.newton else None)
            for r in recs
        ]
        return _dump(_envelope(s, "ekor", payload))
    rows = [
        [s.name(r.elt), r.dim, r.p_rank, s.name(r.kr_type), "yes" if r.sigma_straight else "no"]
        for r in recs
    ]
    head = f"EKOR strata at level {s.level}: {len(recs)}\n\n"
    return head + _md_table(["element", "dim", "p-rank", "KR type", "sigma-straight"], rows)


def _kr(s: Session, fmt: str) -> str:
    out = []
    for r in s.kr_records:
        fiber = kr_fiber(s.adm, s.K, r.kr_type)
        top = max_section_rep(s.K, r.kr_type)
        out.append((r, fiber, top))
    if fmt == "json":
        payload = [
            {"kr_type": s.element(r.kr_type), "dim": r.dim, "p_rank": r.p_rank,
             "ordinary": str(top), "superspecial": str(r.kr_type),
             "fiber": [str(x) for x in fiber]}
            for r, fiber, top in out
        ]
        return _dump(_envelope(s, "kr", payload))
    rows = [
        [s.name(r.kr_type), s.name(top), r.dim, r.p_rank, ", ".join(s.name(x) for x in fiber)]
        for r, fiber, top in out
    ]
    head = f"KR strata at level {s.level}: {len(out)}\n\n"
    return head + _md_table(["KR type", "ordinary", "dim", "p-rank", "EKOR fiber"], rows)


def _hasse(s: Session, which: str, fmt: str, order: str) -> str:
    if which == "ekor":
        if order == "ksigma":
            p = ekor_poset(s.adm, s.K)
        else:
            nodes = ekor_set(s.adm, s.K)
            p = poset_from_relation(nodes, s.ctx.bruhat_leq,
                                    [{"dim": x.length} for x in nodes])
    else:
        p = kr_poset(s.adm, s.K)
    if fmt == "dot":
        return to_dot(p, s.name, name=f"hasse_{which}")
    if fmt == "json":
        return _dump(_envelope(s, f"hasse-{which}", poset_dict(p, s.name)))
    lines = [f"{which.upper()} closure order at level {s.level} ({order if which == 'ekor' else 'bruhat'})", ""]
    lines += [f"- {s.name(p.nodes[i])} -> {s.name(p.nodes[j])}" for i, j in p.covers]
    return "\n".join(lines) + "\n"


def _newton(s: Session, fmt: str) -> str:
    classes = s.classes
    if fmt == "json":
        payload = [
            {"nu": [_frac(v) for v in b.nu.nu], "kappa": b.kappa, "basic": b.basic,
             "straight_rep": str(b.straight_rep), "leaf_dimension": leaf_dimension(b)}
            for b in classes
        ]
        return _dump(_envelope(s, "newton", payload))
    rows = [
        [_class_name(b), b.kappa, "yes" if b.basic else "no", s.name(b.straight_rep), leaf_dimension(b)]
        for b in classes
    ]
    chain = " < ".join(_class_name(b) for b in _sorted_by_order(classes))
    ok, _ = fully_hn_decomposable(s.adm)
    tail = f"\norder: {chain}\nfully HN decomposable: {'yes' if ok else 'no'}\n"
    return _md_table(["nu", "kappa", "basic", "straight rep", "leaf dim"], rows) + tail


def _sorted_by_order(classes):
    return sorted(classes, key=lambda b: sum(1 for c in classes if b_leq(c, b)))


def _zip(s: Session, fmt: str) -> str:
    items = []
    for w in kr_set(s.adm, s.K):
        z = zip_datum(s.adm, s.K, w)
        top, bottom = ordinary_and_superspecial(z)
        items.append((z, top, bottom))
    if fmt == "json":
        payload = [
            {"kr_type": str(z.w), "J_w": sorted(z.Jw), "sigma_prime_J_w": sorted(z.sigma_prime_Jw),
             "fiber": [str(x) for x in z.fiber], "ordinary": str(top), "superspecial": str(bot)}
            for z, top, bot in items
        ]
        return _dump(_envelope(s, "zip", payload))
    rows = [
        [s.name(z.w), "{" + ",".join(map(str, sorted(z.Jw))) + "}",
         "{" + ",".join(map(str, sorted(z.sigma_prime_Jw))) + "}",
         len(z.fiber), s.name(top), s.name(bot)]
        for z, top, bot in items
    ]
    return _md_table(["KR type", "J_w", "sigma'(J_w)", "fiber size", "ordinary", "superspecial"], rows)


def summary_line(s: Session) -> str:
    return (
        f"{len(ekor_set(s.adm, s.K))} EKOR strata, {len(kr_set(s.adm, s.K))} KR strata, "
        f"{len(s.classes)} Newton classes, components: {component_count(s.level)}"
    )


def _summary(s: Session, fmt: str) -> str:
    if fmt == "json":
        payload = {
            "ekor": len(ekor_set(s.adm, s.K)),
            "kr": len(kr_set(s.adm, s.K)),
            "newton_classes": len(s.classes),
            "components": component_count(s.level),
        }
        return _dump(_envelope(s, "summary", payload))
    return summary_line(s) + "\n"


def render(req: ReportRequest) -> tuple[str, int]:
    """Produce the text for a request together with its exit code."""
    if req.artifact == "selfcheck":
        return selfcheck()
    s = Session(req.g, req.level, req.notation)
    a = req.artifact
    if a == "adm":
        return _adm(s, req.format), 0
    if a == "ekor":
        return _ekor(s, req.format), 0
    if a == "kr":
        return _kr(s, req.format), 0
    if a == "hasse-ekor":
        return _hasse(s, "ekor", req.format, req.order), 0
    if a == "hasse-kr":
        return _hasse(s, "kr", req.format, req.order), 0
    if a == "newton":
        return _newton(s, req.format), 0
    if a == "zip":
        return _zip(s, req.format), 0
    return _summary(s, req.format), 0


# -- golden data --------------------------------------------------------------


def load_golden() -> dict:
    text = resources.files("strata_atlas.data").joinpath(GOLDEN_FILE).read_text(encoding="utf-8")
    return json.loads(text)


def _norm(ctx, word: str) -> str:
    return str(ctx.parse(word))


def _edge_set(p: Poset) -> list[list[str]]:
    return sorted([str(p.nodes[i]), str(p.nodes[j])] for i, j in p.covers)


def computed_golden_view(golden: dict) -> dict:
    """Recompute every golden entry, shaped like the golden file."""
    ctx = gsp_context(golden["g"])
    adm = admissible_set(ctx)
    p = ctx.model.p_rank
    by_rank: dict[str, list[str]] = {}
    for x in adm.elements:
        by_rank.setdefault(str(p(x.canonical)), []).append(str(x))
    out = {
        "adm_by_p_rank": {k: sorted(v) for k, v in sorted(by_rank.items())},
        "newton_class_count": len(b_set(adm)),
        "fully_hn_decomposable": fully_hn_decomposable(adm)[0],
        "levels": {},
    }
    for name, data in golden["levels"].items():
        K = level_to_parahoric(ctx, data["level"])
        entry = {
            "ekor_count": len(ekor_set(adm, K)),
            "kr_count": len(kr_set(adm, K)),
            "components": component_count(data["level"]),
        }
        if data["rows"] is not None:
            rows = []
            for w in kr_set(adm, K):
                fiber = kr_fiber(adm, K, w)
                rows.append({
                    "kr_type": str(w),
                    "ekor": [str(x) for x in fiber],
                    "dims": [x.length for x in fiber],
                    "p_ranks": [p(x.canonical) for x in fiber],
                })
            entry["rows"] = sorted(rows, key=lambda r: r["kr_type"])
            entry["ekor_covers"] = _edge_set(ekor_poset(adm, K))
            entry["kr_covers"] = _edge_set(bruhat_poset(adm, K))
        out["levels"][name] = entry
    return out


def expected_golden_view(golden: dict) -> dict:
    """The golden file, normalized to canonical reduced words."""
    ctx = gsp_context(golden["g"])
    n = lambda w: _norm(ctx, w)  # noqa: E731
    out = {
        "adm_by_p_rank": {
            k: sorted(n(w) for w in v)
            for k, v in sorted(golden["adm_by_p_rank"].items()) if k != "anchor"
        },
        "newton_class_count": golden["newton_class_count"],
        "fully_hn_decomposable": golden["fully_hn_decomposable"],
        "levels": {},
    }
    for name, data in golden["levels"].items():
        entry = {k: data[k] for k in ("ekor_count", "kr_count", "components")}
        if data["rows"] is not None:
            rows = []
            for r in data["rows"]:
                order = sorted(range(len(r["ekor"])), key=lambda i: ctx.sort_key(ctx.parse(r["ekor"][i])))
                rows.append({
                    "kr_type": n(r["kr_type"]),
                    "ekor": [n(r["ekor"][i]) for i in order],
                    "dims": [r["dims"][i] for i in order],
                    "p_ranks": [r["p_ranks"][i] for i in order],
                })
            entry["rows"] = sorted(rows, key=lambda r: r["kr_type"])
            entry["ekor_covers"] = sorted([n(a), n(b)] for a, b in data["ekor_covers"])
            entry["kr_covers"] = sorted([n(a), n(b)] for a, b in data["kr_covers"])
        out["levels"][name] = entry
    return out


def selfcheck() -> tuple[str, int]:
    """Compare recomputed data against the golden file; exit code 1 on mismatch."""
    golden = load_golden()
    expected = expected_golden_view(golden)
    actual = computed_golden_view(golden)
    lines = []
    checks = [("adm_by_p_rank", expected["adm_by_p_rank"], actual["adm_by_p_rank"]),
              ("newton_class_count", expected["newton_class_count"], actual["newton_class_count"]),
              ("fully_hn_decomposable", expected["fully_hn_decomposable"], actual["fully_hn_decomposable"])]
    for name in expected["levels"]:
        for key in expected["levels"][name]:
            checks.append((f"{name}.{key}", expected["levels"][name][key], actual["levels"][name][key]))
    failed = 0
    for label, exp, act in checks:
        if exp == act:
            lines.append(f"ok   {label}")
            continue
        failed += 1
        lines.append(f"FAIL {label}")
        diff = difflib.unified_diff(
            _dump(exp).splitlines(), _dump(act).splitlines(), "golden", "computed", lineterm=""
        )
        lines += ["     " + d for d in diff]
    lines.append(f"{len(checks) - failed}/{len(checks)} golden checks passed")
    return "\n".join(lines) + "\n", 1 if failed else 0


# -- schema -------------------------------------------------------------------


def json_schema() -> dict:
    """JSON schema covering every artifact emitted with ``--format json``."""
    rational = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
    element = {
        "type": "object",
        "required": ["word", "window", "length", "p_rank", "kappa"],
        "properties": {
            "word": {"type": "string"},
            "window": {"type": "array", "items": {"type": "integer"}},
            "length": {"type": "integer", "minimum": 0},
            "p_rank": {"type": ["integer", "null"]},
            "kappa": {"type": "integer"},
        },
    }
    poset = {
        "type": "object",
        "required": ["schema_version", "nodes", "covers"],
        "properties": {
            "schema_version": {"const": JSON_SCHEMA_VERSION},
            "nodes": {"type": "array", "items": {
                "type": "object", "required": ["index", "label"],
                "properties": {"index": {"type": "integer"}, "label": {"type": "string"},
                               "dim": {"type": "integer"}, "p_rank": {"type": "integer"}}}},
            "covers": {"type": "array", "items": {
                "type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}},
        },
    }
    newton_class = {
        "type": "object",
        "required": ["nu", "kappa", "basic", "straight_rep"],
        "properties": {
            "nu": {"type": "array", "items": rational},
            "kappa": {"type": "integer"},
            "basic": {"type": "boolean"},
            "straight_rep": {"type": "string"},
            "leaf_dimension": {"type": "integer"},
        },
    }
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "title": "strata-atlas artifact",
        "type": "object",
        "required": ["schema_version", "group", "g", "level", "artifact", "data"],
        "properties": {
            "schema_version": {"const": JSON_SCHEMA_VERSION},
            "group": {"const": "gsp"},
            "g": {"type": "integer", "minimum": 1},
            "level": {"type": "array", "items": {"type": "integer", "minimum": 0},
                      "minItems": 1, "uniqueItems": True},
            "artifact": {"enum": [a for a in ARTIFACTS if a != "selfcheck"]},
            "data": {},
        },
        "$defs": {
            "rational": rational,
            "element": element,
            "poset": poset,
            "newton_class": newton_class,
        },
        "allOf": [
            {"if": {"properties": {"artifact": {"const": "adm"}}},
             "then": {"properties": {"data": {"type": "array", "items": {"$ref": "#/$defs/element"}}}}},
            {"if": {"properties": {"artifact": {"enum": ["hasse-ekor", "hasse-kr"]}}},
             "then": {"properties": {"data": {"$ref": "#/$defs/poset"}}}},
            {"if": {"properties": {"artifact": {"const": "newton"}}},
             "then": {"properties": {"data": {"type": "array", "items": {"$ref": "#/$defs/newton_class"}}}}},
        ],
    }
