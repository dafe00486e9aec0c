"""Generic character tables: model, JSON encoding, validation, fixtures and cache.

File format (``format: "zerograph-chartable"``)::

    {"format": "zerograph-chartable", "version": 1, "name": "SL2(3)",
     "source": "...", "order": 24,
     "classes": [{"label": "1a", "size": 1, "element_order": 1}, ...],
     "characters": [{"label": "X1", "degree": 1, "values": [1, 1, ...]}, ...]}

Values are JSON integers, ``{"rat": [p, q]}``,
``{"quad": {"a": [p, q], "b": [p, q], "d": d}}`` or
``{"cyclo": {"m": m, "coeffs": [[p, q], ...]}}``.
"""

from __future__ import annotations

import json
import os
import tempfile
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from importlib import resources
from pathlib import Path
from typing import Any, Iterable

from .cyclo import (
    CycloValue,
    ExactSum,
    ExactValue,
    MixedFieldError,
    QuadraticValue,
    conj,
    is_zero,
    simplify,
)

FORMAT = "zerograph-chartable"
FORMAT_VERSION = 1
CACHE_ENV = "ZEROGRAPH_CACHE_DIR"

FIXTURES = ("sl2_3", "s4", "gl2_3", "d8", "q8", "d16", "psl2_5", "psl2_7", "psl2_11")
OPTIONAL_FIXTURES = ("m12", "smallgroup_324_160")


class TableError(ValueError):
    """Base class for problems with a character table file."""


class TableFormatError(TableError):
    """The file does not parse or uses an unsupported value encoding."""


class TableValidationError(TableError):
    """A table invariant failed; ``report`` holds all witnesses."""

    def __init__(self, message: str, report: "VerificationReport") -> None:
        super().__init__(message)
        self.report = report


class CacheMiss(LookupError):
    """No usable cache entry; the caller should recompute."""


class CacheCorrupt(CacheMiss):
    """An entry exists but cannot be read or fails validation."""


@dataclass(frozen=True)
class ClassInfo:
    label: str
    size: int
    element_order: int


@dataclass(frozen=True)
class Character:
    label: str
    degree: int
    values: tuple[ExactValue, ...]


@dataclass(frozen=True)
class CharTable:
    name: str
    order: int
    classes: tuple[ClassInfo, ...]
    characters: tuple[Character, ...]
    source: str = ""
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    @cached_property
    def zero_mask(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(is_zero(v) for v in c.values) for c in self.characters)

    @cached_property
    def vanishing_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(j for j, z in enumerate(row) if z) for row in self.zero_mask)

    @cached_property
    def character_index(self) -> dict[str, int]:
        return {c.label: i for i, c in enumerate(self.characters)}

    @cached_property
    def class_index(self) -> dict[str, int]:
        return {k.label: j for j, k in enumerate(self.classes)}

    def nonlinear(self) -> list[int]:
        return [i for i, c in enumerate(self.characters) if c.degree > 1]


@dataclass
class VerificationReport:
    """Outcome of one check.  ``status`` is ``"pass"`` exactly when there are no witnesses."""

    check: str
    scope: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "fail" if self.witnesses else "pass"

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def to_dict(self, *, timings: bool = False) -> dict:
        out = {
            "check": self.check,
            "scope": self.scope,
            "status": self.status,
            "witnesses": self.witnesses,
            "details": self.details,
            "notes": self.notes,
        }
        if timings:
            out["timings"] = self.timings
        return _jsonable(out)

    def summary(self) -> str:
        scope = ", ".join(f"{k}={v}" for k, v in self.scope.items())
        extra = f" ({len(self.witnesses)} witnesses)" if self.witnesses else ""
        return f"{self.status.upper():4} {self.check} [{scope}]{extra}"


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in obj]
        return sorted(items, key=repr) if isinstance(obj, (set, frozenset)) else items
    if isinstance(obj, (QuadraticValue, CycloValue, Fraction)):
        return str(simplify(obj))
    return obj


# -- value encoding -----------------------------------------------------------


def _frac_pair(x: Fraction) -> list[int]:
    x = Fraction(x)
    return [x.numerator, x.denominator]


def encode_value(v: ExactValue) -> Any:
    v = simplify(v)
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return {"rat": _frac_pair(v)}
    if isinstance(v, QuadraticValue):
        return {"quad": {"a": _frac_pair(v.a), "b": _frac_pair(v.b), "d": v.d}}
    if isinstance(v, CycloValue):
        return {"cyclo": {"m": v.m, "coeffs": [_frac_pair(c) for c in v.coeffs]}}
    raise TableFormatError(f"cannot encode {v!r}")


def _decode_frac(pair: Any) -> Fraction:
    if isinstance(pair, int) and not isinstance(pair, bool):
        return Fraction(pair)
    if (
        not isinstance(pair, list)
        or len(pair) != 2
        or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)
        or pair[1] == 0
    ):
        raise TableFormatError(f"bad rational {pair!r}")
    return Fraction(pair[0], pair[1])


def decode_value(raw: Any) -> ExactValue:
    if isinstance(raw, bool):
        raise TableFormatError(f"unsupported value encoding {raw!r}")
    if isinstance(raw, int):
        return raw
    if isinstance(raw, dict) and len(raw) == 1:
        ((tag, body),) = raw.items()
        try:
            if tag == "rat":
                return simplify(_decode_frac(body))
            if tag == "quad":
                return simplify(
                    QuadraticValue(_decode_frac(body["a"]), _decode_frac(body["b"]), int(body["d"]))
                )
            if tag == "cyclo":
                coeffs = tuple(_decode_frac(c) for c in body["coeffs"])
                return simplify(CycloValue(int(body["m"]), coeffs))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, TableFormatError):
                raise
            raise TableFormatError(f"malformed {tag} value {body!r}: {exc}") from exc
    raise TableFormatError(f"unsupported value encoding {raw!r}")


# -- serialization ------------------------------------------------------------


def to_json_dict(t: CharTable) -> dict:
    out: dict[str, Any] = {"format": FORMAT, "version": FORMAT_VERSION, "name": t.name}
    if t.source:
        out["source"] = t.source
    if t.meta:
        out["meta"] = dict(t.meta)
    out["order"] = t.order
    out["classes"] = [
        {"label": k.label, "size": k.size, "element_order": k.element_order} for k in t.classes
    ]
    out["characters"] = [
        {"label": c.label, "degree": c.degree, "values": [encode_value(v) for v in c.values]}
        for c in t.characters
    ]
    return out


def dumps(t: CharTable) -> str:
    """Deterministic text: one class or character per line."""
    d = to_json_dict(t)
    head = {k: v for k, v in d.items() if k not in ("classes", "characters")}
    lines = ["{"]
    for k, v in head.items():
        lines.append(f"  {json.dumps(k)}: {json.dumps(v, sort_keys=True)},")
    for key in ("classes", "characters"):
        lines.append(f'  "{key}": [')
        items = [json.dumps(item, separators=(", ", ": ")) for item in d[key]]
        lines.extend(f"    {s}," for s in items[:-1])
        if items:
            lines.append(f"    {items[-1]}")
        lines.append("  ]," if key == "classes" else "  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def from_json_dict(data: Any) -> CharTable:
    if not isinstance(data, dict):
        raise TableFormatError("top level must be an object")
    if data.get("format", FORMAT) != FORMAT:
        raise TableFormatError(f"unknown format {data.get('format')!r}")
    try:
        classes = tuple(
            ClassInfo(str(k["label"]), int(k["size"]), int(k["element_order"]))
            for k in data["classes"]
        )
        characters = tuple(
            Character(str(c["label"]), int(c["degree"]), tuple(decode_value(v) for v in c["values"]))
            for c in data["characters"]
        )
        order = int(data["order"])
        name = str(data.get("name", ""))
    except (KeyError, TypeError) as exc:
        raise TableFormatError(f"missing or malformed field: {exc}") from exc
    for c in characters:
        if len(c.values) != len(classes):
            raise TableFormatError(f"character {c.label} has {len(c.values)} values for {len(classes)} classes")
    return CharTable(
        name=name,
        order=order,
        classes=classes,
        characters=characters,
        source=str(data.get("source", "")),
        meta=dict(data.get("meta", {})),
    )


def loads(text: str) -> CharTable:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableFormatError(f"parse error: {exc}") from exc
    return from_json_dict(data)


# -- validation ---------------------------------------------------------------


def _inner(t: CharTable, i: int, j: int) -> ExactSum:
    acc = ExactSum()
    for k, a, b in zip(t.classes, t.characters[i].values, t.characters[j].values):
        if is_zero(a) or is_zero(b):
            continue
        acc.add(k.size * a * conj(b))
    return acc


def _column_inner(t: CharTable, p: int, q: int) -> ExactSum:
    acc = ExactSum()
    for c in t.characters:
        a, b = c.values[p], c.values[q]
        if is_zero(a) or is_zero(b):
            continue
        acc.add(a * conj(b))
    return acc


def validate(t: CharTable, *, columns: bool = True) -> VerificationReport:
    """Check every table invariant; witnesses name the first thing that broke in each family."""
    start = time.perf_counter()
    w: list[dict] = []
    if not t.classes:
        w.append({"invariant": "nonempty", "message": "no classes"})
    if sum(k.size for k in t.classes) != t.order:
        w.append({"invariant": "class_sizes_sum", "sum": sum(k.size for k in t.classes), "order": t.order})
    identity = [j for j, k in enumerate(t.classes) if k.size == 1 and k.element_order == 1]
    if identity != [0]:
        w.append({"invariant": "identity_class_first", "identity_like_classes": identity})
    if any(k.size < 1 or k.element_order < 1 for k in t.classes):
        w.append({"invariant": "positive_class_data"})
    if len(t.characters) != len(t.classes):
        w.append({"invariant": "square_table", "characters": len(t.characters), "classes": len(t.classes)})
    for c in t.characters:
        if c.degree < 1 or (t.classes and c.values[0] != c.degree):
            w.append({"invariant": "degree_at_identity", "character": c.label, "degree": c.degree})
    if sum(c.degree**2 for c in t.characters) != t.order:
        w.append({"invariant": "sum_of_squared_degrees", "sum": sum(c.degree**2 for c in t.characters), "order": t.order})
    if not w:
        try:
            for i in range(len(t.characters)):
                for j in range(i, len(t.characters)):
                    acc = _inner(t, i, j)
                    if not acc.equals(t.order if i == j else 0):
                        w.append(
                            {
                                "invariant": "row_orthogonality",
                                "pair": [t.characters[i].label, t.characters[j].label],
                                "value": str(acc),
                                "expected": t.order if i == j else 0,
                            }
                        )
            if columns:
                for p in range(len(t.classes)):
                    for q in range(p, len(t.classes)):
                        acc = _column_inner(t, p, q)
                        expected = t.order // t.classes[p].size if p == q else 0
                        if p == q and t.order % t.classes[p].size:
                            expected = Fraction(t.order, t.classes[p].size)
                        if not acc.equals(expected):
                            w.append(
                                {
                                    "invariant": "column_orthogonality",
                                    "pair": [t.classes[p].label, t.classes[q].label],
                                    "value": str(acc),
                                    "expected": str(expected),
                                }
                            )
        except (MixedFieldError, ValueError) as exc:
            w.append({"invariant": "supported_arithmetic", "message": str(exc)})
    return VerificationReport(
        check="validate",
        scope={"group": t.name},
        witnesses=w,
        details={"classes": len(t.classes), "characters": len(t.characters)},
        timings={"seconds": time.perf_counter() - start},
    )


def ingest_text(text: str) -> CharTable:
    t = loads(text)
    report = validate(t)
    if not report.passed:
        first = report.witnesses[0]
        raise TableValidationError(f"{t.name or 'table'}: invariant {first['invariant']} violated: {first}", report)
    return t


def ingest(path: str | os.PathLike) -> CharTable:
    """Read and fully validate a table file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise TableFormatError(f"cannot read {path}: {exc}") from exc
    return ingest_text(text)


def load_fixture(name: str) -> CharTable:
    """A bundled table, e.g. ``load_fixture("psl2_11")``."""
    ref = resources.files("zerograph") / "fixtures" / f"{name}.json"
    if not ref.is_file():
        raise FileNotFoundError(f"no bundled fixture {name!r}")
    return ingest_text(ref.read_text(encoding="utf-8"))


def fixture_tags(t: CharTable) -> set[str]:
    return set(t.meta.get("tags", []))


def available_optional_fixtures() -> list[str]:
    base = resources.files("zerograph") / "fixtures"
    return [n for n in OPTIONAL_FIXTURES if (base / f"{n}.json").is_file()]


def tables_equal(a: CharTable, b: CharTable) -> bool:
    """Equality of the mathematical content (labels, sizes, orders and values)."""
    if (a.name, a.order, a.classes) != (b.name, b.order, b.classes):
        return False
    if len(a.characters) != len(b.characters):
        return False
    for x, y in zip(a.characters, b.characters):
        if (x.label, x.degree) != (y.label, y.degree):
            return False
        if any(simplify(u) != simplify(v) for u, v in zip(x.values, y.values)):
            return False
    return True


# -- cache ----------------------------------------------------------------------


def cache_dir(explicit: str | os.PathLike | None = None) -> Path | None:
    if explicit is not None:
        return Path(explicit)
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else None


def cache_path(directory: str | os.PathLike, kind: str, n: int) -> Path:
    if kind not in ("sn", "an"):
        raise ValueError(f"unknown cache kind {kind!r}")
    return Path(directory) / f"{kind}-{n}-v{FORMAT_VERSION}.json"


def cache_store(t: CharTable, directory: str | os.PathLike) -> Path:
    """Write atomically: a temporary file in the same directory, then rename."""
    kind, n = t.meta.get("kind"), t.meta.get("n")
    target = cache_path(directory, kind, n)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=target.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(dumps(t))
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return target


def cache_load(directory: str | os.PathLike, kind: str, n: int) -> CharTable:
    path = cache_path(directory, kind, n)
    if not path.is_file():
        raise CacheMiss(f"{kind}:{n}")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
        if data.get("version") != FORMAT_VERSION:
            raise CacheMiss(f"{kind}:{n} has format version {data.get('version')}")
        t = from_json_dict(data)
        report = validate(t, columns=False)
    except CacheMiss:
        raise
    except (OSError, ValueError, TypeError, AttributeError) as exc:
        raise CacheCorrupt(f"{path}: {exc}") from exc
    if not report.passed or t.meta.get("kind") != kind or t.meta.get("n") != n:
        raise CacheCorrupt(f"{path}: entry failed validation")
    return t


def iter_fixtures(names: Iterable[str] = FIXTURES) -> Iterable[CharTable]:
    for name in names:
        yield load_fixture(name)
