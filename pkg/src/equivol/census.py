"""planar_code streams, face tracing, and annotated census catalogs."""

from __future__ import annotations

import csv
import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator, Sequence

from .andreev import check as andreev_check
from .bounds import bounds_for, pi2_case
from .polyhedron import AbstractPolyhedron, AngleKind, PolyhedronError, build_from_face_cycles, rotation_system

logger = logging.getLogger(__name__)

HEADER = b">>planar_code<<"
_ENDIAN_HEADERS = (b">>planar_code le<<", b">>planar_code be<<")


class CensusError(ValueError):
    pass


class BadHeader(CensusError):
    pass


class TruncatedRecord(CensusError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class InconsistentRotation(CensusError):
    pass


class Unsupported(CensusError):
    pass


class NotSpherical(CensusError):
    pass


class ValidationFailed(CensusError):
    pass


@dataclass(frozen=True)
class PlanarEmbeddedGraph:
    """Rotation system: ``rotations[v]`` lists the neighbours of ``v`` in clockwise order."""

    n: int
    rotations: tuple[tuple[int, ...], ...]
    offset: int = 0

    @property
    def n_edges(self) -> int:
        return sum(len(r) for r in self.rotations) // 2

    def validate(self) -> None:
        if self.n < 1 or len(self.rotations) != self.n:
            raise InconsistentRotation(f"expected {self.n} rotation lists, got {len(self.rotations)}")
        seen: dict[tuple[int, int], int] = {}
        for v, rot in enumerate(self.rotations):
            for w in rot:
                if not 0 <= w < self.n:
                    raise InconsistentRotation(f"vertex {v} lists out-of-range neighbour {w}")
                seen[(v, w)] = seen.get((v, w), 0) + 1
        for (v, w), c in seen.items():
            if seen.get((w, v), 0) != c:
                raise InconsistentRotation(f"vertex {v} lists {w} but {w} does not list {v} equally often")


# -- planar_code -------------------------------------------------------------


def _header_length(data: bytes) -> int:
    if not data.startswith(b">>"):
        return 0
    end = data.find(b"<<")
    if end < 0:
        raise BadHeader("header starts with '>>' but is never closed by '<<'")
    header = data[: end + 2]
    if header == HEADER:
        return len(HEADER)
    if header in _ENDIAN_HEADERS:
        raise Unsupported(f"{header.decode(errors='replace')} (two-byte entries) is not supported")
    raise BadHeader(f"unrecognised header {header[:40]!r}")


def iter_planar_code(data: bytes, check: bool = True) -> Iterator[PlanarEmbeddedGraph]:
    """Yield graphs from a planar_code byte string; indices become 0-based.

    With ``check=False`` mutual consistency of the rotation lists is left to
    the caller (the census turns it into a per-graph error record).
    Structural damage (truncation, out-of-range bytes) always raises since
    the stream cannot be resynchronised.
    """
    pos = _header_length(data)
    end = len(data)
    while pos < end:
        start = pos
        n = data[pos]
        if n == 0:
            raise Unsupported(f"vertex count 0 marks a two-byte record at offset {start}; not supported")
        pos += 1
        rotations = []
        for v in range(n):
            nbrs = []
            while True:
                if pos >= end:
                    raise TruncatedRecord(f"record for graph at offset {start} ends inside vertex {v}", pos)
                b = data[pos]
                pos += 1
                if b == 0:
                    break
                if b > n:
                    raise InconsistentRotation(
                        f"neighbour {b} of vertex {v + 1} exceeds n={n} (graph at offset {start})"
                    )
                nbrs.append(b - 1)
            rotations.append(tuple(nbrs))
        g = PlanarEmbeddedGraph(n, tuple(rotations), start)
        if check:
            g.validate()
        yield g


def parse_planar_code(data: bytes, check: bool = True) -> list[PlanarEmbeddedGraph]:
    return list(iter_planar_code(data, check))


def serialize_planar_code(graphs: Iterable[PlanarEmbeddedGraph], header: bool = True) -> bytes:
    out = bytearray(HEADER if header else b"")
    for g in graphs:
        if not 1 <= g.n <= 255:
            raise Unsupported(f"cannot encode a graph with {g.n} vertices in one-byte planar_code")
        out.append(g.n)
        for rot in g.rotations:
            out.extend(w + 1 for w in rot)
            out.append(0)
    return bytes(out)


# -- conversion --------------------------------------------------------------


def trace_faces(g: PlanarEmbeddedGraph) -> list[tuple[int, ...]]:
    """Faces of the embedding: from dart ``u -> v`` continue with ``v -> w``,
    ``w`` the clockwise successor of ``u`` around ``v``."""
    pos = [{w: i for i, w in enumerate(rot)} for rot in g.rotations]
    used: set[tuple[int, int]] = set()
    faces = []
    for u in range(g.n):
        for v in g.rotations[u]:
            if (u, v) in used:
                continue
            face = []
            a, b = u, v
            while (a, b) not in used:
                used.add((a, b))
                face.append(a)
                rot = g.rotations[b]
                a, b = b, rot[(pos[b][a] + 1) % len(rot)]
            faces.append(tuple(face))
    return faces


def to_polyhedron(g: PlanarEmbeddedGraph) -> AbstractPolyhedron:
    g.validate()
    for v, rot in enumerate(g.rotations):
        if v in rot or len(set(rot)) != len(rot):
            raise ValidationFailed(f"vertex {v} has a loop or repeated neighbour")
    faces = trace_faces(g)
    chi = g.n - g.n_edges + len(faces)
    if chi != 2:
        raise NotSpherical(f"rotation system has Euler characteristic {chi}, not 2")
    try:
        return build_from_face_cycles(faces)
    except PolyhedronError as exc:
        raise ValidationFailed(f"{type(exc).__name__}: {exc}") from exc


def from_polyhedron(p: AbstractPolyhedron) -> PlanarEmbeddedGraph:
    return PlanarEmbeddedGraph(p.n_vertices, rotation_system(p))


# -- faces-JSON --------------------------------------------------------------


def load_faces_json(text: str) -> AbstractPolyhedron:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationFailed(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or not isinstance(doc.get("faces"), list):
        raise ValidationFailed('expected a JSON object with a "faces" list')
    return build_from_face_cycles(doc["faces"])


def dump_faces_json(p: AbstractPolyhedron, **extra) -> str:
    return json.dumps({**extra, "faces": [list(f) for f in p.faces]})


# -- catalog -----------------------------------------------------------------

FIELDS = (
    "id",
    "source",
    "kind",
    "n",
    "n_ideal",
    "n_finite",
    "f",
    "realizable",
    "failed_conditions",
    "lower",
    "lower_strict",
    "upper",
    "upper_strict",
    "notes",
)
CSV_FIELDS = ("id", "kind", "n", "realizable", "lower", "upper")


@dataclass(frozen=True)
class CatalogRecord:
    id: int
    source: str
    kind: str
    n: int
    n_ideal: int | None = None
    n_finite: int | None = None
    f: int | None = None
    realizable: bool = False
    failed_conditions: tuple[str, ...] = ()
    lower: float | None = None
    lower_strict: bool | None = None
    upper: float | None = None
    upper_strict: bool | None = None
    notes: dict = field(default_factory=dict)

    @property
    def case(self) -> str | None:
        return self.notes.get("case")

    def to_dict(self) -> dict:
        d = {name: getattr(self, name) for name in FIELDS}
        d["failed_conditions"] = list(self.failed_conditions)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CatalogRecord":
        kw = {name: d[name] for name in FIELDS}
        kw["failed_conditions"] = tuple(kw["failed_conditions"])
        return cls(**kw)


def annotate_one(g: PlanarEmbeddedGraph, kind: AngleKind | str, ident: int = 0, source: str = "-") -> CatalogRecord:
    """Never raises for bad graphs: failures become records with an ``error`` note."""
    kind = AngleKind.parse(kind)
    where = f"{source}@{g.offset}"
    try:
        p = to_polyhedron(g)
    except (CensusError, PolyhedronError) as exc:
        return CatalogRecord(ident, where, kind.value, g.n, notes={"error": f"{type(exc).__name__}: {exc}"})

    report = andreev_check(p, kind)
    base = dict(
        id=ident,
        source=where,
        kind=kind.value,
        n=p.n_vertices,
        n_ideal=report.n_ideal,
        n_finite=report.n_finite,
        f=p.n_faces,
        realizable=report.realizable,
        failed_conditions=tuple(report.failed_conditions),
    )
    if not report.realizable:
        witnesses = report.to_dict()["witnesses"]
        return CatalogRecord(**base, notes={"witnesses": {t: witnesses[t] for t in report.failed_conditions}})

    b = bounds_for(p, kind)
    notes = {"case": b.case if kind is AngleKind.PI3 else pi2_case(report)}
    if report.diagnostics:
        notes["diagnostics"] = list(report.diagnostics)
    return CatalogRecord(
        **base,
        lower=b.lower,
        lower_strict=b.lower_strict,
        upper=b.upper,
        upper_strict=b.upper_strict,
        notes=notes,
    )


def _annotate_job(args) -> CatalogRecord:
    return annotate_one(*args)


def annotate(
    graphs: Sequence[PlanarEmbeddedGraph],
    kind: AngleKind | str,
    jobs: int = 1,
    source: str = "-",
) -> list[CatalogRecord]:
    """One record per graph, in input order.  ``jobs > 1`` fans out to worker processes."""
    kind = AngleKind.parse(kind)
    tasks = [(g, kind, i, source) for i, g in enumerate(graphs)]
    if jobs <= 1 or len(tasks) < 2:
        return [_annotate_job(t) for t in tasks]
    chunk = max(1, len(tasks) // (4 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_annotate_job, tasks, chunksize=chunk))


def passes_cap(record: CatalogRecord, v: float) -> bool:
    if not record.realizable or record.lower is None:
        return False
    return record.lower < v or (record.lower == v and not record.lower_strict)


def filter_by_volume_cap(records: Iterable[CatalogRecord], v: float) -> list[CatalogRecord]:
    """Realizable records whose lower bound does not exclude volume ``<= v``."""
    return [r for r in records if passes_cap(r, v)]


def write_jsonl(records: Iterable[CatalogRecord], fh: IO[str]) -> None:
    for r in records:
        fh.write(json.dumps(r.to_dict(), separators=(", ", ": ")))
        fh.write("\n")


def dumps_jsonl(records: Iterable[CatalogRecord]) -> str:
    buf = io.StringIO()
    write_jsonl(records, buf)
    return buf.getvalue()


def read_jsonl(fh: IO[str]) -> list[CatalogRecord]:
    return [CatalogRecord.from_dict(json.loads(line)) for line in fh if line.strip()]


def write_csv(records: Iterable[CatalogRecord], fh: IO[str]) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in records:
        w.writerow(["" if getattr(r, c) is None else getattr(r, c) for c in CSV_FIELDS])
