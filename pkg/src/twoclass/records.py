"""Flat classification records and their CSV / JSON-lines encodings."""

import csv
import io
import json
from dataclasses import asdict, dataclass, fields

from twoclass.classifier import galois_structure, rank_kstar, rank_via_ambiguous_formula, validate_pair


@dataclass(frozen=True)
class ClassificationRecord:
    p: int
    q: int
    regime: str
    legendre_pq: int | None
    quartic_pq: int | None
    quartic_qp: int | None
    quartic_2p: int | None
    p_over_2: int | None
    eta: int | None
    t: int | None
    e: int | None
    rank: int
    verdict: str


FIELDS = [f.name for f in fields(ClassificationRecord)]
_SIGN_FIELDS = ("legendre_pq", "quartic_pq", "quartic_qp", "quartic_2p", "p_over_2", "eta")
_INT_FIELDS = ("p", "q", "t", "e", "rank")


def classify(p: int, q: int) -> ClassificationRecord:
    case = validate_pair(p, q)
    rank = rank_kstar(p, q)
    structure = galois_structure(p, q)
    t = e = None
    if case.regime in ("p1_q5", "p1_q3"):
        amb = rank_via_ambiguous_formula(p, q)
        t, e = amb.t, amb.e
    sym = rank.symbols()
    return ClassificationRecord(
        p=p,
        q=q,
        regime=case.regime,
        legendre_pq=sym.get("legendre_pq"),
        quartic_pq=sym.get("quartic_pq"),
        quartic_qp=sym.get("quartic_qp"),
        quartic_2p=sym.get("quartic_2p"),
        p_over_2=sym.get("p_over_2"),
        eta=sym.get("eta"),
        t=t,
        e=e,
        rank=rank.r,
        verdict=structure.verdict,
    )


def _cell(name: str, value) -> str:
    if value is None:
        return ""
    if name in _SIGN_FIELDS:
        return "+1" if value == 1 else "-1"
    return str(value)


def _parse(name: str, text: str):
    if name in ("regime", "verdict"):
        return text
    if text == "":
        return None
    return int(text)


def csv_header() -> str:
    return ",".join(FIELDS) + "\n"


def to_csv_row(rec: ClassificationRecord) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerow(_cell(n, getattr(rec, n)) for n in FIELDS)
    return buf.getvalue()


def to_json(rec: ClassificationRecord) -> str:
    return json.dumps(asdict(rec))


def read_csv(stream) -> list[ClassificationRecord]:
    reader = csv.DictReader(stream)
    if reader.fieldnames is None:
        return []
    if reader.fieldnames != FIELDS:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    return [ClassificationRecord(**{n: _parse(n, row[n]) for n in FIELDS}) for row in reader]


def read_jsonl(stream) -> list[ClassificationRecord]:
    return [ClassificationRecord(**json.loads(line)) for line in stream if line.strip()]
