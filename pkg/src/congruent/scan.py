"""Range scanner and result persistence.

The scan walks candidates n = 3 (mod 8) up to a bound, keeps those of shape
p_1 ... p_t * q with both hypothesis conditions, and emits one row per
survivor in increasing n.  Rows carry the exact table columns: class numbers,
the Legendre triple, the congruence verdict, and the independent Tunnell
label.

CSV is the 7-bit machine format (prime product joined by "*"); the pretty
printer uses the dot separator.  A flat append-only cache file of
"discriminant class_number" lines makes a re-scan skip every class-number
recomputation; corrupt trailing records are dropped on load.
"""

from __future__ import annotations

import csv
import json
import os
import sys
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, TextIO

from . import classgroup
from .arith import NotSquarefree, legendre
from .criteria import CriterionReport, check_report_invariants, evaluate
from .redei import WrongResidueShape, build_hypothesis
from .tunnell import TunnellTable

CSV_COLUMNS = (
    "n",
    "q",
    "p_product",
    "legendre_triple",
    "h_n",
    "h_nq",
    "modulus",
    "congruence_holds",
    "tunnell_label",
    "verdict",
)


@dataclass(frozen=True)
class ScanRow:
    n: int
    q: int
    p_list: tuple[int, ...]
    legendre_triple: tuple[int, ...]
    h_n: int
    h_nq: int
    modulus: int
    congruence_holds: bool
    tunnell_label: str
    verdict: str

    @property
    def p_product(self) -> str:
        return "*".join(str(p) for p in self.p_list)

    @property
    def p_product_pretty(self) -> str:
        return "·".join(str(p) for p in self.p_list)

    @property
    def triple_str(self) -> str:
        return "(" + ",".join(str(s) for s in self.legendre_triple) + ")"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "p_product": self.p_product,
            "legendre_triple": self.triple_str,
            "h_n": self.h_n,
            "h_nq": self.h_nq,
            "modulus": self.modulus,
            "congruence_holds": self.congruence_holds,
            "tunnell_label": self.tunnell_label,
            "verdict": self.verdict,
        }


def row_from_report(report: CriterionReport) -> ScanRow:
    h = report.hypothesis
    ps = h.p_list
    triple = tuple(legendre(h.q, p) for p in ps) + tuple(
        legendre(ps[i], ps[j]) for i in range(len(ps)) for j in range(i + 1, len(ps))
    )
    return ScanRow(
        n=report.n,
        q=h.q,
        p_list=ps,
        legendre_triple=triple,
        h_n=report.h_n,
        h_nq=report.h_nq,
        modulus=report.modulus,
        congruence_holds=report.congruence_holds,
        tunnell_label=report.tunnell_label.value,
        verdict=report.verdict.value,
    )


def _smallest_prime_factors(limit: int) -> list[int]:
    spf = [0] * (limit + 1)
    for i in range(2, limit + 1):
        if spf[i] == 0:
            for j in range(i, limit + 1, i):
                if spf[j] == 0:
                    spf[j] = i
    return spf


def _shape_candidates(limit: int) -> Iterator[int]:
    """Squarefree n <= limit with exactly one prime = 3 and the rest = 1 (mod 8)."""
    spf = _smallest_prime_factors(limit)
    for n in range(3, limit + 1, 8):
        v = n
        seen_q = 0
        ok = True
        while v > 1:
            p = spf[v]
            v //= p
            if v % p == 0:
                ok = False
                break
            r = p % 8
            if r == 3:
                seen_q += 1
                if seen_q > 1:
                    ok = False
                    break
            elif r != 1:
                ok = False
                break
        if ok and seen_q == 1 and n != spf[n]:
            yield n


class ClassNumberCache:
    """Append-only file of "discriminant h" lines, tolerant of a torn tail."""

    def __init__(self, path: Optional[str] = None):
        self.path = path
        self.known: set[int] = set()
        self.hits = 0
        if path is not None:
            entries = self._load(path)
            classgroup.seed_cache(entries)
            self.known = set(entries)

    @staticmethod
    def _load(path: str) -> dict[int, int]:
        entries: dict[int, int] = {}
        try:
            with open(path, "r", encoding="ascii") as fh:
                good_bytes = 0
                for line in fh:
                    parts = line.split()
                    if len(parts) != 2 or not line.endswith("\n"):
                        break
                    try:
                        d, h = int(parts[0]), int(parts[1])
                    except ValueError:
                        break
                    entries[d] = h
                    good_bytes += len(line)
        except FileNotFoundError:
            return {}
        try:
            if os.path.getsize(path) != good_bytes:
                with open(path, "r+", encoding="ascii") as fh:
                    fh.truncate(good_bytes)
        except OSError:
            pass
        return entries

    def note(self, discriminant: int) -> None:
        if discriminant in self.known:
            self.hits += 1

    def record_new(self, discriminant: int) -> None:
        if discriminant in self.known:
            return
        h = classgroup.cached_discriminants().get(discriminant)
        if h is None:
            return
        self.known.add(discriminant)
        if self.path is not None:
            with open(self.path, "a", encoding="ascii") as fh:
                fh.write(f"{discriminant} {h}\n")


def scan(
    limit: int,
    t_filter: Optional[int] = None,
    table: Optional[TunnellTable] = None,
    cache: Optional[ClassNumberCache] = None,
    on_error=None,
) -> Iterator[ScanRow]:
    """Yield a ScanRow for every hypothesis n <= limit, in increasing n.

    Computation errors abort the offending row via on_error (default: stderr
    note) and the scan continues; invariant violations propagate, loudly.
    """
    if limit < 3:
        raise ValueError(f"need limit >= 3, got {limit}")
    if table is None:
        table = TunnellTable(limit)
    if cache is None:
        cache = ClassNumberCache(None)
    if on_error is None:
        on_error = lambda n, exc: print(f"scan: n = {n} skipped: {exc}", file=sys.stderr)
    for n in _shape_candidates(limit):
        try:
            h = build_hypothesis(n)
        except (NotSquarefree, WrongResidueShape):
            continue
        if not h.holds():
            continue
        if t_filter is not None and h.t != t_filter:
            continue
        discs = (
            classgroup.fundamental_discriminant(n).D,
            classgroup.fundamental_discriminant(h.n_q).D,
        )
        for d in discs:
            cache.note(d)
        try:
            report = evaluate(n, table=table)
        except (ValueError, ArithmeticError) as exc:
            on_error(n, exc)
            continue
        check_report_invariants(report)
        for d in discs:
            cache.record_new(d)
        yield row_from_report(report)


def _bool_str(b: bool) -> str:
    return "true" if b else "false"


def emit(rows: Iterable[ScanRow], fmt: str, target) -> None:
    """Write rows as CSV (header + one line each) or a JSON array.

    target is a path or an open text file; I/O failures carry the path.
    """
    if fmt not in ("csv", "json"):
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(target, (str, bytes)):
        try:
            with open(target, "w", encoding="utf-8", newline="") as fh:
                _emit_to(rows, fmt, fh)
        except OSError as exc:
            raise OSError(f"cannot write {target!r}: {exc}") from exc
    else:
        _emit_to(rows, fmt, target)


def _emit_to(rows: Iterable[ScanRow], fmt: str, fh: TextIO) -> None:
    if fmt == "csv":
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            d = row.to_dict()
            writer.writerow(
                [
                    d["n"],
                    d["q"],
                    d["p_product"],
                    d["legendre_triple"],
                    d["h_n"],
                    d["h_nq"],
                    d["modulus"],
                    _bool_str(d["congruence_holds"]),
                    d["tunnell_label"],
                    d["verdict"],
                ]
            )
    else:
        json.dump([row.to_dict() for row in rows], fh, indent=2)
        fh.write("\n")


def _row_from_dict(d: dict) -> ScanRow:
    triple = tuple(int(s) for s in d["legendre_triple"].strip("()").split(",") if s)
    return ScanRow(
        n=int(d["n"]),
        q=int(d["q"]),
        p_list=tuple(int(p) for p in d["p_product"].split("*")),
        legendre_triple=triple,
        h_n=int(d["h_n"]),
        h_nq=int(d["h_nq"]),
        modulus=int(d["modulus"]),
        congruence_holds=d["congruence_holds"] in (True, "true"),
        tunnell_label=d["tunnell_label"],
        verdict=d["verdict"],
    )


def read_rows(source, fmt: str) -> list[ScanRow]:
    """Inverse of emit, for both formats: reads back exactly what was written."""
    if fmt not in ("csv", "json"):
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(source, (str, bytes)):
        with open(source, "r", encoding="utf-8", newline="") as fh:
            return read_rows(fh, fmt)
    if fmt == "csv":
        reader = csv.reader(source)
        header = next(reader, None)
        if header is not None and tuple(header) != CSV_COLUMNS:
            raise ValueError(f"unexpected CSV header {header}")
        return [_row_from_dict(dict(zip(CSV_COLUMNS, line))) for line in reader]
    return [_row_from_dict(d) for d in json.load(source)]
