"""Search orchestration: enumerate data over the catalog, classify each one,
and aggregate rows and summary tables.

Work is split into independent units (genus, group, signature).  Units are
pure functions of the catalog, so they can run in a process pool; the final
row list is produced by a deterministic sort and does not depend on the
schedule.  Unit results can be cached on disk keyed by the unit.
"""
from __future__ import annotations

import json
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .conditions import UNKNOWN, classify
from .covers import (admissible_signatures, format_datum, hurwitz_classes,
                     max_order, parse_datum)
from .groups import Catalog, FiniteGroup, GroupId, load_catalog

ANNOTATED = "annotated"

CSV_COLUMNS = ("gtilde,g,b,p,group_order,group_index,quot_order,quot_index,"
               "dimS2Vminus,dimS2Vplus,B1,B2,bge6,B_status,vector,sigma,witness")


@dataclass(frozen=True)
class SearchConfig:
    gtilde_min: int
    gtilde_max: int
    r: int = 4
    catalog_path: Optional[str] = None    # None = bundled catalog
    out_path: Optional[str] = None
    out_format: str = "csv"
    cache_dir: Optional[str] = None       # falls back to PRYMSEARCH_CACHE
    jobs: int = 1
    annotations_path: Optional[str] = None
    order_min: int = 1
    order_max: Optional[int] = None
    only_group: Optional[GroupId] = None

    def __post_init__(self):
        if self.gtilde_min < 2:
            raise ValueError("need gtilde >= 2")
        if self.gtilde_max < self.gtilde_min:
            raise ValueError("empty genus range")
        if self.r != 4:
            raise ValueError("condition checking requires r = 4")
        if self.out_format not in ("csv", "md", "jsonl"):
            raise ValueError("unknown output format %r" % self.out_format)


@dataclass(frozen=True)
class ResultRow:
    gtilde: int
    g: int
    b: int
    p: int
    number: int                 # 1-based position within the (gtilde,g,b) cell
    group: GroupId
    quot: GroupId
    dim_s2_minus: int
    dim_s2_plus: int
    B1: bool
    B2: Optional[bool]          # None = not consulted (B1 already holds)
    bge6: bool
    B_status: str
    vector: Tuple[int, ...]
    sigma: int
    witness: Optional[GroupId]

    @property
    def cell(self) -> Tuple[int, int, int]:
        return self.gtilde, self.g, self.b


def bundled_catalog_path() -> str:
    return os.path.join(os.path.dirname(__file__), "data", "catalog_72.jsonl")


def default_cache_dir(cfg: SearchConfig) -> Optional[str]:
    if cfg.cache_dir:
        return cfg.cache_dir
    return os.environ.get("PRYMSEARCH_CACHE") or None


# -- one work unit ----------------------------------------------------------

_WORK: dict = {}


def _init_worker(catalog_path: str, cache_dir: Optional[str]) -> None:
    _WORK["catalog"] = load_catalog(catalog_path)
    _WORK["cache"] = cache_dir


def _row_dict(rep, group: FiniteGroup, quot_id: GroupId,
              witness_id: Optional[GroupId]) -> dict:
    return {
        "gtilde": rep.gtilde, "g": rep.g, "b": rep.b, "p": rep.p,
        "group": [group.id.order, group.id.index],
        "quot": [quot_id.order, quot_id.index],
        "dimS2Vminus": rep.dim_S2_Vminus, "dimS2Vplus": rep.dim_S2_Vplus,
        "B1": rep.B1, "B2": rep.B2, "bge6": rep.b_ge6,
        "B_status": rep.B_status,
        "vector": list(rep.datum.vector), "sigma": rep.datum.sigma,
        "witness": [witness_id.order, witness_id.index] if witness_id else None,
    }


def _cache_file(cache_dir: str, gid: GroupId, sig: Sequence[int], r: int) -> str:
    key = "%d-%d-%s-r%d" % (gid.order, gid.index,
                            ".".join(str(m) for m in sig), r)
    return os.path.join(cache_dir, key + ".json")


def _write_atomic(path: str, payload: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(payload)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def search_unit(catalog: Catalog, gtilde: int, group: FiniteGroup,
                signature: Tuple[int, ...],
                cache_dir: Optional[str] = None) -> List[dict]:
    """Classify every equivalence class of data on one (group, signature);
    returns rows for the data satisfying condition (A)."""
    r = len(signature)
    if cache_dir:
        path = _cache_file(cache_dir, group.id, signature, r)
        if os.path.exists(path):
            with open(path, "r", encoding="utf-8") as fh:
                return json.loads(fh.read())
    rows = []
    for datum in hurwitz_classes(group, signature):
        rep = classify(group, datum.vector, datum.sigma)
        if rep.gtilde != gtilde or not rep.A:
            continue
        quot = catalog.match_id(_quot_group(group, datum.sigma))
        wid = None
        if rep.witness is not None:
            sub = group.subgroup_as_group(rep.witness.elements)
            wid = catalog.match_id(sub)
        rows.append(_row_dict(rep, group, quot, wid))
    if cache_dir:
        os.makedirs(cache_dir, exist_ok=True)
        _write_atomic(path, json.dumps(rows, separators=(",", ":")))
    return rows


def _quot_group(group: FiniteGroup, sigma: int) -> FiniteGroup:
    q, _ = group.quotient([0, sigma])
    return q


def _unit_entry(args) -> List[dict]:
    gtilde, order, index, signature = args
    catalog = _WORK["catalog"]
    group = catalog.group(GroupId(order, index))
    return search_unit(catalog, gtilde, group, tuple(signature), _WORK["cache"])


# -- the full sweep ---------------------------------------------------------

def _work_units(cfg: SearchConfig, catalog: Catalog) -> List[tuple]:
    units = []
    for gtilde in range(cfg.gtilde_min, cfg.gtilde_max + 1):
        bound = max_order(gtilde, cfg.r)
        if bound > catalog.bound:
            raise ValueError("catalog gap: genus %d needs groups of order %d, "
                             "catalog stops at %d" % (gtilde, bound, catalog.bound))
        top = bound if cfg.order_max is None else min(bound, cfg.order_max)
        for order in range(max(2, cfg.order_min), top + 1):
            for group in catalog.groups_of_order(order):
                if cfg.only_group and group.id != cfg.only_group:
                    continue
                if not group.central_involutions():
                    continue
                for sig in admissible_signatures(gtilde, order, cfg.r):
                    if all(any(o == m for o in group.elem_order) for m in sig):
                        units.append((gtilde, order, group.id.index, sig))
    return units


def _to_row(d: dict) -> ResultRow:
    return ResultRow(
        gtilde=d["gtilde"], g=d["g"], b=d["b"], p=d["p"], number=0,
        group=GroupId(*d["group"]), quot=GroupId(*d["quot"]),
        dim_s2_minus=d["dimS2Vminus"], dim_s2_plus=d["dimS2Vplus"],
        B1=d["B1"], B2=d["B2"], bge6=d["bge6"], B_status=d["B_status"],
        vector=tuple(d["vector"]), sigma=d["sigma"],
        witness=GroupId(*d["witness"]) if d["witness"] else None,
    )


def _merge_rows(chunks: Iterable[List[dict]]) -> List[ResultRow]:
    rows = [_to_row(d) for chunk in chunks for d in chunk]
    rows.sort(key=lambda r: (r.gtilde, -r.g, r.b, r.group.order, r.group.index,
                             r.vector, r.sigma))
    numbered = []
    last_cell, k = None, 0
    for r in rows:
        k = k + 1 if r.cell == last_cell else 1
        last_cell = r.cell
        numbered.append(replace(r, number=k))
    return numbered


def load_annotations(path: str) -> Dict[str, str]:
    """Map from datum text form to a note justifying condition (B)."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    out = {}
    for entry in data:
        out[entry["datum"]] = entry.get("note", "")
    return out


def apply_annotations(rows: List[ResultRow], notes: Dict[str, str],
                      catalog: Catalog) -> List[ResultRow]:
    """Upgrade rows whose status is open but which carry an ad hoc proof."""
    texts = {}
    for text in notes:
        group, vector, sigma = _parse_datum_text(text, catalog)
        texts[(group.id, vector, sigma)] = notes[text]
    out = []
    for r in rows:
        key = (r.group, r.vector, r.sigma)
        if r.B_status == UNKNOWN and key in texts:
            r = replace(r, B_status=ANNOTATED)
        out.append(r)
    return out


def _parse_datum_text(text: str, catalog: Catalog):
    return parse_datum(text, catalog)


def summarize(rows: List[ResultRow]) -> Dict[str, Dict[Tuple[int, int, int], int]]:
    """Per-cell counts: all condition-(A) rows, and the proved subset."""
    a_counts: Dict[Tuple[int, int, int], int] = {}
    proved: Dict[Tuple[int, int, int], int] = {}
    for r in rows:
        a_counts[r.cell] = a_counts.get(r.cell, 0) + 1
        if r.B_status != UNKNOWN:
            proved[r.cell] = proved.get(r.cell, 0) + 1
    return {"A": a_counts, "proved": proved}


def run_search(cfg: SearchConfig) -> Tuple[List[ResultRow], dict]:
    catalog_path = cfg.catalog_path or bundled_catalog_path()
    catalog = load_catalog(catalog_path)
    cache_dir = default_cache_dir(cfg)
    units = _work_units(cfg, catalog)

    if cfg.jobs <= 1:
        _init_worker(catalog_path, cache_dir)
        chunks = [_unit_entry(u) for u in units]
    else:
        with ProcessPoolExecutor(max_workers=cfg.jobs,
                                 initializer=_init_worker,
                                 initargs=(catalog_path, cache_dir)) as pool:
            chunks = list(pool.map(_unit_entry, units, chunksize=4))

    rows = _merge_rows(chunks)
    if cfg.annotations_path:
        rows = apply_annotations(rows, load_annotations(cfg.annotations_path),
                                 catalog)
    return rows, summarize(rows)


# -- output -----------------------------------------------------------------

def _flag(v: Optional[bool]) -> str:
    if v is None:
        return ""
    return "yes" if v else "no"


def rows_to_csv(rows: List[ResultRow]) -> str:
    lines = [CSV_COLUMNS]
    for r in rows:
        lines.append(",".join([
            str(r.gtilde), str(r.g), str(r.b), str(r.p),
            str(r.group.order), str(r.group.index),
            str(r.quot.order), str(r.quot.index),
            str(r.dim_s2_minus), str(r.dim_s2_plus),
            _flag(r.B1), _flag(r.B2), _flag(r.bge6), r.B_status,
            ".".join(str(x) for x in r.vector), str(r.sigma),
            str(r.witness) if r.witness else "",
        ]))
    return "\n".join(lines) + "\n"


def rows_to_jsonl(rows: List[ResultRow], catalog: Catalog) -> str:
    out = []
    for r in rows:
        group = catalog.group(r.group)
        out.append(json.dumps({
            "gtilde": r.gtilde, "g": r.g, "b": r.b, "p": r.p,
            "number": r.number,
            "group": str(r.group), "quot": str(r.quot),
            "dimS2Vminus": r.dim_s2_minus, "dimS2Vplus": r.dim_s2_plus,
            "B1": r.B1, "B2": r.B2, "bge6": r.bge6, "B_status": r.B_status,
            "datum": format_datum(group, r.vector, r.sigma),
            "witness": str(r.witness) if r.witness else None,
        }, separators=(",", ":")))
    return "\n".join(out) + "\n"


def _md_flags(r: ResultRow) -> str:
    mark = {True: "yes", False: "no", None: ""}
    return "%s | %s | %s" % (mark[r.B1], mark[r.B2], mark[r.bge6])


def rows_to_markdown(rows: List[ResultRow], summary: dict) -> str:
    lines = ["| gtilde | g | b | p | # | G | G/sigma | B1 | B2 | b>=6 | status |",
             "|---|---|---|---|---|---|---|---|---|---|---|"]
    for r in rows:
        lines.append("| %d | %d | %d | %d | %d | %s | %s | %s | %s |"
                     % (r.gtilde, r.g, r.b, r.p, r.number, r.group, r.quot,
                        _md_flags(r), r.B_status))
    lines.append("")
    lines.append("| gtilde | g | b | A-data | proved |")
    lines.append("|---|---|---|---|---|")
    for cell in sorted(summary["A"], key=lambda c: (c[0], -c[1], c[2])):
        lines.append("| %d | %d | %d | %d | %d |"
                     % (*cell, summary["A"][cell], summary["proved"].get(cell, 0)))
    return "\n".join(lines) + "\n"


def write_output(rows: List[ResultRow], summary: dict, cfg: SearchConfig) -> str:
    if cfg.out_format == "csv":
        text = rows_to_csv(rows)
    elif cfg.out_format == "jsonl":
        catalog = load_catalog(cfg.catalog_path or bundled_catalog_path())
        text = rows_to_jsonl(rows, catalog)
    else:
        text = rows_to_markdown(rows, summary)
    if cfg.out_path:
        _write_atomic_anywhere(cfg.out_path, text)
    return text


def _write_atomic_anywhere(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, suffix=".tmp")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)
