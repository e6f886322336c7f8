"""Search orchestration: work units, caching, merging, output formats."""
import csv
import io
import json
import os

import pytest

from prymsearch.groups import GroupId
from prymsearch.pipeline import (CSV_COLUMNS, ResultRow, SearchConfig,
                                 load_annotations, rows_to_csv, rows_to_jsonl,
                                 rows_to_markdown, run_search, search_unit,
                                 summarize, write_output)


def test_config_validation(catalog_path):
    with pytest.raises(ValueError):
        SearchConfig(gtilde_min=1, gtilde_max=3)
    with pytest.raises(ValueError):
        SearchConfig(gtilde_min=4, gtilde_max=3)
    with pytest.raises(ValueError):
        SearchConfig(gtilde_min=2, gtilde_max=3, r=5)
    with pytest.raises(ValueError):
        SearchConfig(gtilde_min=2, gtilde_max=3, out_format="yaml")
    cfg = SearchConfig(gtilde_min=2, gtilde_max=2, catalog_path=catalog_path)
    assert cfg.jobs == 1


def test_search_unit_caches(catalog, tmp_path):
    cache = str(tmp_path / "cache")
    got = search_unit(catalog, 2, catalog.group(GroupId(4, 1)), (2, 2, 4, 4), cache)
    assert len(got) == 1
    row = got[0]
    assert (row["gtilde"], row["g"], row["b"]) == (2, 0, 6)
    assert row["group"] == [4, 1] and row["quot"] == [2, 1]
    assert row["B1"] is True and row["B2"] is None
    files = os.listdir(cache)
    assert len(files) == 1
    # second call must hit the cache and agree byte for byte
    again = search_unit(catalog, 2, catalog.group(GroupId(4, 1)), (2, 2, 4, 4), cache)
    assert again == got


def test_search_unit_drops_condition_failures(catalog, tmp_path):
    # order-6 data at genus 2: the dihedral datum fails the invariant count
    rows = search_unit(catalog, 2, catalog.group(GroupId(6, 1)), (2, 2, 2, 6), None)
    assert rows == []


def test_run_search_single_cell(catalog_path, tmp_path):
    cfg = SearchConfig(gtilde_min=2, gtilde_max=2, catalog_path=catalog_path,
                       cache_dir=str(tmp_path / "c"))
    rows, summary = run_search(cfg)
    assert len(rows) == 4
    assert [r.number for r in rows] == [1, 2, 3, 4]
    ids = [(r.group.order, r.group.index) for r in rows]
    assert ids == sorted(ids)
    assert {(r.gtilde, r.g, r.b) for r in rows} == {(2, 0, 6)}
    counts = summary["A"]
    assert counts == {(2, 0, 6): 4}


def test_csv_exact_columns(catalog_path, tmp_path):
    cfg = SearchConfig(gtilde_min=2, gtilde_max=2, catalog_path=catalog_path,
                       cache_dir=str(tmp_path / "c"))
    rows, _ = run_search(cfg)
    text = rows_to_csv(rows)
    lines = text.strip().split("\n")
    assert lines[0] == CSV_COLUMNS
    assert len(lines) == 5
    reader = csv.DictReader(io.StringIO(text))
    rec = next(reader)
    assert rec["gtilde"] == "2" and rec["group_order"] == "4"
    assert rec["B1"] == "yes" and rec["B2"] == ""
    assert rec["vector"].count(".") == 3


def test_jsonl_and_markdown_render(catalog, catalog_path, tmp_path):
    cfg = SearchConfig(gtilde_min=2, gtilde_max=2, catalog_path=catalog_path,
                       cache_dir=str(tmp_path / "c"))
    rows, summary = run_search(cfg)
    jl = rows_to_jsonl(rows, catalog).strip().split("\n")
    assert len(jl) == 4
    first = json.loads(jl[0])
    assert first["gtilde"] == 2 and "datum" in first
    md = rows_to_markdown(rows, summary)
    assert md.count("|") > 20
    assert "G(4,1)" in md


def test_write_output_atomic(catalog_path, tmp_path):
    cfg = SearchConfig(gtilde_min=2, gtilde_max=2, catalog_path=catalog_path,
                       cache_dir=str(tmp_path / "c"),
                       out_path=str(tmp_path / "out.csv"))
    rows, summary = run_search(cfg)
    write_output(rows, summary, cfg)
    data = open(tmp_path / "out.csv").read()
    assert data.startswith(CSV_COLUMNS)


def test_parallel_matches_serial_small(catalog_path, tmp_path):
    a, _ = run_search(SearchConfig(gtilde_min=2, gtilde_max=3, jobs=1,
                                   catalog_path=catalog_path,
                                   cache_dir=str(tmp_path / "c1")))
    b, _ = run_search(SearchConfig(gtilde_min=2, gtilde_max=3, jobs=4,
                                   catalog_path=catalog_path,
                                   cache_dir=str(tmp_path / "c2")))
    assert rows_to_csv(a) == rows_to_csv(b)


def test_annotations_upgrade(catalog_path, tmp_path, annotations_path):
    cfg = SearchConfig(gtilde_min=7, gtilde_max=7, order_min=16, order_max=16,
                       catalog_path=catalog_path, cache_dir=str(tmp_path / "c"),
                       annotations_path=annotations_path)
    rows, _ = run_search(cfg)
    noted = [r for r in rows if r.B_status == "annotated"]
    assert len(noted) == 1
    r = noted[0]
    assert (r.gtilde, r.g, r.b) == (7, 3, 4)
    assert (r.group.order, r.group.index) == (16, 6)
    assert r.B1 is False and r.B2 is False and r.bge6 is False


def test_group_filter(catalog_path, tmp_path):
    cfg = SearchConfig(gtilde_min=5, gtilde_max=5, catalog_path=catalog_path,
                       cache_dir=str(tmp_path / "c"), only_group=GroupId(8, 4))
    rows, _ = run_search(cfg)
    assert rows
    assert all(r.group == GroupId(8, 4) for r in rows)
    assert {(r.g, r.b) for r in rows} == {(1, 8)}


def test_load_annotations_shape(annotations_path):
    notes = load_annotations(annotations_path)
    assert len(notes) >= 1
    for datum, note in notes.items():
        assert datum.startswith("G(") and note
