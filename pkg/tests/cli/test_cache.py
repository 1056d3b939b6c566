import io
import json

import pytest

from siltinglib.cli import SCHEMA, digest, graph_from_document, load_cached_graph, load_corpus, run_command
from siltinglib.cli.cache import cache_path, graph_document, store_graph
from siltinglib.tautilt import exchange_graph


def _a2():
    algebra_file = load_corpus("linear_a2")
    return algebra_file, algebra_file.to_algebra()


def test_digest_depends_on_caps_and_field():
    algebra_file, _ = _a2()
    key = digest(algebra_file, "Q", {"max_nodes": 10, "max_dim": 5})
    assert key == digest(algebra_file, "Q", {"max_dim": 5, "max_nodes": 10})
    assert key != digest(algebra_file, "Q", {"max_nodes": 11, "max_dim": 5})
    assert key != digest(algebra_file, "F 2", {"max_nodes": 10, "max_dim": 5})
    assert len(key) == 64


def test_reload_matches_a_fresh_run(tmp_path):
    algebra_file, algebra = _a2()
    fresh = exchange_graph(algebra)
    path = store_graph(tmp_path, "k" * 64, fresh, algebra_file)
    assert path == cache_path(tmp_path, "k" * 64)
    assert json.loads(path.read_text())["schema"] == SCHEMA
    reloaded = load_cached_graph(tmp_path, "k" * 64, algebra)
    assert reloaded.keys() == fresh.keys()
    assert [(e.source, e.target) for e in reloaded.edges] == [(e.source, e.target) for e in fresh.edges]
    assert reloaded.edges == fresh.edges
    assert reloaded.complete


def test_tampered_node_is_discarded(tmp_path):
    algebra_file, algebra = _a2()
    graph = exchange_graph(algebra)
    path = store_graph(tmp_path, "t" * 64, graph, algebra_file)
    document = json.loads(path.read_text())
    for node in document["graph"]["nodes"]:
        node["gkeys"] = [[7, 7] for _ in node["gkeys"]]
    path.write_text(json.dumps(document))
    assert load_cached_graph(tmp_path, "t" * 64, algebra) is None


def test_missing_or_foreign_documents(tmp_path):
    algebra_file, algebra = _a2()
    assert load_cached_graph(None, "x", algebra) is None
    assert load_cached_graph(tmp_path, "x" * 64, algebra) is None
    document = graph_document(exchange_graph(algebra), algebra_file, "y" * 64)
    document["schema"] = "other/0"
    with pytest.raises(ValueError):
        graph_from_document(algebra, document)


def test_commands_reuse_the_cache(tmp_path):
    argv = ["enumerate", "--corpus", "linear_a2", "--cache-dir", str(tmp_path), "--format", "json"]
    first, second = io.StringIO(), io.StringIO()
    assert run_command(argv, stdout=first) == 0
    files = list(tmp_path.glob("exchange-*.json"))
    assert len(files) == 1
    assert run_command(argv, stdout=second) == 0
    assert json.loads(first.getvalue())["graph"] == json.loads(second.getvalue())["graph"]
    assert not list(tmp_path.glob("*.tmp"))
