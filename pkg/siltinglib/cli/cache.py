"""On-disk cache of exchange graphs, one JSON document per algebra and caps."""

from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Mapping, Optional

from Crypto.Hash import SHA256

from siltinglib.approx import VerificationFailed
from siltinglib.cli.fileformat import AlgebraFile
from siltinglib.quiveralg import BasedAlgebra
from siltinglib.repmod import Rep
from siltinglib.tautilt import Edge, ExchangeGraph, SiltingPair, exchanged_position, validate_pair

SCHEMA = "silting-lib/1"


def digest(algebra_file: AlgebraFile, field: str, caps: Mapping[str, int]) -> str:
    """SHA-256 of the canonical file text, the field and the caps."""
    canonical = json.dumps(
        {"algebra": algebra_file.render(), "field": field, "caps": dict(caps)}, sort_keys=True
    )
    return SHA256.new(canonical.encode("utf-8")).hexdigest()


def cache_path(cache_dir: Path, key: str) -> Path:
    return Path(cache_dir) / f"exchange-{key[:32]}.json"


def graph_document(graph: ExchangeGraph, algebra_file: AlgebraFile, key: str) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "exchange_graph",
        "digest": key,
        "algebra": algebra_file.render(),
        "level_sizes": list(graph.level_sizes),
        "graph": graph.to_dict(),
    }


def write_atomic(path: Path, document: dict) -> None:
    """Writes next to ``path`` and renames, so readers never see a partial file."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, temporary = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            json.dump(document, handle, indent=1)
        os.replace(temporary, path)
    except BaseException:
        if os.path.exists(temporary):
            os.remove(temporary)
        raise


def _pair_from_dict(algebra: BasedAlgebra, data: dict, seed: int) -> SiltingPair:
    summands = [
        Rep.from_matrices(algebra, m["dims"], m["arrows"], m.get("label")) for m in data["summands"]
    ]
    support = [algebra.quiver.vertex_index(name) for name in data["support_complement"]]
    pair = SiltingPair.from_summands(algebra, summands, support)
    if [list(g) for g in pair.gkeys] != data["gkeys"]:
        raise VerificationFailed(f"cached g-vectors {data['gkeys']} do not match {list(pair.gkeys)}")
    validation = validate_pair(pair, seed)
    if not validation:
        raise VerificationFailed(f"cached pair {pair!r} is invalid: {'; '.join(validation.diagnostics)}")
    return pair


def graph_from_document(algebra: BasedAlgebra, document: dict, seed: int = 0) -> ExchangeGraph:
    """
    Rebuilds a cached graph, validating every node again.

    :raises VerificationFailed: when a node is no longer a support τ-tilting pair
    :raises ValueError: for a document of another schema
    """
    if document.get("schema") != SCHEMA or document.get("kind") != "exchange_graph":
        raise ValueError(f"not an exchange graph document of schema {SCHEMA}")
    data = document["graph"]
    nodes = [_pair_from_dict(algebra, node, seed) for node in data["nodes"]]
    edges = []
    for source, target in data["edges"]:
        source_position = nodes[source].positions()[exchanged_position(nodes[target], nodes[source])]
        target_position = nodes[target].positions()[exchanged_position(nodes[source], nodes[target])]
        edges.append(Edge(source, target, source_position, target_position))
    return ExchangeGraph(
        algebra,
        nodes,
        edges,
        data["status"],
        list(data["caps_hit"]),
        list(document.get("level_sizes", [])),
    )


def load_cached_graph(cache_dir: Optional[Path], key: str, algebra: BasedAlgebra, seed: int = 0) -> Optional[ExchangeGraph]:
    """The cached graph for ``key``, or ``None`` when there is none or it no longer verifies."""
    if cache_dir is None:
        return None
    path = cache_path(cache_dir, key)
    if not path.exists():
        return None
    with open(path, encoding="utf-8") as handle:
        document = json.load(handle)
    if document.get("digest") != key:
        logging.warning("cache file %s belongs to another digest", path)
        return None
    try:
        graph = graph_from_document(algebra, document, seed)
    except (VerificationFailed, ValueError, KeyError) as e:
        logging.warning("discarding cache file %s: %s", path, e)
        return None
    logging.info("loaded %d nodes from %s", len(graph.nodes), path)
    return graph


def store_graph(cache_dir: Optional[Path], key: str, graph: ExchangeGraph, algebra_file: AlgebraFile) -> Optional[Path]:
    if cache_dir is None:
        return None
    path = cache_path(cache_dir, key)
    write_atomic(path, graph_document(graph, algebra_file, key))
    logging.info("cached exchange graph in %s", path)
    return path
