from siltinglib.cli.acceptance import Check, run_acceptance
from siltinglib.cli.cache import SCHEMA, digest, graph_from_document, load_cached_graph, store_graph
from siltinglib.cli.commands import EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION, main, run_command
from siltinglib.cli.corpus import CORPUS, CorpusEntry, UnknownCorpusEntry, load_corpus
from siltinglib.cli.fileformat import AlgebraFile, ParseError, SemanticError, parse_algebra_file
from siltinglib.cli.options import SentryOptions, SiltingOptions

__all__ = [
    "CORPUS",
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_VERIFICATION",
    "SCHEMA",
    "AlgebraFile",
    "Check",
    "CorpusEntry",
    "ParseError",
    "SemanticError",
    "SentryOptions",
    "SiltingOptions",
    "UnknownCorpusEntry",
    "digest",
    "graph_from_document",
    "load_cached_graph",
    "load_corpus",
    "main",
    "parse_algebra_file",
    "run_acceptance",
    "run_command",
    "store_graph",
]
