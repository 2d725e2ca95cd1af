"""Command line, JSON documents, pictures and the numeric cross-check."""

from .corpus import CorpusRow, load_corpus, run_corpus
from .main import main
from .numeric import numeric_residual, verify_numeric
from .parse import ParseError, format_curve_expression, parse_curve_expression, parse_expression
from .report import emit_report, load_report, report_document
from .schema import SchemaError, curve_doc, curve_from_doc
from .svg import emit_svg

__all__ = [
    "CorpusRow", "ParseError", "SchemaError", "curve_doc", "curve_from_doc", "emit_report",
    "emit_svg", "format_curve_expression", "load_corpus", "load_report", "main",
    "numeric_residual", "parse_curve_expression", "parse_expression", "report_document",
    "run_corpus", "verify_numeric",
]
