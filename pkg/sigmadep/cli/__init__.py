"""
Command line surface: expression parser, report model and click commands.
"""

# From parser.py
from .parser import (
    BinOp,
    Neg,
    Num,
    Pow,
    Sym,
    parse,
    parse_operator,
    parse_rational,
    parse_ratfunc,
    parse_skew,
    symbols,
    tokenize,
    unparse,
)

# From report.py
from .report import REQUIRED_KEYS, CommandReport

# From main.py
from .main import cli

__all__ = [
    # From parser.py
    "BinOp",
    "Neg",
    "Num",
    "Pow",
    "Sym",
    "parse",
    "parse_operator",
    "parse_rational",
    "parse_ratfunc",
    "parse_skew",
    "symbols",
    "tokenize",
    "unparse",
    # From report.py
    "REQUIRED_KEYS",
    "CommandReport",
    # From main.py
    "cli",
]
