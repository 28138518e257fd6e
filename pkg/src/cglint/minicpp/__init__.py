from .lexer import Token, lex
from .parser import NODE_KINDS, StmtClass, disambiguate_stmt, parse
from .symbols import build_minicpp_symbols

__all__ = [
    "Token",
    "lex",
    "parse",
    "disambiguate_stmt",
    "StmtClass",
    "NODE_KINDS",
    "build_minicpp_symbols",
]
