from . import cpp, seq
from .cpp import CPP_RULES
from .seq import SEQ_RULES

RULES_BY_LANGUAGE = {
    "minicpp": CPP_RULES,
    "seqdiag": SEQ_RULES,
}

__all__ = ["cpp", "seq", "CPP_RULES", "SEQ_RULES", "RULES_BY_LANGUAGE"]
