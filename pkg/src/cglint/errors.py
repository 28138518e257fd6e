"""Exception hierarchy for the validation framework."""


class CglintError(Exception):
    pass


class DuplicateRuleIdError(CglintError):
    pass


class UnknownRuleIdError(CglintError):
    pass


class UnknownPropertyError(CglintError):
    pass


class UnknownLanguageError(CglintError):
    pass


class ConfigSyntaxError(CglintError):
    def __init__(self, line, reason):
        super().__init__("line %d: %s" % (line, reason))
        self.line = line
        self.reason = reason


class SourceError(CglintError):
    """An error anchored at a source position. Fatal for the unit."""

    def __init__(self, span, message):
        super().__init__("%s:%d:%d: %s" % (span.file, span.row, span.col, message))
        self.span = span
        self.message = message


class LexError(SourceError):
    pass


class ParseError(SourceError):
    pass


class UndeclaredObjectError(ParseError):
    pass


class XmlSchemaError(CglintError):
    pass
