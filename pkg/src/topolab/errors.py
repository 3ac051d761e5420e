"""Exception types raised across the package."""


class TopolabError(Exception):
    pass


class InvalidParameterError(TopolabError, ValueError):
    """A generator or arithmetic routine got an argument outside its domain."""


class InvalidDegreeError(InvalidParameterError):
    pass


class DomainError(TopolabError, ValueError):
    """Family parameters (r, s) outside the range a closed form covers."""


class GraphParseError(TopolabError, ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"line {line}: "
        elif where:
            where += " "
        super().__init__(where + message)
