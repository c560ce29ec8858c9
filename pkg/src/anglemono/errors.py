"""Exception hierarchy shared by every module."""


class AngleMonoError(Exception):
    pass


class DegenerateInputError(AngleMonoError, ValueError):
    """Coincident points, collinear input, or another degenerate configuration."""


class CocircularError(DegenerateInputError):
    def __init__(self, ids):
        self.ids = tuple(ids)
        super().__init__(f"cocircular points {self.ids}")


class GeneralPositionError(DegenerateInputError):
    def __init__(self, u, v, msg="pair lies on a line parallel to a cone boundary"):
        self.pair = (u, v)
        super().__init__(f"{msg}: ({u}, {v})")


class FormatError(AngleMonoError, ValueError):
    def __init__(self, line, msg):
        self.line = line
        super().__init__(f"line {line}: {msg}")


class PathError(AngleMonoError, ValueError):
    pass


class DisconnectedError(AngleMonoError):
    def __init__(self, a, b):
        self.pair = (a, b)
        super().__init__(f"graph is disconnected: {a} and {b} lie in different components")


class InvariantError(AngleMonoError, RuntimeError):
    """An internal guarantee failed. Always a bug, never bad input."""


class GeneratorError(InvariantError):
    pass
