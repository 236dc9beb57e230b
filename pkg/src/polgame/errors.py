"""Exception hierarchy shared by every polgame module."""


class PolgameError(Exception):
    """Base class; the CLI maps any of these to exit code 2."""


class ParseError(PolgameError):
    def __init__(self, message, pos=None, text=None):
        self.pos = pos
        self.text = text
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)


class DuplicateLabelError(PolgameError):
    pass


class PolarityError(PolgameError):
    pass


class NoMorphismError(PolarityError):
    """Raised for player-to-opponent sequents, which have no morphisms."""


class BudgetExceeded(PolgameError):
    def __init__(self, budget, nodes_so_far):
        self.budget = budget
        self.nodes_so_far = nodes_so_far
        super().__init__(
            f"expansion exceeded node budget {budget} "
            f"({nodes_so_far} nodes produced so far)")


class TimeoutExceeded(PolgameError):
    pass


class UnsupportedConnective(PolgameError):
    pass


class TypeCheckError(PolgameError):
    def __init__(self, rule, path, message):
        self.rule = rule
        self.path = tuple(path)
        where = "/".join(self.path) or "<root>"
        super().__init__(f"[{rule}] at {where}: {message}")


class ShapeMismatch(PolgameError):
    pass


class EngineDisagreement(PolgameError):
    pass
