################################################################################
#
# Exceptions raised while comparing expression trees.
#
# Author(s): Anonymous
################################################################################


class MetricError(ValueError):
    pass


class InvalidCostModel(MetricError):
    pass


class EmptyQuery(MetricError):
    pass


class RuleFormatError(MetricError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
