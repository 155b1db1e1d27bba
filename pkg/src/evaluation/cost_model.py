################################################################################
#
# Prices of the edit operations of the tree edit distance.
#
# Author(s): Anonymous
################################################################################

from dataclasses import dataclass

from src.evaluation.errors import InvalidCostModel
from src.util.config_util import CastingConfig

################################################################################
# the cost model


@dataclass
class CostModel(CastingConfig):
    insert: float = 1.0
    delete: float = 1.0
    rename: float = 1.0

    # price of a rewrite between equivalent subtrees
    shortcut: float = 0.5

    shortcuts_enabled: bool = False

    def __post_init__(self):
        super().__post_init__()

        for name in ("insert", "delete", "rename", "shortcut"):
            value = getattr(self, name)

            if value < 0:
                raise InvalidCostModel(f"cost {name} must be non-negative, {value=}")

        if self.shortcuts_enabled and not (self.shortcut < self.rename < self.insert):
            raise InvalidCostModel(
                f"shortcuts require shortcut < rename < insert, got {self.tag}"
            )

    @classmethod
    def structural(cls) -> "CostModel":
        """
        Label-blind costs: renames are free.
        """
        return cls(insert=1, delete=1, rename=0)

    @classmethod
    def with_shortcuts(cls) -> "CostModel":
        return cls(
            insert=1, delete=1, rename=0.75, shortcut=0.5, shortcuts_enabled=True
        )

    @classmethod
    def parse(cls, costs: str) -> "CostModel":
        """
        Read `i,d,r` or `i,d,r,e`. Giving a shortcut price enables shortcuts.
        """
        try:
            values = [float(v) for v in costs.split(",")]
        except ValueError as e:
            raise InvalidCostModel(f"costs must be numbers, {costs=}") from e

        if len(values) == 3:
            return cls(*values)
        if len(values) == 4:
            return cls(*values, shortcuts_enabled=True)

        raise InvalidCostModel(f"expected 3 or 4 comma separated costs, {costs=}")

    @property
    def tag(self) -> str:
        return cost_tag(self.insert, self.delete, self.rename, self.shortcut)


def cost_tag(insert, delete, rename, shortcut=None) -> str:
    def fmt(v) -> str:
        return f"{float(v):g}"

    tag = f"i{fmt(insert)}-d{fmt(delete)}-r{fmt(rename)}"

    if shortcut is not None:
        tag += f"-e{fmt(shortcut)}"

    return tag
