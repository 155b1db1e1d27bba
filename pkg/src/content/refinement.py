################################################################################
#
# Switches for the context-sensitive refinements applied to content trees.
#
# Author(s): Anonymous
################################################################################

from dataclasses import dataclass

from src.util.config_util import CastingConfig

################################################################################
# configuration of the refinement rules


@dataclass
class RefinementConfig(CastingConfig):
    # superscripts become powers, unless they are Einstein indices
    power_rule: bool = True

    # subscripts become parameters of their base, text subscripts fuse with it
    subscript_rule: bool = True

    # identifiers read as functions are applied to the following operand
    function_apply_rule: bool = True

    # find indices raised once and lowered once within a product
    einstein_detection: bool = True

    @property
    def any_enabled(self) -> bool:
        return (
            self.power_rule
            or self.subscript_rule
            or self.function_apply_rule
            or self.einstein_detection
        )

    @classmethod
    def none(cls) -> "RefinementConfig":
        return cls(False, False, False, False)

    @classmethod
    def from_flags(cls, flags: str) -> "RefinementConfig":
        """
        Build from a comma separated flag list such as `power,subscript`.
        The words `all` and `none` select every or no refinement.
        """
        words = {w.strip() for w in flags.split(",") if w.strip()}

        if words == {"all"}:
            return cls()
        if words in (set(), {"none"}):
            return cls.none()

        known = {"power", "subscript", "apply", "einstein"}
        unknown = words - known

        if unknown:
            raise ValueError(f"unknown refinement flags {sorted(unknown)}, use {known}")

        return cls(
            power_rule="power" in words,
            subscript_rule="subscript" in words,
            function_apply_rule="apply" in words,
            einstein_detection="einstein" in words,
        )
