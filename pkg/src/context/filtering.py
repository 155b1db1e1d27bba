################################################################################
#
# Keep the definiens candidates the lexicon knows about and choose the best
# one per identifier.
#
# Author(s): Anonymous
################################################################################

from typing import Dict, List, NamedTuple, Optional, Sequence

from src.context.candidates import DefiniensCandidate
from src.semantics.annotation import Reading, Role, SemanticAnnotation
from src.semantics.lexicon import Lexicon

################################################################################
# the chosen definition of an identifier

# definiens head words which state the role of an identifier
ROLE_WORDS = {
    "function": Role.function,
    "functions": Role.function,
    "operator": Role.operator,
    "operators": Role.operator,
    "constant": Role.constant,
    "constants": Role.constant,
    "variable": Role.identifier,
    "variables": Role.identifier,
    "identifier": Role.identifier,
    "parameter": Role.identifier,
    "parameters": Role.identifier,
}


class Definition(NamedTuple):
    definiens: Optional[str]
    role: Role
    annotation: Optional[SemanticAnnotation] = None

    @property
    def reading(self) -> Reading:
        return Reading(self.role, self.annotation)


UNDEFINED = Definition(None, Role.identifier)


################################################################################
# filtering


def filter_with_lexicon(
    candidates: Sequence[DefiniensCandidate], lexicon: Lexicon
) -> Dict[str, Definition]:
    """
    Map every identifier of `candidates` to its best definition. A candidate
    survives when its definiens names a lexicon entry or a role such as
    "function"; identifiers without a survivor read as plain identifiers.
    """
    labels = lexicon.labels()
    chosen: Dict[str, Definition] = {}

    for candidate in candidates:
        if chosen.get(candidate.identifier, UNDEFINED) is not UNDEFINED:
            continue

        definition = _match(candidate, labels)
        chosen[candidate.identifier] = definition if definition else UNDEFINED

    return chosen


def _match(candidate: DefiniensCandidate, labels) -> Optional[Definition]:
    definiens = candidate.definiens.lower()
    words = definiens.split()

    matches: List[Reading] = [
        reading
        for label, lexeme, reading in sorted(
            labels, key=lambda t: t[1] != candidate.identifier
        )
        if definiens == label or definiens.endswith(" " + label)
    ]

    if matches:
        reading = matches[0]
        return Definition(candidate.definiens, reading.role, reading.annotation)

    if words and words[-1] in ROLE_WORDS:
        return Definition(candidate.definiens, ROLE_WORDS[words[-1]])

    return None
