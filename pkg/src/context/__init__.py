from .errors import ContextError, NoContext
from .document import ContextDocument, Formula
from .candidates import DefiniensCandidate, MLPConfig, extract_candidates, score
from .symbols import identifiers, identify_symbols
from .filtering import Definition, filter_with_lexicon
from .pipeline import annotate
