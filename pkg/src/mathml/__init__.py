from .errors import MathMLError, XmlError, NotMathML, InvalidMarkup
from .markup import ParallelMarkup, build_parallel_markup, empty_row
from .emitter import MATHML_NS, emit, presentation_element, content_element
from .reader import parse_mathml, parse_generic_xml
from .normalize import normalize_presentation
