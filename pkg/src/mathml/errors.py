################################################################################
#
# Exceptions raised while reading and writing MathML.
#
# Author(s): Anonymous
################################################################################


class MathMLError(ValueError):
    pass


class XmlError(MathMLError):
    pass


class NotMathML(MathMLError):
    pass


class InvalidMarkup(MathMLError):
    pass
