################################################################################
#
# The TeX symbol commands understood by the parser, with the text and the
# MathML token element they render to. Within each table the first command
# listed for a given text is the canonical spelling used when printing.
#
# Author(s): Anonymous
################################################################################

from typing import Dict, Tuple

################################################################################
# identifiers

GREEK = {
    "\\alpha": "α",
    "\\beta": "β",
    "\\gamma": "γ",
    "\\delta": "δ",
    "\\epsilon": "ϵ",
    "\\varepsilon": "ε",
    "\\zeta": "ζ",
    "\\eta": "η",
    "\\theta": "θ",
    "\\vartheta": "ϑ",
    "\\iota": "ι",
    "\\kappa": "κ",
    "\\lambda": "λ",
    "\\mu": "μ",
    "\\nu": "ν",
    "\\xi": "ξ",
    "\\pi": "π",
    "\\varpi": "ϖ",
    "\\rho": "ρ",
    "\\varrho": "ϱ",
    "\\sigma": "σ",
    "\\varsigma": "ς",
    "\\tau": "τ",
    "\\upsilon": "υ",
    "\\phi": "ϕ",
    "\\varphi": "φ",
    "\\chi": "χ",
    "\\psi": "ψ",
    "\\omega": "ω",
    "\\Gamma": "Γ",
    "\\Delta": "Δ",
    "\\Theta": "Θ",
    "\\Lambda": "Λ",
    "\\Xi": "Ξ",
    "\\Pi": "Π",
    "\\Sigma": "Σ",
    "\\Upsilon": "Υ",
    "\\Phi": "Φ",
    "\\Psi": "Ψ",
    "\\Omega": "Ω",
}

LETTERLIKE = {
    "\\Re": "ℜ",
    "\\Im": "ℑ",
    "\\ell": "ℓ",
    "\\hbar": "ℏ",
    "\\infty": "∞",
    "\\emptyset": "∅",
    "\\aleph": "ℵ",
    "\\imath": "ı",
    "\\jmath": "ȷ",
}

# multi-letter function names rendered upright
FUNCTION_NAMES = [
    "sin",
    "cos",
    "tan",
    "cot",
    "sec",
    "csc",
    "arcsin",
    "arccos",
    "arctan",
    "sinh",
    "cosh",
    "tanh",
    "coth",
    "log",
    "ln",
    "lg",
    "exp",
    "det",
    "dim",
    "ker",
    "hom",
    "max",
    "min",
    "sup",
    "inf",
    "lim",
    "limsup",
    "liminf",
    "arg",
    "deg",
    "gcd",
    "Pr",
]

################################################################################
# operators

RELATIONS = {
    "\\leq": "≤",
    "\\le": "≤",
    "\\geq": "≥",
    "\\ge": "≥",
    "\\neq": "≠",
    "\\ne": "≠",
    "\\approx": "≈",
    "\\equiv": "≡",
    "\\sim": "∼",
    "\\simeq": "≃",
    "\\cong": "≅",
    "\\propto": "∝",
    "\\to": "→",
    "\\rightarrow": "→",
    "\\leftarrow": "←",
    "\\gets": "←",
    "\\mapsto": "↦",
    "\\in": "∈",
    "\\notin": "∉",
    "\\subset": "⊂",
    "\\supset": "⊃",
    "\\subseteq": "⊆",
    "\\supseteq": "⊇",
    "\\Rightarrow": "⇒",
    "\\implies": "⇒",
    "\\Leftarrow": "⇐",
    "\\Leftrightarrow": "⇔",
    "\\iff": "⇔",
    "\\ll": "≪",
    "\\gg": "≫",
    "\\perp": "⊥",
    "\\parallel": "∥",
}

OPERATORS = {
    "\\cdot": "⋅",
    "\\times": "×",
    "\\div": "÷",
    "\\pm": "±",
    "\\mp": "∓",
    "\\ast": "∗",
    "\\star": "⋆",
    "\\circ": "∘",
    "\\bullet": "∙",
    "\\cup": "∪",
    "\\cap": "∩",
    "\\setminus": "∖",
    "\\lor": "∨",
    "\\vee": "∨",
    "\\land": "∧",
    "\\wedge": "∧",
    "\\neg": "¬",
    "\\lnot": "¬",
    "\\oplus": "⊕",
    "\\otimes": "⊗",
    "\\dagger": "†",
    "\\prime": "′",
    "\\ldots": "…",
    "\\dots": "…",
    "\\cdots": "⋯",
    "\\sum": "∑",
    "\\prod": "∏",
    "\\int": "∫",
    "\\oint": "∮",
    "\\forall": "∀",
    "\\exists": "∃",
    "\\partial": "∂",
    "\\nabla": "∇",
    "\\mid": "∣",
    "\\|": "‖",
    "\\Vert": "‖",
    "\\vert": "|",
    "\\colon": ":",
    "\\bmod": "mod",
}

FENCES = {
    "\\langle": "⟨",
    "\\rangle": "⟩",
    "\\lvert": "|",
    "\\rvert": "|",
    "\\lVert": "‖",
    "\\rVert": "‖",
    "\\lbrace": "{",
    "\\rbrace": "}",
    "\\lbrack": "[",
    "\\rbrack": "]",
    "\\lfloor": "⌊",
    "\\rfloor": "⌋",
    "\\lceil": "⌈",
    "\\rceil": "⌉",
}

# ASCII characters which render to a different glyph
ASCII_GLYPHS = {"-": "−", "*": "∗", "'": "′"}

# math alphabets and the mathvariant they select
VARIANTS = {
    "\\mathrm": "normal",
    "\\mathit": "italic",
    "\\mathbf": "bold",
    "\\boldsymbol": "bold-italic",
    "\\mathbb": "double-struck",
    "\\mathcal": "script",
    "\\mathfrak": "fraktur",
    "\\mathsf": "sans-serif",
}


def symbol_table() -> Dict[str, Tuple[str, str]]:
    """
    Map every symbol command to (rendered text, MathML token element).
    """
    table: Dict[str, Tuple[str, str]] = {}

    for name, text in {**GREEK, **LETTERLIKE}.items():
        table[name] = (text, "mi")
    for name in FUNCTION_NAMES:
        table["\\" + name] = (name, "mi")
    for name, text in {**RELATIONS, **OPERATORS, **FENCES}.items():
        table[name] = (text, "mo")

    return table
