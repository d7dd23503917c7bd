"""bettibounds: exact Betti-table arithmetic, pure-diagram decompositions,
binomial bounds on total Betti numbers, and rigorous digit brackets for
Betti numbers far beyond exact reach.
"""

from .bounds import (
    DEFAULT_DIGIT_BUDGET,
    BoundPair,
    VeroneseParams,
    algebraic_bounds,
    binomial,
    check_descending_factorial_bound,
    check_rising_factorial_bound,
    extremal_sequences,
    hypersurface_dim_l,
    ndigits,
    pure_bounds,
    variety_bounds,
    veronese_bounds,
    veronese_codim,
)
from .decompose import (
    Decomposition,
    decompose,
    leading_degree_sequence,
    peel,
    verify_decomposition,
)
from .diagrams import (
    BettiTable,
    DegreeSequence,
    Rational,
    deg_seq_leq,
    deg_seq_lt,
    degree_sequence,
    format_diagram,
    pure_diagram,
    total_betti,
)
from .errors import (
    BettiError,
    ChainViolation,
    DomainError,
    GapColumn,
    NegativeEntry,
    NotInBSCone,
    NotIncreasing,
    TableFormatError,
    TooLarge,
)
from .estimation import (
    DEFAULT_PRECISION,
    DigitBracket,
    EXACT_BINOMIAL_LIMIT,
    LogBracket,
    exact_log_binomial,
    ln_bracket,
    log_binomial_bracket,
    log_factorial_bracket,
    log_factorial_ratio_bracket,
    variety_digit_bracket,
    veronese_digit_bracket,
)

__version__ = "0.1.0"

__all__ = [
    "BettiError",
    "BettiTable",
    "BoundPair",
    "ChainViolation",
    "DEFAULT_DIGIT_BUDGET",
    "DEFAULT_PRECISION",
    "Decomposition",
    "DegreeSequence",
    "DigitBracket",
    "DomainError",
    "EXACT_BINOMIAL_LIMIT",
    "GapColumn",
    "LogBracket",
    "NegativeEntry",
    "NotInBSCone",
    "NotIncreasing",
    "Rational",
    "TableFormatError",
    "TooLarge",
    "VeroneseParams",
    "algebraic_bounds",
    "binomial",
    "check_descending_factorial_bound",
    "check_rising_factorial_bound",
    "decompose",
    "deg_seq_leq",
    "deg_seq_lt",
    "degree_sequence",
    "exact_log_binomial",
    "extremal_sequences",
    "format_diagram",
    "hypersurface_dim_l",
    "leading_degree_sequence",
    "ln_bracket",
    "log_binomial_bracket",
    "log_factorial_bracket",
    "log_factorial_ratio_bracket",
    "ndigits",
    "peel",
    "pure_bounds",
    "pure_diagram",
    "total_betti",
    "variety_bounds",
    "variety_digit_bracket",
    "verify_decomposition",
    "veronese_bounds",
    "veronese_codim",
    "veronese_digit_bracket",
]
