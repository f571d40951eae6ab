"""Binary words over {A, B}, their distinct-subsequence counts, and the
bijection with coprime pairs and continued fractions, plus exact searches
for extremal words."""

from .approx import (
    ApproxReport,
    BoundedQuotientTarget,
    approx_experiment,
    best_coprime_numerator,
    bound_sweep,
    convergent,
)
from .errors import BudgetError, InvalidPairError
from .euclid import (
    ContinuedFraction,
    CoprimePair,
    RunLengthWord,
    cf_of_rational,
    cf_to_word,
    euclid_word,
    euler_phi,
    fibonacci,
    partial_quotient_sum,
    word_to_cf,
    word_to_pair,
)
from .extremal import (
    ExtensionReport,
    alternating_count,
    alternating_word,
    best_extension,
    mean_subseq_exact,
    min_length_lower_bound,
)
from .search import (
    ShortestWordResult,
    SumStats,
    ZarembaResult,
    brute_force_shortest,
    count_words,
    quotient_sum_stats,
    shortest_word,
    zaremba_scan,
    zaremba_witness,
)
from .words import (
    SubseqProfile,
    brute_force_count,
    check_word,
    complement,
    concat,
    concat_count,
    count_subsequences,
    profile,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxReport",
    "BoundedQuotientTarget",
    "BudgetError",
    "ContinuedFraction",
    "CoprimePair",
    "ExtensionReport",
    "InvalidPairError",
    "RunLengthWord",
    "ShortestWordResult",
    "SubseqProfile",
    "SumStats",
    "ZarembaResult",
    "alternating_count",
    "alternating_word",
    "approx_experiment",
    "best_coprime_numerator",
    "best_extension",
    "bound_sweep",
    "brute_force_count",
    "brute_force_shortest",
    "cf_of_rational",
    "cf_to_word",
    "check_word",
    "complement",
    "concat",
    "concat_count",
    "convergent",
    "count_subsequences",
    "count_words",
    "euclid_word",
    "euler_phi",
    "fibonacci",
    "mean_subseq_exact",
    "min_length_lower_bound",
    "partial_quotient_sum",
    "profile",
    "quotient_sum_stats",
    "shortest_word",
    "word_to_cf",
    "word_to_pair",
    "zaremba_scan",
    "zaremba_witness",
]
