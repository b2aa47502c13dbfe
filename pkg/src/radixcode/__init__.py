"""Mixed-radix number systems and a Lehmer-style code for signed permutations.

The hyperoctahedral system has place weights ``2**n n!`` (the orders of the
groups B_n).  Reading the i-inversions of a signed permutation as digits in
that system ranks B_n onto ``0 .. 2**n n! - 1``, just as the Lehmer code
ranks S_n through the factorial system.
"""

from .coding import (
    Family,
    Rank,
    bar_reduction,
    rank_hyperoctahedral,
    rank_symmetric,
    unrank_hyperoctahedral,
    unrank_symmetric,
)
from .errors import (
    CapacityExceeded,
    CapExceeded,
    DigitOutOfRange,
    DigitSyntaxError,
    DimensionMismatch,
    IndexOutOfRange,
    InvalidAlpha,
    NotAPermutation,
    NotASignedPermutation,
    PrecisionExhausted,
    RadixCodeError,
    RankOutOfRange,
    UnknownCheck,
)
from .inversion import (
    inv_i_closed,
    inv_i_root,
    inv_root,
    inversion_vector,
    lehmer_code,
)
from .number_system import (
    DigitSequence,
    NumberSystem,
    custom,
    decode_integer,
    encode_integer,
    factorial_system,
    fixed,
    format_digits,
    hyperoctahedral,
    make_system,
    parse_digits,
)
from .rational import (
    ExtendedExpansion,
    Status,
    expand_decimal,
    expand_rational,
    is_terminating,
    nonterminating_form,
    value_of,
)
from .signed_perm import (
    Root,
    RootKind,
    SignedPermutation,
    act_on_root,
    compose,
    from_images,
    identity,
    inverse,
    phi_i,
    positive_roots,
)

__version__ = "0.1.0"
