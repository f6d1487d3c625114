"""Independent ground truth: Schubert constants by divided differences."""

from .bgg import (
    SchubertOracle,
    divided_difference,
    divided_difference_word,
    get_oracle,
    oracle_constant,
    oracle_expansion,
    schubert_representative,
    top_representative,
    weyl_substitute,
)
from .polynomial import RationalPolynomial
from .roots import RootSystemData, root_system
