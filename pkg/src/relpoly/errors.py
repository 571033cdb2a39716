"""Exception hierarchy shared by all modules.

Every domain error carries a stable machine-readable ``code`` so the CLI can
emit structured error JSON.
"""


class RelpolyError(Exception):
    code = "error"


class ParseError(RelpolyError):
    """Malformed input file or token."""

    code = "parse_error"


class InvalidRelation(RelpolyError):
    code = "invalid_relation"


class SizeMismatch(RelpolyError):
    """Relation set and pattern disagree on n."""

    code = "size_mismatch"


class IncomparableEntries(RelpolyError):
    """Order between two entries cannot be certified from their intervals."""

    code = "incomparable_entries"


class NonRationalWeight(RelpolyError):
    """A row sum or weight involves labels that do not cancel."""

    code = "non_rational_weight"


class NotACPattern(RelpolyError):
    code = "not_a_c_pattern"


class NotSatisfying(RelpolyError):
    code = "not_satisfying"


class NegativeEntryOnSupport(RelpolyError):
    code = "negative_entry_on_support"


class Unbounded(RelpolyError):
    code = "unbounded"


class UnboundedWeightSlice(RelpolyError):
    code = "unbounded_weight_slice"


class WeightMismatch(RelpolyError):
    code = "weight_mismatch"


class Infeasible(RelpolyError):
    code = "infeasible"


class CriticalDenominator(RelpolyError):
    """Zero denominator in the generator action: noncriticality fails at M."""

    code = "critical_denominator"

    def __init__(self, k, i, j):
        super().__init__(f"critical denominator at row {k}, entries {i} and {j}")
        self.k, self.i, self.j = k, i, j


class OutOfBasisLeak(RelpolyError):
    """A generator produced a nonzero coefficient on a tableau outside the basis."""

    code = "out_of_basis_leak"

    def __init__(self, pattern, coeff):
        super().__init__(f"nonzero coefficient {coeff} on out-of-basis tableau")
        self.pattern = pattern
        self.coeff = coeff


class NotDominant(RelpolyError):
    code = "not_dominant"


class LabeledEntryUnsupported(RelpolyError):
    """Operation restricted to all-rational patterns."""

    code = "labeled_entry_unsupported"
