"""Domain errors raised by liefoliate."""


class LieFoliateError(ValueError):
    """Raised when an input lies outside the mathematical domain of an operation.

    Covers invalid ranks, unknown catalog names, vectors that are not roots,
    non-orthogonal simple-root subsets, and matrices violating a precondition
    (wrong determinant, wrong symmetry type, wrong size).
    """
