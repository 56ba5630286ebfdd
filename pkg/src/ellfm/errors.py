"""Exception types shared across the toolkit.

Input problems (bad classes, wrong base, violated preconditions) raise
ValueError so they surface as usage errors.  InvariantViolation is reserved
for failures of internal cross-checks (dual-route computations, determinant
constraints): those should never fire on valid code paths, and the CLI maps
them to a distinct exit code.
"""


class InvariantViolation(RuntimeError):
    """An internal mathematical consistency check failed."""
