"""Shared resource limits and the exceptions raised when they are hit."""

DEFAULT_ENUM_CEILING = 2**63
DEFAULT_OP_BUDGET = 10**9

# Extension levels up to this size get add/mul/inv lookup tables at
# construction time; beyond it, tables must be requested explicitly.
TABLE_AUTO_MAX = 128

# Field size above which the counting sweeps switch from the per-element
# (pure) engine to the vectorized one.
BULK_MIN_SIZE = 1 << 14


class BudgetError(RuntimeError):
    """An operation would exceed the configured coefficient-operation budget."""


class CeilingError(BudgetError):
    """A field or enumeration exceeds the configured size ceiling."""
