"""Exception hierarchy shared by all ringlab modules."""


class RingLabError(Exception):
    """Base class for all ringlab errors."""


class ConstructionError(RingLabError):
    """A ring/module build was rejected (axiom violation, bad input)."""


class SizeGuardError(RingLabError):
    """A construction would exceed the configured element-count guard."""


class LatticeGuardError(RingLabError):
    """Ideal-lattice enumeration exceeded the configured ideal cap."""


class BudgetExceededError(RingLabError):
    """A brute-force sweep exceeded its tuple-visit budget."""


class RingMismatchError(RingLabError):
    """An operation mixed elements/ideals of different rings."""


class SpecError(RingLabError):
    """A spec document failed to parse or validate."""
