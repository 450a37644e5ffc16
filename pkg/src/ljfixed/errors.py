class DomainError(ValueError):
    """An input lies outside the domain of a physical quantity."""


class LevelOutOfRangeError(DomainError):
    """Potential level outside the open interval (-epsilon, 0)."""


class DegenerateLevelError(DomainError):
    """Level equal to the well bottom; the two crossings coincide."""


class ArgumentError(ValueError):
    """Invalid non-physical argument (counts, ranges, formats)."""
