class DomainError(ValueError):
    """An input lies outside the mathematical domain of an operation."""
