class HypothesisError(ValueError):
    """Raised when a construction hypothesis does not hold.

    Attributes
    ----------
    condition : str
        Human-readable statement of the violated condition, for example
        ``'H1·H1ᵀ must be full rank'``.
    """
    def __init__(self, condition: str, detail: str = ''):
        self.condition = condition
        message = f'Hypothesis failed: {condition}'
        if detail:
            message += f' ({detail})'
        super().__init__(message)
