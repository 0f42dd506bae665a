class ShapeError(ValueError):
    """Tensor shapes disagree with an operation's contract."""

    def __init__(self, message: str, *shapes) -> None:
        if shapes:
            message = f"{message}: " + " vs ".join(str(tuple(s)) for s in shapes)
        super().__init__(message)


class EmptySequenceError(ValueError):
    """A sequence operation received zero time steps."""


class DivergedError(RuntimeError):
    """Training produced a non-finite gradient or loss."""

    def __init__(self, message: str, step: int | None = None) -> None:
        if step is not None:
            message = f"{message} (step {step})"
        super().__init__(message)
        self.step = step
