"""Exception types shared across the package."""


class GlassError(Exception):
    """Base class for all package-specific errors."""


class AssetError(GlassError):
    """A sprite/background asset required for rendering is missing or malformed."""


class DatasetFormatError(GlassError):
    """On-disk dataset does not match the expected layout or schema."""

    def __init__(self, message: str, path=None):
        if path is not None:
            message = f"{message} ({path})"
        super().__init__(message)
        self.path = str(path) if path is not None else None


class TrainingFault(GlassError):
    """A loss term became non-finite during training."""

    def __init__(self, term: str, iteration=None):
        msg = f"non-finite loss term '{term}'"
        if iteration is not None:
            msg += f" at iteration {iteration}"
        super().__init__(msg)
        self.term = term
        self.iteration = iteration
