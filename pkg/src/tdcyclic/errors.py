"""Exception types shared across the package."""


class BoundsError(ValueError):
    """A desk-scale size limit was exceeded (field size, array size, ...)."""


class TooLargeError(ValueError):
    """An exhaustive enumeration would exceed its configured cap."""


class NotMember(Exception):
    """Raised by the telescoping decomposition when the element is not in
    the ideal.  ``layer`` is the y-degree at which the reduction failed."""

    def __init__(self, layer: int):
        super().__init__(f"not an ideal member (reduction failed at layer {layer})")
        self.layer = layer


class DivisibilityError(RuntimeError):
    """A generator coordinate was not exactly divisible by the base layer
    generator.  This is provably impossible for correct inputs, so it
    signals an implementation bug rather than bad data."""
