"""Exception types raised by the numerical routines in this package."""


class So4Error(Exception):
    """Base class for all errors raised by so4exp."""


class NonRealResult(So4Error):
    """A computation that must produce a real matrix left a notable imaginary part.

    Raised when the imaginary residue exceeds 1e-10 after conjugating a
    tensor-product unitary back to the real 4x4 picture.  A clean pair of
    su(2) inputs never triggers this; it indicates the inputs were not
    actually special unitary.
    """


class NotSpecialOrthogonal(So4Error):
    """A matrix expected to lie in SO(4) failed the orthogonality or determinant check."""


class NotAKroneckerProduct(So4Error):
    """A 4x4 unitary could not be factored as a Kronecker product of 2x2 blocks.

    The reconstruction residual after projecting both factors to SU(2) is
    reported in the message.  Entangling gates (CNOT, for instance) land here.
    """


class EmbeddingLeak(So4Error):
    """The 3x3 exponential picked up spill-over outside its embedded block.

    The fourth row and column of the embedded 4x4 result must stay at
    (0, 0, 0, 1) up to roundoff; anything beyond 1e-10 aborts the extraction.
    """
