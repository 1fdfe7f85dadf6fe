"""Error hierarchy shared by the library, the management command and the HTTP API.

Each error carries a stable ``kind`` used in JSON payloads.
"""


class Braid3Error(Exception):
    kind = 'error'


class WordSyntaxError(Braid3Error, ValueError):
    kind = 'syntax'

    def __init__(self, message, offset=0, token=''):
        super().__init__(f"{message} at byte {offset}: {token!r}")
        self.offset = offset
        self.token = token


class EmptyWordError(Braid3Error, ValueError):
    kind = 'empty_word'


class ZeroInputError(Braid3Error, ValueError):
    kind = 'zero_input'


class NotApplicableError(Braid3Error, ValueError):
    kind = 'not_applicable'


class UnsupportedCombinationError(Braid3Error, ValueError):
    kind = 'unsupported_combination'


class PoleError(Braid3Error, ArithmeticError):
    kind = 'pole'


class DomainError(Braid3Error, ValueError):
    kind = 'domain'


class QuadratureFailure(Braid3Error, ArithmeticError):
    kind = 'quadrature'


class NewtonDivergence(Braid3Error, ArithmeticError):
    kind = 'newton'

    def __init__(self, target, last_iterate, residual, iterations):
        super().__init__(
            f"Newton inversion did not converge for xi={target!r}: "
            f"last iterate {last_iterate!r}, residual {residual:.3e} after {iterations} iterations"
        )
        self.target = target
        self.last_iterate = last_iterate
        self.residual = residual
        self.iterations = iterations


class BlockUnavailable(Braid3Error, ValueError):
    kind = 'block_unavailable'


class GridDegenerate(Braid3Error, ValueError):
    kind = 'grid'


class CertificationError(Braid3Error, AssertionError):
    kind = 'certification'


class UsageError(Braid3Error, ValueError):
    kind = 'usage'
