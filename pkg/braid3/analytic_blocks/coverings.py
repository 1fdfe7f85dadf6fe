"""
Coverings of C minus {-1, 1}.

f2 maps the plane minus i(2Z + 1) to the punctured sphere, f1 folds w and 1/w
together, and f1 o f2 has period i. The exponential e^(pi z) is the second
covering used for pb boundary values.
"""

import numpy as np

from braid3.exceptions import DomainError, PoleError

_LATTICE_EPS = 1e-12


def _as_complex(z):
    return np.asarray(z, dtype=complex)


def _finite(values, name):
    if not np.all(np.isfinite(values)):
        raise DomainError(f"{name} overflowed")
    return values.item() if values.ndim == 0 else values


def _near_imaginary_lattice(z, step, offset):
    """True where z is within rounding of i(step * n + offset)."""
    t = (z.imag - offset) / step
    return (np.abs(z.real) < _LATTICE_EPS) & (np.abs(t - np.round(t)) < _LATTICE_EPS)


def covering_f1(w):
    w = _as_complex(w)
    if np.any(w == 0):
        raise PoleError("f1 has a pole at w = 0")
    return _finite(0.5 * (w + 1 / w), 'f1')


def covering_f2(z):
    z = _as_complex(z)
    if np.any(_near_imaginary_lattice(z, 2.0, 1.0)):
        raise PoleError("f2 has poles at i(2n + 1)")
    # (e^{pi z} - 1) / (e^{pi z} + 1) without forming e^{pi z}
    return _finite(np.tanh(np.pi * z / 2), 'f2')


def covering_f2_exp(z):
    z = _as_complex(z)
    with np.errstate(over='ignore'):
        values = np.exp(np.pi * z)
    return _finite(values, 'exp(pi z)')


def covering_f(z):
    """f1 o f2, with poles on iZ."""
    z = _as_complex(z)
    if np.any(_near_imaginary_lattice(z, 1.0, 0.0)):
        raise PoleError("f1 o f2 has poles at in")
    return covering_f1(covering_f2(z))
