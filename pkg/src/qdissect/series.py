"""Exact truncated formal power series with unbounded integer coefficients.

A series of precision N stores the coefficients of q^0 .. q^(N-1) and
claims nothing about anything beyond that range.  Binary operations
return the minimum precision of their operands, so precision loss is
always explicit and no operation silently reads unknown coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence


class NonUnitError(ValueError):
    """Raised when inverting a series whose constant term is not +1 or -1."""


_PACKED_CUTOFF = 48


def _convolve_schoolbook(a: Sequence[int], b: Sequence[int], out_len: int) -> list:
    out = [0] * out_len
    for i, ai in enumerate(a):
        if not ai:
            continue
        top = min(len(b), out_len - i)
        for j in range(top):
            out[i + j] += ai * b[j]
    return out


def _pack(values: Sequence[int], width: int) -> int:
    # values must be nonnegative
    return int.from_bytes(
        b"".join(v.to_bytes(width, "little") for v in values), "little"
    )


def _convolve_packed(a: Sequence[int], b: Sequence[int], out_len: int) -> list:
    """Convolution via Kronecker substitution.

    Both polynomials are packed into single big integers (one digit of
    2^bits per coefficient), multiplied once, and the product coefficients
    are read back from the balanced base-2^bits digits.  Exact for signed
    integer coefficients of any size; the digit width is chosen so that
    every convolution coefficient fits strictly inside half a digit.
    """
    max_a = max(max(a), -min(a))
    max_b = max(max(b), -min(b))
    if max_a == 0 or max_b == 0:
        return [0] * out_len
    bits = (
        max_a.bit_length()
        + max_b.bit_length()
        + min(len(a), len(b)).bit_length()
        + 2
    )
    bits = ((bits + 7) // 8) * 8
    width = bits // 8

    packed_a = _pack([v if v > 0 else 0 for v in a], width) - _pack(
        [-v if v < 0 else 0 for v in a], width
    )
    packed_b = _pack([v if v > 0 else 0 for v in b], width) - _pack(
        [-v if v < 0 else 0 for v in b], width
    )
    product = packed_a * packed_b

    negate = product < 0
    magnitude = -product if negate else product
    nbytes = max((magnitude.bit_length() + 7) // 8, out_len * width)
    raw = magnitude.to_bytes(nbytes, "little")

    half = 1 << (bits - 1)
    full = 1 << bits
    out = []
    carry = 0
    for i in range(out_len):
        v = int.from_bytes(raw[i * width : (i + 1) * width], "little") + carry
        if v >= half:
            v -= full
            carry = 1
        else:
            carry = 0
        out.append(-v if negate else v)
    return out


def _convolve(a: Sequence[int], b: Sequence[int], out_len: int) -> list:
    if out_len == 0:
        return []
    if min(len(a), len(b), out_len) < _PACKED_CUTOFF:
        return _convolve_schoolbook(a, b, out_len)
    return _convolve_packed(a, b, out_len)


@dataclass(frozen=True)
class QSeries:
    """Truncated power series; ``coeffs[n]`` is the coefficient of q^n."""

    coeffs: tuple

    def __post_init__(self):
        if not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, precision: int) -> "QSeries":
        return cls((0,) * precision)

    @classmethod
    def one(cls, precision: int) -> "QSeries":
        if precision == 0:
            return cls(())
        return cls((1,) + (0,) * (precision - 1))

    def __getitem__(self, n: int) -> int:
        if not 0 <= n < len(self.coeffs):
            raise IndexError(
                f"coefficient of q^{n} is outside known precision {len(self.coeffs)}"
            )
        return self.coeffs[n]

    def __add__(self, other: "QSeries") -> "QSeries":
        p = min(len(self.coeffs), len(other.coeffs))
        return QSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(p)))

    def __sub__(self, other: "QSeries") -> "QSeries":
        p = min(len(self.coeffs), len(other.coeffs))
        return QSeries(tuple(self.coeffs[i] - other.coeffs[i] for i in range(p)))

    def __neg__(self) -> "QSeries":
        return QSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "QSeries") -> "QSeries":
        p = min(len(self.coeffs), len(other.coeffs))
        return QSeries(tuple(_convolve(self.coeffs[:p], other.coeffs[:p], p)))

    def scale(self, c: int) -> "QSeries":
        return QSeries(tuple(c * v for v in self.coeffs))

    def shift(self, j: int) -> "QSeries":
        """Multiply by q^j.  The result gains j known coefficients."""
        if j < 0:
            raise ValueError("shift exponent must be nonnegative")
        return QSeries((0,) * j + self.coeffs)

    def truncate(self, n: int) -> "QSeries":
        if n > len(self.coeffs):
            raise ValueError(
                f"cannot truncate precision {len(self.coeffs)} series to {n}"
            )
        return QSeries(self.coeffs[:n])

    def inverse(self) -> "QSeries":
        """Multiplicative inverse, by Newton iteration.

        Requires constant term +1 or -1 (every Pochhammer product here is
        such a unit).  Precision is preserved.
        """
        p = len(self.coeffs)
        if p == 0:
            return self
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise NonUnitError(f"constant term {c0} is not a unit")
        g = [c0]
        k = 1
        while k < p:
            k = min(2 * k, p)
            fg = _convolve(self.coeffs[:k], g, k)
            t = [-v for v in fg]
            t[0] += 2
            g = _convolve(g, t, k)
        return QSeries(tuple(g))

    def power(self, e: int) -> "QSeries":
        if e < 0:
            return self.power(-e).inverse()
        result = QSeries.one(len(self.coeffs))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def substitute_power(self, k: int) -> "QSeries":
        """Replace q by q^k; the result has precision k * precision."""
        if k < 1:
            raise ValueError("substitution exponent must be >= 1")
        out = [0] * (len(self.coeffs) * k)
        for n, c in enumerate(self.coeffs):
            out[n * k] = c
        return QSeries(tuple(out))

    def dissect(self, m: int, r: int) -> "QSeries":
        """Extract the coefficients along n = m*j + r as a new series."""
        if m < 1:
            raise ValueError("dissection modulus must be >= 1")
        if not 0 <= r < m:
            raise ValueError(f"residue {r} out of range for modulus {m}")
        return QSeries(self.coeffs[r::m])

    def to_decimal_strings(self) -> list:
        """Coefficients as decimal strings, for JSON consumers."""
        return [str(c) for c in self.coeffs]


@dataclass(frozen=True)
class SeriesComparison:
    equal: bool
    index: Optional[int] = None
    left: Optional[int] = None
    right: Optional[int] = None


def equal_upto(
    a: QSeries, b: QSeries, n: int, modulus: Optional[int] = None
) -> SeriesComparison:
    """Compare coefficients for 0 <= i < n, optionally modulo ``modulus``.

    Comparing unknown coefficients is a hard error, never a silent pass.
    """
    if n > min(a.precision, b.precision):
        raise ValueError(
            f"cannot compare {n} coefficients: precisions are "
            f"{a.precision} and {b.precision}"
        )
    for i in range(n):
        x, y = a.coeffs[i], b.coeffs[i]
        if modulus is not None:
            if (x - y) % modulus == 0:
                continue
        elif x == y:
            continue
        return SeriesComparison(False, i, x, y)
    return SeriesComparison(True)


def pochhammer_series(q_offset: int, q_step: int, precision: int) -> QSeries:
    """Truncation of the infinite product prod_{n>=0} (1 - q^(q_offset + n*q_step)).

    Computed factor by factor; this is the product-form oracle that the
    closed theta/pentagonal sums are tested against.
    """
    if q_offset < 1:
        raise ValueError("q_offset must be >= 1")
    if q_step < 1:
        raise ValueError("q_step must be >= 1")
    if precision < 0:
        raise ValueError("precision must be >= 0")
    if precision == 0:
        return QSeries(())
    coeffs = [0] * precision
    coeffs[0] = 1
    for k in range(q_offset, precision, q_step):
        for n in range(precision - 1, k - 1, -1):
            coeffs[n] -= coeffs[n - k]
    return QSeries(tuple(coeffs))
