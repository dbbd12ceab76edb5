"""
Exact truncated power series over the integers.

Coefficients are plain Python ints, so nothing here ever rounds. All
arithmetic is modulo z^(order+1).
"""
import logging
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from composition_runs.errors import DegenerateRunBound, DomainError, InvalidSeries

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: Tuple[int, ...]
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise InvalidSeries(f"order must be nonnegative (got {self.order})")
        if len(self.coeffs) != self.order + 1:
            raise InvalidSeries(
                f"expected {self.order + 1} coefficients for order {self.order}, "
                f"got {len(self.coeffs)}"
            )
        if not all(isinstance(c, int) for c in self.coeffs):
            raise InvalidSeries("coefficients must be exact integers")

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int], order: int | None = None) -> "TruncatedSeries":
        """Pad with zeros or truncate ``coeffs`` to the requested order."""
        if order is None:
            order = len(coeffs) - 1
        padded = [int(c) for c in coeffs[: order + 1]]
        padded.extend([0] * (order + 1 - len(padded)))
        return cls(tuple(padded), order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_coefficients([1], order)

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def nonzero_terms(self) -> Iterator[Tuple[int, int]]:
        return ((i, c) for i, c in enumerate(self.coeffs) if c)

    def _check_compatible(self, other: "TruncatedSeries"):
        if self.order != other.order:
            raise InvalidSeries(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Schoolbook product, driven by the nonzero terms of the sparser operand."""
        self._check_compatible(other)
        sparse, dense = self, other
        if sum(1 for c in other.coeffs if c) < sum(1 for c in self.coeffs if c):
            sparse, dense = other, self

        out = [0] * (self.order + 1)
        for i, a in sparse.nonzero_terms():
            for j in range(self.order + 1 - i):
                out[i + j] += a * dense.coeffs[j]
        return TruncatedSeries(tuple(out), self.order)

    def reciprocal(self) -> "TruncatedSeries":
        return series_reciprocal(self)


def series_reciprocal(d: TruncatedSeries) -> TruncatedSeries:
    """
    Formal inverse of ``d`` modulo z^(order+1).

    Requires d[0] == 1, which keeps every coefficient an integer:
    s_N = -sum_{i=1..N} d_i s_{N-i}. Zero coefficients of ``d`` are skipped.
    """
    if d.coeffs[0] != 1:
        raise InvalidSeries(f"reciprocal needs constant term 1 (got {d.coeffs[0]})")

    terms = [(i, c) for i, c in d.nonzero_terms() if i > 0]
    s = [0] * (d.order + 1)
    s[0] = 1
    for n in range(1, d.order + 1):
        acc = 0
        for i, c in terms:
            if i > n:
                break
            acc -= c * s[n - i]
        s[n] = acc
    return TruncatedSeries(tuple(s), d.order)


def _check_run_bound(k: int):
    if k < 2:
        raise DegenerateRunBound(
            f"run bound k must be >= 2 (got {k}); k = 1 gives the trivial series 1, "
            "Carlitz compositions (no two equal adjacent parts) are k = 2"
        )


def denominator_series(k: int, order: int) -> TruncatedSeries:
    """
    Expand D_k(z) = 1 - sum_{j>=1} z^j (1 - z^{j(k-1)}) / (1 - z^{jk}) to ``order``.

    The j-th term starts at z^j, so stopping at j = order is exact.
    """
    _check_run_bound(k)
    if order < 0:
        raise DomainError(f"order must be nonnegative (got {order})")

    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    for j in range(1, order + 1):
        # z^j (1 - z^{j(k-1)}) * sum_m z^{mjk}
        exponent = j
        while exponent <= order:
            coeffs[exponent] -= 1
            if exponent + j * (k - 1) <= order:
                coeffs[exponent + j * (k - 1)] += 1
            exponent += j * k
    return TruncatedSeries(tuple(coeffs), order)


def run_series(k: int, order: int) -> TruncatedSeries:
    """
    C^<k>(z) = 1/D_k(z) up to ``order``.

    D_k is dense but (1 - z) D_k(z) is sparse, so invert that and multiply
    back by (1 - z).
    """
    d = denominator_series(k, order)
    one_minus_z = TruncatedSeries.from_coefficients([1, -1], order)
    t = series_reciprocal(one_minus_z * d)
    c = [t[0]] + [t[n] - t[n - 1] for n in range(1, order + 1)]
    logger.debug("run series k=%d order=%d built", k, order)
    return TruncatedSeries(tuple(c), order)
