"""Young-diagram combinatorics.

Partitions label every basis in this package: the Schubert basis of the
Chow ring of G(t,h) and the Schur-power basis of its Grothendieck group
are both indexed by the partitions fitting in a t x (h-t) box.  This
module provides the diagrams themselves, the canonical enumeration order
of a box, Littlewood-Richardson coefficients, and symmetric-group
characters (needed to expand Schur functions in power sums).

Canonical box order: partitions are graded by size, and within a grade
sorted lexicographically descending.  Every matrix in the package is
written with respect to this order, so outputs are deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache
from math import comb, factorial
from typing import Iterator, Optional


class Partition(tuple):
    """A partition: non-increasing tuple of positive integers.

    Trailing zeros are stripped on construction; the empty partition is
    ``Partition()``.
    """

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be non-increasing, got {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        """Number of cells of the diagram."""
        return sum(self)

    @property
    def rows(self) -> int:
        """Number of rows (the number of parts)."""
        return len(self)

    @property
    def cols(self) -> int:
        """Number of columns (the largest part; 0 for the empty diagram)."""
        return self[0] if self else 0

    def conjugate(self) -> "Partition":
        """Transpose of the diagram."""
        return Partition(sum(1 for p in self if p > i) for i in range(self.cols))

    def contains(self, other: "Partition") -> bool:
        """Diagram containment: other_i <= self_i for every row."""
        if len(other) > len(self):
            return False
        return all(o <= s for s, o in zip(self, other))

    def fits(self, box: "BoxShape") -> bool:
        return self.rows <= box.rows and self.cols <= box.cols

    def text(self) -> str:
        """Comma-separated parts; "-" for the empty partition."""
        return ",".join(str(p) for p in self) if self else "-"

    @classmethod
    def from_text(cls, s: str) -> "Partition":
        s = s.strip()
        if s in ("-", ""):
            return cls()
        return cls(int(p) for p in s.split(","))

    def __repr__(self):
        return f"Partition({tuple(self)})"


@dataclass(frozen=True)
class BoxShape:
    """A t x (h-t) rectangle bounding the partitions under consideration.

    ``rows`` is the rank t of the tautological subbundle and ``cols`` the
    rank h-t of the quotient; the Grassmannian G(t,h) has dimension
    rows*cols and its K-group has rank C(rows+cols, rows).
    """

    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"box must have positive sides, got {self}")

    @classmethod
    def for_grassmannian(cls, t: int, h: int) -> "BoxShape":
        if not 1 <= t <= h - 1:
            raise ValueError(f"need 1 <= t <= h-1, got t={t}, h={h}")
        return cls(t, h - t)

    @property
    def dim(self) -> int:
        """Dimension of the Grassmannian: rows * cols."""
        return self.rows * self.cols

    @property
    def rank(self) -> int:
        """Rank of the free abelian group indexed by this box."""
        return comb(self.rows + self.cols, self.rows)

    @property
    def h(self) -> int:
        return self.rows + self.cols

    def complement(self, alpha: Partition) -> Partition:
        """The 180-degree rotated complement of alpha inside the box."""
        if not alpha.fits(self):
            raise ValueError(f"{alpha} does not fit in {self}")
        padded = tuple(alpha) + (0,) * (self.rows - len(alpha))
        return Partition(self.cols - p for p in reversed(padded))


def conjugate(alpha: Partition) -> Partition:
    """Transpose of the Young diagram (an involution).

    >>> conjugate(Partition((3, 1)))
    Partition((2, 1, 1))
    """
    return Partition(alpha).conjugate()


def partitions_of(
    n: int, max_rows: Optional[int] = None, max_part: Optional[int] = None
) -> Iterator[Partition]:
    """All partitions of n with bounded length and part size, lex descending."""
    if max_rows is None:
        max_rows = n
    if max_part is None:
        max_part = n

    def rec(remaining, rows_left, cap):
        if remaining == 0:
            yield ()
            return
        if rows_left == 0:
            return
        top = min(cap, remaining)
        # smallest admissible first part: need remaining <= first * rows_left
        low = -(-remaining // rows_left)
        for first in range(top, low - 1, -1):
            for rest in rec(remaining - first, rows_left - 1, first):
                yield (first,) + rest

    for parts in rec(n, max_rows, max_part):
        yield Partition(parts)


@cache
def enumerate_box(box: BoxShape) -> tuple[Partition, ...]:
    """All partitions fitting in the box, graded by size then lex descending.

    The length is always C(rows+cols, rows).

    >>> [p.text() for p in enumerate_box(BoxShape(2, 2))]
    ['-', '1', '2', '1,1', '2,1', '2,2']
    """
    out = []
    for n in range(box.dim + 1):
        out.extend(partitions_of(n, box.rows, box.cols))
    return tuple(out)


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients
# ---------------------------------------------------------------------------

def _lr_count(nu: Partition, lam: Partition, mu: Partition) -> int:
    """Number of Littlewood-Richardson tableaux of shape nu/lam, content mu.

    Cells are filled row by row, right to left within each row, which is
    exactly the order of the reverse reading word; the lattice (ballot)
    condition is enforced incrementally along with semistandardness.
    """
    if not nu.contains(lam) or nu.size != lam.size + mu.size:
        return 0
    inner = tuple(lam) + (0,) * (len(nu) - len(lam))
    cells = []  # (row, col) in reverse-reading order, 0-based
    for r in range(len(nu)):
        for c in range(nu[r] - 1, inner[r] - 1, -1):
            cells.append((r, c))
    if not cells:
        return 1
    nvals = len(mu)
    counts = [0] * (nvals + 1)
    filling: dict[tuple[int, int], int] = {}

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        above = filling.get((r - 1, c), 0) if r > 0 and c >= inner[r - 1] else 0
        right = filling.get((r, c + 1), nvals)
        total = 0
        for v in range(above + 1, min(right, nvals) + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v - 1] <= counts[v]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            total += fill(idx + 1)
            del filling[(r, c)]
            counts[v] -= 1
        return total

    return fill(0)


@cache
def _lr_expand(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    n = lam.size + mu.size
    out = []
    for nu in partitions_of(n, lam.rows + mu.rows, lam.cols + mu.cols):
        if nu.contains(lam):
            c = _lr_count(nu, lam, mu)
            if c:
                out.append((nu, c))
    return tuple(out)


def lr_coefficients(
    lam: Partition, mu: Partition, box: Optional[BoxShape] = None
) -> dict[Partition, int]:
    """Littlewood-Richardson coefficients c^nu_{lam,mu}.

    When a box is supplied, terms with nu outside the box are dropped;
    this is the truncation under which Schubert classes multiply.
    """
    lam, mu = Partition(lam), Partition(mu)
    if box is not None and lam.size + mu.size > box.dim:
        return {}
    pairs = _lr_expand(lam, mu)
    if box is None:
        return dict(pairs)
    return {nu: c for nu, c in pairs if nu.fits(box)}


# ---------------------------------------------------------------------------
# Symmetric-group characters (Murnaghan-Nakayama)
# ---------------------------------------------------------------------------

def centralizer_order(rho: Partition) -> int:
    """z_rho = prod_k k^{m_k} m_k!, the centralizer order of cycle type rho."""
    z = 1
    for k, grp in itertools.groupby(rho):
        m = len(list(grp))
        z *= k**m * factorial(m)
    return z


@cache
def sn_character(lam: Partition, rho: Partition) -> int:
    """Irreducible character of S_n: chi^lam at cycle type rho (|lam| = |rho|).

    Computed by the Murnaghan-Nakayama rule in beta-set form: removing a
    border strip of length r is moving one beta number down by r, with
    sign (-1)^(number of beta numbers jumped over).
    """
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise ValueError(f"|{lam}| != |{rho}|")
    if not rho:
        return 1
    r = rho[0]
    rest = Partition(rho[1:])
    m = len(lam)
    beta = [lam[i] + (m - 1 - i) for i in range(m)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in beta_set:
            continue
        crossed = sum(1 for x in beta if nb < x < b)
        new_beta = sorted((beta_set - {b}) | {nb}, reverse=True)
        new_lam = Partition(
            x - (m - 1 - i) for i, x in enumerate(new_beta) if x - (m - 1 - i) > 0
        )
        total += (-1) ** crossed * sn_character(new_lam, rest)
    return total
