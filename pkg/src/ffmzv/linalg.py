"""Dense linear algebra over F_q: row reduction, rank, and kernel bases."""

from __future__ import annotations

from .fields import FieldSpec


class FqMatrix:
    """Rectangular matrix of F_q element indices."""

    __slots__ = ("spec", "rows", "cols", "entries")

    def __init__(self, spec: FieldSpec, entries: list[list[int]], cols: int | None = None):
        self.spec = spec
        self.entries = [list(r) for r in entries]
        self.rows = len(self.entries)
        if self.rows:
            widths = {len(r) for r in self.entries}
            if len(widths) != 1:
                raise ValueError("ragged matrix")
            self.cols = widths.pop()
        else:
            self.cols = cols if cols is not None else 0

    def __eq__(self, other):
        return (isinstance(other, FqMatrix) and self.spec == other.spec
                and self.entries == other.entries and self.cols == other.cols)

    def mat_vec(self, x: list[int]) -> list[int]:
        fq = self.spec
        out = []
        for row in self.entries:
            acc = 0
            for a, b in zip(row, x):
                if a and b:
                    acc = fq.add(acc, fq.mul(a, b))
            out.append(acc)
        return out

    def rref(self) -> tuple[list[list[int]], list[int]]:
        """Reduced row echelon form; returns (rows, pivot column list)."""
        fq = self.spec
        m = [row[:] for row in self.entries]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
            if pivot is None:
                continue
            m[r], m[pivot] = m[pivot], m[r]
            inv = fq.inv(m[r][c])
            if inv != 1:
                m[r] = [fq.mul(inv, x) for x in m[r]]
            for i in range(len(m)):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [fq.sub(x, fq.mul(f, y)) for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == len(m):
                break
        return m[:r], pivots

    def rank(self) -> int:
        return len(self.rref()[1])


def nullspace(M: FqMatrix) -> list[list[int]]:
    """Basis of {x : M x = 0}, read off the reduced echelon form.

    One basis vector per free column, in ascending free-column order; the
    result is deterministic and has length cols - rank.
    """
    fq = M.spec
    rows, pivots = M.rref()
    pivot_set = set(pivots)
    basis = []
    for free in range(M.cols):
        if free in pivot_set:
            continue
        vec = [0] * M.cols
        vec[free] = 1
        for r, pc in enumerate(pivots):
            # x_pc = -rows[r][free]
            vec[pc] = fq.neg(rows[r][free])
        basis.append(vec)
    return basis


def stack_rank(spec: FieldSpec, vectors: list[list[int]]) -> int:
    """Rank of a list of row vectors over F_q."""
    if not vectors:
        return 0
    return FqMatrix(spec, vectors).rank()
