"""Nilpotent representation classes of cyclic quivers as window multisets.

The cyclic quiver of rank n has vertices 1..n and one arrow out of each
vertex v into v-1 (1 wraps to n). Up to isomorphism the indecomposable
nilpotent representations are uniserial and labelled by integer intervals
[i, j] ("windows"): basis vectors sit at the residues of i..j and the arrow
maps shift each basis vector down by one, killing the bottom one. Shifting
both endpoints by a multiple of n does not change the class, so windows
compare equal modulo that shift and every multiset stores canonical
representatives with 1 <= i <= n.

A finite multiset of windows is exactly an isomorphism class of nilpotent
representations (Krull-Schmidt), which makes socle, top and quotient
calculus pure bookkeeping on the endpoints: the socle of [i, j] is the
simple at the residue of i, the top the simple at the residue of j, the
quotient by the socle is [i+1, j] and the radical is [i, j-1] (empty when
i = j).
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

from .errors import (
    BadResidue,
    BadWindow,
    Inconsistent,
    NotCyclic,
    NotNilpotent,
    RankMismatch,
)
from .linalg import RatMatrix
from .reps import Arrow, Quiver, Representation


def residue(value: int, n: int) -> int:
    """The vertex in 1..n congruent to value mod n."""
    return (value - 1) % n + 1


def _count_congruent(lo: int, hi: int, rem: int, n: int) -> int:
    # integers m in [lo, hi] with m = rem (mod n)
    if hi < lo:
        return 0
    return (hi - rem) // n - (lo - 1 - rem) // n


class Window:
    """An interval [i, j] naming a uniserial nilpotent class of rank n.

    Two windows are equal iff they agree after shifting both endpoints by a
    multiple of n; the canonical representative has 1 <= i <= n.
    """

    __slots__ = ("n", "i", "j")

    def __init__(self, n: int, i: int, j: int) -> None:
        if n < 1:
            raise BadWindow("cyclic rank must be at least 1")
        if i > j:
            raise BadWindow(f"window ({i},{j}) has i > j")
        self.n = n
        self.i = i
        self.j = j

    def canonical(self) -> "Window":
        shift = residue(self.i, self.n) - self.i
        if shift == 0:
            return self
        return Window(self.n, self.i + shift, self.j + shift)

    @property
    def length(self) -> int:
        return self.j - self.i + 1

    @property
    def socle_residue(self) -> int:
        return residue(self.i, self.n)

    @property
    def top_residue(self) -> int:
        return residue(self.j, self.n)

    def dim_vector(self) -> tuple[int, ...]:
        return tuple(
            _count_congruent(self.i, self.j, v % self.n, self.n)
            for v in range(1, self.n + 1)
        )

    def shift(self, c: int) -> "Window":
        return Window(self.n, self.i + c, self.j + c)

    def _key(self) -> tuple[int, int, int]:
        c = self.canonical()
        return (self.n, c.i, c.j)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Window):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __lt__(self, other: "Window") -> bool:
        return self._key() < other._key()

    def __repr__(self) -> str:
        return f"({self.i},{self.j})"


def canonicalize(w: Window) -> Window:
    """Unique shift of the window with 1 <= i <= n."""
    return w.canonical()


class SimpleMultiset:
    """Multiset of simple classes, stored as per-residue multiplicities."""

    __slots__ = ("n", "counts")

    def __init__(self, n: int, counts: Sequence[int]) -> None:
        counts = tuple(int(c) for c in counts)
        if len(counts) != n:
            raise RankMismatch(f"expected {n} residue counts, got {len(counts)}")
        if any(c < 0 for c in counts):
            raise ValueError("multiplicities must be nonnegative")
        self.n = n
        self.counts = counts

    def count(self, residue_index: int) -> int:
        return self.counts[residue_index - 1]

    def residues(self) -> set[int]:
        return {r + 1 for r, c in enumerate(self.counts) if c}

    def total(self) -> int:
        return sum(self.counts)

    def as_windows(self) -> "WindowMultiset":
        entries = []
        for r, c in enumerate(self.counts):
            entries.extend([Window(self.n, r + 1, r + 1)] * c)
        return WindowMultiset(self.n, entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimpleMultiset):
            return NotImplemented
        return self.n == other.n and self.counts == other.counts

    def __hash__(self) -> int:
        return hash((self.n, self.counts))

    def __repr__(self) -> str:
        return f"SimpleMultiset(n={self.n}, counts={self.counts})"


class WindowMultiset:
    """Multiset of windows: the isomorphism class of a nilpotent representation.

    Entries are canonicalized on construction and kept sorted, so equal
    classes are equal values.
    """

    __slots__ = ("n", "windows")

    def __init__(self, n: int, windows: Iterable = ()) -> None:
        if n < 1:
            raise BadWindow("cyclic rank must be at least 1")
        items: list[Window] = []
        for w in windows:
            if isinstance(w, Window):
                if w.n != n:
                    raise RankMismatch(f"window of rank {w.n} in a rank-{n} multiset")
                items.append(w.canonical())
            else:
                i, j = w
                items.append(Window(n, int(i), int(j)).canonical())
        items.sort(key=lambda w: (w.i, w.j))
        self.n = n
        self.windows = tuple(items)

    def is_empty(self) -> bool:
        return not self.windows

    def summand_count(self) -> int:
        return len(self.windows)

    def total_dim(self) -> int:
        return sum(w.length for w in self.windows)

    def dim_vector(self) -> tuple[int, ...]:
        counts = [0] * self.n
        for w in self.windows:
            for v, c in enumerate(w.dim_vector()):
                counts[v] += c
        return tuple(counts)

    def socle(self) -> SimpleMultiset:
        counts = [0] * self.n
        for w in self.windows:
            counts[w.socle_residue - 1] += 1
        return SimpleMultiset(self.n, counts)

    def top(self) -> SimpleMultiset:
        counts = [0] * self.n
        for w in self.windows:
            counts[w.top_residue - 1] += 1
        return SimpleMultiset(self.n, counts)

    def quotient_by_socle(self, selected_residues: Iterable[int]) -> "WindowMultiset":
        """Quotient by the socle summands at the selected residues.

        Each window whose socle residue is selected becomes (i+1, j), or is
        deleted when i = j; other windows are untouched.
        """
        sel = set(selected_residues)
        present = {w.socle_residue for w in self.windows}
        if not sel <= present:
            raise BadResidue(f"residues {sorted(sel - present)} not present in socle")
        out = []
        for w in self.windows:
            if w.socle_residue in sel:
                if w.length > 1:
                    out.append(Window(self.n, w.i + 1, w.j))
            else:
                out.append(w)
        return WindowMultiset(self.n, out)

    def quotient_to_radical(self, selected_residues: Iterable[int]) -> "WindowMultiset":
        """Pass to the radical at the selected top residues: (i, j) -> (i, j-1)."""
        sel = set(selected_residues)
        present = {w.top_residue for w in self.windows}
        if not sel <= present:
            raise BadResidue(f"residues {sorted(sel - present)} not present in top")
        out = []
        for w in self.windows:
            if w.top_residue in sel:
                if w.length > 1:
                    out.append(Window(self.n, w.i, w.j - 1))
            else:
                out.append(w)
        return WindowMultiset(self.n, out)

    def shift(self, c: int) -> "WindowMultiset":
        """Relabel vertices by adding c to every window index."""
        return WindowMultiset(self.n, [w.shift(c) for w in self.windows])

    def dual(self) -> "WindowMultiset":
        """Class of the dual representation: each window (i, j) becomes (-j, -i)."""
        return WindowMultiset(self.n, [Window(self.n, -w.j, -w.i) for w in self.windows])

    def counter(self) -> Counter:
        return Counter(self.windows)

    def intersection(self, other: "WindowMultiset") -> "WindowMultiset":
        if self.n != other.n:
            raise RankMismatch("multisets have different ranks")
        common = self.counter() & other.counter()
        return WindowMultiset(self.n, common.elements())

    def difference(self, other: "WindowMultiset") -> "WindowMultiset":
        if self.n != other.n:
            raise RankMismatch("multisets have different ranks")
        remaining = self.counter() - other.counter()
        return WindowMultiset(self.n, remaining.elements())

    def sort_key(self) -> tuple:
        return tuple((w.i, w.j) for w in self.windows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WindowMultiset):
            return NotImplemented
        return self.n == other.n and self.windows == other.windows

    def __hash__(self) -> int:
        return hash((self.n, self.windows))

    def __repr__(self) -> str:
        inner = ",".join(repr(w) for w in self.windows)
        return "{" + inner + "}"


def cyclic_quiver(n: int) -> Quiver:
    """The rank-n cyclic quiver: arrow a<v> from vertex v to v-1 (1 wraps to n)."""
    if n < 1:
        raise ValueError("cyclic rank must be at least 1")
    arrows = tuple(
        Arrow(f"a{v}", v, residue(v - 1, n)) for v in range(1, n + 1)
    )
    return Quiver(n, arrows)


def is_cyclic_quiver(q: Quiver) -> bool:
    n = q.vertex_count
    if n < 1 or len(q.arrows) != n:
        return False
    sources = sorted(a.source for a in q.arrows)
    if sources != list(range(1, n + 1)):
        return False
    return all(a.target == residue(a.source - 1, n) for a in q.arrows)


def require_cyclic(q: Quiver) -> int:
    """Rank of the cyclic quiver, or NotCyclic."""
    if not is_cyclic_quiver(q):
        raise NotCyclic(
            "expected the cyclic quiver with one arrow from each vertex v to v-1"
        )
    return q.vertex_count


def realize(ms: WindowMultiset) -> Representation:
    """Matrix model of a window multiset in the standard shift basis.

    Basis vectors are indexed by the integers inside each window; the arrow
    out of vertex v sends the vector for index l to the vector for l-1 and
    kills each window's bottom index. All matrices are 0/1 block shifts.
    """
    n = ms.n
    q = cyclic_quiver(n)
    counts = [0] * (n + 1)
    positions: dict[tuple[int, int], int] = {}
    for idx, w in enumerate(ms.windows):
        for l in range(w.i, w.j + 1):
            v = residue(l, n)
            positions[(idx, l)] = counts[v]
            counts[v] += 1
    dims = tuple(counts[1 : n + 1])
    mats = []
    for v in range(1, n + 1):
        tgt = residue(v - 1, n)
        rows, cols = dims[tgt - 1], dims[v - 1]
        ent = [0] * (rows * cols)
        for idx, w in enumerate(ms.windows):
            for l in range(w.i, w.j + 1):
                if residue(l, n) == v and l > w.i:
                    ent[positions[(idx, l - 1)] * cols + positions[(idx, l)]] = 1
        mats.append(RatMatrix(rows, cols, ent))
    return Representation(q, dims, mats)


def _outgoing_matrices(rep: Representation) -> dict[int, RatMatrix]:
    return {a.source: m for a, m in zip(rep.quiver.arrows, rep.matrices)}


def _composite_ranks(rep: Representation, steps: int) -> list[list[int]]:
    """ranks[v][t] = rank of the composite of t arrow maps starting at vertex v."""
    n = rep.quiver.vertex_count
    out = _outgoing_matrices(rep)
    ranks = []
    for v in range(1, n + 1):
        current = RatMatrix.identity(rep.dims[v - 1])
        row = [rep.dims[v - 1]]
        for t in range(1, steps + 1):
            current = out[residue(v - t + 1, n)] @ current
            row.append(current.rank())
        ranks.append(row)
    return ranks


def is_nilpotent(rep: Representation) -> bool:
    """True iff all around-the-cycle composites of length total-dim vanish."""
    n = require_cyclic(rep.quiver)
    total = rep.total_dim()
    if total == 0:
        return True
    out = _outgoing_matrices(rep)
    for v in range(1, n + 1):
        current = RatMatrix.identity(rep.dims[v - 1])
        for t in range(1, total + 1):
            current = out[residue(v - t + 1, n)] @ current
        if not current.is_zero():
            return False
    return True


def decompose_nilpotent(rep: Representation) -> WindowMultiset:
    """Krull-Schmidt class of a nilpotent representation of a cyclic quiver.

    The multiplicity of the window ending at residue j with length L is
    read off ranks of iterated arrow composites:

        rank p(j, L-1) - rank p(j, L) - rank p(j+1, L) + rank p(j+1, L+1)

    where p(v, t) composes t arrow maps starting at vertex v. For n = 1 this
    is the classical Jordan block count r_{L-1} - 2 r_L + r_{L+1}.
    """
    n = require_cyclic(rep.quiver)
    total = rep.total_dim()
    if total == 0:
        return WindowMultiset(n, ())
    ranks = _composite_ranks(rep, total + 1)
    if any(ranks[v - 1][total] != 0 for v in range(1, n + 1)):
        raise NotNilpotent("a length-(total dim) path composite is nonzero")
    entries: list[Window] = []
    for jr in range(1, n + 1):
        nxt = residue(jr + 1, n)
        for length in range(1, total + 1):
            mult = (
                ranks[jr - 1][length - 1]
                - ranks[jr - 1][length]
                - ranks[nxt - 1][length]
                + ranks[nxt - 1][length + 1]
            )
            if mult < 0:
                raise Inconsistent(
                    f"negative multiplicity for window ending at {jr} of length {length}"
                )
            if mult:
                w = Window(n, jr - length + 1, jr).canonical()
                entries.extend([w] * mult)
    ms = WindowMultiset(n, entries)
    if ms.dim_vector() != rep.dims:
        raise Inconsistent("decomposition does not match the dimension vector")
    return ms


def window_hom_dim(a: Window, b: Window) -> int:
    """Dimension of the morphism space between two windows.

    A morphism is a shift: it is determined by where the top index of `a`
    lands in `b`. Admissible landing spots m are congruent to j_a mod n, lie
    inside [i_b, j_b], and leave no overhang below the bottom of b, i.e.
    m <= i_b + (j_a - i_a). The count is invariant under shifting either
    window by a multiple of n. For n = 1 it reduces to min(length a, length b).
    """
    if a.n != b.n:
        raise RankMismatch(f"windows of different ranks {a.n} and {b.n}")
    hi = min(b.j, b.i + (a.j - a.i))
    return _count_congruent(b.i, hi, a.j % a.n, a.n)


def multiset_hom_dim(x: WindowMultiset, y: WindowMultiset) -> int:
    """Hom dimension between two classes; biadditive over entries."""
    if x.n != y.n:
        raise RankMismatch("multisets have different ranks")
    return sum(window_hom_dim(a, b) for a in x.windows for b in y.windows)


def reconstruct_from_socle_quotient(
    u: SimpleMultiset, t: WindowMultiset
) -> WindowMultiset:
    """The unique nilpotent class with socle u and socle-quotient t.

    Every window (p, q) of the quotient grows back to (p-1, q); whatever is
    left of the prescribed socle becomes simple summands. Negative leftovers
    mean no such class exists.
    """
    if u.n != t.n:
        raise RankMismatch("socle and quotient have different ranks")
    n = u.n
    entries: list[Window] = []
    used = [0] * n
    for w in t.windows:
        grown = Window(n, w.i - 1, w.j).canonical()
        entries.append(grown)
        used[grown.socle_residue - 1] += 1
    for r in range(1, n + 1):
        remaining = u.count(r) - used[r - 1]
        if remaining < 0:
            raise Inconsistent(
                f"socle multiplicity at residue {r} is too small for the quotient"
            )
        entries.extend([Window(n, r, r)] * remaining)
    return WindowMultiset(n, entries)
