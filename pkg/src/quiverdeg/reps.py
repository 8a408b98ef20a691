"""Quivers, rational representations and their homological invariants.

Vertices are the integers 1..n. A representation assigns a dimension to each
vertex and a matrix to each arrow, with the matrix for an arrow s -> t of
shape dims[t] x dims[s]. Hom and Ext^1 dimensions come from the intertwining
linear system of the pair, read as a two-term complex; this is valid because
path algebras are hereditary.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    LengthMismatch,
    NoEmbedding,
    NotAMorphism,
    NotInjective,
    QuiverMismatch,
    ShapeMismatch,
)
from .linalg import RatMatrix

_ZERO = Fraction(0)

DEFAULT_SEED = 1729


def default_seed() -> int:
    """Sampling seed; the QUIVERDEG_SEED environment variable overrides it."""
    raw = os.environ.get("QUIVERDEG_SEED")
    if raw is None:
        return DEFAULT_SEED
    return int(raw)


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    """Finite directed multigraph; multi-arrows and loops are permitted."""

    vertex_count: int
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex count must be nonnegative")
        object.__setattr__(self, "arrows", tuple(self.arrows))
        seen = set()
        for a in self.arrows:
            if not (1 <= a.source <= self.vertex_count):
                raise ValueError(f"arrow {a.name!r} has source {a.source} out of range")
            if not (1 <= a.target <= self.vertex_count):
                raise ValueError(f"arrow {a.name!r} has target {a.target} out of range")
            if a.name in seen:
                raise ValueError(f"duplicate arrow id {a.name!r}")
            seen.add(a.name)

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise KeyError(name)

    def opposite(self) -> "Quiver":
        return Quiver(
            self.vertex_count,
            tuple(Arrow(a.name, a.target, a.source) for a in self.arrows),
        )


class Representation:
    """Per-vertex dimensions plus one exact rational matrix per arrow."""

    __slots__ = ("quiver", "dims", "matrices")

    def __init__(
        self,
        quiver: Quiver,
        dims: Sequence[int],
        matrices: Sequence[RatMatrix] | Mapping[str, RatMatrix],
    ) -> None:
        dims = tuple(int(d) for d in dims)
        if len(dims) != quiver.vertex_count:
            raise ShapeMismatch(
                f"expected {quiver.vertex_count} dimensions, got {len(dims)}"
            )
        if any(d < 0 for d in dims):
            raise ShapeMismatch("dimensions must be nonnegative")
        if isinstance(matrices, Mapping):
            missing = [a.name for a in quiver.arrows if a.name not in matrices]
            if missing:
                raise ShapeMismatch(f"missing matrix for arrow {missing[0]!r}")
            mats = tuple(matrices[a.name] for a in quiver.arrows)
        else:
            mats = tuple(matrices)
            if len(mats) != len(quiver.arrows):
                raise ShapeMismatch(
                    f"expected {len(quiver.arrows)} matrices, got {len(mats)}"
                )
        for a, m in zip(quiver.arrows, mats):
            want = (dims[a.target - 1], dims[a.source - 1])
            if (m.rows, m.cols) != want:
                raise ShapeMismatch(
                    f"arrow {a.name!r} ({a.source}->{a.target}) needs a "
                    f"{want[0]}x{want[1]} matrix, got {m.rows}x{m.cols}"
                )
        self.quiver = quiver
        self.dims = dims
        self.matrices = mats

    @classmethod
    def zero(cls, quiver: Quiver, dims: Sequence[int]) -> "Representation":
        dims = tuple(int(d) for d in dims)
        mats = [
            RatMatrix.zero(dims[a.target - 1], dims[a.source - 1])
            for a in quiver.arrows
        ]
        return cls(quiver, dims, mats)

    def validate(self) -> "Representation":
        """Re-check all shape invariants; identity on valid input."""
        Representation(self.quiver, self.dims, self.matrices)
        return self

    def matrix(self, arrow_name: str) -> RatMatrix:
        for a, m in zip(self.quiver.arrows, self.matrices):
            if a.name == arrow_name:
                return m
        raise KeyError(arrow_name)

    def total_dim(self) -> int:
        return sum(self.dims)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return (
            self.quiver == other.quiver
            and self.dims == other.dims
            and self.matrices == other.matrices
        )

    def __hash__(self) -> int:
        return hash((self.quiver, self.dims, self.matrices))

    def __repr__(self) -> str:
        return f"Representation(dims={self.dims})"


@dataclass(frozen=True)
class HomElement:
    """A morphism between two representations: one matrix block per vertex."""

    blocks: tuple[RatMatrix, ...]

    def block(self, vertex: int) -> RatMatrix:
        return self.blocks[vertex - 1]


def _require_same_quiver(v: Representation, w: Representation) -> None:
    if v.quiver != w.quiver:
        raise QuiverMismatch("representations live over different quivers")


def _hom_system(v: Representation, w: Representation) -> tuple[int, int, RatMatrix]:
    """Intertwining system f(t) V(a) = W(a) f(s) over all arrows.

    Unknowns are the entries of the vertex blocks f(i), ordered by vertex and
    then row-major; returns (unknowns, equations, system matrix).
    """
    dv, dw = v.dims, w.dims
    offsets = []
    total = 0
    for i in range(len(dv)):
        offsets.append(total)
        total += dv[i] * dw[i]
    rows: list[list[Fraction]] = []
    for a, va in zip(v.quiver.arrows, v.matrices):
        wa = w.matrix(a.name)
        s, t = a.source - 1, a.target - 1
        for p in range(dw[t]):
            for q in range(dv[s]):
                row = [_ZERO] * total
                # f(t) V(a) contribution: coefficient of f(t)[p, r] is V(a)[r, q]
                for r in range(dv[t]):
                    c = va.at(r, q)
                    if c:
                        row[offsets[t] + p * dv[t] + r] += c
                # W(a) f(s) contribution: coefficient of f(s)[r, q] is -W(a)[p, r]
                for r in range(dw[s]):
                    c = wa.at(p, r)
                    if c:
                        row[offsets[s] + r * dv[s] + q] -= c
                rows.append(row)
    sysmat = RatMatrix(len(rows), total, (x for row in rows for x in row))
    return total, len(rows), sysmat


def hom_dim(v: Representation, w: Representation) -> int:
    """Dimension of the space of morphisms v -> w."""
    _require_same_quiver(v, w)
    unknowns, _, sysmat = _hom_system(v, w)
    return unknowns - sysmat.rank()


def ext1_dim(v: Representation, w: Representation) -> int:
    """Dimension of the first extension space of v by w."""
    _require_same_quiver(v, w)
    _, equations, sysmat = _hom_system(v, w)
    return equations - sysmat.rank()


def hom_basis(v: Representation, w: Representation) -> list[HomElement]:
    """A basis of Hom(v, w) as per-vertex matrix blocks."""
    _require_same_quiver(v, w)
    _, _, sysmat = _hom_system(v, w)
    dv, dw = v.dims, w.dims
    basis = []
    for vec in sysmat.kernel_basis():
        blocks = []
        pos = 0
        for i in range(len(dv)):
            size = dv[i] * dw[i]
            blocks.append(RatMatrix(dw[i], dv[i], vec[pos : pos + size]))
            pos += size
        basis.append(HomElement(tuple(blocks)))
    return basis


def is_morphism(f: HomElement, v: Representation, w: Representation) -> bool:
    if len(f.blocks) != v.quiver.vertex_count:
        return False
    for i, b in enumerate(f.blocks):
        if (b.rows, b.cols) != (w.dims[i], v.dims[i]):
            return False
    for a, va in zip(v.quiver.arrows, v.matrices):
        wa = w.matrix(a.name)
        if f.blocks[a.target - 1] @ va != wa @ f.blocks[a.source - 1]:
            return False
    return True


def euler_form(quiver: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    """Bilinear form sum_i d_i e_i - sum_arrows d_source e_target.

    Equals hom_dim - ext1_dim for representations with these dimension
    vectors, since the path algebra is hereditary.
    """
    if len(d) != quiver.vertex_count or len(e) != quiver.vertex_count:
        raise LengthMismatch(
            f"dimension vectors must have length {quiver.vertex_count}"
        )
    value = sum(int(a) * int(b) for a, b in zip(d, e))
    for arrow in quiver.arrows:
        value -= int(d[arrow.source - 1]) * int(e[arrow.target - 1])
    return value


def orbit_dim(v: Representation) -> int:
    """Dimension of the isomorphism-class orbit: sum dims^2 - hom_dim(v, v)."""
    return sum(d * d for d in v.dims) - hom_dim(v, v)


def direct_sum(v: Representation, w: Representation) -> Representation:
    """Blockwise direct sum over the same quiver."""
    _require_same_quiver(v, w)
    dims = tuple(a + b for a, b in zip(v.dims, w.dims))
    mats = []
    for a, mv in zip(v.quiver.arrows, v.matrices):
        mw = w.matrix(a.name)
        rows = mv.rows + mw.rows
        cols = mv.cols + mw.cols
        ent = [_ZERO] * (rows * cols)
        for r in range(mv.rows):
            for c in range(mv.cols):
                ent[r * cols + c] = mv.at(r, c)
        for r in range(mw.rows):
            for c in range(mw.cols):
                ent[(mv.rows + r) * cols + (mv.cols + c)] = mw.at(r, c)
        mats.append(RatMatrix(rows, cols, ent))
    return Representation(v.quiver, dims, mats)


def dual(v: Representation) -> Representation:
    """Vector-space dual over the opposite quiver; all matrices transposed."""
    return Representation(
        v.quiver.opposite(), v.dims, tuple(m.transpose() for m in v.matrices)
    )


def cokernel_rep(
    f: HomElement, u: Representation, m: Representation
) -> Representation:
    """Quotient of m by the image of an injective morphism f: u -> m."""
    _require_same_quiver(u, m)
    if not is_morphism(f, u, m):
        raise NotAMorphism("the given blocks do not intertwine the arrow maps")
    n = u.quiver.vertex_count
    changes = []
    for i in range(n):
        block = f.blocks[i]
        if block.rank() != u.dims[i]:
            raise NotInjective(f"vertex {i + 1} block has a nontrivial kernel")
        cols = [block.column(j) for j in range(block.cols)]
        if cols:
            from .linalg import extend_to_basis, invert

            p = extend_to_basis(cols, m.dims[i])
            changes.append((p, invert(p), u.dims[i]))
        else:
            changes.append((None, None, 0))
    new_dims = tuple(m.dims[i] - u.dims[i] for i in range(n))
    mats = []
    for a, ma in zip(m.quiver.arrows, m.matrices):
        s, t = a.source - 1, a.target - 1
        pt, pt_inv, kt = changes[t]
        ps, _, ks = changes[s]
        trans = ma
        if ps is not None:
            trans = trans @ ps
        if pt_inv is not None:
            trans = pt_inv @ trans
        qr, qc = new_dims[t], new_dims[s]
        ent = [trans.at(kt + r, ks + c) for r in range(qr) for c in range(qc)]
        mats.append(RatMatrix(qr, qc, ent))
    return Representation(m.quiver, new_dims, mats)


def _combine(basis: Sequence[HomElement], coeffs: Sequence[Fraction]) -> HomElement:
    blocks = list(basis[0].blocks)
    blocks = [b.scale(coeffs[0]) for b in blocks]
    for el, c in zip(basis[1:], coeffs[1:]):
        if c:
            blocks = [acc + b.scale(c) for acc, b in zip(blocks, el.blocks)]
    return HomElement(tuple(blocks))


def _is_injective(f: HomElement, u: Representation) -> bool:
    return all(
        f.blocks[i].rank() == u.dims[i] for i in range(u.quiver.vertex_count)
    )


def generic_quotient(
    u: Representation,
    m: Representation,
    seed: int | None = None,
    attempts: int = 32,
) -> Representation:
    """Cokernel of a generic embedding of u into m, found by seeded sampling.

    Random rational combinations of a Hom basis are drawn; among the
    injective ones, the cokernel whose class dominates the others in the
    degeneration order is returned (for cyclic quivers with nilpotent
    cokernels), falling back to the sample of maximal orbit dimension. This
    is a best-effort, reproducible stand-in for genericity over an
    algebraically closed field; it is verification tooling, never a step of
    the singularity classifier.
    """
    _require_same_quiver(u, m)
    basis = hom_basis(u, m)
    if not basis:
        raise NoEmbedding("the Hom space is zero")
    rng = random.Random(default_seed() if seed is None else seed)
    samples: list[Representation] = []
    for _ in range(attempts):
        coeffs = [Fraction(rng.randint(-4, 4)) for _ in basis]
        if not any(coeffs):
            continue
        f = _combine(basis, coeffs)
        if _is_injective(f, u):
            samples.append(cokernel_rep(f, u, m))
    if not samples:
        raise NoEmbedding(f"no injective morphism found in {attempts} samples")

    from .windows import decompose_nilpotent, is_cyclic_quiver, is_nilpotent

    if is_cyclic_quiver(m.quiver) and all(is_nilpotent(s) for s in samples):
        from .degeneration import degenerates

        classes = [decompose_nilpotent(s) for s in samples]
        distinct = sorted(set(classes), key=lambda ms: ms.sort_key())
        for cls in distinct:
            if all(degenerates(cls, other) for other in distinct):
                return samples[classes.index(cls)]
    by_self_hom = [(hom_dim(s, s), idx) for idx, s in enumerate(samples)]
    by_self_hom.sort()
    return samples[by_self_hom[0][1]]
