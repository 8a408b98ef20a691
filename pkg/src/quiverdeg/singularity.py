"""Singularity types of codimension-2 degenerations of nilpotent classes.

The classifier peels a pair of classes down by three moves that preserve the
singularity type of the orbit-closure point: cancelling common summands,
quotienting by the socle of the degenerating class when that socle is
residue-disjoint from its complement in the other socle, and the dual move
on tops. Codimension never increases along the way and the total dimension
strictly drops at each quotient, so the loop terminates, ending in one of:
a codimension <= 1 pair (regular point), the terminal one-window-versus-two
pattern (an A_r surface singularity), or a stuck pair that is reported as
Unresolved rather than guessed at.

Every run returns a full audit trace. Note one systematic divergence from
reducing all the way to the empty pair: once the running codimension drops
to 1 the answer is already Reg, so the trace stops there instead of
recording further quotient steps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    BadArity,
    Inconsistent,
    NotADegeneration,
    OutOfScope,
    RankMismatch,
    SocleNotEmbeddable,
    TopNotLiftable,
)
from .degeneration import codim, degenerates
from .linalg import parse_rational
from .windows import WindowMultiset


@dataclass(frozen=True)
class SingularityType:
    """Reg, A(r), C(r) or Unresolved(diagnostic).

    C(1) normalizes to Reg and C(2) to A(1) on construction; the remaining
    types are pairwise distinct.
    """

    kind: str
    index: int | None = None
    detail: str = ""

    @classmethod
    def reg(cls) -> "SingularityType":
        return cls("Reg")

    @classmethod
    def a_type(cls, r: int) -> "SingularityType":
        if r < 1:
            raise ValueError("A-type index must be at least 1")
        return cls("A", r)

    @classmethod
    def c_type(cls, r: int) -> "SingularityType":
        if r < 1:
            raise ValueError("C-type index must be at least 1")
        if r == 1:
            return cls.reg()
        if r == 2:
            return cls.a_type(1)
        return cls("C", r)

    @classmethod
    def unresolved(cls, detail: str) -> "SingularityType":
        return cls("Unresolved", None, detail)

    def __str__(self) -> str:
        if self.kind in ("A", "C"):
            return f"{self.kind}{self.index}"
        return self.kind


@dataclass(frozen=True)
class ReductionStep:
    """One classifier move together with the pair it produced and its codim."""

    kind: str  # "cancel" | "socle" | "top" | "relabel" | "terminal"
    m: WindowMultiset
    n: WindowMultiset
    codim: int
    residues: tuple[int, ...] = ()
    shift: int | None = None
    lengths: tuple[int, int, int] | None = None

    def to_obj(self) -> dict:
        obj = {
            "kind": self.kind,
            "m": [[w.i, w.j] for w in self.m.windows],
            "n": [[w.i, w.j] for w in self.n.windows],
            "codim": self.codim,
        }
        if self.residues:
            obj["residues"] = list(self.residues)
        if self.shift is not None:
            obj["shift"] = self.shift
        if self.lengths is not None:
            obj["lengths"] = list(self.lengths)
        return obj


@dataclass
class ReductionTrace:
    """Ordered record of the classifier's moves on one input pair."""

    n: int
    start_m: WindowMultiset
    start_n: WindowMultiset
    start_codim: int
    steps: list[ReductionStep] = field(default_factory=list)
    result: SingularityType | None = None

    def pairs(self) -> list[tuple[WindowMultiset, WindowMultiset]]:
        out = [(self.start_m, self.start_n)]
        out.extend((s.m, s.n) for s in self.steps)
        return out

    def to_obj(self) -> dict:
        return {
            "n": self.n,
            "start": {
                "m": [[w.i, w.j] for w in self.start_m.windows],
                "n": [[w.i, w.j] for w in self.start_n.windows],
            },
            "start_codim": self.start_codim,
            "result": str(self.result) if self.result is not None else None,
            "steps": [s.to_obj() for s in self.steps],
        }


def cancel_common(
    m: WindowMultiset, nn: WindowMultiset
) -> tuple[WindowMultiset, WindowMultiset]:
    """Remove the multiset intersection from both sides."""
    common = m.intersection(nn)
    return m.difference(common), nn.difference(common)


def socle_reduce(m: WindowMultiset, nn: WindowMultiset):
    """Quotient both sides by the socle of m, when that is sound.

    Let u = socle(m) and w = socle(nn) - u. When u and w share no residue,
    the unique copy of u inside nn is its entire socle at u's residues, and
    quotienting both sides preserves the singularity type. Returns the
    reduced pair plus the residues used, or None when u and w collide.
    """
    if m.n != nn.n:
        raise RankMismatch("multisets have different ranks")
    u = m.socle()
    s = nn.socle()
    if any(a > b for a, b in zip(u.counts, s.counts)):
        raise SocleNotEmbeddable(
            "socle of the degenerating class exceeds the other socle"
        )
    u_res = u.residues()
    w_res = {
        r + 1 for r, (a, b) in enumerate(zip(u.counts, s.counts)) if b - a > 0
    }
    if u_res & w_res:
        return None
    residues = tuple(sorted(u_res))
    return (
        m.quotient_by_socle(residues),
        nn.quotient_by_socle(residues),
        residues,
    )


def top_reduce(m: WindowMultiset, nn: WindowMultiset):
    """Dual of socle_reduce: pass to radicals at the top residues of m."""
    if m.n != nn.n:
        raise RankMismatch("multisets have different ranks")
    u = m.top()
    s = nn.top()
    if any(a > b for a, b in zip(u.counts, s.counts)):
        raise TopNotLiftable("top of the degenerating class exceeds the other top")
    u_res = u.residues()
    w_res = {
        r + 1 for r, (a, b) in enumerate(zip(u.counts, s.counts)) if b - a > 0
    }
    if u_res & w_res:
        return None
    residues = tuple(sorted(u_res))
    return (
        m.quotient_to_radical(residues),
        nn.quotient_to_radical(residues),
        residues,
    )


def _terminal_lengths(
    m: WindowMultiset, nn: WindowMultiset
) -> tuple[int, int, int]:
    """Validate the terminal one-versus-two pattern; return (a, b, c) in n-units."""
    n = m.n
    if m.summand_count() != 1:
        raise Inconsistent(f"terminal M must be a single window, got {m!r}")
    if nn.summand_count() != 2:
        raise Inconsistent(f"terminal N must have two windows, got {nn!r}")
    w = m.windows[0]
    p, q = nn.windows
    if not (w.i == p.i == q.i):
        raise Inconsistent("terminal windows must share their socle residue")
    if not (w.top_residue == p.top_residue == q.top_residue):
        raise Inconsistent("terminal windows must share their top residue")
    if w.length % n or p.length % n or q.length % n:
        raise Inconsistent("terminal window lengths must be multiples of the rank")
    a, b, c = w.length // n, p.length // n, q.length // n
    if a != b + c:
        raise Inconsistent("terminal lengths must satisfy a = b + c")
    if min(b, c) != 1:
        raise Inconsistent(
            "terminal pattern has codimension 2*min(b,c) > 2; out of contract"
        )
    return a, b, c


def terminal_classify(m: WindowMultiset, nn: WindowMultiset) -> SingularityType:
    """A_r verdict for the irreducible pattern: one window versus two.

    The pattern is a single window of length a*n against two windows of
    lengths b*n and c*n with the same socle residue and a = b + c. After
    relabelling, it is the nilpotent one-Jordan-block-versus-two situation;
    codimension 2 forces min(b, c) = 1 and the type is A_max(b,c).
    """
    _, b, c = _terminal_lengths(m, nn)
    return SingularityType.a_type(max(b, c))


def _checked_codim(m: WindowMultiset, nn: WindowMultiset) -> int:
    if not degenerates(m, nn):
        raise Inconsistent(
            f"reduction produced a non-degenerating pair {m!r} -> {nn!r}"
        )
    return codim(m, nn)


def classify(
    m: WindowMultiset, nn: WindowMultiset
) -> tuple[SingularityType, ReductionTrace]:
    """Singularity type of a codimension <= 2 degeneration, with audit trace.

    The loop: cancel common summands; stop with Reg when the pair empties or
    the codimension drops to <= 1; otherwise socle-reduce, else top-reduce,
    and recurse; when neither applies and the lower class has at most two
    summands, relabel to the terminal pattern and read off A_r; with more
    than two summands the pair is reported Unresolved.
    """
    if m.n != nn.n:
        raise RankMismatch("multisets have different ranks")
    if not degenerates(m, nn):
        raise NotADegeneration(f"{m!r} does not degenerate to {nn!r}")
    current = codim(m, nn)
    if current > 2:
        raise OutOfScope(f"codimension {current} exceeds 2")
    trace = ReductionTrace(m.n, m, nn, current)
    cm, cn = m, nn
    result: SingularityType
    while True:
        rm, rn = cancel_common(cm, cn)
        if (rm, rn) != (cm, cn):
            cm, cn = rm, rn
            current = _checked_codim(cm, cn)
            trace.steps.append(ReductionStep("cancel", cm, cn, current))
        if cm.is_empty() or current <= 1:
            result = SingularityType.reg()
            break
        reduced = socle_reduce(cm, cn)
        if reduced is not None:
            cm, cn, residues = reduced
            current = _checked_codim(cm, cn)
            trace.steps.append(
                ReductionStep("socle", cm, cn, current, residues=residues)
            )
            continue
        reduced = top_reduce(cm, cn)
        if reduced is not None:
            cm, cn, residues = reduced
            current = _checked_codim(cm, cn)
            trace.steps.append(
                ReductionStep("top", cm, cn, current, residues=residues)
            )
            continue
        if cn.summand_count() <= 2:
            a, b, c = _terminal_lengths(cm, cn)
            shift = -cm.windows[0].i
            trace.steps.append(
                ReductionStep("relabel", cm, cn, current, shift=shift)
            )
            result = SingularityType.a_type(max(b, c))
            trace.steps.append(
                ReductionStep("terminal", cm, cn, current, lengths=(a, b, c))
            )
            break
        result = SingularityType.unresolved(
            f"stuck pair {cm!r} -> {cn!r} with {cn.summand_count()} summands"
        )
        break
    trace.result = result
    return result, trace


def model_variety_membership(kind: str, r: int, point: Sequence) -> bool:
    """Exact membership test for the two model varieties.

    kind "A": points (x, y, z) with x^r = y z. kind "C": points
    (x_0, ..., x_r) with x_i x_j = x_l x_m whenever i + j = l + m.
    """
    if r < 1:
        raise BadArity("model variety index must be at least 1")
    kind = kind.upper()
    coords = [
        x if isinstance(x, Fraction) else parse_rational(x) for x in point
    ]
    if kind == "A":
        if len(coords) != 3:
            raise BadArity(f"A({r}) points have 3 coordinates, got {len(coords)}")
        x, y, z = coords
        return x**r == y * z
    if kind == "C":
        if len(coords) != r + 1:
            raise BadArity(
                f"C({r}) points have {r + 1} coordinates, got {len(coords)}"
            )
        for total in range(2 * r + 1):
            products = [
                coords[i] * coords[total - i]
                for i in range(max(0, total - r), min(r, total) + 1)
            ]
            if any(p != products[0] for p in products):
                return False
        return True
    raise BadArity(f"unknown model variety kind {kind!r}")
