"""Construction and perturbation of Sidel'nikov-type periodic sequences.

The l-periodic sequence over F_d attached to F_q (d prime, d and l both
dividing q-1) has s_n = j when alpha^n + 1 lands in the order-d cyclotomic
class D_j, where alpha = gamma^((q-1)/l), and s_n = 0 at the single index
where alpha^n + 1 = 0 (possible only for even l, at n = l/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from pathlib import Path

from .field import FieldCtx, is_prime


@dataclass(frozen=True)
class SequenceOrigin:
    q: int
    gamma: int
    alpha_exponent: int  # (q - 1) / l


@dataclass(frozen=True)
class PeriodicSequence:
    d: int
    terms: tuple
    origin: SequenceOrigin | None = None

    def __post_init__(self):
        if not is_prime(self.d):
            raise ValueError(f"alphabet modulus must be prime, got {self.d}")
        object.__setattr__(self, "terms", tuple(int(t) for t in self.terms))
        if not self.terms:
            raise ValueError("sequence needs at least one term")
        if any(not 0 <= t < self.d for t in self.terms):
            raise ValueError("terms must lie in [0, d)")

    @property
    def l(self):
        return len(self.terms)


def sidelnikov_subsequence(ctx: FieldCtx, d: int, l: int) -> PeriodicSequence:
    """The l-periodic subsequence over F_d generated from F_q."""
    q = ctx.q
    if ctx.p == 2:
        raise ValueError("sequences are defined over fields of odd characteristic")
    if not is_prime(d):
        raise ValueError(f"d must be prime, got {d}")
    if (q - 1) % d:
        raise ValueError(f"d = {d} does not divide q-1 = {q - 1}")
    if l < 1 or (q - 1) % l:
        raise ValueError(f"l = {l} does not divide q-1 = {q - 1}")
    step = (q - 1) // l
    log = ctx.log_table
    antilog = ctx.antilog_table
    terms = []
    e = 0
    if ctx.m == 1:
        for _ in range(l):
            y = antilog[e] + 1
            terms.append(0 if y == q else log[y] % d)
            e += step
            if e >= q - 1:
                e -= q - 1
    else:
        for _ in range(l):
            y = ctx.add(antilog[e], 1)
            terms.append(0 if y == 0 else log[y] % d)
            e += step
            if e >= q - 1:
                e -= q - 1
    return PeriodicSequence(d, tuple(terms), SequenceOrigin(q, ctx.gamma, step))


def perturb(seq: PeriodicSequence, pattern) -> PeriodicSequence:
    """Apply an error pattern ((position, replacement), ...).

    Positions must be distinct and every replacement must differ from the
    term it overwrites.  Returns a new sequence; origin metadata is
    dropped since the result is no longer the generated sequence.
    """
    terms = list(seq.terms)
    seen = set()
    for pos, val in pattern:
        if not 0 <= pos < seq.l:
            raise ValueError(f"position {pos} outside period {seq.l}")
        if pos in seen:
            raise ValueError(f"duplicate position {pos} in error pattern")
        seen.add(pos)
        if not 0 <= val < seq.d:
            raise ValueError(f"replacement {val} outside the alphabet")
        if val == terms[pos]:
            raise ValueError(f"replacement at position {pos} equals the original term")
        terms[pos] = val
    return PeriodicSequence(seq.d, tuple(terms))


def pattern_count(l: int, d: int, k: int) -> int:
    """Number of weight-1..k patterns: sum_w C(l,w) (d-1)^w."""
    return sum(comb(l, w) * (d - 1) ** w for w in range(1, k + 1))


def enumerate_error_patterns(seq: PeriodicSequence, k: int):
    """Yield every pattern of weight 1..k exactly once: weights ascending,
    positions in lexicographic order, replacement values ascending."""
    if k > seq.l:
        raise ValueError("k cannot exceed the period")
    d = seq.d
    for w in range(1, k + 1):
        for positions in combinations(range(seq.l), w):
            choices = [[v for v in range(d) if v != seq.terms[p]] for p in positions]
            for vals in product(*choices):
                yield tuple(zip(positions, vals))


def write_sequence_file(seq: PeriodicSequence, dest) -> None:
    """Two-line text format: "d l" then the l terms, space separated."""
    text = f"{seq.d} {seq.l}\n{' '.join(str(t) for t in seq.terms)}\n"
    if isinstance(dest, (str, Path)):
        Path(dest).write_text(text)
    else:
        dest.write(text)


def read_sequence_file(src) -> PeriodicSequence:
    """Parse the two-line sequence format; raises ValueError when malformed."""
    if isinstance(src, (str, Path)):
        text = Path(src).read_text()
    else:
        text = src.read()
    lines = text.split("\n")
    if len(lines) < 2:
        raise ValueError("malformed sequence file: expected two lines")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("malformed sequence file: first line must be 'd l'")
    try:
        d, l = int(head[0]), int(head[1])
        terms = [int(t) for t in lines[1].split()]
    except ValueError:
        raise ValueError("malformed sequence file: non-integer field") from None
    if len(terms) != l:
        raise ValueError(f"malformed sequence file: expected {l} terms, got {len(terms)}")
    return PeriodicSequence(d, tuple(terms))
