# lpbound/codes.py
"""Ground truth at desk scale: exact A(n,d) by exhaustive search, and the
distance distribution f_C of a code, used to audit the whole bound chain.

Words are ints; bit i is coordinate i. Bitstrings are written most
significant coordinate first.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .config import get_settings
from .dense import DenseFunction, dense_convolve, dense_transform, expand, hamming_weights, indicator, radialize
from .errors import InvalidParameterError, OracleLimitError, ParseError
from .radial import LevelProfile, radial_sum

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Code:
    n: int
    words: Tuple[int, ...]

    def __post_init__(self) -> None:
        words = tuple(sorted(set(self.words)))
        if len(words) != len(self.words):
            raise InvalidParameterError("code words must be distinct")
        if any(w < 0 or w >= 2 ** self.n for w in words):
            raise InvalidParameterError(f"code word outside {{0,1}}^{self.n}")
        object.__setattr__(self, "words", words)

    def __len__(self) -> int:
        return len(self.words)

    @property
    def min_distance(self) -> Optional[int]:
        """Smallest pairwise distance; None for codes with fewer than two words."""
        best = None
        for i, u in enumerate(self.words):
            for v in self.words[i + 1:]:
                dist = (u ^ v).bit_count()
                if best is None or dist < best:
                    best = dist
        return best

    @classmethod
    def from_bitstrings(cls, text: str) -> "Code":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ParseError("no code words found")
        n = len(lines[0])
        if any(len(ln) != n or set(ln) - {"0", "1"} for ln in lines):
            raise ParseError("code words must be bitstrings of equal length")
        return cls(n, tuple(int(ln, 2) for ln in lines))

    def to_bitstrings(self) -> str:
        return "\n".join(format(w, f"0{self.n}b") for w in self.words)

    def permute(self, perm: Sequence[int]) -> "Code":
        """Move coordinate i to position perm[i]."""
        return Code(self.n, tuple(permute_bits(w, perm) for w in self.words))


def permute_bits(word: int, perm: Sequence[int]) -> int:
    out = 0
    for i, target in enumerate(perm):
        if (word >> i) & 1:
            out |= 1 << target
    return out


def _search(n: int, d: int, order: Optional[Sequence[int]]) -> List[int]:
    """Largest code containing 0 with minimum distance >= d (d >= 3)."""
    key = (lambda w: permute_bits(w, order)) if order is not None else (lambda w: w)
    words = sorted((w for w in range(1, 2 ** n) if w.bit_count() >= d), key=key)
    count = len(words)
    compat = []
    for u in words:
        bits = 0
        for j, v in enumerate(words):
            if (u ^ v).bit_count() >= d:
                bits |= 1 << j
        compat.append(bits)

    best: List[int] = []
    nodes = 0

    def colour_sort(P: int) -> List[Tuple[int, int]]:
        # greedy colouring; one colour class = words pairwise closer than d
        out: List[Tuple[int, int]] = []
        colour = 0
        U = P
        while U:
            colour += 1
            Q = U
            while Q:
                low = Q & -Q
                v = low.bit_length() - 1
                U &= ~low
                Q &= ~low & ~compat[v]
                out.append((v, colour))
        return out

    def expand_clique(clique: List[int], P: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if not P:
            if len(clique) > len(best):
                best = list(clique)
            return
        if len(clique) + P.bit_count() <= len(best):
            return
        ordered = colour_sort(P)
        for v, colour in reversed(ordered):
            if len(clique) + colour <= len(best):
                return
            clique.append(v)
            expand_clique(clique, P & compat[v])
            clique.pop()
            P &= ~(1 << v)

    expand_clique([], (1 << count) - 1)
    log.debug("code search n=%d d=%d visited %d nodes, found %d words", n, d, nodes, len(best) + 1)
    return [0] + sorted(words[v] for v in best)


def max_code(
    n: int,
    d: int,
    limit: Optional[int] = None,
    order: Optional[Sequence[int]] = None,
) -> Tuple[int, Code]:
    """Exact A(n,d) together with a code achieving it.

    d <= 1 is the whole cube; d = 2 is the even-weight code (x and x + e_1
    cannot both be code words, so 2^(n-1) is optimal); d > n leaves one word.
    Everything else is found by exhaustive branch and bound with 0 fixed in C.
    """
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    if order is not None and sorted(order) != list(range(n)):
        raise InvalidParameterError("order must be a permutation of the n coordinates")
    settings = get_settings()
    if d <= 2:
        if n > settings.dense_limit:
            raise OracleLimitError(f"witness for d <= 2 has 2^{n} words; n is limited to {settings.dense_limit}")
        if d <= 1:
            words = tuple(range(2 ** n))
        else:
            words = tuple(w for w in range(2 ** n) if w.bit_count() % 2 == 0)
        return len(words), Code(n, words)
    if d > n:
        return 1, Code(n, (0,))
    limit = settings.oracle_limit if limit is None else limit
    if n > limit:
        raise OracleLimitError(
            f"exhaustive search is limited to n <= {limit} for d >= 3 (got n={n}); raise LPBOUND_ORACLE_LIMIT"
        )
    words = _search(n, d, order)
    return len(words), Code(n, tuple(words))


def distance_distribution(code: Code) -> Tuple[DenseFunction, LevelProfile]:
    """f_C = (2^n/|C|) 1_C * 1_C, so f_C(x) = |{(u,v) in C^2 : u+v = x}| / |C|."""
    if len(code) < 1:
        raise InvalidParameterError("distance distribution needs a non-empty code")
    ind = indicator(code.n, code.words)
    f = dense_convolve(ind, ind).scale(Fraction(2 ** code.n, len(code)))
    return f, radialize(f)


def distribution_properties(f: DenseFunction, d: int) -> Dict[str, bool]:
    """The four facts that make f_C a feasible point of the Delsarte program."""
    weights = hamming_weights(f.n)
    values = f.values
    transform = dense_transform(f)
    return {
        "f(0) = 1": values[0] == 1,
        "f >= 0": all(v >= 0 for v in values),
        "f = 0 on 1 <= |x| <= d-1": all(
            values[x] == 0 for x in range(len(values)) if 1 <= weights[x] <= d - 1
        ),
        "f_hat >= 0": all(v >= 0 for v in transform.values),
    }


@dataclass(frozen=True)
class ChainAudit:
    """ĝ(0)|C| = 2^n ĝ(0) f̂_C(0) <= 2^n <ĝ, f̂_C> = 2^n <f_C, g> <= f_C(0) g(0)."""

    size_term: Fraction
    mean_term: Fraction
    fourier_term: Fraction
    space_term: Fraction
    top: Fraction

    @property
    def links(self) -> Dict[str, bool]:
        return {
            "size = mean": self.size_term == self.mean_term,
            "mean <= fourier": self.mean_term <= self.fourier_term,
            "fourier = space (Parseval)": self.fourier_term == self.space_term,
            "space <= top": self.space_term <= self.top,
        }

    @property
    def holds(self) -> bool:
        return all(self.links.values())


def chain_audit(code: Code, g: LevelProfile) -> ChainAudit:
    n = code.n
    if g.n != n:
        raise InvalidParameterError(f"profile has n={g.n}, code has n={n}")
    f, _ = distance_distribution(code)
    gd = expand(g)
    ghat0 = radial_sum(g) / 2 ** n
    fhat0 = f.total() / 2 ** n
    # <ĝ, f̂_C> is unnormalized in Fourier space; hats are 2^-n F[.]
    fourier = dense_transform(gd).dot(dense_transform(f)) / 4 ** n
    return ChainAudit(
        size_term=ghat0 * len(code),
        mean_term=2 ** n * ghat0 * fhat0,
        fourier_term=2 ** n * fourier,
        space_term=f.dot(gd),
        top=f[0] * g[0],
    )