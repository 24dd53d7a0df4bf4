"""Words and GF(2) sums in the algebra of higher divided squares.

A composite operation is a word ``(i1, ..., is)`` of integer indices, each
at least 2, standing for the composition delta_{i1} o ... o delta_{is}
(rightmost factor applied first; the empty word is the identity).  A word
is *admissible* when ``i_t >= 2*i_{t+1}`` for every adjacent pair, and the
admissible words form a GF(2) basis of the operation algebra.  A strictly
inadmissible adjacent pair (``i < 2j``) rewrites by the Adem rule

    delta_i delta_j = sum over s in [ceil((i+1)/2), floor((i+j)/3)] of
                      C(j-i+s-1, j-s) * delta_{i+j-s} delta_s

where an empty summation range means zero; every emitted pair is
admissible since ``s <= (i+j)/3``.  Elements are frozensets of words:
membership is a mod-2 coefficient and addition is symmetric difference.

The statistics of a word ``I = (i1, ..., is)`` are its degree
``d(I) = i1 + ... + is``, its length ``s``, and its excess
``e(I) = i1 - i2 - ... - is`` (0 for the empty word).  Excess controls
instability: on a class of degree n, an admissible word acts as zero
exactly when its excess exceeds n.

The alpha form reindexes operations by the degree acted on: alpha_a on a
degree-m class is delta_{m-a} and lands in degree 2m-a.  An alpha word
therefore carries an explicit source degree and converts to a delta word
factor by factor, rightmost first, updating the running degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError
from .f2 import binom_mod2, check_index

Word = tuple[int, ...]
Element = frozenset  # frozenset[Word], GF(2) coefficients by membership

ZERO: Element = frozenset()
IDENTITY: Word = ()

_STRATEGIES = ("leftmost", "rightmost")

# Normal forms are memoized per rewriting strategy; entries are pure values
# so concurrent use at worst recomputes.
_NF_MEMO: dict[str, dict[Word, Element]] = {s: {} for s in _STRATEGIES}


def check_word(word: Iterable[int]) -> Word:
    """Validate and normalize a word: integer indices, each >= 2, below 2^32."""
    w = tuple(int(i) for i in word)
    for i in w:
        if i < 2:
            raise DomainError(f"delta index {i} below 2 in word {w}")
        check_index(i, "delta index")
    return w


def is_admissible(word: Word) -> bool:
    return all(word[t] >= 2 * word[t + 1] for t in range(len(word) - 1))


def excess(word: Word) -> int:
    return word[0] - sum(word[1:]) if word else 0


def degree(word: Word) -> int:
    return sum(word)


def length(word: Word) -> int:
    return len(word)


def moment(word: Word) -> int:
    """Termination measure for rewriting: sum of position * index (1-based)."""
    return sum(t * i for t, i in enumerate(word, start=1))


def adem_pair(i: int, j: int) -> Element:
    """Rewrite the strictly inadmissible pair delta_i delta_j (i < 2j).

    Returns the GF(2) sum of admissible pairs; the empty element is zero.
    """
    if i < 2 or j < 2:
        raise DomainError(f"delta indices must be >= 2, got ({i}, {j})")
    if i >= 2 * j:
        raise DomainError(f"pair ({i}, {j}) is already admissible")
    return _adem(i, j)


def _adem(i: int, j: int) -> Element:
    lo = -(-(i + 1) // 2)
    hi = (i + j) // 3
    out = set()
    for s in range(lo, hi + 1):
        if binom_mod2(j - i + s - 1, j - s):
            out.add((i + j - s, s))
    return frozenset(out)


def _find_pair(word: Word, strategy: str) -> int | None:
    rng = range(len(word) - 1)
    if strategy == "rightmost":
        rng = reversed(rng)
    for t in rng:
        if word[t] < 2 * word[t + 1]:
            return t
    return None


def _normal_form(word: Word, strategy: str) -> Element:
    memo = _NF_MEMO[strategy]
    stack = [word]
    while stack:
        w = stack[-1]
        if w in memo:
            stack.pop()
            continue
        p = _find_pair(w, strategy)
        if p is None:
            memo[w] = frozenset({w})
            stack.pop()
            continue
        reps = [w[:p] + pair + w[p + 2:] for pair in sorted(_adem(w[p], w[p + 1]))]
        pending = [r for r in reps if r not in memo]
        if pending:
            stack.extend(pending)
            continue
        acc: set = set()
        for r in reps:
            acc ^= memo[r]
        memo[w] = frozenset(acc)
        stack.pop()
    return memo[word]


def reduce(words: Iterable[Iterable[int]], strategy: str = "leftmost") -> Element:
    """Admissible normal form of a GF(2) sum of arbitrary words.

    Inadmissible adjacent pairs are rewritten repeatedly (deterministically
    at the leftmost pair unless told otherwise) and duplicates cancel mod 2.
    """
    if strategy not in _STRATEGIES:
        raise DomainError(f"unknown strategy {strategy!r}")
    out: set = set()
    for w in words:
        out ^= _normal_form(check_word(w), strategy)
    return frozenset(out)


def compose(a: Element, b: Element) -> Element:
    """Concatenate every pair of words and reduce; bilinear over GF(2)."""
    out: set = set()
    for u in a:
        for v in b:
            out ^= _normal_form(check_word(tuple(u) + tuple(v)), "leftmost")
    return frozenset(out)


def theta(s: int, t: int) -> Word:
    """The length-s composite (2^(s+t), 2^(s+t-1), ..., 2^(t+1))."""
    if s < 0 or t < 0:
        raise DomainError("theta takes nonnegative arguments")
    if s:
        check_index(2 ** (s + t), "theta index")
    return tuple(2 ** (s + t - k) for k in range(s))


def annihilation_order(j: int, t: int, s_max: int = 16) -> int | None:
    """Least s <= s_max with reduce(theta(s, t) * delta_j) = 0, else None.

    Requires j > 2^t; existence of a finite order is guaranteed under that
    hypothesis, so None signals that s_max was too small.
    """
    if j < 2:
        raise DomainError(f"delta index {j} below 2")
    if j <= 2**t:
        raise DomainError(f"annihilation search needs j > 2^t, got j={j}, t={t}")
    for s in range(1, s_max + 1):
        if not _normal_form(theta(s, t) + (j,), "leftmost"):
            return s
    return None


@dataclass(frozen=True)
class AlphaWord:
    """A composite of alpha operations together with the degree it acts on.

    ``indices[k]`` is applied (k+1)-th from the right; at each stage the
    factor alpha_a requires 0 <= a <= m-2 where m is the running degree,
    and the degree updates to 2m - a.
    """

    indices: Word
    source_degree: int

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(int(a) for a in self.indices))
        if self.source_degree < 2:
            raise DomainError(f"alpha words act on degrees >= 2, got {self.source_degree}")
        m = self.source_degree
        for pos, a in enumerate(reversed(self.indices), start=1):
            if not 0 <= a <= m - 2:
                raise DomainError(
                    f"alpha_{a} (factor {pos} from the right) is undefined on degree {m}"
                )
            m = 2 * m - a

    def stage_degrees(self) -> list[int]:
        """Degrees seen before each application, rightmost first, plus the target."""
        out = [self.source_degree]
        for a in reversed(self.indices):
            out.append(2 * out[-1] - a)
        return out


def alpha_stages_valid(indices: Iterable[int], source_degree: int) -> bool:
    m = source_degree
    for a in reversed(tuple(indices)):
        if not 0 <= a <= m - 2:
            return False
        m = 2 * m - a
    return True


def alpha_to_delta(word: AlphaWord) -> Word:
    """Convert an alpha word to the delta word it denotes; no reduction applied."""
    m = word.source_degree
    out = []
    for a in reversed(word.indices):
        out.append(m - a)
        m = 2 * m - a
    return tuple(reversed(out))


def unstable_part(element: Element, n: int) -> Element:
    """Restrict to words that act nontrivially on a degree-n class (excess <= n)."""
    return frozenset(w for w in element if excess(w) <= n)


def alpha_adem_check(i: int, j: int, n: int) -> bool:
    """Check the alpha-form Adem relation on a class of degree n.

    For j < i the relation rewrites alpha_i alpha_j as the sum over s in
    [ceil((i+2j)/3), floor((i+j-1)/2)] of C(i-s-1, s-j) alpha_{i+2j-2s}
    alpha_s.  Both sides are converted to delta words, reduced, and
    compared as operations on degree n (words of excess > n act as zero);
    right-hand terms whose stage constraints fail are dropped.
    """
    if j >= i:
        raise DomainError(f"alpha Adem relation needs j < i, got ({i}, {j})")
    lhs = unstable_part(reduce([alpha_to_delta(AlphaWord((i, j), n))]), n)
    rhs: set = set()
    lo = -(-(i + 2 * j) // 3)
    hi = (i + j - 1) // 2
    for s in range(lo, hi + 1):
        if not binom_mod2(i - s - 1, s - j):
            continue
        term = (i + 2 * j - 2 * s, s)
        if not alpha_stages_valid(term, n):
            continue
        rhs ^= unstable_part(reduce([alpha_to_delta(AlphaWord(term, n))]), n)
    return lhs == frozenset(rhs)
