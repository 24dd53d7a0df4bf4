"""Free divided power algebras on higher-divided-square generators.

The homotopy of a free commutative algebra on a graded vector space W is
the free divided power algebra on generators ``delta_I(x_n)``, one for
each polynomial generator ``x_n`` of W and each admissible word I with
``e(I) < n``.  Such a generator has degree ``n + d(I)`` and weight
``2^length(I)``.  In characteristic 2 every divided power is generated by
the divided square, so a basis monomial is a product of factors
``gamma_{2^e}(g)`` over *distinct* pairs (g, e): a repeated factor squares
to zero.  Elements are frozensets of monomials with GF(2) coefficients by
membership.

The action of delta_i is computed through the word calculus: a factor
``gamma_{2^e}(delta_I x_n)`` is the admissible word made of e doubling
steps (each index equal to the degree it acts on, i.e. e divided squares)
followed by I.  Applying delta_i prepends an index, the result reduces by
the Adem rules, and each surviving admissible word J is peeled back into
a basis factor: words of excess > n act as zero, words of excess n carry
gamma-power prefixes, and words of excess < n are plain generators.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import words as wd
from .errors import DomainError
from .f2 import GradedDims, binom_mod2

Element = frozenset  # frozenset[SMonomial]

ZERO: Element = frozenset()


@dataclass(frozen=True)
class FreeGenerator:
    """A divided-power-algebra generator ``delta_word(x_{base_degree:index})``."""

    base_degree: int
    index: int = 1
    word: wd.Word = ()

    def __post_init__(self):
        object.__setattr__(self, "word", wd.check_word(self.word))
        if self.base_degree < 1:
            raise DomainError(f"generator degree must be >= 1, got {self.base_degree}")
        if self.index < 1:
            raise DomainError(f"generator index must be >= 1, got {self.index}")
        if not wd.is_admissible(self.word):
            raise DomainError(f"generator word {self.word} is not admissible")
        if self.word and wd.excess(self.word) >= self.base_degree:
            raise DomainError(
                f"word of excess {wd.excess(self.word)} does not generate on degree {self.base_degree}"
            )

    @property
    def degree(self) -> int:
        return self.base_degree + sum(self.word)

    @property
    def weight(self) -> int:
        return 2 ** len(self.word)

    @property
    def sort_key(self):
        return (self.degree, self.base_degree, self.index, self.word)


@dataclass(frozen=True)
class SMonomial:
    """Product of gamma_{2^e} factors over distinct (generator, e) pairs."""

    factors: frozenset = frozenset()  # frozenset[tuple[FreeGenerator, int]]

    def __post_init__(self):
        object.__setattr__(self, "factors", frozenset(self.factors))
        for g, e in self.factors:
            if e < 0:
                raise DomainError(f"negative gamma exponent {e}")

    @property
    def degree(self) -> int:
        return sum((1 << e) * g.degree for g, e in self.factors)

    @property
    def weight(self) -> int:
        return sum((1 << e) * g.weight for g, e in self.factors)

    def sorted_factors(self) -> list[tuple[FreeGenerator, int]]:
        return sorted(self.factors, key=lambda fe: (fe[0].sort_key, fe[1]))

    @property
    def sort_key(self):
        return (self.degree, [(g.sort_key, e) for g, e in self.sorted_factors()])


UNIT_MONOMIAL = SMonomial()
ONE: Element = frozenset({UNIT_MONOMIAL})


def generator_element(g: FreeGenerator) -> Element:
    return frozenset({SMonomial(frozenset({(g, 0)}))})


def element_degree(elem: Element) -> int | None:
    """Common degree of a homogeneous element; None for the zero element."""
    degs = {m.degree for m in elem}
    if not degs:
        return None
    if len(degs) > 1:
        raise DomainError(f"element is not homogeneous, degrees {sorted(degs)}")
    return degs.pop()


def multiply(a: Element, b: Element) -> Element:
    """Bilinear product; monomials sharing a factor multiply to zero."""
    out: set = set()
    for ma in a:
        for mb in b:
            if ma.factors & mb.factors:
                continue
            out ^= {SMonomial(ma.factors | mb.factors)}
    return frozenset(out)


def _bit_positions(k: int):
    b = 0
    while k:
        if k & 1:
            yield b
        k >>= 1
        b += 1


def _gamma_monomial(mon: SMonomial, k: int) -> Element:
    if k == 0:
        return ONE
    if k == 1:
        return frozenset({mon})
    if not mon.factors:
        raise DomainError("divided powers are undefined on the unit")
    if len(mon.factors) >= 2:
        return ZERO  # gamma_k vanishes on products of positive-degree elements
    ((g, e),) = mon.factors
    return frozenset({SMonomial(frozenset((g, b) for b in _bit_positions(k << e)))})


def _gamma_sum(mons: list[SMonomial], k: int) -> Element:
    if k == 0:
        return ONE
    if not mons:
        return ZERO
    head, rest = mons[0], mons[1:]
    out: set = set()
    for r in range(k + 1):
        gh = _gamma_monomial(head, r)
        if not gh:
            continue
        gr = _gamma_sum(rest, k - r)
        out ^= multiply(gh, gr)
    return frozenset(out)


def gamma_power(elem: Element, k: int) -> Element:
    """The divided power gamma_k, expanded through the algebra axioms.

    General k splits along the binary expansion on single factors and
    distributes over sums; gamma_k of a product of two positive-degree
    elements vanishes for k >= 2.
    """
    if k < 0:
        raise DomainError(f"negative divided power {k}")
    return _gamma_sum(sorted(elem, key=lambda m: m.sort_key), k)


def _gamma_prefix_word(g: FreeGenerator, e: int) -> wd.Word:
    m0 = g.degree
    return tuple(m0 << k for k in range(e - 1, -1, -1)) + g.word


def _peel(word: wd.Word, n: int) -> tuple[int, wd.Word] | None:
    """Split an admissible word acting on x_n into (gamma2 count, generator word).

    Scanning right to left, indices below the running degree extend the
    generator word, an index equal to the degree is a divided square, and
    a larger index (excess above n) kills the class.
    """
    m = n
    e = 0
    gen_word: list[int] = []
    for idx in reversed(word):
        if e == 0 and idx < m:
            gen_word.insert(0, idx)
            m += idx
        elif idx == m:
            e += 1
            m *= 2
        else:
            return None
    return e, tuple(gen_word)


def delta_act(i: int, elem: Element) -> Element:
    """Apply delta_i termwise.

    On a product of two or more positive-degree factors the Cartan formula
    gives zero; on a single factor the action runs through the word
    calculus described in the module docstring.  An index above the degree
    of the term acts as zero, and the index equal to the degree is the
    divided square.
    """
    if i < 2:
        raise DomainError(f"delta index {i} below 2")
    out: set = set()
    for mon in elem:
        out ^= _delta_act_monomial(i, mon)
    return frozenset(out)


def _delta_act_monomial(i: int, mon: SMonomial) -> Element:
    if len(mon.factors) != 1:
        return ZERO  # the unit in degree 0, or a Cartan-killed product
    ((g, e),) = mon.factors
    m = g.degree << e
    if i > m:
        return ZERO
    if g.base_degree == 1:
        # gamma powers of a degree-1 generator sit below the word calculus:
        # only the top operation (the divided square) survives, by weight.
        if i == m:
            return frozenset({SMonomial(frozenset({(g, e + 1)}))})
        return ZERO
    full = (i,) + _gamma_prefix_word(g, e)
    out: set = set()
    for J in wd.reduce([full]):
        peeled = _peel(J, g.base_degree)
        if peeled is None:
            continue
        e2, word2 = peeled
        g2 = FreeGenerator(g.base_degree, g.index, word2)
        out ^= {SMonomial(frozenset({(g2, e2)}))}
    return frozenset(out)


def apply_word(word, elem: Element) -> Element:
    """Apply a composite of delta operations, rightmost index first.

    Each stage whose index exceeds the degree it meets acts as zero.  For
    words all of whose stages are in range this agrees with rewriting the
    whole word first; outside that range the rewritten form is not an
    identity of operations and only the stagewise value is meaningful.
    """
    for i in reversed(tuple(word)):
        elem = delta_act(i, elem)
    return elem


def q_project(elem: Element) -> Element:
    """Project to indecomposables: keep bare generators only.

    Monomials with two or more factors are products, and gamma powers with
    e >= 1 are decomposable as divided powers; both are dropped.
    """
    kept = set()
    for mon in elem:
        if len(mon.factors) == 1:
            ((_, e),) = mon.factors
            if e == 0:
                kept.add(mon)
    return frozenset(kept)


def s_generators(n: int, max_degree: int) -> list[FreeGenerator]:
    """All generators delta_I(x_n) with e(I) < n and degree <= max_degree.

    Includes x_n itself (the empty word); sorted by degree, then word.
    """
    if n < 1:
        raise DomainError(f"generator degree must be >= 1, got {n}")
    found: list[wd.Word] = []
    budget = max_degree - n

    def extend(word: wd.Word, total: int):
        lo = 2 * word[0] if word else 2
        for i in range(lo, budget - total + 1):
            w2 = (i,) + word
            # extensions never lower excess, so stop the branch at e >= n
            if wd.excess(w2) >= n:
                continue
            found.append(w2)
            extend(w2, total + i)

    if budget >= 0:
        found.append(())
        extend((), 0)
    gens = [FreeGenerator(n, 1, w) for w in found]
    gens.sort(key=lambda g: g.sort_key)
    return gens


@dataclass
class SBasis:
    """Monomial basis of the free divided power algebra on W, through a degree cut."""

    monomials: list[SMonomial]
    by_degree: GradedDims
    by_weight: dict[int, GradedDims]


def s_basis(gens, max_degree: int) -> SBasis:
    """Enumerate all basis monomials of degree <= max_degree.

    ``gens`` lists pairs (degree, multiplicity) describing W; a degree-n
    entry of multiplicity d contributes generators labelled x_{n:1}..x_{n:d}.
    The weight-m slice of the result realizes the weight-m summand.
    """
    factor_pool: list[tuple[FreeGenerator, int]] = []
    for n, mult in gens:
        if n < 1:
            raise DomainError(f"generator degrees must be >= 1, got {n}")
        for idx in range(1, int(mult) + 1):
            for g0 in s_generators(n, max_degree):
                g = FreeGenerator(n, idx, g0.word)
                e = 0
                while (1 << e) * g.degree <= max_degree:
                    factor_pool.append((g, e))
                    e += 1
    factor_pool.sort(key=lambda fe: ((1 << fe[1]) * fe[0].degree, fe[0].sort_key, fe[1]))

    monomials: list[SMonomial] = []

    def grow(start: int, chosen: tuple, total: int):
        monomials.append(SMonomial(frozenset(chosen)))
        for k in range(start, len(factor_pool)):
            g, e = factor_pool[k]
            d = (1 << e) * g.degree
            if total + d > max_degree:
                continue
            grow(k + 1, chosen + ((g, e),), total + d)

    grow(0, (), 0)
    monomials.sort(key=lambda m: m.sort_key)

    by_degree: dict[int, int] = {}
    by_weight: dict[int, dict[int, int]] = {}
    for m in monomials:
        by_degree[m.degree] = by_degree.get(m.degree, 0) + 1
        slice_ = by_weight.setdefault(m.weight, {})
        slice_[m.degree] = slice_.get(m.degree, 0) + 1
    return SBasis(
        monomials,
        GradedDims(by_degree),
        {w: GradedDims(t) for w, t in sorted(by_weight.items())},
    )


@dataclass
class ProbeResult:
    """Outcome of iterating an operation on the indecomposables."""

    kind: str
    start: FreeGenerator
    status: str  # "nilpotent" or "nonvanishing"
    order: int | None
    iterations: int
    trajectory: list[Element] = field(default_factory=list)


def _probe_index(kind: str, deg: int) -> int:
    if kind == "gamma2":
        return deg
    if kind == "andre":
        return deg - 1
    if kind.startswith("alpha:"):
        try:
            return deg - int(kind.split(":", 1)[1])
        except ValueError:
            pass
    raise DomainError(f"unknown probe kind {kind!r}; use gamma2, alpha:K, or andre")


def nilpotency_probe(kind: str, start: FreeGenerator, max_iter: int) -> ProbeResult:
    """Iterate gamma2 / alpha:k / andre through delta_act and q_project.

    Reports the first step at which the iterate vanishes in the
    indecomposables, or that it survived max_iter steps.  A stage whose
    delta index would fall below 2 is a domain boundary.
    """
    _probe_index(kind, 4)  # reject unknown kinds up front
    if start.degree < 2:
        raise DomainError("probes need a starting generator of degree >= 2")
    current = generator_element(start)
    trajectory = [current]
    for step in range(1, max_iter + 1):
        deg = element_degree(current)
        i = _probe_index(kind, deg)
        if i < 2:
            raise DomainError(
                f"{kind} on degree {deg} would need delta_{i}; operations stop at delta_2"
            )
        current = q_project(delta_act(i, current))
        trajectory.append(current)
        if not current:
            return ProbeResult(kind, start, "nilpotent", step, max_iter, trajectory)
    return ProbeResult(kind, start, "nonvanishing", None, max_iter, trajectory)


@dataclass
class AxiomReport:
    """Pass/fail tallies for the divided power algebra axioms."""

    trials: int
    checked: dict[str, int]
    failures: dict[str, int]

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())


AXIOM_NAMES = ("gamma0_gamma1", "same_argument_product", "sum_rule", "product_vanishing",
               "scalar_rule", "square_composition")


def _sample_element(rng: random.Random, pool: list[SMonomial], max_terms: int = 3) -> Element:
    k = rng.randint(1, max_terms)
    out: set = set()
    for _ in range(k):
        out ^= {rng.choice(pool)}
    return frozenset(out)


def gamma_axiom_suite(trials: int, seed: int = 0, pool=None) -> AxiomReport:
    """Fuzz the divided power axioms on random elements over GF(2).

    Samples are drawn from ``pool`` (positive-degree basis monomials); by
    default, the basis on one generator each of degrees 1, 2, 3.
    """
    rng = random.Random(seed)
    if pool is None:
        pool = [m for m in s_basis([(1, 1), (2, 1), (3, 1)], 9).monomials if m.factors]
    checked = {a: 0 for a in AXIOM_NAMES}
    failures = {a: 0 for a in AXIOM_NAMES}

    def tally(axiom: str, passed: bool):
        checked[axiom] += 1
        if not passed:
            failures[axiom] += 1

    for _ in range(trials):
        x = _sample_element(rng, pool)
        y = _sample_element(rng, pool)
        h = rng.randint(0, 4)
        k = rng.randint(0, 4)

        tally("gamma0_gamma1",
              gamma_power(x, 0) == ONE and gamma_power(x, 1) == x)

        lhs = multiply(gamma_power(x, h), gamma_power(x, k))
        rhs = gamma_power(x, h + k) if binom_mod2(h + k, h) else ZERO
        tally("same_argument_product", lhs == rhs)

        expansion: set = set()
        for r in range(k + 1):
            expansion ^= multiply(gamma_power(x, r), gamma_power(y, k - r))
        tally("sum_rule", gamma_power(x ^ y, k) == frozenset(expansion))

        prod = multiply(x, y)
        tally("product_vanishing",
              all(gamma_power(prod, kk) == ZERO for kk in range(2, 5)) if prod else True)

        # degree-0 scalars over GF(2) are 0 and 1
        kk = max(k, 1)
        tally("scalar_rule",
              gamma_power(ZERO, kk) == ZERO
              and gamma_power(multiply(ONE, x), kk) == gamma_power(x, kk))

        tally("square_composition",
              gamma_power(gamma_power(x, 2), k) == gamma_power(x, 2 * k))

    return AxiomReport(trials, checked, failures)
