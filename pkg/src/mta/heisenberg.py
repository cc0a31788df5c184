"""Exact normal-ordering engine for the rank-n free-boson mode algebra.

Modes H_i t^a (generator index 1 <= i <= n, exponent a in Z) satisfy

    [H_i t^a, H_j t^b] = a * delta_{i,j} * delta_{a+b,0}

with the central charge parameter fixed at 1, and deg(H_i t^a) = -a.
Elements are finite rational combinations of normal-ordered words: creators
(a < 0) on the left, central zero modes (a = 0) in the middle, annihilators
(a > 0) on the right.  Products are reduced by a worklist of adjacent
transpositions; each swap either commutes freely or spawns one contracted
word, and the inversion count strictly drops, so reduction terminates.

Reducing a degree-0 element modulo words that end in an annihilator lands in
the polynomial ring Q[h_1..h_n] generated by the zero modes; that quotient
is the degree-0 corner algebra all higher structure is measured against.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .exact import frac_str, parse_frac
from .partitions import (
    LabeledPartition,
    enumerate_labeled_partitions,
    labeled_partition_count,
)


class Mode(NamedTuple):
    """Single mode H_gen t^exp."""

    gen: int
    exp: int

    @property
    def degree(self) -> int:
        return -self.exp

    def __repr__(self) -> str:
        return f"H{self.gen}t{self.exp}"


def commutator(m1: Mode, m2: Mode) -> int:
    """Exact scalar [m1, m2]; nonzero only for matching generator and
    opposite exponents."""
    if m1.gen < 1 or m2.gen < 1:
        raise ValueError("generator indices start at 1")
    if m1.gen == m2.gen and m1.exp + m2.exp == 0:
        return m1.exp
    return 0


def _block_key(m: Mode):
    return (m.gen, -abs(m.exp))


def _category(m: Mode) -> int:
    # creator 0, zero mode 1, annihilator 2
    if m.exp < 0:
        return 0
    return 1 if m.exp == 0 else 2


@dataclass(frozen=True)
class NormalWord:
    """Block-ordered word: creators, zero modes, annihilators.

    Within the creator and annihilator blocks modes are sorted by generator
    index then by |exponent| non-increasing; zero modes are kept as a sorted
    multiset of generator indices.  All modes inside a block commute, so the
    sort is a free canonicalization.
    """

    creators: tuple[Mode, ...] = ()
    zeros: tuple[int, ...] = ()
    annihilators: tuple[Mode, ...] = ()

    def __post_init__(self):
        if any(m.exp >= 0 for m in self.creators):
            raise ValueError("creators must have negative exponent")
        if any(m.exp <= 0 for m in self.annihilators):
            raise ValueError("annihilators must have positive exponent")

    @classmethod
    def build(cls, creators=(), zeros=(), annihilators=()) -> "NormalWord":
        return cls(
            tuple(sorted(creators, key=_block_key)),
            tuple(sorted(zeros)),
            tuple(sorted(annihilators, key=_block_key)),
        )

    def degree(self) -> int:
        return -sum(m.exp for m in self.creators) - sum(m.exp for m in self.annihilators)

    def mode_sequence(self) -> tuple[Mode, ...]:
        return self.creators + tuple(Mode(g, 0) for g in self.zeros) + self.annihilators

    def sort_key(self):
        return (self.creators, self.zeros, self.annihilators)

    def __repr__(self) -> str:
        seq = self.mode_sequence()
        return "1" if not seq else "*".join(repr(m) for m in seq)


def _normal_order(seq: tuple[Mode, ...]) -> dict[NormalWord, Fraction]:
    """Reduce an arbitrary mode sequence to normal-ordered words.

    Worklist of adjacent transpositions: the first out-of-block-order pair is
    swapped (coefficient unchanged) and, when the commutator is nonzero, the
    contracted word with both modes removed is added.  Identical in-flight
    sequences are merged, which keeps the state count polynomial in practice.
    """
    one = Fraction(1)
    frontier: dict[tuple[Mode, ...], Fraction] = {seq: one}
    done: dict[NormalWord, Fraction] = {}
    while frontier:
        word, coeff = frontier.popitem()
        idx = None
        for i in range(len(word) - 1):
            if _category(word[i]) > _category(word[i + 1]):
                idx = i
                break
        if idx is None:
            w = NormalWord.build(
                [m for m in word if m.exp < 0],
                [m.gen for m in word if m.exp == 0],
                [m for m in word if m.exp > 0],
            )
            tot = done.get(w, 0) + coeff
            if tot:
                done[w] = tot
            else:
                done.pop(w, None)
            continue
        x, y = word[idx], word[idx + 1]
        swapped = word[:idx] + (y, x) + word[idx + 2 :]
        tot = frontier.get(swapped, 0) + coeff
        if tot:
            frontier[swapped] = tot
        else:
            frontier.pop(swapped, None)
        c = commutator(x, y)
        if c:
            contracted = word[:idx] + word[idx + 2 :]
            tot = frontier.get(contracted, 0) + coeff * c
            if tot:
                frontier[contracted] = tot
            else:
                frontier.pop(contracted, None)
    return done


class ModeElement:
    """Finite rational combination of normal-ordered words of fixed rank."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: dict[NormalWord, Fraction] | None = None):
        if rank < 1:
            raise ValueError("rank must be positive")
        self.rank = rank
        self.terms: dict[NormalWord, Fraction] = {}
        if terms:
            for w, c in terms.items():
                c = Fraction(c)
                if c:
                    self._check_word(w)
                    self.terms[w] = c

    def _check_word(self, w: NormalWord):
        for m in w.mode_sequence():
            if not 1 <= m.gen <= self.rank:
                raise ValueError(f"generator {m.gen} out of range for rank {self.rank}")

    @classmethod
    def unit(cls, rank: int) -> "ModeElement":
        return cls(rank, {NormalWord(): Fraction(1)})

    @classmethod
    def from_word(cls, rank: int, word: NormalWord, coeff=1) -> "ModeElement":
        return cls(rank, {word: Fraction(coeff)})

    @classmethod
    def from_modes(cls, rank: int, modes, coeff=1) -> "ModeElement":
        """Normal-order an arbitrary mode sequence."""
        el = cls(rank)
        for w, c in _normal_order(tuple(modes)).items():
            el.terms[w] = Fraction(coeff) * c
        el.terms = {w: c for w, c in el.terms.items() if c}
        for w in el.terms:
            el._check_word(w)
        return el

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        degs = {w.degree() for w in self.terms}
        return len(degs) <= 1

    def degree(self) -> int:
        """Common degree of all words; 0 for the zero element."""
        degs = sorted({w.degree() for w in self.terms})
        if not degs:
            return 0
        if len(degs) > 1:
            raise ValueError(f"element mixes degrees {degs}")
        return degs[0]

    def _require_same_rank(self, other: "ModeElement"):
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "ModeElement") -> "ModeElement":
        self._require_same_rank(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            tot = terms.get(w, 0) + c
            if tot:
                terms[w] = tot
            else:
                terms.pop(w, None)
        return ModeElement(self.rank, terms)

    def __neg__(self) -> "ModeElement":
        return ModeElement(self.rank, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "ModeElement") -> "ModeElement":
        return self + (-other)

    def scale(self, c) -> "ModeElement":
        c = Fraction(c)
        return ModeElement(self.rank, {w: c * x for w, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, ModeElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ModeElement)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def sorted_terms(self) -> list[tuple[NormalWord, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    def to_json(self) -> list[dict]:
        out = []
        for w, c in self.sorted_terms():
            out.append(
                {
                    "coeff": frac_str(c),
                    "creators": [[m.gen, m.exp] for m in w.creators],
                    "zeros": list(w.zeros),
                    "annihilators": [[m.gen, m.exp] for m in w.annihilators],
                }
            )
        return out

    @classmethod
    def from_json(cls, rank: int, data) -> "ModeElement":
        el = cls(rank)
        for term in data:
            w = NormalWord.build(
                [Mode(g, a) for g, a in term["creators"]],
                [int(g) for g in term["zeros"]],
                [Mode(g, a) for g, a in term["annihilators"]],
            )
            c = parse_frac(term["coeff"])
            tot = el.terms.get(w, 0) + c
            if tot:
                el.terms[w] = tot
            else:
                el.terms.pop(w, None)
        for w in el.terms:
            el._check_word(w)
        return el

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = [f"({frac_str(c)})*{w!r}" for w, c in self.sorted_terms()]
        return " + ".join(bits)


def multiply(a: ModeElement, b: ModeElement) -> ModeElement:
    """Product in the mode algebra, fully normal-ordered."""
    a._require_same_rank(b)
    out: dict[NormalWord, Fraction] = {}
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            c12 = c1 * c2
            for w, c in _normal_order(w1.mode_sequence() + w2.mode_sequence()).items():
                tot = out.get(w, 0) + c12 * c
                if tot:
                    out[w] = tot
                else:
                    out.pop(w, None)
    return ModeElement(a.rank, out)


def u_element(lp: LabeledPartition) -> ModeElement:
    """Creation monomial: slot i of weight parts l gives creators H_i t^-l."""
    creators = [Mode(i + 1, -p) for i, s in enumerate(lp.slots) for p in s.parts]
    return ModeElement(lp.rank, {NormalWord.build(creators=creators): Fraction(1)})


def ubar_element(lp: LabeledPartition) -> ModeElement:
    """Mirrored annihilation monomial of u_element."""
    ann = [Mode(i + 1, p) for i, s in enumerate(lp.slots) for p in s.parts]
    return ModeElement(lp.rank, {NormalWord.build(annihilators=ann): Fraction(1)})


class ZhuPolynomial:
    """Element of the degree-0 corner algebra Q[h_1..h_n].

    Coefficients map exponent tuples (length = rank) to exact rationals.
    The empty monomial is 1.
    """

    __slots__ = ("rank", "coeffs")

    def __init__(self, rank: int, coeffs: dict[tuple[int, ...], Fraction] | None = None):
        if rank < 1:
            raise ValueError("rank must be positive")
        self.rank = rank
        self.coeffs: dict[tuple[int, ...], Fraction] = {}
        if coeffs:
            for e, c in coeffs.items():
                c = Fraction(c)
                if len(e) != rank or any(x < 0 for x in e):
                    raise ValueError(f"bad exponent tuple {e}")
                if c:
                    self.coeffs[tuple(e)] = c

    @classmethod
    def constant(cls, rank: int, c) -> "ZhuPolynomial":
        return cls(rank, {(0,) * rank: Fraction(c)})

    @classmethod
    def zero(cls, rank: int) -> "ZhuPolynomial":
        return cls(rank)

    @classmethod
    def generator(cls, rank: int, i: int) -> "ZhuPolynomial":
        """The zero-mode generator h_i (1-indexed)."""
        e = [0] * rank
        e[i - 1] = 1
        return cls(rank, {tuple(e): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return all(all(x == 0 for x in e) for e in self.coeffs)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self!r}")
        return self.coeffs.get((0,) * self.rank, Fraction(0))

    def __add__(self, other: "ZhuPolynomial") -> "ZhuPolynomial":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        coeffs = dict(self.coeffs)
        for e, c in other.coeffs.items():
            tot = coeffs.get(e, 0) + c
            if tot:
                coeffs[e] = tot
            else:
                coeffs.pop(e, None)
        return ZhuPolynomial(self.rank, coeffs)

    def __neg__(self) -> "ZhuPolynomial":
        return ZhuPolynomial(self.rank, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, ZhuPolynomial):
            return ZhuPolynomial(
                self.rank, {e: Fraction(other) * c for e, c in self.coeffs.items()}
            )
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        coeffs: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                tot = coeffs.get(e, 0) + c1 * c2
                if tot:
                    coeffs[e] = tot
                else:
                    coeffs.pop(e, None)
        return ZhuPolynomial(self.rank, coeffs)

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ZhuPolynomial)
            and self.rank == other.rank
            and self.coeffs == other.coeffs
        )

    def evaluate(self, point) -> Fraction:
        """Exact value at a rational point (length = rank)."""
        pt = [Fraction(x) for x in point]
        if len(pt) != self.rank:
            raise ValueError("evaluation point has wrong length")
        total = Fraction(0)
        for e, c in self.coeffs.items():
            v = c
            for x, k in zip(pt, e):
                v *= x**k
            total += v
        return total

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for e, c in sorted(self.coeffs.items()):
            mono = "*".join(f"h{i + 1}^{k}" if k > 1 else f"h{i + 1}" for i, k in enumerate(e) if k)
            bits.append(f"{frac_str(c)}" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)


def star_to_zhu(el: ModeElement) -> ZhuPolynomial:
    """Image of a homogeneous degree-0 element in the corner Q[h_1..h_n].

    Words containing an annihilator die; the surviving words of a degree-0
    element are pure zero-mode words and map to the matching monomials.
    """
    if not el.is_homogeneous() or (el.terms and el.degree() != 0):
        raise ValueError("element must be homogeneous of degree 0")
    out = ZhuPolynomial.zero(el.rank)
    for w, c in el.terms.items():
        if w.annihilators:
            continue
        if w.creators:
            raise AssertionError("degree-0 word without annihilators has no creators")
        e = [0] * el.rank
        for g in w.zeros:
            e[g - 1] += 1
        out += ZhuPolynomial(el.rank, {tuple(e): c})
    return out


def pairing(sigma: LabeledPartition, tau: LabeledPartition) -> ZhuPolynomial:
    """Corner image of ubar(sigma) * u(tau); requires equal rank and weight."""
    if sigma.rank != tau.rank:
        raise ValueError("rank mismatch")
    if sigma.weight() != tau.weight():
        raise ValueError("weight mismatch")
    return star_to_zhu(multiply(ubar_element(sigma), u_element(tau)))


def pairing_matrix(n: int, d: int, threads: int = 1):
    """All pairings on weight-d labeled partitions.

    Returns (labels, matrix of ZhuPolynomial).  Entries may be computed in a
    thread pool; assembly order is fixed, so the result is deterministic.
    """
    labels = enumerate_labeled_partitions(n, d)
    pairs = [(s, t) for s in labels for t in labels]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            flat = list(ex.map(lambda st: pairing(st[0], st[1]), pairs))
    else:
        flat = [pairing(s, t) for s, t in pairs]
    k = len(labels)
    matrix = [flat[i * k : (i + 1) * k] for i in range(k)]
    return labels, matrix


def strong_identity(n: int, d: int) -> list[tuple[LabeledPartition, Fraction]]:
    """Degree-d strong identity: sum over weight-d labeled partitions of
    u(sigma) (x) ubar(sigma) weighted by 1/symmetry_factor(sigma)."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return [
        (lp, Fraction(1, lp.symmetry_factor())) for lp in enumerate_labeled_partitions(n, d)
    ]


def strong_identity_to_json(terms) -> list[dict]:
    return [{"partition": lp.to_json(), "coeff": frac_str(c)} for lp, c in terms]


def strong_identity_from_json(data) -> list[tuple[LabeledPartition, Fraction]]:
    return [(LabeledPartition.from_json(t["partition"]), parse_frac(t["coeff"])) for t in data]


@dataclass
class IdentityReport:
    """Outcome of checking the degree-d identity through the pairing matrix.

    The identity acts correctly on one side iff the pairing matrix is the
    diagonal of symmetry factors; by mirror symmetry of the words the same
    matrix certifies the action on the other side.
    """

    rank: int
    degree: int
    ok: bool
    labels: list[LabeledPartition]
    expected_diagonal: list[int]
    matrix: list[list[ZhuPolynomial]]
    mismatches: list[tuple[int, int]] = field(default_factory=list)

    def to_json(self) -> dict:
        k = len(self.labels)
        return {
            "rank": self.rank,
            "degree": self.degree,
            "ok": self.ok,
            "size": k,
            "labels": [lp.to_json() for lp in self.labels],
            "expected_diagonal": list(self.expected_diagonal),
            "matrix": [
                [
                    frac_str(self.matrix[i][j].constant_value())
                    if self.matrix[i][j].is_constant()
                    else repr(self.matrix[i][j])
                    for j in range(k)
                ]
                for i in range(k)
            ],
            "mismatches": [list(m) for m in self.mismatches],
        }


def verify_strong_identity(n: int, d: int, threads: int = 1) -> IdentityReport:
    """Check pairing(sigma, tau) == symmetry_factor(sigma) * delta(sigma, tau)
    for all weight-d labeled partitions."""
    labels, matrix = pairing_matrix(n, d, threads=threads)
    expected = [lp.symmetry_factor() for lp in labels]
    mismatches = []
    for i in range(len(labels)):
        for j in range(len(labels)):
            want = ZhuPolynomial.constant(n, expected[i]) if i == j else ZhuPolynomial.zero(n)
            if matrix[i][j] != want:
                mismatches.append((i, j))
    return IdentityReport(
        rank=n,
        degree=d,
        ok=not mismatches,
        labels=labels,
        expected_diagonal=expected,
        matrix=matrix,
        mismatches=mismatches,
    )


@dataclass
class RankCertificate:
    """Certified dimension of the weight-d creation-monomial space.

    A diagonal pairing matrix with nonzero diagonal entries shows the
    spanning monomials are independent, so the count is the dimension.
    """

    rank: int
    degree: int
    count: int
    diagonal: list[int]
    independent: bool

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "degree": self.degree,
            "count": self.count,
            "diagonal": list(self.diagonal),
            "independent": self.independent,
        }


def rank_certificate(n: int, d: int, threads: int = 1) -> RankCertificate:
    report = verify_strong_identity(n, d, threads=threads)
    count = labeled_partition_count(n, d)
    if count != len(report.labels):
        raise AssertionError("enumeration disagrees with counting")
    return RankCertificate(
        rank=n,
        degree=d,
        count=count,
        diagonal=report.expected_diagonal,
        independent=report.ok and all(x != 0 for x in report.expected_diagonal),
    )
