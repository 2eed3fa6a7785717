"""The Clifford algebra of a 2n-dimensional hyperbolic space, in a Witt basis.

The generators split into n creation generators e_a and n annihilation
generators i_a subject to

    e_a e_b + e_b e_a = 0,
    i_a i_b + i_b i_a = 0,
    i_a e_b + e_b i_a = delta_ab.

Normal-ordered monomials e_A i_B (all e factors left of all i factors,
ascending indices inside each block) form a basis of the 4^n-dimensional
algebra; elements are sparse maps from the bitmask pair (emask, imask) to a
nonzero scalar.  The algebra acts faithfully on the 2^n-dimensional Fock
space, which is how the trace and all endomorphism questions are resolved.

An orthonormal basis is derived from the Witt basis by E_{2a-1} = e_a + i_a
(square +1) and E_{2a} = e_a - i_a (square -1).  Internally these 2n vectors
are numbered by slots 0..2n-1 in that interleaved order, so ascending slots
match the ordered orthonormal basis used by the grade projection.
"""

from __future__ import annotations

import warnings
from functools import lru_cache
from typing import Iterator, Optional, Union

from .field import Scalar
from .fock import Config, SpinorVec, apply_monomial

Monomial = tuple[int, int]


def _below(mask: int, bit: int) -> int:
    return (mask & ((1 << bit) - 1)).bit_count()


def monomial_str(mono: Monomial) -> str:
    emask, imask = mono
    if not emask and not imask:
        return "1"
    tokens = [f"e{a + 1}" for a in range(emask.bit_length()) if (emask >> a) & 1]
    tokens += [f"i{a + 1}" for a in range(imask.bit_length()) if (imask >> a) & 1]
    return " ".join(tokens)


class CliffordElem:
    """Sparse element: map from normal-ordered monomial to nonzero scalar."""

    __slots__ = ("config", "terms")

    def __init__(self, config: Config, terms: dict[Monomial, Scalar]) -> None:
        object.__setattr__(self, "config", config)
        object.__setattr__(self, "terms", {m: c for m, c in terms.items() if c})

    def __setattr__(self, name: str, val: object) -> None:
        raise AttributeError("CliffordElem is immutable")

    @classmethod
    def zero(cls, config: Config) -> "CliffordElem":
        return cls(config, {})

    @classmethod
    def one(cls, config: Config) -> "CliffordElem":
        return cls(config, {(0, 0): config.field.one()})

    @classmethod
    def monomial(
        cls, config: Config, emask: int, imask: int, coeff: Optional[Scalar] = None
    ) -> "CliffordElem":
        if emask >= config.size or imask >= config.size:
            raise ValueError(f"monomial masks out of range for n={config.n}")
        return cls(config, {(emask, imask): coeff if coeff is not None else config.field.one()})

    def items(self) -> Iterator[tuple[Monomial, Scalar]]:
        """Terms in canonical (emask, imask) order."""
        return iter(sorted(self.terms.items()))

    def get(self, mono: Monomial) -> Scalar:
        return self.terms.get(mono, self.config.field.zero())

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "CliffordElem") -> "CliffordElem":
        self.config.check_same(other.config)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            out[m] = c if s is None else s + c
        return CliffordElem(self.config, out)

    def __sub__(self, other: "CliffordElem") -> "CliffordElem":
        return self + (-other)

    def __neg__(self) -> "CliffordElem":
        return CliffordElem(self.config, {m: -c for m, c in self.terms.items()})

    def scale(self, s: Scalar) -> "CliffordElem":
        if not s:
            return CliffordElem.zero(self.config)
        return CliffordElem(self.config, {m: c * s for m, c in self.terms.items()})

    def __mul__(self, other: Union["CliffordElem", Scalar, int]) -> "CliffordElem":
        if isinstance(other, CliffordElem):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other: Union[Scalar, int]) -> "CliffordElem":
        return self.scale(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CliffordElem):
            return NotImplemented
        return self.config == other.config and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.config, tuple(sorted(self.terms.items(), key=lambda t: t[0]))))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " ".join(f"+ ({c}) {monomial_str(m)}" for m, c in self.items())


@lru_cache(maxsize=None)
def witt_e(config: Config, a: int) -> CliffordElem:
    if not 1 <= a <= config.n:
        raise ValueError(f"generator index {a} out of range for n={config.n}")
    return CliffordElem.monomial(config, 1 << (a - 1), 0)


@lru_cache(maxsize=None)
def witt_i(config: Config, a: int) -> CliffordElem:
    if not 1 <= a <= config.n:
        raise ValueError(f"generator index {a} out of range for n={config.n}")
    return CliffordElem.monomial(config, 0, 1 << (a - 1))


def _left_mul_i(terms: dict[Monomial, Scalar], bit: int) -> dict[Monomial, Scalar]:
    """Left-multiply normal-ordered terms by i_{bit+1}.

    Moving i past the e block anticommutes except at a matching e, where
    i_a e_a = 1 - e_a i_a splits the term in two: a contraction dropping
    the e factor, and a pass-through joining the i block.
    """
    out: dict[Monomial, Scalar] = {}
    one_bit = 1 << bit
    for (emask, imask), c in terms.items():
        if emask & one_bit:
            sign = -1 if _below(emask, bit) & 1 else 1
            key = (emask & ~one_bit, imask)
            prev = out.get(key)
            term = c if sign > 0 else -c
            out[key] = term if prev is None else prev + term
        if not imask & one_bit:
            par = (emask.bit_count() + _below(imask, bit)) & 1
            key = (emask, imask | one_bit)
            prev = out.get(key)
            term = -c if par else c
            out[key] = term if prev is None else prev + term
    return {m: c for m, c in out.items() if c}


def _left_mul_e(terms: dict[Monomial, Scalar], bit: int) -> dict[Monomial, Scalar]:
    """Left-multiply normal-ordered terms by e_{bit+1}."""
    out: dict[Monomial, Scalar] = {}
    one_bit = 1 << bit
    for (emask, imask), c in terms.items():
        if emask & one_bit:
            continue
        sign = -1 if _below(emask, bit) & 1 else 1
        key = (emask | one_bit, imask)
        prev = out.get(key)
        term = c if sign > 0 else -c
        out[key] = term if prev is None else prev + term
    return {m: c for m, c in out.items() if c}


def _bits_desc(mask: int) -> Iterator[int]:
    while mask:
        bit = mask.bit_length() - 1
        mask &= ~(1 << bit)
        yield bit


def multiply(x: CliffordElem, y: CliffordElem) -> CliffordElem:
    """The Clifford product, renormalized to the e_A i_B monomial basis.

    Each monomial of x is a generator word; the word is applied to y one
    generator at a time, rightmost first, using the three Witt relations
    as rewriting rules.
    """
    x.config.check_same(y.config)
    acc: dict[Monomial, Scalar] = {}
    for (emask, imask), cx in x.terms.items():
        terms = y.terms
        for bit in _bits_desc(imask):
            terms = _left_mul_i(terms, bit)
        for bit in _bits_desc(emask):
            terms = _left_mul_e(terms, bit)
        for m, c in terms.items():
            prev = acc.get(m)
            term = cx * c
            acc[m] = term if prev is None else prev + term
    return CliffordElem(x.config, acc)


def act(x: CliffordElem, psi: SpinorVec) -> SpinorVec:
    """Apply x to a spinor: each monomial is the composite of the fock
    creation/annihilation moves in the monomial's written order."""
    x.config.check_same(psi.config)
    out: dict[int, Scalar] = {}
    for (emask, imask), c in x.terms.items():
        for mask, cm in psi.terms.items():
            hit = apply_monomial(emask, imask, mask)
            if hit is None:
                continue
            sign, new = hit
            term = c * cm
            if sign < 0:
                term = -term
            prev = out.get(new)
            out[new] = term if prev is None else prev + term
    return SpinorVec(x.config, out)


def commutator(x: CliffordElem, y: CliffordElem) -> CliffordElem:
    return multiply(x, y) - multiply(y, x)


def transpose(x: CliffordElem) -> CliffordElem:
    """The anti-automorphism extending the identity on V.

    Reversing e_A i_B gives the word i_B-reversed e_A-reversed; reversing
    inside a block of p anticommuting generators costs (-1)^(p(p-1)/2),
    after which the i...e word is renormal-ordered by multiplication.
    """
    config = x.config
    out = CliffordElem.zero(config)
    for (emask, imask), c in x.terms.items():
        p, q = emask.bit_count(), imask.bit_count()
        sign = -1 if ((p * (p - 1) // 2) + (q * (q - 1) // 2)) & 1 else 1
        prod = multiply(
            CliffordElem.monomial(config, 0, imask),
            CliffordElem.monomial(config, emask, 0),
        )
        out = out + prod.scale(c if sign > 0 else -c)
    return out


def trace(x: CliffordElem) -> Scalar:
    """Trace of the Fock action.  Off-diagonal monomials (emask != imask)
    move every basis vector, so only diagonal monomials contribute; their
    constant diagonal entry is read off from one action call and weighted
    by the 2^(n-|A|) basis vectors containing A."""
    config = x.config
    total = config.field.zero()
    for (emask, imask), c in x.terms.items():
        if emask != imask:
            continue
        sign, new = apply_monomial(emask, imask, emask)
        assert new == emask
        count = config.field.from_int(sign * (1 << (config.n - emask.bit_count())))
        total = total + c * count
    return total


# Orthonormal slots: slot 2(a-1) is e_a + i_a with square +1, slot 2a-1 is
# e_a - i_a with square -1; ascending slots give the ordered basis.


def slot_metric(slot: int) -> int:
    return -1 if slot & 1 else 1


def slot_str(slot: int) -> str:
    a = slot // 2 + 1
    return f"E{a}~" if slot & 1 else f"E{a}"


@lru_cache(maxsize=None)
def orthonormal_vector(config: Config, slot: int) -> CliffordElem:
    if not 0 <= slot < 2 * config.n:
        raise ValueError(f"slot {slot} out of range for n={config.n}")
    a = slot // 2 + 1
    if slot & 1:
        return witt_e(config, a) - witt_i(config, a)
    return witt_e(config, a) + witt_i(config, a)


def q_map(config: Config, slots: tuple[int, ...] | list[int]) -> CliffordElem:
    """Clifford product of strictly ascending orthonormal basis vectors.

    For orthogonal arguments the exterior-to-Clifford quantization is the
    plain product, so these products are exactly the grade-k basis.
    """
    slots = tuple(slots)
    for s in slots:
        if not 0 <= s < 2 * config.n:
            raise ValueError(f"slot {s} out of range for n={config.n}")
    if any(s2 <= s1 for s1, s2 in zip(slots, slots[1:])):
        raise ValueError(f"slots must be strictly ascending, got {slots}")
    out = CliffordElem.one(config)
    for s in slots:
        out = multiply(out, orthonormal_vector(config, s))
    return out


def blade_mul_slot(bmask: int, slot: int) -> tuple[int, int]:
    """Right-multiply the blade `bmask` by the orthonormal vector `slot`.

    Returns (sign-and-metric coefficient, new blade mask): the vector
    anticommutes past every higher slot and contracts on a repeat.
    """
    sign = -1 if (bmask >> (slot + 1)).bit_count() & 1 else 1
    if (bmask >> slot) & 1:
        return sign * slot_metric(slot), bmask & ~(1 << slot)
    return sign, bmask | (1 << slot)


def blade_mul(m1: int, m2: int) -> tuple[int, int]:
    """Product of two orthonormal blades: (coefficient, blade mask)."""
    coeff, mask = 1, m1
    m = m2
    while m:
        slot = (m & -m).bit_length() - 1
        m &= m - 1
        c, mask = blade_mul_slot(mask, slot)
        coeff *= c
    return coeff, mask


def to_blades(x: CliffordElem) -> dict[int, Scalar]:
    """Coordinates of x in the orthonormal blade basis.

    Each Witt generator is half a sum or difference of two orthonormal
    vectors: e_a = (E + E~)/2 and i_a = (E - E~)/2 at block a.
    """
    config = x.config
    field = config.field
    half = field.from_fraction(1, 2)
    out: dict[int, Scalar] = {}
    for (emask, imask), c in x.terms.items():
        acc: dict[int, Scalar] = {0: c}
        factors: list[tuple[int, bool]] = []
        for a in range(1, config.n + 1):
            if (emask >> (a - 1)) & 1:
                factors.append((a, False))
        for a in range(1, config.n + 1):
            if (imask >> (a - 1)) & 1:
                factors.append((a, True))
        for a, is_i in factors:
            plus_slot = 2 * (a - 1)
            minus_slot = plus_slot + 1
            nxt: dict[int, Scalar] = {}
            for bmask, cb in acc.items():
                chalf = cb * half
                for slot, negate in ((plus_slot, False), (minus_slot, is_i)):
                    s, new = blade_mul_slot(bmask, slot)
                    if negate:
                        s = -s
                    term = chalf if s > 0 else -chalf
                    prev = nxt.get(new)
                    nxt[new] = term if prev is None else prev + term
            acc = {m: cb for m, cb in nxt.items() if cb}
        for bmask, cb in acc.items():
            prev = out.get(bmask)
            out[bmask] = cb if prev is None else prev + cb
    return {m: cb for m, cb in out.items() if cb}


def blade_to_elem(config: Config, bmask: int) -> CliffordElem:
    slots = tuple(s for s in range(2 * config.n) if (bmask >> s) & 1)
    return q_map(config, slots)


def grade_project(x: CliffordElem, k: int) -> CliffordElem:
    """Projection onto grade k via the orthonormal trace formula.

    For the ordered basis the formula reads, summed over ascending index
    combinations of size k,

        (1/2^n) g(E_1,E_1)...g(E_k,E_k) Tr(E_k...E_1 x) E_1...E_k.

    The trace factor vanishes unless the blade coordinates of x meet the
    combination, so the sweep runs over the blade support of x; every
    sign and metric factor of the formula is evaluated literally.
    Completeness (the projections sum to x) is the independent crosscheck.
    """
    config = x.config
    if not 0 <= k <= 2 * config.n:
        raise ValueError(f"grade {k} out of range for n={config.n}")
    if config.n > 8:
        warnings.warn(f"grade sweep is combinatorial for n={config.n} > 8")
    field = config.field
    inv_dim = field.from_fraction(1, config.size)
    out = CliffordElem.zero(config)
    for bmask, cb in sorted(to_blades(x).items()):
        if bmask.bit_count() != k:
            continue
        gpref = 1
        for s in range(bmask.bit_length()):
            if (bmask >> s) & 1:
                gpref *= slot_metric(s)
        rev_sign = -1 if (k * (k - 1) // 2) & 1 else 1
        square_coeff, square_mask = blade_mul(bmask, bmask)
        assert square_mask == 0
        tr = cb * field.from_int(rev_sign * square_coeff * config.size)
        scalar = inv_dim * field.from_int(gpref) * tr
        out = out + blade_to_elem(config, bmask).scale(scalar)
    return out


@lru_cache(maxsize=None)
def grading_element(config: Config) -> CliffordElem:
    """The product (i_1 - e_1)(i_1 + e_1)...(i_n - e_n)(i_n + e_n).

    Acts as +1 on S_plus and -1 on S_minus, squares to 1, and is the
    top-grade volume element of the ordered orthonormal basis.
    """
    out = CliffordElem.one(config)
    for a in range(1, config.n + 1):
        out = multiply(out, witt_i(config, a) - witt_e(config, a))
        out = multiply(out, witt_i(config, a) + witt_e(config, a))
    return out


@lru_cache(maxsize=None)
def h_operator(config: Config) -> CliffordElem:
    """The grade-2 element (1/2) sum_a (e_a i_a - i_a e_a), the particle
    number shifted by -n/2."""
    half = config.field.from_fraction(1, 2)
    out = CliffordElem.zero(config)
    for a in range(1, config.n + 1):
        ea, ia = witt_e(config, a), witt_i(config, a)
        out = out + (multiply(ea, ia) - multiply(ia, ea)).scale(half)
    return out


def to_endomorphism_matrix(x: CliffordElem) -> list[list[Scalar]]:
    """Dense matrix of the Fock action: M[row][col] is the coefficient of
    basis vector `row` in x applied to basis vector `col`."""
    config = x.config
    zero = config.field.zero()
    size = config.size
    mat = [[zero] * size for _ in range(size)]
    for col in range(size):
        image = act(x, SpinorVec.basis(config, col))
        for row, c in image.terms.items():
            mat[row][col] = c
    return mat
