"""Spinor-pair operators valued in the Clifford algebra.

The central object is the normalized grade-2 pairing taking two spinors to
an element of the grade-2 part (the orthogonal Lie algebra inside C), with
a closed-form matrix on Fock basis pairs that is implemented separately so
the two routes can validate each other.  The top-grade and graded variants
and the orbit-map adjoint round out the toolkit the exceptional
constructions are built from.
"""

from __future__ import annotations

from functools import lru_cache

from .clifford import (
    CliffordElem,
    act,
    grading_element,
    multiply,
    orthonormal_vector,
    q_map,
    slot_metric,
    witt_e,
    witt_i,
)
from .field import Scalar
from .fock import Config, SpinorVec, apply_monomial, mask_str
from .norms import BilinearForm, b_eval


def _check_pair(form: BilinearForm, psi1: SpinorVec, psi2: SpinorVec) -> Config:
    config = form.config
    config.check_same(psi1.config)
    config.check_same(psi2.config)
    return config


def _accum(dst: dict, elem: CliffordElem, scalar: Scalar) -> None:
    """dst += scalar * elem on raw term dicts, avoiding element copies."""
    for mono, c in elem.items():
        prev = dst.get(mono)
        val = c * scalar
        dst[mono] = val if prev is None else prev + val


@lru_cache(maxsize=None)
def _four_sum_elements(config: Config):
    """Constant Clifford elements appearing in the four-sum formula."""
    ee, ii, ei, ie_minus = {}, {}, {}, {}
    diag_in, diag_out = {}, {}
    for a in range(1, config.n + 1):
        ea, ia = witt_e(config, a), witt_i(config, a)
        diag_in[a] = multiply(ea, ia) - multiply(ia, ea)
        diag_out[a] = multiply(ia, ea) - multiply(ea, ia)
        for b in range(1, config.n + 1):
            if a == b:
                continue
            eb, ib = witt_e(config, b), witt_i(config, b)
            ee[(a, b)] = multiply(ea, eb)
            ii[(a, b)] = multiply(ia, ib)
            ei[(a, b)] = multiply(ea, ib)
            ie_minus[(a, b)] = multiply(ia, eb) - multiply(eb, ia)
    return ee, ii, ei, ie_minus, diag_in, diag_out


def grade2_pairing(form: BilinearForm, psi1: SpinorVec, psi2: SpinorVec) -> CliffordElem:
    """The normalized grade-2 pairing of two spinors, in Witt coordinates.

    Four sums over the Witt generators:

        sum_{a != b} B(e_a e_b.psi1, psi2) i_a i_b
      + sum_{a != b} B(i_a i_b.psi1, psi2) e_a e_b
      + sum_{a != b} B(e_a i_b.psi1, psi2) (i_a e_b - e_b i_a)
      + (1/2) sum_a B((e_a i_a - i_a e_a).psi1, psi2) (i_a e_a - e_a i_a).

    Equals 2^(n-1) times the grade-2 projection of the endomorphism
    pairing; that identity is checked in tests, not assumed here.
    """
    config = _check_pair(form, psi1, psi2)
    ee, ii, ei, ie_minus, diag_in, diag_out = _four_sum_elements(config)
    half = config.field.from_fraction(1, 2)
    out: dict = {}
    for a in range(1, config.n + 1):
        for b in range(1, config.n + 1):
            if a == b:
                continue
            c = b_eval(form, act(ee[(a, b)], psi1), psi2)
            if c:
                _accum(out, ii[(a, b)], c)
            c = b_eval(form, act(ii[(a, b)], psi1), psi2)
            if c:
                _accum(out, ee[(a, b)], c)
            c = b_eval(form, act(ei[(a, b)], psi1), psi2)
            if c:
                _accum(out, ie_minus[(a, b)], c)
    for a in range(1, config.n + 1):
        c = b_eval(form, act(diag_in[a], psi1), psi2)
        if c:
            _accum(out, diag_out[a], c * half)
    return CliffordElem(config, out)


def grade2_pairing_projected(
    form: BilinearForm, psi1: SpinorVec, psi2: SpinorVec
) -> CliffordElem:
    """The unnormalized variant: 1/2^(n-1) times grade2_pairing."""
    config = form.config
    scale = config.field.from_fraction(1, 1 << (config.n - 1))
    return grade2_pairing(form, psi1, psi2).scale(scale)


def grade2_pairing_on_basis(
    form: BilinearForm, imask: int, jmask: int, kmask: int
) -> SpinorVec:
    """grade2_pairing(e_I.v, e_J.v) applied to e_K.v, by the case table.

    Writing P = I n J and R = I^c n J^c, the pairing of two Fock basis
    vectors is nonzero only when (|P|, |R|) is (0,2), (2,0), (1,1) or
    (0,0); each case is a single norm entry times a two-generator move on
    e_K.v.  Implemented without the four-sum formula on purpose: the two
    routes cross-validate.
    """
    config = form.config
    size = config.size
    full = size - 1
    for m in (imask, jmask, kmask):
        if not 0 <= m < size:
            raise ValueError(f"mask {m} out of range for n={config.n}")
    field = config.field
    zero = SpinorVec.zero(config)
    p = imask & jmask
    r = full & ~(imask | jmask)
    two = field.from_int(2)

    if p == 0 and r.bit_count() == 2:
        # 2 B(e_a e_b e_I.v, e_J.v) i_a i_b e_K.v with {a,b} = R
        left = apply_monomial(r, 0, imask)
        if left is None:
            return zero
        val = form.entries.get((left[1], jmask))
        if val is None:
            return zero
        move = apply_monomial(0, r, kmask)
        if move is None:
            return zero
        coeff = two * val * field.from_int(left[0] * move[0])
        return SpinorVec(config, {move[1]: coeff})

    if p.bit_count() == 2 and r == 0:
        # 2 B(i_a i_b e_I.v, e_J.v) e_a e_b e_K.v with {a,b} = P
        left = apply_monomial(0, p, imask)
        if left is None:
            return zero
        val = form.entries.get((left[1], jmask))
        if val is None:
            return zero
        move = apply_monomial(p, 0, kmask)
        if move is None:
            return zero
        coeff = two * val * field.from_int(left[0] * move[0])
        return SpinorVec(config, {move[1]: coeff})

    if p.bit_count() == 1 and r.bit_count() == 1:
        # 2 B(e_a i_b e_I.v, e_J.v) i_a e_b e_K.v with b in P, a in R
        left = apply_monomial(r, p, imask)
        if left is None:
            return zero
        val = form.entries.get((left[1], jmask))
        if val is None:
            return zero
        first = apply_monomial(p, 0, kmask)  # e_b first, then i_a
        if first is None:
            return zero
        second = apply_monomial(0, r, first[1])
        if second is None:
            return zero
        coeff = two * val * field.from_int(left[0] * first[0] * second[0])
        return SpinorVec(config, {second[1]: coeff})

    if p == 0 and r == 0:
        # (1/2) B(e_I.v, e_J.v) (n - 2|I n K| - 2|I^c n K^c|) e_K.v
        val = form.entries.get((imask, jmask))
        if val is None:
            return zero
        count = config.n - 2 * (imask & kmask).bit_count()
        count -= 2 * (full & ~imask & ~kmask).bit_count()
        coeff = field.from_fraction(1, 2) * val * field.from_int(count)
        return SpinorVec(config, {kmask: coeff})

    return zero


def top_grade_coefficient(
    form: BilinearForm, psi1: SpinorVec, psi2: SpinorVec
) -> Scalar:
    """The scalar c with top_grade_pairing = c times the grading element."""
    config = _check_pair(form, psi1, psi2)
    inv = config.field.from_fraction(1, config.size)
    eps = grading_element(config)
    return inv * b_eval(form, psi1, act(eps, psi2))


def top_grade_pairing(
    form: BilinearForm, psi1: SpinorVec, psi2: SpinorVec
) -> CliffordElem:
    """Top-grade pairing: (1/2^n) B(psi1, eps.psi2) eps."""
    config = form.config
    return grading_element(config).scale(top_grade_coefficient(form, psi1, psi2))


def graded_pairing(
    form: BilinearForm, psi1: SpinorVec, psi2: SpinorVec
) -> CliffordElem:
    """Grades 1 and 2 of the graded endomorphism pairing.

    Over the orthonormal slot basis:

        (1/2^n) ( sum_s g_ss B_eps(psi1, E_s.psi2) E_s
                + sum_{s<t} g_ss g_tt B_eps(psi1, E_t E_s.psi2) E_s E_t ).

    Expects the graded norm; with it the result is equivariant for the
    degree one-plus-two part, not just for grade 2.
    """
    if form.flavor != "graded":
        raise ValueError("graded_pairing expects the graded norm")
    config = _check_pair(form, psi1, psi2)
    field = config.field
    inv = field.from_fraction(1, config.size)
    out: dict = {}
    nslots = 2 * config.n
    for s in range(nslots):
        vs = orthonormal_vector(config, s)
        c = b_eval(form, psi1, act(vs, psi2))
        if c:
            _accum(out, vs, c * field.from_int(slot_metric(s)))
        for t in range(s + 1, nslots):
            vt = orthonormal_vector(config, t)
            c = b_eval(form, psi1, act(vt, act(vs, psi2)))
            if c:
                g = slot_metric(s) * slot_metric(t)
                _accum(out, q_map(config, (s, t)), c * field.from_int(g))
    return CliffordElem(config, out).scale(inv)


def orbit_map_adjoint(
    form: BilinearForm, phi: SpinorVec, psi: SpinorVec
) -> CliffordElem:
    """The vector phi^*(psi) = sum_s g_ss B(phi, E_s.psi) E_s.

    Adjoint to the orbit map v -> v.phi in the sense
    B(v.phi, psi) = g(v, phi^*(psi)).
    """
    config = _check_pair(form, phi, psi)
    field = config.field
    out: dict = {}
    for s in range(2 * config.n):
        vs = orthonormal_vector(config, s)
        c = b_eval(form, phi, act(vs, psi))
        if c:
            _accum(out, vs, c * field.from_int(slot_metric(s)))
    return CliffordElem(config, out)


@lru_cache(maxsize=None)
def vacuum_projector(config: Config) -> CliffordElem:
    """The product of (1 - e_a i_a) over all a: kills e_I.v unless I = {}."""
    out = CliffordElem.one(config)
    for a in range(1, config.n + 1):
        factor = CliffordElem.one(config) - multiply(
            witt_e(config, a), witt_i(config, a)
        )
        out = multiply(out, factor)
    return out


@lru_cache(maxsize=None)
def matrix_unit(config: Config, pmask: int, qmask: int) -> CliffordElem:
    """The element sending e_Q.v to e_P.v and every other basis vector to 0.

    e_P N i_Q up to the sign of i_Q e_Q.v = (-1)^{C(|Q|,2)} v.
    """
    left = CliffordElem.monomial(config, pmask, 0)
    right = CliffordElem.monomial(config, 0, qmask)
    unit = multiply(multiply(left, vacuum_projector(config)), right)
    k = qmask.bit_count()
    if (k * (k - 1) // 2) & 1:
        return -1 * unit
    return unit


def endomorphism_pairing(
    form: BilinearForm, phi: SpinorVec, psi: SpinorVec
) -> CliffordElem:
    """The rank-one endomorphism xi -> B(phi, xi) psi as a Clifford element.

    Works for either flavor; grade projections of this element are the
    independent oracle for the specialized pairings.
    """
    config = _check_pair(form, phi, psi)
    out: dict = {}
    full = config.size - 1
    for imask, ci in phi.terms.items():
        qmask = imask ^ full
        val = form.entries.get((imask, qmask))
        if val is None:
            continue
        bval = ci * val
        for pmask, cp in psi.terms.items():
            _accum(out, matrix_unit(config, pmask, qmask), bval * cp)
    return CliffordElem(config, out)


class PolarisationChange:
    """Result of rewriting a basis-index triple in a swapped polarisation.

    source and target are (I, J, K) mask triples; swap_mask marks the
    positions where the creation and annihilation roles exchange; sign
    relates the first component: e'_{I'}.v' = sign * e_I.v.
    """

    __slots__ = ("source", "target", "swap_mask", "sign")

    def __init__(
        self,
        source: tuple[int, int, int],
        target: tuple[int, int, int],
        swap_mask: int,
        sign: int,
    ) -> None:
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "swap_mask", swap_mask)
        object.__setattr__(self, "sign", sign)

    def __setattr__(self, name: str, val: object) -> None:
        raise AttributeError("PolarisationChange is immutable")

    def __repr__(self) -> str:
        src = ",".join(mask_str(m) for m in self.source)
        tgt = ",".join(mask_str(m) for m in self.target)
        return (
            f"PolarisationChange(({src}) -> ({tgt}), "
            f"swap={mask_str(self.swap_mask)}, sign={self.sign:+d})"
        )


def apply_swapped_word(
    config: Config, word_mask: int, swap_mask: int
) -> tuple[int, int]:
    """Apply the primed creation word e'_W to e_{swap}.v in original terms.

    Primed creation at a swapped position is original annihilation.  The
    word lists generators in ascending index order and factors apply right
    to left, so the result is a signed basis vector (sign, mask); the
    proposition guarantees no term dies.
    """
    mask = swap_mask
    sign = 1
    for bit in range(config.n - 1, -1, -1):
        if not (word_mask >> bit) & 1:
            continue
        b = 1 << bit
        step = apply_monomial(0, b, mask) if (swap_mask >> bit) & 1 else apply_monomial(
            b, 0, mask
        )
        if step is None:
            raise AssertionError("swapped word annihilated the swapped vacuum")
        sign *= step[0]
        mask = step[1]
    return sign, mask


def change_polarisation(
    config: Config, imask: int, jmask: int, kmask: int
) -> PolarisationChange:
    """Rewrite (I, J, K) in the polarisation that swaps the overlaps.

    Preconditions: I n J n K and I^c n J^c n K^c are empty.  The target
    triple is pairwise disjoint with union {1..n} and K' = I'^c n J'^c,
    and the sign satisfies e'_{I'}.v' = sign * e_I.v with v' = e_M.v over
    the swap set M.
    """
    full = config.size - 1
    for m in (imask, jmask, kmask):
        if not 0 <= m <= full:
            raise ValueError(f"mask {m} out of range for n={config.n}")
    if imask & jmask & kmask:
        raise ValueError("masks share a common element")
    if full & ~imask & ~jmask & ~kmask:
        raise ValueError("complements share a common element")

    ip = (full & ~jmask & ~kmask) | (jmask & kmask)
    jp = (full & ~kmask & ~imask) | (kmask & imask)
    kp = (full & ~imask & ~jmask) | (imask & jmask)
    swap = (imask & jmask) | (jmask & kmask) | (kmask & imask)

    sign, mask = apply_swapped_word(config, ip, swap)
    if mask != imask:
        raise AssertionError("swapped word did not reproduce the source index")
    return PolarisationChange(
        (imask, jmask, kmask), (ip, jp, kp), swap, sign
    )
