"""Executable property suites for the spinor machinery.

Each check restates one structural fact the package is built on (the CAR
relations, the symmetry tables, the grade dualities, the pairing
relations) as a pass/fail result with an explicit coverage regime.  The
same battery backs the test suite and the command line `props` report.
Everything runs over the rationals, exactly; sampled regimes draw from
seeded generators so repeat runs are byte-identical.
"""

from __future__ import annotations

import random
from itertools import combinations

from .clifford import (
    CliffordElem,
    act,
    commutator,
    grade_project,
    grading_element,
    h_operator,
    multiply,
    orthonormal_vector,
    q_map,
    slot_metric,
    trace,
    transpose,
    witt_e,
    witt_i,
)
from .fock import Config, SpinorVec, annihilate, create, parity
from .norms import (
    BilinearForm,
    b_eval,
    graded_norm,
    norm_solution_dimension,
    solve_spinor_norm,
)
from .pairings import (
    grade2_pairing,
    grade2_pairing_on_basis,
    graded_pairing,
    orbit_map_adjoint,
    top_grade_coefficient,
)

# (sign, pairing parity) keyed by n mod 4.  Sign +1 means symmetric, -1
# antisymmetric; parity 0 means nonzero only on equal spinor parities, 1
# only on opposite ones.  The graded pairing row gives the parity of its
# grade-2 component; the grade-1 component has the complementary parity.
PLAIN_NORM_TABLE = {0: (1, 0), 1: (1, 1), 2: (-1, 0), 3: (-1, 1)}
GRADED_NORM_TABLE = {0: (1, 0), 1: (-1, 1), 2: (-1, 0), 3: (1, 1)}
GRADE2_TABLE = {0: (-1, 0), 1: (-1, 1), 2: (1, 0), 3: (1, 1)}
TOP_TABLE = {0: (1, 0), 1: (-1, 1), 2: (-1, 0), 3: (1, 1)}
GRADED_PAIRING_TABLE = {0: (-1, 0), 1: (1, 1), 2: (1, 0), 3: (-1, 1)}


class CheckResult:
    """Outcome of one named check at one n."""

    __slots__ = ("check", "n", "ok", "detail")

    def __init__(self, check: str, n: int, ok: bool, detail: str) -> None:
        self.check = check
        self.n = n
        self.ok = ok
        self.detail = detail

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        status = "ok" if self.ok else "FAIL"
        return f"CheckResult({self.check!r}, n={self.n}, {status})"

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "n": self.n,
            "ok": self.ok,
            "detail": self.detail,
        }


def _ok(check: str, n: int, detail: str) -> CheckResult:
    return CheckResult(check, n, True, detail)


def _fail(check: str, n: int, detail: str) -> CheckResult:
    return CheckResult(check, n, False, detail)


def _sample_spinor(config: Config, r: random.Random, nterms: int = 2) -> SpinorVec:
    terms = {}
    for _ in range(nterms):
        terms[r.randrange(config.size)] = config.field.from_int(r.randrange(1, 9))
    return SpinorVec(config, terms)


# ---------------------------------------------------------------- fock


def check_car_relations(n: int) -> CheckResult:
    """create/annihilate anticommute among themselves; the mixed bracket
    is delta_ab times the identity.  Exhaustive on every basis vector."""
    config = Config(n)
    zero = SpinorVec.zero(config)
    checked = 0
    for m in range(config.size):
        psi = SpinorVec.basis(config, m)
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                cc = create(a, create(b, psi)) + create(b, create(a, psi))
                aa = annihilate(a, annihilate(b, psi)) + annihilate(
                    b, annihilate(a, psi)
                )
                mixed = annihilate(a, create(b, psi)) + create(b, annihilate(a, psi))
                want = psi if a == b else zero
                if not (cc.is_zero() and aa.is_zero() and mixed == want):
                    return _fail(
                        "car-relations",
                        n,
                        f"identity failed at basis mask {m}, a={a}, b={b}",
                    )
                checked += 1
    return _ok(
        "car-relations",
        n,
        f"all {checked} (a, b, basis vector) operator identities hold exactly",
    )


def check_h_eigenvalues(n: int) -> CheckResult:
    """The number operator acts on a k-particle basis vector with
    eigenvalue k - n/2 and satisfies [H, e_a] = e_a, [H, i_a] = -i_a."""
    config = Config(n)
    field = config.field
    h = h_operator(config)
    for m in range(config.size):
        psi = SpinorVec.basis(config, m)
        lam = field.from_fraction(2 * m.bit_count() - n, 2)
        if act(h, psi) != psi.scale(lam):
            return _fail(
                "h-eigenvalues", n, f"wrong eigenvalue on basis mask {m}"
            )
    minus_one = field.from_int(-1)
    for a in range(1, n + 1):
        ea, ia = witt_e(config, a), witt_i(config, a)
        if commutator(h, ea) != ea:
            return _fail("h-eigenvalues", n, f"[H, e_{a}] != e_{a}")
        if commutator(h, ia) != ia.scale(minus_one):
            return _fail("h-eigenvalues", n, f"[H, i_{a}] != -i_{a}")
    return _ok(
        "h-eigenvalues",
        n,
        f"eigenvalue k - n/2 on all {config.size} basis vectors; "
        f"[H, e_a] = e_a and [H, i_a] = -i_a for a <= {n}",
    )


# ------------------------------------------------------------ clifford


def check_q_isometry(n: int) -> CheckResult:
    """2^n g(alpha, beta) = Tr(transpose(Q(alpha)) Q(beta)) on wedge
    basis pairs: exhaustive for n <= 3, exhaustive up to grade 2 plus
    stratified higher-grade samples for larger n."""
    config = Config(n)
    field = config.field
    nslots = 2 * n

    def metric(slots: tuple[int, ...]) -> int:
        g = 1
        for s in slots:
            g *= slot_metric(s)
        return g

    def pair_ok(s1: tuple[int, ...], s2: tuple[int, ...]) -> bool:
        got = trace(multiply(transpose(q_map(config, s1)), q_map(config, s2)))
        want = config.size * metric(s1) if s1 == s2 else 0
        return got == field.from_int(want)

    if n <= 3:
        blades = [
            s for k in range(nslots + 1) for s in combinations(range(nslots), k)
        ]
        for s1 in blades:
            for s2 in blades:
                if not pair_ok(s1, s2):
                    return _fail("q-isometry", n, f"failed at pair {s1} x {s2}")
        return _ok(
            "q-isometry", n, f"exhaustive over all {len(blades)}^2 wedge pairs"
        )

    low = [s for k in range(3) for s in combinations(range(nslots), k)]
    for s1 in low:
        for s2 in low:
            if not pair_ok(s1, s2):
                return _fail("q-isometry", n, f"failed at pair {s1} x {s2}")
    r = random.Random(1009 + n)
    extra = 0
    for k in range(3, nslots + 1):
        a = tuple(sorted(r.sample(range(nslots), k)))
        b = tuple(sorted(r.sample(range(nslots), k)))
        c = tuple(sorted(r.sample(range(nslots), r.randrange(k))))
        for s1, s2 in ((a, a), (a, b), (a, c)):
            if not pair_ok(s1, s2):
                return _fail("q-isometry", n, f"failed at pair {s1} x {s2}")
            extra += 1
    return _ok(
        "q-isometry",
        n,
        f"exhaustive to grade 2 ({len(low)}^2 pairs) plus {extra} stratified "
        "higher-grade pairs",
    )


def check_pi_completeness(n: int) -> CheckResult:
    """The grade projections sum to the identity: exhaustive on basis
    monomials for n <= 3, seeded sparse elements plus the structured
    elements H and the grading element for larger n."""
    config = Config(n)

    def complete(x: CliffordElem) -> bool:
        total = CliffordElem.zero(config)
        for k in range(2 * n + 1):
            total = total + grade_project(x, k)
        return total == x

    if n <= 3:
        one = config.field.from_int(1)
        for emask in range(config.size):
            for imask in range(config.size):
                x = CliffordElem(config, {(emask, imask): one})
                if not complete(x):
                    return _fail(
                        "pi-completeness",
                        n,
                        f"projections do not sum back at monomial ({emask}, {imask})",
                    )
        return _ok(
            "pi-completeness",
            n,
            f"exhaustive over all {config.size ** 2} basis monomials",
        )

    r = random.Random(2003 + n)
    samples = []
    for _ in range(6):
        terms = {}
        for _ in range(4):
            mono = (r.randrange(config.size), r.randrange(config.size))
            terms[mono] = config.field.from_int(r.randrange(1, 7))
        samples.append(CliffordElem(config, terms))
    samples.append(h_operator(config))
    samples.append(grading_element(config))
    for idx, x in enumerate(samples):
        if not complete(x):
            return _fail(
                "pi-completeness", n, f"projections do not sum back at sample {idx}"
            )
    return _ok(
        "pi-completeness",
        n,
        "6 seeded sparse elements plus H and the grading element",
    )


def check_eps_duality(n: int) -> CheckResult:
    """Multiplying by the grading element swaps complementary grades:
    projecting eps*c to grade 2n-k equals eps times the grade-k part of
    c.  Exhaustive over monomials and grades for n <= 3; for larger n,
    seeded monomials at k <= 3 (the identity then also exercises the
    complementary top-side projections on the left)."""
    config = Config(n)
    eps = grading_element(config)

    def dual_ok(c: CliffordElem, k: int) -> bool:
        lhs = grade_project(multiply(eps, c), 2 * n - k)
        rhs = multiply(eps, grade_project(c, k))
        return lhs == rhs

    one = config.field.from_int(1)
    if n <= 3:
        for emask in range(config.size):
            for imask in range(config.size):
                c = CliffordElem(config, {(emask, imask): one})
                for k in range(2 * n + 1):
                    if not dual_ok(c, k):
                        return _fail(
                            "eps-duality",
                            n,
                            f"failed at monomial ({emask}, {imask}), grade {k}",
                        )
        return _ok(
            "eps-duality",
            n,
            f"exhaustive over all {config.size ** 2} monomials and "
            f"{2 * n + 1} grades",
        )

    r = random.Random(3001 + n)
    checked = 0
    for _ in range(8):
        mono = (r.randrange(config.size), r.randrange(config.size))
        c = CliffordElem(config, {mono: config.field.from_int(r.randrange(1, 7))})
        for k in range(4):
            if not dual_ok(c, k):
                return _fail(
                    "eps-duality", n, f"failed at monomial {mono}, grade {k}"
                )
            checked += 1
    return _ok(
        "eps-duality",
        n,
        f"{checked} seeded (monomial, grade) pairs at k <= 3, covering the "
        "complementary grades on the left side",
    )


# --------------------------------------------------------------- norms


def check_norm_dimension(n: int) -> CheckResult:
    """The defining system for the spinor norm has a one dimensional
    solution space; re-solved from scratch over all basis pairs."""
    dim = norm_solution_dimension(Config(n))
    if dim != 1:
        return _fail(
            "norm-dimension", n, f"solution space has dimension {dim}, not 1"
        )
    return _ok(
        "norm-dimension",
        n,
        f"defining system over all {4 ** n} unknowns solved: dimension 1",
    )


def _symmetry_check(
    check: str, n: int, form: BilinearForm, table: dict[int, tuple[int, int]]
) -> CheckResult:
    config = form.config
    sym, par = table[n % 4]
    try:
        got = (form.symmetry(), form.pairing_parity())
    except AssertionError as exc:
        return _fail(check, n, str(exc))
    if got != (sym, par):
        return _fail(check, n, f"expected (sign, parity) {(sym, par)}, got {got}")
    if len(form.entries) != config.size:
        return _fail(check, n, "antidiagonal support is incomplete")
    return _ok(
        check,
        n,
        f"sign {sym:+d}, parity {par}, full antidiagonal support "
        f"({config.size} entries), checked over every entry",
    )


def check_plain_symmetry(n: int) -> CheckResult:
    """The spinor norm matches its n mod 4 symmetry and parity row."""
    return _symmetry_check(
        "plain-symmetry", n, solve_spinor_norm(Config(n)), PLAIN_NORM_TABLE
    )


def check_graded_symmetry(n: int) -> CheckResult:
    """The graded norm matches its n mod 4 symmetry and parity row."""
    return _symmetry_check(
        "graded-symmetry",
        n,
        graded_norm(solve_spinor_norm(Config(n))),
        GRADED_NORM_TABLE,
    )


def check_ck_invariance(n: int) -> CheckResult:
    """Grade-k elements with k = 2, 3 (mod 4) are infinitesimal
    isometries of the norm: B(c.phi, psi) + B(phi, c.psi) = 0.

    For n <= 3 checked directly and exhaustively.  For larger n the
    equivalent transpose characterization transpose(c) = -c is checked
    on wedge basis elements (all of them for n <= 5, grades 2 and 3
    exhaustively plus seeded higher-grade samples beyond), together with
    seeded direct triples.
    """
    config = Config(n)
    form = solve_spinor_norm(config)
    field = config.field
    nslots = 2 * n
    grades = [k for k in range(2, nslots + 1) if k % 4 in (2, 3)]

    if n <= 3:
        basis_vecs = [SpinorVec.basis(config, m) for m in range(config.size)]
        zero = field.zero()
        blades = 0
        for k in grades:
            for slots in combinations(range(nslots), k):
                c = q_map(config, slots)
                images = [act(c, psi) for psi in basis_vecs]
                for im in range(config.size):
                    for jm in range(config.size):
                        total = b_eval(form, images[im], basis_vecs[jm]) + b_eval(
                            form, basis_vecs[im], images[jm]
                        )
                        if total != zero:
                            return _fail(
                                "ck-invariance",
                                n,
                                f"direct identity failed at blade {slots}, "
                                f"pair ({im}, {jm})",
                            )
                blades += 1
        return _ok(
            "ck-invariance",
            n,
            f"direct, exhaustive: {blades} blades x {config.size}^2 basis pairs",
        )

    minus_one = field.from_int(-1)

    def reversal_ok(slots: tuple[int, ...]) -> bool:
        c = q_map(config, slots)
        return transpose(c) == c.scale(minus_one)

    blades = 0
    sampled = 0
    r = random.Random(4007 + n)
    for k in grades:
        if n <= 5 or k <= 3:
            for slots in combinations(range(nslots), k):
                if not reversal_ok(slots):
                    return _fail(
                        "ck-invariance", n, f"transpose(c) != -c at blade {slots}"
                    )
                blades += 1
        else:
            for _ in range(6):
                slots = tuple(sorted(r.sample(range(nslots), k)))
                if not reversal_ok(slots):
                    return _fail(
                        "ck-invariance", n, f"transpose(c) != -c at blade {slots}"
                    )
                sampled += 1

    zero = field.zero()
    direct = 0
    for _ in range(30):
        k = r.choice(grades)
        slots = tuple(sorted(r.sample(range(nslots), k)))
        c = q_map(config, slots)
        phi = _sample_spinor(config, r)
        psi = _sample_spinor(config, r)
        if b_eval(form, act(c, phi), psi) + b_eval(form, phi, act(c, psi)) != zero:
            return _fail(
                "ck-invariance", n, f"direct identity failed at blade {slots}"
            )
        direct += 1
    return _ok(
        "ck-invariance",
        n,
        f"transpose characterization on {blades} exhaustive and {sampled} "
        f"sampled blades, plus {direct} direct seeded triples",
    )


# ------------------------------------------------------------ pairings


def check_grade2_symmetry(n: int) -> CheckResult:
    """The grade-2 pairing matches its n mod 4 symmetry sign and
    vanishes off its parity row: exhaustive on basis pairs for n <= 5,
    seeded basis and sparse pairs beyond."""
    config = Config(n)
    form = solve_spinor_norm(config)
    sym, par = GRADE2_TABLE[n % 4]
    sgn = config.field.from_int(sym)

    def basis_pair_ok(im: int, jm: int) -> bool:
        fwd = grade2_pairing(
            form, SpinorVec.basis(config, im), SpinorVec.basis(config, jm)
        )
        rev = grade2_pairing(
            form, SpinorVec.basis(config, jm), SpinorVec.basis(config, im)
        )
        if fwd != rev.scale(sgn):
            return False
        if (parity(im) + parity(jm)) % 2 != par and not fwd.is_zero():
            return False
        return True

    if n <= 5:
        for im in range(config.size):
            for jm in range(config.size):
                if not basis_pair_ok(im, jm):
                    return _fail(
                        "grade2-symmetry", n, f"failed at basis pair ({im}, {jm})"
                    )
        return _ok(
            "grade2-symmetry",
            n,
            f"exhaustive over all {config.size}^2 basis pairs",
        )

    r = random.Random(5003 + n)
    for _ in range(520):
        im, jm = r.randrange(config.size), r.randrange(config.size)
        if not basis_pair_ok(im, jm):
            return _fail("grade2-symmetry", n, f"failed at basis pair ({im}, {jm})")
    for _ in range(15):
        p1, p2 = _sample_spinor(config, r), _sample_spinor(config, r)
        if grade2_pairing(form, p1, p2) != grade2_pairing(form, p2, p1).scale(sgn):
            return _fail("grade2-symmetry", n, "failed at a seeded sparse pair")
    return _ok(
        "grade2-symmetry",
        n,
        "520 seeded basis pairs with parity, plus 15 sparse pairs",
    )


def check_top_symmetry(n: int) -> CheckResult:
    """The top-grade coefficient is supported exactly on the
    antidiagonal and matches its n mod 4 symmetry sign; exhaustive over
    the support for every n, with off-support vanishing checked
    exhaustively for n <= 4 and on seeded pairs beyond."""
    config = Config(n)
    form = solve_spinor_norm(config)
    field = config.field
    sym, par = TOP_TABLE[n % 4]
    sgn = field.from_int(sym)
    full = config.size - 1
    zero = field.zero()

    def coeff(im: int, jm: int):
        return top_grade_coefficient(
            form, SpinorVec.basis(config, im), SpinorVec.basis(config, jm)
        )

    for im in range(config.size):
        jm = im ^ full
        fwd = coeff(im, jm)
        if fwd == zero:
            return _fail(
                "top-symmetry", n, f"vanishes on its support at pair ({im}, {jm})"
            )
        if fwd != sgn * coeff(jm, im):
            return _fail("top-symmetry", n, f"wrong sign at pair ({im}, {jm})")
        if (parity(im) + parity(jm)) % 2 != par:
            return _fail("top-symmetry", n, f"parity row violated at ({im}, {jm})")

    if n <= 4:
        for im in range(config.size):
            for jm in range(config.size):
                if jm != im ^ full and coeff(im, jm) != zero:
                    return _fail(
                        "top-symmetry", n, f"nonzero off support at ({im}, {jm})"
                    )
        off = f"off-support vanishing exhaustive over {config.size}^2 pairs"
    else:
        r = random.Random(6007 + n)
        for _ in range(100):
            im = r.randrange(config.size)
            jm = r.randrange(config.size)
            if jm != im ^ full and coeff(im, jm) != zero:
                return _fail(
                    "top-symmetry", n, f"nonzero off support at ({im}, {jm})"
                )
        off = "off-support vanishing on 100 seeded pairs"
    return _ok(
        "top-symmetry",
        n,
        f"sign {sym:+d} and parity {par} on all {config.size} support pairs; "
        + off,
    )


def check_graded_pairing_symmetry(n: int) -> CheckResult:
    """The graded pairing matches its n mod 4 symmetry sign and its two
    components vanish off their complementary parity rows: exhaustive on
    basis pairs for n <= 4, seeded pairs beyond."""
    config = Config(n)
    gform = graded_norm(solve_spinor_norm(config))
    sym, par2 = GRADED_PAIRING_TABLE[n % 4]
    par1 = 1 - par2
    sgn = config.field.from_int(sym)

    def basis_pair_ok(im: int, jm: int) -> bool:
        fwd = graded_pairing(
            gform, SpinorVec.basis(config, im), SpinorVec.basis(config, jm)
        )
        rev = graded_pairing(
            gform, SpinorVec.basis(config, jm), SpinorVec.basis(config, im)
        )
        if fwd != rev.scale(sgn):
            return False
        mismatch = (parity(im) + parity(jm)) % 2
        if mismatch != par2 and not grade_project(fwd, 2).is_zero():
            return False
        if mismatch != par1 and not grade_project(fwd, 1).is_zero():
            return False
        return True

    if n <= 4:
        for im in range(config.size):
            for jm in range(config.size):
                if not basis_pair_ok(im, jm):
                    return _fail(
                        "graded-pairing-symmetry",
                        n,
                        f"failed at basis pair ({im}, {jm})",
                    )
        return _ok(
            "graded-pairing-symmetry",
            n,
            f"exhaustive over all {config.size}^2 basis pairs with "
            "per-component parity",
        )

    r = random.Random(7001 + n)
    for _ in range(500):
        im, jm = r.randrange(config.size), r.randrange(config.size)
        if not basis_pair_ok(im, jm):
            return _fail(
                "graded-pairing-symmetry", n, f"failed at basis pair ({im}, {jm})"
            )
    return _ok(
        "graded-pairing-symmetry",
        n,
        "500 seeded basis pairs with per-component parity",
    )


def check_bracket_relations(n: int, pairs: int = 1000) -> CheckResult:
    """The two vector-valued relations tying the grade-2 pairing, the
    orbit-map adjoint and the norm together:

        2 [L(phi, psi), w] = s psi*(w.phi) - phi*(w.psi)
        2 B(phi, psi) w    = s psi*(w.phi) + phi*(w.psi)

    with s the reversal sign (-1)^(n(n-1)/2), for every orthonormal
    vector w.  Exhaustive on basis pairs for n <= 3, plus seeded random
    pairs (basis and sparse) for every n.
    """
    config = Config(n)
    form = solve_spinor_norm(config)
    field = config.field
    sign = -1 if (n * (n - 1) // 2) & 1 else 1
    sgn = field.from_int(sign)
    two = field.from_int(2)
    vecs = [orthonormal_vector(config, s) for s in range(2 * n)]

    def pair_ok(phi: SpinorVec, psi: SpinorVec) -> bool:
        elem = grade2_pairing(form, phi, psi)
        two_b = two * b_eval(form, phi, psi)
        for vec in vecs:
            first = orbit_map_adjoint(form, psi, act(vec, phi)).scale(sgn)
            second = orbit_map_adjoint(form, phi, act(vec, psi))
            if commutator(elem, vec).scale(two) != first - second:
                return False
            if vec.scale(two_b) != first + second:
                return False
        return True

    exhaustive = 0
    if n <= 3:
        for im in range(config.size):
            for jm in range(config.size):
                if not pair_ok(
                    SpinorVec.basis(config, im), SpinorVec.basis(config, jm)
                ):
                    return _fail(
                        "bracket-relations",
                        n,
                        f"relation failed at basis pair ({im}, {jm})",
                    )
                exhaustive += 1

    r = random.Random(8009 + n)
    sparse = pairs // 4
    for idx in range(pairs - sparse):
        phi = SpinorVec.basis(config, r.randrange(config.size))
        psi = SpinorVec.basis(config, r.randrange(config.size))
        if not pair_ok(phi, psi):
            return _fail(
                "bracket-relations", n, f"relation failed at random basis pair {idx}"
            )
    for idx in range(sparse):
        if not pair_ok(_sample_spinor(config, r), _sample_spinor(config, r)):
            return _fail(
                "bracket-relations", n, f"relation failed at random sparse pair {idx}"
            )
    detail = f"{pairs} seeded pairs ({sparse} sparse) over all {2 * n} vectors"
    if exhaustive:
        detail = f"exhaustive over {exhaustive} basis pairs, plus " + detail
    return _ok("bracket-relations", n, detail)


def check_matrix_agreement(n: int, samples: int | None = None) -> CheckResult:
    """The closed-form basis matrix of the grade-2 pairing agrees with
    the four-sum route applied to basis vectors: exhaustive over all
    (I, J, K) triples for n <= 5, seeded triples beyond (600 by default,
    more when requested)."""
    config = Config(n)
    form = solve_spinor_norm(config)
    size = config.size
    basis_vecs = [SpinorVec.basis(config, m) for m in range(size)]

    if n <= 5 and samples is None:
        for im in range(size):
            for jm in range(size):
                elem = grade2_pairing(form, basis_vecs[im], basis_vecs[jm])
                for km in range(size):
                    if act(elem, basis_vecs[km]) != grade2_pairing_on_basis(
                        form, im, jm, km
                    ):
                        return _fail(
                            "matrix-agreement",
                            n,
                            f"routes disagree at triple ({im}, {jm}, {km})",
                        )
        return _ok(
            "matrix-agreement", n, f"exhaustive over all {size}^3 basis triples"
        )

    count = 600 if samples is None else samples
    r = random.Random(9001 + n)
    for _ in range(count):
        im, jm, km = (r.randrange(size) for _ in range(3))
        elem = grade2_pairing(form, basis_vecs[im], basis_vecs[jm])
        if act(elem, basis_vecs[km]) != grade2_pairing_on_basis(form, im, jm, km):
            return _fail(
                "matrix-agreement",
                n,
                f"routes disagree at triple ({im}, {jm}, {km})",
            )
    return _ok("matrix-agreement", n, f"{count} seeded basis triples")


SUITES: dict[str, tuple] = {
    "fock": (check_car_relations, check_h_eigenvalues),
    "clifford": (check_q_isometry, check_pi_completeness, check_eps_duality),
    "norms": (
        check_norm_dimension,
        check_plain_symmetry,
        check_graded_symmetry,
        check_ck_invariance,
    ),
    "pairings": (
        check_grade2_symmetry,
        check_top_symmetry,
        check_graded_pairing_symmetry,
        check_bracket_relations,
        check_matrix_agreement,
    ),
}


def run_suites(n: int, suites=None) -> list[CheckResult]:
    """Run the named property suites (all of them by default) at one n."""
    if not 1 <= n <= 8:
        raise ValueError(f"property suites require 1 <= n <= 8, got {n}")
    names = tuple(SUITES) if suites is None else tuple(suites)
    for name in names:
        if name not in SUITES:
            raise ValueError(
                f"unknown suite {name!r}; choose from {sorted(SUITES)}"
            )
    results = []
    for name in names:
        for fn in SUITES[name]:
            results.append(fn(n))
    return results
