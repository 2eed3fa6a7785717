"""The spinor norm B and its graded companion.

B is the bilinear form on S singled out (up to scale) by the defining
property B(x.phi, psi) = B(phi, x.psi) for every vector generator x.  It
is constructed here by actually solving that homogeneous system over all
Fock basis pairs and asserting the solution space is one dimensional, so
the construction certifies the uniqueness statement it relies on.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .field import Scalar
from .fock import Config, SpinorVec, apply_monomial, mask_str, parity


class BilinearForm:
    """Sparse bilinear form on S with antidiagonal support.

    entries maps (imask, jmask) to a nonzero scalar; for both flavors the
    support satisfies jmask = complement of imask, so each basis vector
    pairs with exactly one partner.
    """

    __slots__ = ("config", "flavor", "entries")

    def __init__(
        self,
        config: Config,
        flavor: str,
        entries: dict[tuple[int, int], Scalar],
    ) -> None:
        if flavor not in ("plain", "graded"):
            raise ValueError(f"unknown flavor {flavor!r}")
        full = config.size - 1
        for (imask, jmask), val in entries.items():
            if jmask != imask ^ full:
                raise ValueError(
                    f"entry ({mask_str(imask)}, {mask_str(jmask)}) is off the "
                    "antidiagonal"
                )
            if not val:
                raise ValueError("stored entries must be nonzero")
        object.__setattr__(self, "config", config)
        object.__setattr__(self, "flavor", flavor)
        object.__setattr__(self, "entries", dict(entries))

    def __setattr__(self, name: str, val: object) -> None:
        raise AttributeError("BilinearForm is immutable")

    def __repr__(self) -> str:
        return f"BilinearForm(flavor={self.flavor!r}, n={self.config.n})"

    def entry(self, imask: int, jmask: int) -> Scalar:
        got = self.entries.get((imask, jmask))
        return got if got is not None else self.config.field.zero()

    def export_triples(self) -> list[tuple[int, int, Scalar]]:
        """All nonzero entries as (I, I^c, value), ascending in I."""
        return [(i, j, v) for (i, j), v in sorted(self.entries.items())]

    def symmetry(self) -> int:
        """+1 if the form is symmetric, -1 if antisymmetric."""
        sym = all(
            self.entry(j, i) == v for (i, j), v in self.entries.items()
        )
        anti = all(
            self.entry(j, i) == -v for (i, j), v in self.entries.items()
        )
        if sym and not anti:
            return 1
        if anti and not sym:
            return -1
        raise AssertionError("form is neither symmetric nor antisymmetric")

    def pairing_parity(self) -> int:
        """0 when the form pairs equal spinor parities, 1 when opposite."""
        parities = {(parity(i) + parity(j)) & 1 for i, j in self.entries}
        if len(parities) != 1:
            raise AssertionError("form mixes pairing parities")
        return parities.pop()


def b_eval(form: BilinearForm, phi: SpinorVec, psi: SpinorVec) -> Scalar:
    form.config.check_same(phi.config)
    form.config.check_same(psi.config)
    full = form.config.size - 1
    acc = form.config.field.zero()
    for imask, ci in phi.terms.items():
        jmask = imask ^ full
        cj = psi.terms.get(jmask)
        if cj is None:
            continue
        val = form.entries.get((imask, jmask))
        if val is not None:
            acc = acc + ci * cj * val
    return acc


def _generator_moves(config: Config) -> list[list[tuple[int, int] | None]]:
    """Action tables of e_1, i_1, ..., e_n, i_n on basis masks."""
    moves = []
    for a in range(1, config.n + 1):
        bit = 1 << (a - 1)
        moves.append([apply_monomial(bit, 0, m) for m in range(config.size)])
        moves.append([apply_monomial(0, bit, m) for m in range(config.size)])
    return moves


def _solve_components(config: Config):
    """The signed union-find underlying the norm solver.

    Unknowns are the 4^n values B(e_I.v, e_J.v).  Every compatibility
    constraint either identifies two unknowns up to sign or forces one to
    zero; the surviving components are the solution space.  Returns
    (find, zero_roots, surviving_roots).
    """
    size = config.size
    nvars = size * size
    parent = list(range(nvars))
    sgn = [1] * nvars

    def find(v: int) -> tuple[int, int]:
        path = []
        while parent[v] != v:
            path.append(v)
            v = parent[v]
        acc = 1
        for u in reversed(path):
            acc *= sgn[u]
            parent[u] = v
            sgn[u] = acc
        return v, acc

    forced_zero: list[int] = []
    moves = _generator_moves(config)
    for imask in range(size):
        base = imask * size
        for move in moves:
            left = move[imask]
            for jmask in range(size):
                right = move[jmask]
                if left is None:
                    if right is not None:
                        forced_zero.append(base + right[1])
                    continue
                if right is None:
                    forced_zero.append(left[1] * size + jmask)
                    continue
                # s_l B[I', J] = s_r B[I, J']
                va = left[1] * size + jmask
                vb = base + right[1]
                rel = left[0] * right[0]
                ra, sa = find(va)
                rb, sb = find(vb)
                if ra == rb:
                    if sa != rel * sb:
                        forced_zero.append(va)
                else:
                    parent[ra] = rb
                    sgn[ra] = sa * rel * sb

    zero_roots = {find(v)[0] for v in forced_zero}
    roots = {find(v)[0] for v in range(nvars)}
    surviving = roots - zero_roots
    return find, zero_roots, surviving


def norm_solution_dimension(config: Config) -> int:
    """Dimension of the space of generator-compatible pairings on spinors."""
    return len(_solve_components(config)[2])


@lru_cache(maxsize=None)
def solve_spinor_norm(config: Config) -> BilinearForm:
    """Solve B(x.phi, psi) = B(phi, x.psi) over all generators and basis pairs.

    The solution space must be one dimensional; the result is scaled so
    that B(v, e_{1..n}.v) = 1.
    """
    size = config.size
    find, zero_roots, surviving = _solve_components(config)
    if len(surviving) != 1:
        raise AssertionError(
            f"spinor norm solution space has dimension {len(surviving)}, not 1"
        )

    full = size - 1
    anchor_root, anchor_sign = find(full)  # the variable B(v, e_{1..n}.v)
    if anchor_root in zero_roots:
        raise AssertionError("normalization entry solved to zero")
    field = config.field
    entries: dict[tuple[int, int], Scalar] = {}
    for v in range(size * size):
        root, s = find(v)
        if root in zero_roots:
            continue
        entries[(v // size, v % size)] = field.from_int(s * anchor_sign)
    return BilinearForm(config, "plain", entries)


def graded_norm(form: BilinearForm) -> BilinearForm:
    """B_eps(phi, psi) = B(eps.phi, psi): flip the sign on odd rows.

    The result satisfies B_eps(x.phi, psi) = -B_eps(phi, x.psi) for every
    vector generator x.
    """
    if form.flavor != "plain":
        raise ValueError("graded_norm expects the plain norm")
    entries = {
        (i, j): (-v if parity(i) else v) for (i, j), v in form.entries.items()
    }
    return BilinearForm(form.config, "graded", entries)
