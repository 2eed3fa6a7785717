"""
The spinor norm and its symmetry table
======================================

The bilinear form B on spinors is pinned down, up to scale, by
B(x.phi, psi) = B(phi, x.psi) for every vector x.  Solving that system
from scratch shows the solution space really is one dimensional, and
the solved form walks the classical n mod 4 symmetry table.
"""

from spinor_forge.fock import Config, SpinorVec, mask_str
from spinor_forge.clifford import act, orthonormal_vector
from spinor_forge.norms import (
    b_eval,
    graded_norm,
    norm_solution_dimension,
    solve_spinor_norm,
)

for n in range(1, 9):
    dim = norm_solution_dimension(Config(n))
    assert dim == 1
print("solution space dimension 1 for every n in 1..8")

print("\n n | plain sign/parity | graded sign/parity")
for n in range(1, 9):
    form = solve_spinor_norm(Config(n))
    graded = graded_norm(form)
    print(
        f" {n} |      {form.symmetry():+d} / {form.pairing_parity()}      |"
        f"      {graded.symmetry():+d} / {graded.pairing_parity()}"
    )

# the defining property in action at n = 4, on one slot vector
config = Config(4)
form = solve_spinor_norm(config)
vec = orthonormal_vector(config, 5)
phi = SpinorVec.basis(config, 0b0011)
psi = SpinorVec.basis(config, 0b1101)
assert b_eval(form, act(vec, phi), psi) == b_eval(form, phi, act(vec, psi))
print("\nB(x.phi, psi) = B(phi, x.psi) spot check at n=4: ok")

# support is exactly the antidiagonal: each mask pairs with its complement
full = config.size - 1
entries = form.export_triples()
assert all(j == i ^ full for i, j, _ in entries)
print(f"n=4 support: {len(entries)} antidiagonal entries, e.g. "
      f"B(e_{mask_str(entries[3][0])}.v, e_{mask_str(entries[3][1])}.v) = "
      f"{entries[3][2]}")
