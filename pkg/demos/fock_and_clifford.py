"""
Fock space and Clifford action basics
=====================================

Build the spinor space for n Witt pairs, move around with creation and
annihilation operators, and watch the grading element and the number
operator do their jobs.
"""

from spinor_forge.fock import Config, SpinorVec, annihilate, create, mask_str
from spinor_forge.clifford import (
    act,
    commutator,
    grade_project,
    grading_element,
    h_operator,
    multiply,
    witt_e,
    witt_i,
)

n = 3
config = Config(n)
print(f"n = {n}: spinor space dimension {config.size}")

# the vacuum is killed by every annihilation operator
vac = SpinorVec.vacuum(config)
for a in range(1, n + 1):
    assert annihilate(a, vac).is_zero()
print("vacuum annihilated by every i_a")

# build e_{13}.v = e_1 e_3 . v and read its occupation mask back
psi = create(1, create(3, vac))
((mask, coeff),) = psi.items()
print(f"e_1 e_3 . v lives at mask {mask_str(mask)} with coefficient {coeff}")

# the mixed CAR relation i_a e_a + e_a i_a = 1, as operators
one = config.field.from_int(1)
for a in range(1, n + 1):
    lhs = annihilate(a, create(a, psi)) + create(a, annihilate(a, psi))
    assert lhs == psi.scale(one)
print("i_a e_a + e_a i_a acts as the identity")

# epsilon acts by parity: +1 on even particle number, -1 on odd
eps = grading_element(config)
print(f"eps has {len(dict(eps.items()))} monomials and eps^2 = 1:",
      multiply(eps, eps) == type(eps).one(config))
print("eps on e_1 e_3 . v ->", dict(act(eps, psi).items()))

# H counts particles, centered at n/2
h = h_operator(config)
out = act(h, psi)
print(f"H on e_1 e_3 . v has eigenvalue {next(iter(dict(out.items()).values()))}")
assert commutator(h, witt_e(config, 2)) == witt_e(config, 2)
assert commutator(h, witt_i(config, 2)) == witt_i(config, 2).scale(
    config.field.from_int(-1)
)
print("[H, e_2] = e_2 and [H, i_2] = -i_2")

# grade projections decompose any element and sum back to it
x = multiply(witt_e(config, 1), witt_i(config, 2)) + h
parts = [grade_project(x, k) for k in range(2 * n + 1)]
total = parts[0]
for part in parts[1:]:
    total = total + part
assert total == x
support = [k for k, part in enumerate(parts) if not part.is_zero()]
print(f"sample element has grade support {support}")
