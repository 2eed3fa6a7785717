"""Deterministic random generators shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from spinor_forge.clifford import CliffordElem
from spinor_forge.fock import Config, SpinorVec


def rng(seed: int) -> random.Random:
    return random.Random(seed)


def rand_scalar(config: Config, r: random.Random):
    k = 0
    while k == 0:
        k = r.randint(-6, 6)
    if config.field.characteristic == 0:
        return Fraction(k, r.randint(1, 4))
    return config.field.from_int(k)


def rand_spinor(config: Config, r: random.Random, nterms: int = 3) -> SpinorVec:
    terms = {}
    for _ in range(nterms):
        terms[r.randrange(config.size)] = rand_scalar(config, r)
    return SpinorVec(config, terms)


def rand_monomial(config: Config, r: random.Random) -> tuple[int, int]:
    return r.randrange(config.size), r.randrange(config.size)


def rand_elem(config: Config, r: random.Random, nmono: int = 3) -> CliffordElem:
    terms = {}
    for _ in range(nmono):
        terms[rand_monomial(config, r)] = rand_scalar(config, r)
    return CliffordElem(config, terms)
