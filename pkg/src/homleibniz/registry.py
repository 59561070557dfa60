"""Name-based dispatch for every check, shared by the CLI and the catalog."""
from __future__ import annotations

import re

from . import powers
from .akivis import check_hom_akivis_identity, to_hom_akivis
from .algebra import CheckReport, HomAlgebra, check_multiplicative
from .identities import CHECKS

IDENTITY_NAMES = (
    "multiplicative",
    "hom-associative",
    "left-hom-leibniz",
    "right-hom-leibniz",
    "skew",
    "hom-jacobi",
    "associator-form",
    "anticommutator-annihilates",
    "bracket-derivation",
    "jacobian-cyclic-form",
    "hom-lie-admissible",
    "hom-akivis",
)

POWER_NAMES = (
    "hom-power-associative",
    "cube-vanishes",
    "twisted-cube-criterion",
    "right-powers-vanish",
    "left-powers-annihilate",
    "left-cube-annihilates",
    "power-associative",
    "power-associative-direct",
)

_NTH = re.compile(r"^hom-power-associative-(\d+)$")


def run_named(A: HomAlgebra, name: str, n_max: int = powers.DEFAULT_MAX_N) -> CheckReport:
    if name == "multiplicative":
        return check_multiplicative(A)
    if name == "hom-akivis":
        return check_hom_akivis_identity(to_hom_akivis(A))
    if name in CHECKS:
        return CHECKS[name](A)
    m = _NTH.match(name)
    if m:
        return powers.check_nth_hom_power_associative(A, int(m.group(1)))
    simple = {
        "hom-power-associative": lambda: powers.check_hom_power_associative(A),
        "cube-vanishes": lambda: powers.check_cube_vanishes(A),
        "twisted-cube-criterion": lambda: powers.check_twisted_cube_criterion(A),
        "right-powers-vanish": lambda: powers.check_right_powers_vanish(A, max(n_max, 3)),
        "left-powers-annihilate": lambda: powers.check_left_powers_annihilate(A, n_max),
        "left-cube-annihilates": lambda: powers.check_left_cube_annihilates(A, max(n_max, 3)),
        "power-associative": lambda: powers.check_power_associative(A),
        "power-associative-direct": lambda: powers.check_power_associative_direct(A, n_max),
    }
    if name in simple:
        return simple[name]()
    raise KeyError(name)
