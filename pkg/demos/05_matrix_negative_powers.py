"""Certified series for (a + b)^(-n) around a scalar shift.

Reads the two matrices from demos/data, runs the direct series and the
derivation-regrouped double sum, and compares both against an LU solve.
The a matrix is a nilpotent-plus-identity example, so the series is finite
and stops on its own.
"""

import json
from pathlib import Path

import numpy as np

from ncbinom import (ConvergenceDomainError, frob_norm, lu_solve,
                     matrix_from_json, negpow_double_sum, negpow_series,
                     spectral_radius_upper, suggest_lambda)

here = Path(__file__).resolve().parent


def load(name):
    with open(here / "data" / name) as fh:
        return matrix_from_json(json.load(fh))


a = load("nilpotent_a.json")
b = load("nilpotent_b.json")
lam = suggest_lambda(a, b)
print("a =", np.array2string(a.real, precision=2))
print("b =", np.array2string(b.real, precision=2))
print("shift lambda =", lam)
print("spectral radius bound of a+b-lam*I:",
      spectral_radius_upper(a + b - lam * np.eye(2)))

res = negpow_series(a, b, 1, lam)
print("series value:")
print(np.array2string(res.value.real, precision=4))
print("terms used:", res.terms_used, " tail bound:", res.tail_bound)

dbl = negpow_double_sum(a, b, 1, lam)
oracle = lu_solve(a + b, np.eye(2, dtype=complex))
print("series vs LU:  ", frob_norm(res.value - oracle))
print("double vs series:", frob_norm(dbl.value - res.value))

# shrinking the shift pushes |lambda| below the radius bound and the
# gate refuses to sum a series it cannot certify
try:
    negpow_series(a, b, 1, 0.25)
except ConvergenceDomainError as exc:
    print("gate:", exc)
