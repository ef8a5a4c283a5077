"""Invariant suites for algebra specs and representations.

Each check returns a :class:`CheckResult` with the worst residual observed,
so the same functions back both the test suite and the ``verify`` CLI
command.  Structure-level checks (associativity, unitary basis) are exact
on the signed-monomial data; element-level checks (involution, isometry,
RMR transpose) run on random elements and allow round-off.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .core import AlgebraSpec, rmr
from .catalog import LaurentAlgebra, random_element

EXHAUSTIVE_DIM_CAP = 64  # above this, label triples/pairs are sampled


@dataclass
class CheckResult:
    name: str
    passed: bool
    worst: float
    detail: str = ""

    def __str__(self):
        flag = "pass" if self.passed else "FAIL"
        out = f"{self.name:<24s} {flag}  worst={self.worst:.3e}"
        return out + (f"  ({self.detail})" if self.detail else "")


def _label_pool(spec: AlgebraSpec, rng, size: int, degree: int = 2):
    if spec.dim is not None:
        return list(spec.labels)
    if isinstance(spec, LaurentAlgebra):
        pool = list(itertools.product(range(-degree, degree + 1),
                                      repeat=spec.kappa))
        idx = rng.choice(len(pool), size=min(size, len(pool)), replace=False)
        return [pool[i] for i in idx]
    raise NotImplementedError(spec.descriptor)


def check_unit_axiom(spec: AlgebraSpec, rng=None, samples: int = 512) -> CheckResult:
    """e_1 is a two-sided multiplicative identity on the basis."""
    rng = rng or np.random.default_rng(0)
    labels = _label_pool(spec, rng, samples)
    u = spec.unit
    bad = 0
    for lab in labels:
        if spec.mul_basis(u, lab) != (1.0, lab) or spec.mul_basis(lab, u) != (1.0, lab):
            bad += 1
    return CheckResult("unit axiom", bad == 0, float(bad),
                       f"{len(labels)} labels")


def check_associativity(spec: AlgebraSpec, rng=None,
                        samples: int = 20000) -> CheckResult:
    """(e_i e_j) e_k = e_i (e_j e_k), exact on signs and labels.

    Exhaustive for dim <= 64, randomly sampled triples otherwise.
    """
    rng = rng or np.random.default_rng(0)
    mul = spec.mul_basis
    if spec.dim is not None and spec.dim <= EXHAUSTIVE_DIM_CAP:
        labels = spec.labels
        triples = itertools.product(labels, labels, labels)
        total = spec.dim ** 3
    else:
        pool = _label_pool(spec, rng, 256)
        npool = len(pool)
        picks = rng.integers(npool, size=(samples, 3))
        triples = ((pool[a], pool[b], pool[c]) for a, b, c in picks)
        total = samples
    bad = 0
    for i, j, k in triples:
        s1, ij = mul(i, j)
        s2, left = mul(ij, k)
        s3, jk = mul(j, k)
        s4, right = mul(i, jk)
        if left != right or s1 * s2 != s3 * s4:
            bad += 1
    return CheckResult("associativity", bad == 0, float(bad),
                       f"{total} triples")


def check_unitary_basis(spec: AlgebraSpec, rng=None,
                        samples: int = 4096) -> CheckResult:
    """Re(conj(e_i) e_j) = delta_ij for all basis pairs (exact)."""
    rng = rng or np.random.default_rng(0)
    if spec.dim is not None and spec.dim <= EXHAUSTIVE_DIM_CAP:
        labels = spec.labels
        pairs = itertools.product(labels, labels)
    else:
        pool = _label_pool(spec, rng, 64)
        pairs = itertools.product(pool, pool)
    worst = 0.0
    bad = 0
    for i, j in pairs:
        si, ii = spec.inv_basis(i)
        sp, k = spec.mul_basis(ii, j)
        val = si * sp if k == spec.unit else 0.0
        want = 1.0 if i == j else 0.0
        err = abs(val - want)
        worst = max(worst, err)
        if err != 0.0:
            bad += 1
    return CheckResult("unitary basis", bad == 0, worst)


def check_involution(spec: AlgebraSpec, rng=None, trials: int = 100,
                     tol: float = 1e-14) -> CheckResult:
    """conj is an anti-automorphism of order two on random elements."""
    rng = rng or np.random.default_rng(0)
    worst = 0.0
    for _ in range(trials):
        a = random_element(spec, rng)
        b = random_element(spec, rng)
        scale = max(a.norm2() * b.norm2(), 1.0)
        worst = max(worst, ((a * b).conj() - b.conj() * a.conj()).norm_inf() / scale)
        worst = max(worst, (a.conj().conj() - a).norm_inf())
    return CheckResult("involution", worst <= tol, worst, f"{trials} pairs")


def check_isometry(spec: AlgebraSpec, rng=None, trials: int = 50,
                   tol: float = 1e-14) -> CheckResult:
    """Left multiplication by a basis element preserves the 2-norm."""
    rng = rng or np.random.default_rng(0)
    worst = 0.0
    for _ in range(trials):
        a = random_element(spec, rng)
        na = a.norm2()
        for lab in _label_pool(spec, rng, 16):
            b = spec.basis_element(lab)
            worst = max(worst, abs((b * a).norm2() - na) / max(na, 1.0))
    return CheckResult("isometry (A2)", worst <= tol, worst, f"{trials} elements")


def check_rmr_transpose(spec: AlgebraSpec, rng=None, trials: int = 25,
                        tol: float = 1e-13) -> CheckResult:
    """RMR of the conjugate equals the transposed RMR (A3)."""
    if spec.dim is None:
        return CheckResult("rmr transpose (A3)", True, 0.0, "skipped: infinite dim")
    rng = rng or np.random.default_rng(0)
    worst = 0.0
    for _ in range(trials):
        a = random_element(spec, rng)
        worst = max(worst, float(np.abs(rmr(a.conj()) - rmr(a).T).max()))
    return CheckResult("rmr transpose (A3)", worst <= tol, worst,
                       f"{trials} elements")


def check_norm_order(spec: AlgebraSpec, rng=None, trials: int = 100) -> CheckResult:
    """norm_inf <= norm2 <= sqrt(support) * norm_inf on random elements."""
    rng = rng or np.random.default_rng(0)
    ok = True
    worst = 0.0
    for _ in range(trials):
        a = random_element(spec, rng)
        lo, hi = a.norm_inf(), a.norm2()
        slack = 1e-12 * max(hi, 1.0)
        if not (lo <= hi + slack and hi <= (a.support ** 0.5) * lo + slack):
            ok = False
            worst = max(worst, abs(hi - lo))
    return CheckResult("norm ordering", ok, worst)


def verify_algebra(spec: AlgebraSpec, rng=None, trials: int = 100) -> list[CheckResult]:
    """Run the full invariant family for one spec."""
    rng = rng or np.random.default_rng(0)
    return [
        check_unit_axiom(spec, rng),
        check_associativity(spec, rng),
        check_unitary_basis(spec, rng),
        check_involution(spec, rng, trials),
        check_isometry(spec, rng, max(10, trials // 2)),
        check_rmr_transpose(spec, rng),
        check_norm_order(spec, rng, trials),
    ]
