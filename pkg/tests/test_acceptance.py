"""One test per acceptance criterion; each prints a single PASS/FAIL line."""
import math
import subprocess
import sys
import time
from collections import Counter

import numpy as np

from ksdyon import PhysicalContext, special
from ksdyon.ksmap import fiber_action_array, ks_forward_array
from ksdyon.numerics import separation_label, solve_angular, solve_radial
from ksdyon.spectra import energy_hyperspherical, enumerate_level, k_param
from ksdyon.verify import check_duality, check_residuals, cross_spectrum_check, monopole_flux


def verdict(number, title, ok, detail):
    print(f"{'PASS' if ok else 'FAIL'} criterion {number} ({title}): {detail}")
    assert ok, detail


def test_criterion_01_ks_norm_identity():
    t0 = time.perf_counter()
    u = np.random.default_rng(2024).uniform(-2.0, 2.0, size=(10_000, 4))
    x, _ = ks_forward_array(u)
    # |x| equals the squared Euclidean norm of u
    dev = float(np.max(np.abs(np.linalg.norm(x, axis=-1) - np.einsum("ij,ij->i", u, u))))
    elapsed = time.perf_counter() - t0
    verdict(1, "KS norm identity", dev < 1e-12 and elapsed < 1.0, f"max deviation {dev:.2e}, {elapsed:.3f} s")


def test_criterion_02_fiber_invariance():
    rng = np.random.default_rng(7)
    u = rng.uniform(-2.0, 2.0, size=(1000, 4))
    delta = rng.uniform(0.0, 4 * math.pi, size=1000)
    x0, _ = ks_forward_array(u)
    x1, _ = ks_forward_array(fiber_action_array(u, delta))
    drift = float(np.max(np.abs(x1 - x0)))
    verdict(2, "fiber invariance", drift < 1e-12, f"max base-point drift {drift:.2e}")


def test_criterion_03_monopole_flux():
    t0 = time.perf_counter()
    flux = monopole_flux()
    elapsed = time.perf_counter() - t0
    err = abs(flux - 4 * math.pi)
    verdict(3, "monopole flux", err < 1e-6 and elapsed < 10.0, f"|flux - 4 pi| = {err:.2e}, {elapsed:.2f} s")


def test_criterion_04_hydrogen_limit():
    t0 = time.perf_counter()
    worst = 0.0
    levels = []
    for ell in range(3):
        res = solve_radial(0, float(ell), n_levels=3)
        assert res.grid.n_cells == 2048 and len(res.levels) == 3
        for n in range(3):
            levels.append((-0.5 / (n + ell + 1) ** 2, n, ell, float(res.eigenvalues[n])))
    lowest = sorted(levels)[:6]
    for exact, _, _, got in lowest:
        worst = max(worst, abs(got - exact) / abs(exact))
    elapsed = time.perf_counter() - t0
    verdict(4, "hydrogen limit", worst < 1e-6 and elapsed < 30.0,
            f"max relative error {worst:.2e} over {[(n, l) for _, n, l, _ in lowest]}, {elapsed:.2f} s")


def test_criterion_05_monopole_spectrum():
    t0 = time.perf_counter()
    worst = 0.0
    for m in (1, 2):
        ang = solve_angular(m, m, n_levels=1)
        lam = float(separation_label(ang.eigenvalues[0]))
        k = k_param(m, lam)
        res = solve_radial(m, lam, n_levels=3)
        for n in range(3):
            exact = energy_hyperspherical(n, k).epsilon
            worst = max(worst, abs(res.eigenvalues[n] - exact) / abs(exact))
    elapsed = time.perf_counter() - t0
    verdict(5, "monopole spectrum", worst < 1e-5 and elapsed < 60.0,
            f"max relative error {worst:.2e}, {elapsed:.2f} s")


def test_criterion_06_cross_coordinate_consistency():
    failures = [r.note for m in range(-2, 3) if not (r := cross_spectrum_check(m, 4, tol=1e-6)).passed]
    counts = [len(enumerate_level(N, "hyperspherical", 0)) for N in range(1, 5)]
    ok = not failures and counts == [N * N for N in range(1, 5)]
    verdict(6, "cross-coordinate consistency", ok,
            f"mismatches {failures or 'none'}; m=0 multiplicities {counts}")


def test_criterion_07_residual_suite():
    reports = check_residuals(1e-6)
    bad = [r.check_name for r in reports if not r.passed]
    worst = max(r.observed for r in reports if isinstance(r.observed, float))
    verdict(7, "residual suite", not bad, f"worst residual {worst:.2e}; failing {bad or 'none'}")


def test_criterion_08_duality():
    reports = check_duality(PhysicalContext(E_osc=4.0), 4, tol_osc=1e-6, tol_map=1e-8)
    bad = [r.check_name for r in reports if not r.passed]
    offset = next(r.note for r in reports if r.check_name == "duality.offset")
    verdict(8, "duality", not bad, f"{offset}; failing {bad or 'none'}")


def test_criterion_09_special_function_oracles():
    t0 = time.perf_counter()
    worst_orth = 0.0
    for k in (0.0, 1.0, 3.0, math.sqrt(13) - 1):
        rule = special.quadrature("laguerre", 64, alpha=k)
        for a in range(7):
            for b in range(7):
                val = rule.integrate(lambda x: special.laguerre(a, k, x) * special.laguerre(b, k, x))
                target = math.gamma(a + k + 1) / math.factorial(a) if a == b else 0.0
                worst_orth = max(worst_orth, abs(val - target))
    x = np.linspace(0.0, 10.0, 50)
    worst_id = 0.0
    for n in range(7):
        for k in (0.0, 1.0, 3.0, math.sqrt(13) - 1):
            lhs = special.laguerre(n, k, x)
            rhs = special.laguerre_kummer_ratio(n, k) * special.kummer_1f1_terminating(-n, k + 1, x)
            worst_id = max(worst_id, float(np.max(np.abs(lhs - rhs))))
    elapsed = time.perf_counter() - t0
    ok = worst_orth < 1e-8 and worst_id < 1e-10 and elapsed < 1.0
    verdict(9, "special-function oracles", ok,
            f"orthogonality {worst_orth:.2e}, 1F1 identity {worst_id:.2e}, {elapsed:.3f} s")


def test_criterion_10_cli_determinism(tmp_path):
    outputs = []
    for i in range(2):
        report = tmp_path / f"run{i}.json"
        proc = subprocess.run(
            [sys.executable, "-m", "ksdyon", "verify", "--suite", "all", "--seed", "7", "--report", str(report)],
            capture_output=True, check=False,
        )
        outputs.append((proc.returncode, proc.stdout, report.read_bytes()))
    codes = Counter(code for code, _, _ in outputs)
    same = outputs[0][1:] == outputs[1][1:]
    verdict(10, "CLI determinism", same and codes == {0: 2},
            f"exit codes {[c for c, _, _ in outputs]}, identical reports {same}")
