"""Line-oriented verification suite behind ``polydense verify``.

Each check exercises one of the package's exact identities, bounds, or
Monte-Carlo trend properties and reports a single PASS/FAIL line.  The
quick level covers the exact identities and anchors; the full level adds
the exact monotone decrease at d=3, the limit-ratio convergence, reduced
trend sweeps, the cross-method consistency check, and byte determinism.
"""

from __future__ import annotations

import io
import math
import time
from fractions import Fraction

from . import estimators as est
from .arrangements import (chamber_count, chamber_count_bruteforce, harding_bound,
                           moivre_laplace_ratio, normal_cdf)
from .cube import cut_polytope_vertices, full_cube
from .graph import graph_density_exact
from .rng import stream

__all__ = ["run", "QUICK_CHECKS", "FULL_EXTRA_CHECKS"]


def _check_cube_anchor(workers: int, seed: int):
    for d in (2, 3, 4):
        rep = graph_density_exact(full_cube(d))
        want = Fraction(d, (1 << d) - 1)
        if rep.density != want:
            return False, f"d={d}: got {rep.density}, want {want}"
    return True, "density d/(2^d-1) exact for d=2,3,4"


def _check_cut_polytope(workers: int, seed: int):
    rep = graph_density_exact(cut_polytope_vertices(4))
    if rep.density != 1:
        return False, f"density {rep.density} != 1"
    return True, "all 28 pairs of the 8 cut vectors are edges"


def _check_tau_alpha_identity(workers: int, seed: int):
    for k in (2, 3, 4):
        classes = (1 << (k - 1)) - 1
        for m in range(0, (1 << k) - 1):
            direct = est.tau_exact(k, m).exact_value
            if m <= classes:
                routed = est.tau_from_alpha(k, m, est.alpha_exact(k, m)).exact_value
            else:
                routed = Fraction(0)
            if direct != routed:
                return False, f"k={k} m={m}: {direct} != {routed}"
    return True, "prefactor * alpha equals tau exactly for k<=4, all m"


def _check_tau_monotone_and_bound(workers: int, seed: int):
    for k in (2, 3, 4):
        vals = [est.tau_exact(k, m).exact_value for m in range(0, (1 << k) - 1)]
        for m in range(len(vals) - 1):
            if vals[m] < vals[m + 1]:
                return False, f"k={k}: tau increases at m={m}"
        for m in range(1, len(vals)):
            if vals[m] > est.tau_upper_bound(k, m):
                return False, f"k={k} m={m}: bound violated"
    return True, "tau non-increasing in m and below the chamber-sum bound, k<=4"


def _check_chamber_oracles(workers: int, seed: int):
    rng = stream(seed, "verify:chambers")
    for trial in range(40):
        r = int(rng.integers(1, 4)) if trial % 2 else 3
        m = int(rng.integers(1, 9))
        vecs = []
        while len(vecs) < m:
            v = tuple(Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 10)))
                      for _ in range(r))
            if any(x != 0 for x in v):
                vecs.append(v)
        a = chamber_count(vecs).count
        b = chamber_count_bruteforce(vecs).count
        if a != b:
            return False, f"trial {trial}: sign search {a} != brute force {b}"
        if a > harding_bound(r, m):
            return False, f"trial {trial}: chamber bound violated"
    return True, "sign search equals brute force and respects the bound (40 configs)"


def _check_alpha_chamber_route(workers: int, seed: int):
    for k in (2, 3, 4):
        for m in range(0, min((1 << (k - 1)) - 1, 4) + 1):
            a = est.alpha_exact(k, m).exact_value
            b = est.alpha_via_chambers_exact(k, m).exact_value
            if a != b:
                return False, f"k={k} m={m}: {a} != {b}"
    return True, "alpha equals the chamber average exactly (k<=4, m<=4)"


def _check_distance_decomposition(workers: int, seed: int):
    for n in range(3, 9):
        direct = est.pi_exact(3, n).exact_value
        pik = {k: est.pi_k_exact(3, n, k) for k in (1, 2, 3)}
        rebuilt = est.pi_from_pk(3, n, pik).exact_value
        if direct != rebuilt:
            return False, f"n={n}: {direct} != {rebuilt}"
    return True, "pi(3,n) equals its distance decomposition exactly, n=3..8"


def _check_monotone_decrease(workers: int, seed: int):
    rep = est.monotonicity_check(3)
    if not rep.strictly_decreasing:
        return False, f"violations at {rep.violations}"
    tail = rep.values[8]
    if tail != Fraction(3, 7):
        return False, f"pi(3,8) = {tail} != 3/7"
    return True, "pi(3,n) strictly decreasing for n=3..8, ending at 3/7"


def _check_moivre(workers: int, seed: int):
    if abs(moivre_laplace_ratio(400, 0.0) - 0.5) > 0.05:
        return False, "ratio at q=400, mu=0 is off by more than 0.05"
    for mu in (-0.5, 0.0, 0.5):
        target = normal_cdf(2 * mu)
        if abs(moivre_laplace_ratio(1600, mu) - target) >= \
           abs(moivre_laplace_ratio(100, mu) - target):
            return False, f"no convergence improvement at mu={mu}"
    return True, "binomial tail ratio approaches the normal limit"


def _check_tau_trends(workers: int, seed: int):
    # direction in m at fixed k (exactly the table monotonicity), and the
    # sub-threshold growth of tau(k, 1.5k) in k
    ks = (6, 8, 10, 12)
    low = [est.tau_mc(k, (3 * k) // 2, 3000, seed, workers=workers) for k in ks]
    for a, b in zip(low, low[1:]):
        gap = b.value - a.value
        sig = 2 * math.hypot(a.stderr, b.stderr)
        if gap <= sig:
            return False, f"sub-threshold trend step {gap:.4f} <= 2 sigma {sig:.4f}"
    k = 8
    ratios = [est.tau_mc(k, m, 2000, seed, workers=workers).value
              for m in (8, 12, 16, 24)]
    if any(ratios[i] < ratios[i + 1] - 0.05 for i in range(len(ratios) - 1)):
        return False, f"tau not decreasing in m at k={k}: {ratios}"
    # super-threshold values are reported, not asserted: at desk-scale k the
    # ratio-3 column is not yet monotone in k
    high = [est.tau_mc(k, 3 * k, 2000, seed, workers=workers).value for k in ks]
    detail = ("tau(k,1.5k) rises " + "/".join(f"{e.value:.3f}" for e in low)
              + "; tau(k,3k) small: " + "/".join(f"{v:.4f}" for v in high))
    return True, detail


def _check_density_trend(workers: int, seed: int):
    gaps = []
    for d in (10, 12, 14):
        n_lo = math.floor(1.2 ** d)
        n_hi = math.ceil(1.7 ** d)
        lo = est.pi_mc(d, n_lo, 1200, seed, workers=workers)
        hi = est.pi_mc(d, n_hi, 1200, seed, workers=workers)
        gaps.append(lo.value - hi.value)
        if gaps[-1] < 0.3:
            return False, f"d={d}: gap {gaps[-1]:.3f} < 0.3"
    if not all(gaps[i] <= gaps[i + 1] + 1e-12 for i in range(len(gaps) - 1)):
        return False, f"gap not non-decreasing: {gaps}"
    return True, "density gap between sub- and super-threshold n grows with d"


def _check_cross_method(workers: int, seed: int):
    dec = est.decompose_pi(8, 32, tau_samples=1500, seed=seed, workers=workers)
    direct = est.pi_mc(8, 32, 4000, seed, workers=workers)
    diff = abs(dec.combined.value - direct.value)
    bound = 3 * math.hypot(dec.combined.stderr, direct.stderr)
    if diff > bound:
        return False, f"|{dec.combined.value:.4f} - {direct.value:.4f}| > {bound:.4f}"
    return True, f"decomposed vs direct pi(8,32): diff {diff:.4f} <= {bound:.4f}"


def _check_determinism(workers: int, seed: int):
    def run_once(w):
        rows = est.density_threshold_sweep([8], [1.3], samples=600, seed=seed,
                                           workers=w)
        buf = io.StringIO()
        for r in rows:
            e = r.estimate
            buf.write(f"{r.d},{r.base},{r.n},{e.value!r},{e.stderr!r},{e.samples}\n")
        return buf.getvalue()
    one = run_once(1)
    two = run_once(2)
    if one != two:
        return False, "worker count changed the output bytes"
    if one != run_once(1):
        return False, "rerun changed the output bytes"
    return True, "identical output for reruns and any worker count"


QUICK_CHECKS = [
    ("cube-density anchor (d=2..4, exact)", _check_cube_anchor),
    ("cut-polytope completeness (k=4, exact)", _check_cut_polytope),
    ("tau-alpha prefactor identity (k<=4, exact)", _check_tau_alpha_identity),
    ("tau monotone in m + chamber-sum bound (k<=4, exact)", _check_tau_monotone_and_bound),
    ("chamber count: sign search vs brute force", _check_chamber_oracles),
    ("alpha via chamber averages (double enumeration)", _check_alpha_chamber_route),
    ("distance decomposition of pi (d=3, exact)", _check_distance_decomposition),
]

FULL_EXTRA_CHECKS = [
    ("pi strictly decreasing in n (d=3, exact)", _check_monotone_decrease),
    ("binomial tail vs normal limit", _check_moivre),
    ("long-edge threshold trends (Monte Carlo)", _check_tau_trends),
    ("graph-density threshold gap (Monte Carlo)", _check_density_trend),
    ("cross-method consistency pi(8,32)", _check_cross_method),
    ("byte determinism across workers", _check_determinism),
]


def run(level: str = "quick", workers: int = 1, seed: int = 20250809,
        out=None) -> int:
    """Run the verification suite; returns a nonzero exit code on failure."""
    import sys
    out = out or sys.stdout
    if level not in ("quick", "full"):
        raise ValueError("level must be 'quick' or 'full'")
    checks = list(QUICK_CHECKS)
    if level == "full":
        checks += FULL_EXTRA_CHECKS
    failures = 0
    t_start = time.time()
    for name, fn in checks:
        t0 = time.time()
        try:
            ok, detail = fn(workers, seed)
        except Exception as exc:  # a crash counts as a failure, not an abort
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        status = "PASS" if ok else "FAIL"
        if not ok:
            failures += 1
        print(f"{status}  {name}  [{time.time() - t0:.1f}s]  {detail}", file=out)
    total = len(checks)
    print(f"{total - failures}/{total} checks passed in {time.time() - t_start:.1f}s",
          file=out)
    return 1 if failures else 0
