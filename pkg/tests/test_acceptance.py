"""Acceptance gate: one test (and one printed pass/fail line) per criterion.

Run with output capture disabled (the default addopts) so each criterion
prints a single [AC##] PASS/FAIL line.
"""

import numpy as np

from simplexsearch import (MarkedConfiguration, build_complete, build_simplex,
                           classify_pairs, coarsest_equitable_partition,
                           complete_gap, build_hamiltonian, evolve_ode,
                           evolve_spectral, gamma_sweep, gap_at,
                           named_configuration, peak_summary, predict,
                           propagate, run_named_case, run_schedule_full,
                           run_schedule_reduced, scaling_fit,
                           simplex_coordinate, uniform_state,
                           validate_reduction, auto_schedule)
from simplexsearch.schedule import Schedule

NAMED = ("two-a", "two-b", "two-c", "two-d", "two-e",
         "ring-1", "clique-plus-1", "ring-2", "ring-2-shift")
TWO_STAGE = NAMED[:5]
ONE_STAGE = NAMED[5:]

EXPECTED_DIMS = {"two-a": 8, "two-b": 4, "two-c": 8, "two-d": 11, "two-e": 13,
                 "ring-1": 3, "clique-plus-1": 7, "ring-2": 2,
                 "ring-2-shift": 3}


def report(tag, ok, detail=""):
    print(f"\n[{tag}] {'PASS' if ok else 'FAIL'} {detail}")
    assert ok, f"{tag}: {detail}"


def test_ac01_grover_reproduction():
    n, k = 1024, 4
    graph = build_complete(n)
    marked = MarkedConfiguration(tuple(range(k)))
    times = np.linspace(0.0, 50.0, 2001)
    good = evolve_spectral(build_hamiltonian(graph, marked, 1.0 / n),
                           uniform_state(n), times)
    peak, t_peak, _ = peak_summary(good)
    t_star = 8.0 * np.pi
    at_tstar = evolve_spectral(build_hamiltonian(graph, marked, 1.0 / n),
                               uniform_state(n), [t_star])
    p_star = float(at_tstar.success_probability[0])
    bad = evolve_spectral(build_hamiltonian(graph, marked, 2.0 / n),
                          uniform_state(n), times)
    bad_max = float(bad.success_probability.max())
    ok = (p_star >= 0.99 and abs(t_peak - t_star) <= 0.01 * t_star
          and bad_max <= 0.05)
    report("AC01", ok,
           f"P(8pi)={p_star:.6f}, t_peak={t_peak:.3f} vs {t_star:.3f}, "
           f"wrong-gamma max={bad_max:.4f}")


def test_ac02_subspace_dimensions():
    failures = []
    for m in range(5, 13):
        graph = build_simplex(m)
        for case, want in EXPECTED_DIMS.items():
            part = coarsest_equitable_partition(graph, named_configuration(case, m))
            if part.dimension != want:
                failures.append((case, m, part.dimension, want))
    report("AC02", not failures,
           f"dims exact for 9 cases x M=5..12" if not failures else str(failures))


def test_ac03_golden_matrix_matches():
    worst, failures = 0.0, []
    for m in (5, 9, 20):
        for case in NAMED:
            rep = validate_reduction(case, m)
            worst = max(worst, rep.max_deviation)
            if not rep.matched:
                failures.append((case, m, rep.detail))
        for k in (1, 2, 3):
            rep = validate_reduction("k-in-clique", m, k)
            worst = max(worst, rep.max_deviation)
            if not rep.matched:
                failures.append(("k-in-clique", m, k, rep.detail))
    ok = not failures and worst < 1e-12
    report("AC03", ok, f"max deviation {worst:.2e}" if ok else str(failures))


def test_ac04_full_vs_reduced_equivalence():
    worst = 0.0
    for m in (5, 8):
        graph = build_simplex(m)
        for case in NAMED:
            cfg = named_configuration(case, m)
            sched = auto_schedule(case, m)
            samples = 200 // len(sched.stages)
            part = coarsest_equitable_partition(graph, cfg)
            full = run_schedule_full(graph, cfg, sched, samples)
            red = run_schedule_reduced(part, sched, samples)
            worst = max(worst, float(np.max(np.abs(
                full.success_probability - red.success_probability))))
    report("AC04", worst < 1e-8, f"max |P_full - P_reduced| = {worst:.2e}")


def test_ac05_gap_verification():
    failures, details = [], []
    for case in NAMED:
        n_stages = 2 if case in TWO_STAGE else 1
        for stage in range(1, n_stages + 1):
            rels = {}
            for m in (100, 400):
                gc = predict(case, m).stages[stage - 1].gamma_c
                rep = gap_at(case, m, gc, stage)
                rels[m] = rep.relative_error
                if m == 100 and rep.relative_error >= 0.1:
                    failures.append((case, stage, "rel@100", rep.relative_error))
            improves = (rels[400] < rels[100]
                        or (rels[100] <= 1e-12 and rels[400] <= 1e-12))
            if not improves:
                failures.append((case, stage, "no improvement", rels))
            details.append(f"{case}/s{stage}: {rels[100]:.1e}->{rels[400]:.1e}")
    # complete-graph gap is exact at the critical gamma
    exact = max(abs(complete_gap(n, k, 1.0 / n) - 2.0 * np.sqrt(k / n))
                for n, k in ((64, 1), (500, 3), (1024, 4)))
    if exact > 1e-12:
        failures.append(("complete", exact))
    report("AC05", not failures,
           f"all rel<10% at M=100, improving at M=400; complete exact to {exact:.1e}"
           if not failures else str(failures))


def test_ac06_scaling_fits():
    ms = [100, 200, 400]
    failures = []
    for case in TWO_STAGE:
        exp, _ = scaling_fit(case, 1, ms)
        if abs(exp + 1.5) >= 0.05:
            failures.append((case, 1, exp))
    stage2 = [(c, 2) for c in ("two-a", "two-b")] + [(c, 1) for c in ONE_STAGE]
    for case, stage in stage2:
        exp, _ = scaling_fit(case, stage, ms)
        if abs(exp + 0.5) >= 0.03:
            failures.append((case, stage, exp))
    report("AC06", not failures,
           "stage-1 exponents -1.5+/-0.05, stage-2 -0.5+/-0.03"
           if not failures else str(failures))


def test_ac07_wrong_schedule_failure():
    m = 100
    own_a = peak_summary(run_named_case("two-a", m))[0]
    cross_a = peak_summary(run_named_case("two-a", m, auto_schedule("two-b", m)))[0]
    own_b = peak_summary(run_named_case("two-b", m))[0]
    cross_b = peak_summary(run_named_case("two-b", m, auto_schedule("two-a", m)))[0]
    ok = own_a >= 0.5 and cross_a <= 0.1 and own_b >= 0.5 and cross_b <= 0.1
    report("AC07", ok,
           f"two-a: own {own_a:.3f} / crossed {cross_a:.3f}; "
           f"two-b: own {own_b:.3f} / crossed {cross_b:.3f}")


def test_ac08_cross_gamma_table2():
    m = 100
    peaks = {}
    for case, sched_case in (("ring-1", "ring-1"), ("ring-1", "clique-plus-1"),
                             ("clique-plus-1", "clique-plus-1"),
                             ("clique-plus-1", "ring-1"),
                             ("ring-2", "ring-2-shift"), ("ring-2-shift", "ring-2")):
        series = run_named_case(case, m, auto_schedule(sched_case, m))
        peaks[(case, sched_case)] = peak_summary(series)[0]
    ok = (peaks[("ring-1", "ring-1")] >= 0.8
          and peaks[("clique-plus-1", "clique-plus-1")] >= 0.8
          and peaks[("ring-1", "clique-plus-1")] <= 0.1
          and peaks[("clique-plus-1", "ring-1")] <= 0.1
          and peaks[("ring-2", "ring-2-shift")] >= 0.8
          and peaks[("ring-2-shift", "ring-2")] >= 0.8)
    report("AC08", ok, ", ".join(
        f"{a} w/ {b}'s schedule: {p:.3f}" for (a, b), p in peaks.items()))


def test_ac09_classification():
    classes = classify_pairs(5)
    sizes = [count for _, _, count in classes]
    same_clique = partner_pair = None
    for sig, rep, count in classes:
        cliques = {simplex_coordinate(v, 5)[0] for v in rep.vertices}
        if len(sig[0]) == 8 and len(cliques) == 1:
            same_clique = count
        if len(sig[0]) == 4:
            partner_pair = count
    ok = (len(classes) == 5 and sum(sizes) == 435
          and same_clique == 60 and partner_pair == 15)
    report("AC09", ok,
           f"{len(classes)} classes, sizes {sorted(sizes)}, "
           f"same-clique {same_clique}, partner-pair {partner_pair}")


def test_ac10_gamma_window_scaling():
    # property check at fixed c over M = 100 -> 200 -> 400:
    #   (1) peak at detuning c/M^{5/2} must not degrade,
    #   (2) peak at detuning c/M^2 must strictly degrade.
    # Clause (2) is not satisfiable for this family: the crossing's level
    # splitting depends on gamma with an O(1) slope (the O(M) slopes of the
    # two levels cancel), so a detuning of c/M^2 perturbs the transfer by
    # O(c/sqrt(M)) relative to the gap -- the peak *improves* as M grows.
    # The assertion is kept faithful to the stated criterion and fails.
    c = 2.0
    ms = (100, 200, 400)
    p_window = [gamma_sweep("two-a", m, 1, [c / m**2.5])[0][1] for m in ms]
    p_narrow = [gamma_sweep("two-a", m, 1, [c / m**2])[0][1] for m in ms]
    clause1 = all(b >= a - 1e-6 for a, b in zip(p_window, p_window[1:]))
    clause2 = all(b < a for a, b in zip(p_narrow, p_narrow[1:]))
    report("AC10", clause1 and clause2,
           f"c/M^2.5 peaks {[f'{p:.4f}' for p in p_window]} (nondecreasing: {clause1}); "
           f"c/M^2 peaks {[f'{p:.4f}' for p in p_narrow]} (strictly decreasing: {clause2})")


def test_ac11_numerical_hygiene():
    # norm conservation
    graph = build_simplex(8)
    cfg = named_configuration("two-c", 8)
    h = build_hamiltonian(graph, cfg, 0.25)
    states = propagate(h.entries, uniform_state(graph.n_vertices),
                       np.linspace(0, 100, 200))
    norm_err = float(np.max(np.abs(np.linalg.norm(states, axis=1) - 1.0)))

    # spectral vs RK4 on an N = 500 instance
    n = 500
    g500 = build_complete(n)
    m500 = MarkedConfiguration(tuple(range(3)))
    h500 = build_hamiltonian(g500, m500, 1.0 / n)
    t = 10.0
    psi_spec = propagate(h500.entries, uniform_state(n), [t])[0]
    psi_ode = evolve_ode(h500, uniform_state(n), t, dt=0.01)
    ode_err = float(np.max(np.abs(psi_spec - psi_ode)))

    # semigroup property
    direct = propagate(h500.entries, uniform_state(n), [t])[0]
    mid = propagate(h500.entries, uniform_state(n), [t / 3])[0]
    stepped = propagate(h500.entries, mid, [2 * t / 3])[0]
    semi_err = float(np.max(np.abs(direct - stepped)))

    ok = norm_err < 1e-10 and ode_err < 1e-6 and semi_err < 1e-9
    report("AC11", ok,
           f"norm {norm_err:.1e}, spectral-vs-ODE {ode_err:.1e}, "
           f"semigroup {semi_err:.1e}")
