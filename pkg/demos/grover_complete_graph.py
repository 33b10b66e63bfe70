"""Search on the complete graph: the critical jumping rate in action.

Runs the N = 1024, k = 4 instance at the critical jumping rate 1/N and at
twice that value.  At the critical rate the success probability reaches 1
at t = (pi/2) sqrt(N/k) = 8 pi; off the critical rate the walk never finds
the marked vertices.
"""

import numpy as np

from simplexsearch import (MarkedConfiguration, build_complete,
                           build_hamiltonian, evolve_spectral,
                           predict_complete, uniform_state)

N, K = 1024, 4
graph = build_complete(N)
marked = MarkedConfiguration(tuple(range(K)))
gamma_c, gap, runtime = predict_complete(N, K)
print(f"N = {N}, k = {K}")
print(f"critical jumping rate gamma_c = 1/N = {gamma_c:.6g}")
print(f"predicted gap 2 sqrt(k/N) = {gap:.6g}, runtime pi/gap = {runtime:.4f}")
print(f"(8 pi = {8 * np.pi:.4f})\n")

times = np.linspace(0.0, 50.0, 1000)
for label, gamma in (("gamma = gamma_c  ", gamma_c), ("gamma = 2 gamma_c", 2 * gamma_c)):
    h = build_hamiltonian(graph, marked, gamma)
    series = evolve_spectral(h, uniform_state(N), times)
    i = int(np.argmax(series.success_probability))
    print(f"{label}: peak P = {series.success_probability[i]:.6f} "
          f"at t = {series.times[i]:.3f}")

print("\nThe walk is exquisitely sensitive to gamma: doubling it keeps the")
print("success probability below 0.05 for all time.")
