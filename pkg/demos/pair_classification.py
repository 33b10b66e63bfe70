"""Every pair of marked vertices falls into one of five families.

Brute-force enumeration over all C(30,2) = 435 pairs on the M = 5 simplex,
grouped by the structure of their reduced invariant subspace.  The two
8-dimensional families are distinguished by whether the pair shares a
clique, and the 4-dimensional family is the partner pairs (the endpoints
of an inter-clique edge).
"""

from simplexsearch import classify_pairs, simplex_coordinate

M = 5
classes = classify_pairs(M)
print(f"M = {M}: {len(classes)} equivalence classes, "
      f"{sum(c for _, _, c in classes)} pairs total\n")
print("dim   count   representative          note")
for sig, rep, count in classes:
    coords = [simplex_coordinate(v, M) for v in rep.vertices]
    cliques = {i for i, _ in coords}
    partners = {(j, i) for i, j in coords} == set(coords)
    if len(sig[0]) == 4:
        note = "partner pair (inter-clique edge)"
    elif len(cliques) == 1:
        note = "same clique"
    elif partners:
        note = "never (structure rules it out)"
    else:
        note = "different cliques"
    pretty = ", ".join(f"{i}:{j}" for i, j in coords)
    print(f"{len(sig[0]):3d}   {count:5d}   {pretty:20s}    {note}")

print("\nThe class sizes are stable in M; only the cell sizes grow.")
