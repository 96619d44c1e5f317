"""The exact matrix layer: incidence, cardinality, Gram identity, kernels.

Everything here is integer or rational arithmetic; no tolerances involved.
"""

from pathlib import Path

from hyperline import (
    Hypergraph,
    adjacency_matrix,
    cardinality_matrix,
    exact_kernel,
    exact_rank,
    gram_identity_check,
    incidence_matrix,
    line_multigraph,
    matrix_vector,
    parse_path,
)

DATA = Path(__file__).parent / "data"

h = parse_path(DATA / "trio.hg")
b = incidence_matrix(h)
print("incidence matrix B (vertices x edges):")
print(b.to_text())

# B^T B splits into the diagonal of edge sizes plus the line adjacency:
# diagonal entries count |e_i|, off-diagonal entries count |e_i & e_j|.
gram = b.transpose() @ b
print("B^T B:")
print(gram.to_text())
print("cardinality diagonal:", [cardinality_matrix(h).at(i, i) for i in range(h.m)])
print("line adjacency:")
print(adjacency_matrix(line_multigraph(h).graph).to_text())
assert gram_identity_check(h)
print("gram identity: exact")

# Incidence kernels distinguish even from odd cycles: the alternating
# +1/-1 vector around an even cycle sums to zero at every vertex.
c4 = parse_path(DATA / "c4.hg")
basis = exact_kernel(incidence_matrix(c4))
print("\nC4 incidence kernel basis:", [[int(x) for x in v.entries] for v in basis])
for vec in basis:
    assert matrix_vector(incidence_matrix(c4), vec).is_zero()

c3 = Hypergraph.from_edges([[0, 1], [1, 2], [2, 0]])
print("C3 incidence kernel basis:", exact_kernel(incidence_matrix(c3)))
print("C3 incidence rank:", exact_rank(incidence_matrix(c3)), "(full column rank)")
