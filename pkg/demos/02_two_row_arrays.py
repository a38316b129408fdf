"""Two-row arrays with a fixed diagonal, and block transpositions."""
from bijfact import (
    classify_transposition,
    diagonal,
    enumerate_arrays,
    from_top_and_diagonal,
    parse_map,
    transpose,
)

D = parse_map("6->1; 5->2; (3 4)")

# fixing the top row and the diagonal determines the bottom row
psi = from_top_and_diagonal((1, 2, 3, 4), D)
print(psi)                                   # 1 2 3 4 / 5 4 3 6
print(diagonal(psi) == D)                    # True
print(diagonal(psi).compose(psi.vertical) == psi.horizontal)  # the long cycle on the top row

# all (4-1)! arrays anchored at 1, with the number of vertical components
for array, k in enumerate_arrays(D, 1):
    print(array, " components:", k)

# swapping blocks [s_1..s_1] and [s_2..s_2] keeps the diagonal and merges three components into two
out = transpose(psi, (1, 1, 2))
print(out, diagonal(out) == D)
eff = classify_transposition(psi, (1, 1, 2))
print(eff.pattern, "change", eff.delta)
