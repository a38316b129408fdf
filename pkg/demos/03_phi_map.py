"""The two-to-one map from maximal arrays to arrays with one component fewer."""
from bijfact import ComponentType, canonical_map, enumerate_arrays, phi, preimages_direct, preimages_oracle

D = canonical_map(ComponentType.parse("L=2,1;M=2"))
top = ComponentType.parse("L=2,1;M=2").max_components

fibers = {}
for psi, k in enumerate_arrays(D, 1):
    if k == top:
        image, case = phi(psi, D)
        fibers.setdefault(image, []).append(psi)
        print(psi, "->", image, case.tag, "m =", case.m)

print()
print(len(fibers), "images;", "largest fiber", max(map(len, fibers.values())))

# the preimages can be recovered from the image alone
image = next(iter(fibers))
print(preimages_direct(image, D) == preimages_oracle(image, D) == set(fibers[image]))
