"""Bijective maps, their paths and cycles, and component-types."""
from bijfact import BijectiveMap, ComponentType, canonical_map, component_type, decompose, types_of

# A = {1,2,3,4}, B = {2,3,5,6}
f = BijectiveMap({1: 6, 2: 3, 3: 2, 4: 5})
for comp in decompose(f):
    print(comp.kind, comp, "size", comp.size)
print("component-type:", component_type(f))  # L=1,1;M=2

# paths always run from A - B into B - A
print("paths:", sum(c.kind == "path" for c in decompose(f)), "=", len(f.domain - f.codomain))

# a fixed representative for each type; labels 1, 2, ... end the paths
for text in ["L=1,1;M=2", "L=2,2;M=-", "L=-;M=5"]:
    D = canonical_map(ComponentType.parse(text))
    print(text, "->", D)

# how many types of size 6 have at least two paths
print(sum(1 for _ in types_of(6, min_paths=2)), "types of size 6 with two or more paths")
