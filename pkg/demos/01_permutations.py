"""Length, descents, Bruhat covers and descent subwords of a permutation."""

from gorenstein import Permutation, covers, descent_subword, descents, flatten, length

w = Permutation.parse("3 1 4 9 7 2 6 5 8")
print("w =", w)
print("length:", length(w))
print("descents:", descents(w))
print("covers:", covers(w))

# each descent has a Grassmannian subword; flattening makes it a permutation
for d in descents(w):
    idx, values = descent_subword(w, d)
    print(f"descent {d}: positions {idx} values {values} -> {flatten(values)}")
