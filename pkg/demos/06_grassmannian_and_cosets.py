"""Partitions in a rectangle, inner corners, partial flags and matrix Schubert varieties."""

from gorenstein import (
    Composition, frak_I, grassmannian_from_partition, grassmannian_partition, is_gorenstein,
    is_smooth, matrix_schubert_embed, min_coset_rep,
)
from gorenstein.verdicts import coset_gorenstein

for parts in [(6, 5, 5, 3, 2), (6, 5, 4, 3, 2), (7, 7, 2, 2, 2)]:
    v = grassmannian_from_partition(parts, 5, 7)
    lam = grassmannian_partition(v)
    print(parts, "->", v, "corners", lam.distances, frak_I(v),
          "gorenstein", is_gorenstein(v), "smooth", is_smooth(v))

blocks = Composition.from_blocks([2, 2])
print("minimal representative of 4321 for blocks 2,2:", min_coset_rep((4, 3, 2, 1), blocks))
print("coset Gorenstein:", coset_gorenstein((4, 3, 2, 1), blocks))

v = (1, 3, 4, 6, 2, 5)
print("matrix Schubert embedding of", v, "->", matrix_schubert_embed(v),
      "gorenstein", is_gorenstein(matrix_schubert_embed(v)))
