"""Classical and cover-restricted pattern containment."""

from gorenstein import contains, contains_restricted, embeddings, gorenstein_patterns

w = (3, 7, 1, 4, 8, 2, 6, 5)
print("classical embeddings of 31524 in", w)
for idx in embeddings((3, 1, 5, 2, 4), w):
    print("  positions", idx)

# restricted containment additionally asks for Bruhat covers in the host
for p in gorenstein_patterns():
    print(p, "restricted witness in w:", contains_restricted(w, p))
    print(p, "restricted witness in its own pattern:", contains_restricted(p.v, p))

print("contains 2143:", contains(w, (2, 1, 4, 3)))
