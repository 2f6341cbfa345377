"""Two programs that differ only in which urn the second branch draws from.

A fair coin picks a branch.  Each branch asks an adversary (a Knightian
urn) to choose between red and another colour.  When both branches consult
the same urn the adversary must commit to one answer before the coin is
seen, so fewer distributions over colours are possible.
"""

from impprob import corpus, denote, phi

for name in ("listing1", "listing2"):
    print(f"== {name}")
    print(corpus.source(name).strip())
    m = denote(corpus.source(name))
    print("grade:", m.grade)
    for row, colour in zip(m.matrix.entries, "rgb"):
        print(f"  {colour}:", "  ".join(f"{str(x):>3}" for x in row))
    # each column is one way the urns can be filled; the image is their hull
    print("extreme points:", [tuple(str(x) for x in p) for p in phi(m).extremes])
    print()

# Shared urn: the adversary picks "r" everywhere or "not r" everywhere,
# giving two extreme points.  Separate urns give four.
