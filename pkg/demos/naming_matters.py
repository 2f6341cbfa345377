"""Named choice is commutative; unnamed choice is not.

The same program is evaluated two ways.  The named semantics produces a
graded matrix and does not care in which order independent bindings run.
The unnamed semantics treats every knight as the whole simplex, and the
result depends on whether the coin is tossed before the adversary moves.
"""

from impprob import corpus, elaborate_cp, elaborate_imp, infer, parse, phi
from impprob.lang.laws import programs_equal

src = corpus.source("shared_urn")
tt = infer(parse(src))
print(src.strip())
print()

named = phi(elaborate_imp(tt))
print("named:           ", named)
for order in ("left", "right"):
    print(f"unnamed, {order:<5}:  ", elaborate_cp(tt, order).images[0])

swapped = parse("z <- bernoulli ; x <- knight(a1) ;"
                " if z then (if x then r else g) else (if x then r else b)")
print()
print("named semantics equal after swapping the first two lines:",
      programs_equal(tt.term, swapped))
