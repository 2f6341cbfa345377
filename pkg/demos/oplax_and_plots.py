"""Composing images loses information, and what the loss looks like.

``R`` sends a graded map to the credal set of each input.  Composing the
images of two stages lets the second stage's urn react to the first
stage's outcome, so ``R(g . f)`` can be strictly smaller than
``R(g) . R(f)``.  The script prints both sides and draws each listing's
image as an SVG triangle into the current directory.
"""

from pathlib import Path

from impprob import check_oplax, corpus, denote, phi, star_compose
from impprob.lang import BOOL
from impprob.plot import render_svg

coin = denote(corpus.source("coin"))
second = denote(corpus.source("branch_on_coin"), [("z", BOOL)])

rep = check_oplax(second, coin)
print("R(g . f)     :", rep.lhs.images[0])
print("R(g) . R(f)  :", rep.rhs.images[0])
print("strict       :", rep.strict)

# Giving every intermediate value its own copy of the urns recovers the
# right-hand side as the image of a single graded map.
star = star_compose(second, coin)
print("star grade   :", star.grade)
print("image(g * f) :", phi(star))

for name in ("listing1", "listing2"):
    out = Path(f"{name}.svg")
    out.write_text(render_svg(phi(denote(corpus.source(name))), title=name))
    print("wrote", out)
