import xml.etree.ElementTree as ET
from fractions import Fraction as F
from pathlib import Path

import pytest

from impprob import corpus
from impprob.bridge import phi
from impprob.credal import CredalSet, unit
from impprob.errors import DimensionError
from impprob.lang import denote
from impprob.plot import barycentric, polygon_vertices, render_svg

GOLDEN = Path(__file__).parent / "golden"
NS = {"s": "http://www.w3.org/2000/svg"}
H = F(1, 2)

# canvas positions worked out by hand: origin (150, 240), scale 120, height 433/250
R_CORNER = (150.0, 32.16)
GB_MID = (150.0, 240.0)
RG_MID = (90.0, 136.08)
RB_MID = (210.0, 136.08)


def polygons(svg_text):
    root = ET.fromstring(svg_text)
    out = {}
    for poly in root.findall("s:polygon", NS):
        pts = [tuple(float(v) for v in p.split(",")) for p in poly.get("points").split()]
        out[poly.get("class")] = pts
    return root, out


def same_cycle(a, b):
    return len(a) == len(b) and any(a[i:] + a[:i] == b for i in range(len(a)))


def render(name):
    return render_svg(phi(denote(corpus.source(name))), title=name)


@pytest.mark.parametrize("name", ["listing1", "listing2"])
def test_matches_golden_file(name):
    assert render(name) == (GOLDEN / f"{name}.svg").read_text()


def test_listing_polygons_by_hand():
    _, p1 = polygons(render("listing1"))
    assert sorted(p1["credal"]) == sorted([R_CORNER, GB_MID])
    _, p2 = polygons(render("listing2"))
    assert same_cycle(p2["credal"], [RG_MID, GB_MID, RB_MID, R_CORNER])


def test_vertices_are_barycentric_images_to_six_places():
    S = phi(denote(corpus.source("listing2")))
    _, polys = polygons(render_svg(S))
    expected = {(round(150 + 120 * float(x), 6), round(240 - 120 * float(y), 6))
                for x, y in (barycentric(p) for p in S.extremes)}
    assert set(polys["credal"]) == expected


def test_corners_and_labels():
    root, polys = polygons(render_svg(CredalSet.simplex(3)))
    assert polys["simplex"] == [R_CORNER, (30.0, 240.0), (270.0, 240.0)]
    assert sorted(polys["credal"]) == sorted(polys["simplex"])
    labels = [t.text for t in root.findall("s:text", NS)]
    assert labels == ["r", "g", "b"]


def test_singleton_is_a_point():
    root, polys = polygons(render_svg(unit(2, 3)))
    assert "credal" not in polys
    circles = root.findall("s:circle", NS)
    assert [(float(c.get("cx")), float(c.get("cy"))) for c in circles] == [(30.0, 240.0)]


def test_exact_coordinates_and_order():
    assert barycentric((H, H, 0)) == (-H, F(433, 500))
    pts = polygon_vertices(CredalSet([(1, 0, 0), (0, 1, 0), (0, 0, 1), (F(1, 3),) * 3]))
    assert len(pts) == 3
    # counter-clockwise in triangle coordinates means clockwise on the flipped canvas
    area = sum(a[0] * b[1] - b[0] * a[1] for a, b in zip(pts, pts[1:] + pts[:1]))
    assert area < 0


def test_only_three_outcomes():
    with pytest.raises(DimensionError):
        render_svg(CredalSet.simplex(2))
