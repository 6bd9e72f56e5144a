"""Diagram front end: parsing, crossing signs, linking matrices."""

from __future__ import annotations

import random

import pytest

from acsl import (
    AmbiguousDiagram,
    Diagram,
    DiagramError,
    FramedLink,
    PDError,
    crossing_sign,
    crossing_signs,
    linking_matrix,
    mirror_diagram,
    parse_pd,
    reverse_component_diagram,
    validate,
)
from helpers import CLASP_SIGNS, insert_clasp, linking_by_over_strand, random_edge

POSITIVE_HOPF = "X(4,1,3,2) X(1,4,2,3) C: 1 2; 3 4"
NEGATIVE_HOPF = "X(1,4,2,3) X(3,2,4,1) C: 1 2; 3 4"
TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) C: 1 2 3 4 5 6"
KINKED_HOPF = "X(4,1,3,6) X(1,4,2,3) X(2,6,5,5) C: 1 2 5 6; 3 4"


def test_parse_positive_hopf():
    d = parse_pd(POSITIVE_HOPF)
    assert d.n_components == 2
    assert len(d.crossings) == 2
    assert crossing_signs(d) == (1, 1)
    assert linking_matrix(d, [0, 0]).linking == ((0, 1), (1, 0))


def test_parse_negative_hopf():
    # Same crossings mirrored: the unique consistent over-strand
    # orientation makes both signs negative.
    d = parse_pd(NEGATIVE_HOPF)
    assert crossing_signs(d) == (-1, -1)
    assert linking_matrix(d, [0, 0]).linking == ((0, -1), (-1, 0))


def test_crossing_sign_matches_over_strand_count():
    for text in (POSITIVE_HOPF, NEGATIVE_HOPF, KINKED_HOPF):
        d = parse_pd(text)
        fl = linking_matrix(d, [0] * d.n_components)
        total = linking_by_over_strand(d, 0, 1) + linking_by_over_strand(d, 1, 0)
        assert fl.linking[0][1] * 2 == total
        # each over-strand count alone already equals the linking number
        assert linking_by_over_strand(d, 0, 1) == fl.linking[0][1]


def test_parse_unknot_without_crossings():
    d = parse_pd("C: 1")
    assert d.crossings == ()
    assert linking_matrix(d, [5]).linking == ((5,),)


def test_parse_arity_error():
    with pytest.raises(PDError):
        parse_pd("X(1,2,3) C: 1 2")


def test_parse_requires_component_block():
    with pytest.raises(PDError):
        parse_pd("X(1,4,2,3) X(3,2,4,1)")


def test_parse_bad_token():
    with pytest.raises(PDError):
        parse_pd("Y(1,2,3,4) C: 1 2")
    with pytest.raises(PDError):
        parse_pd("X(1,1,2,2) C: 1 two")
    with pytest.raises(PDError):
        parse_pd("C: 0")
    with pytest.raises(PDError):
        parse_pd("C: -3")


def test_kinks():
    positive = parse_pd("X(1,1,2,2) C: 1 2")
    assert crossing_signs(positive) == (1,)
    assert linking_matrix(positive, "blackboard").linking == ((1,),)
    negative = parse_pd("X(1,2,2,1) C: 1 2")
    assert crossing_signs(negative) == (-1,)
    assert linking_matrix(negative, "blackboard").linking == ((-1,),)


def test_trefoil_signs_all_equal():
    d = parse_pd(TREFOIL)
    signs = crossing_signs(d)
    assert signs == (-1, -1, -1)
    assert linking_matrix(d, "blackboard").linking == ((-3,),)


def test_crossing_sign_index_error():
    d = parse_pd(POSITIVE_HOPF)
    assert crossing_sign(d, 0) == 1
    with pytest.raises(IndexError):
        crossing_sign(d, 2)


def test_mirror_negates_all_signs():
    for text in (POSITIVE_HOPF, TREFOIL, KINKED_HOPF):
        d = parse_pd(text)
        mirrored = mirror_diagram(d)
        assert crossing_signs(mirrored) == tuple(-s for s in crossing_signs(d))


def test_reverse_component_flips_row_and_column():
    d = parse_pd(KINKED_HOPF)
    fl = linking_matrix(d, "blackboard")
    rev = reverse_component_diagram(d, 0)
    fl_rev = linking_matrix(rev, "blackboard")
    assert fl_rev.linking[0][1] == -fl.linking[0][1]
    assert fl_rev.linking[0][0] == fl.linking[0][0]
    assert fl_rev.linking[1][1] == fl.linking[1][1]
    # double reversal restores the original diagram's matrix
    back = reverse_component_diagram(rev, 0)
    assert linking_matrix(back, "blackboard").linking == fl.linking


def test_split_union_framings():
    d = parse_pd("C: 1; 2")
    fl = linking_matrix(d, [3, -2])
    assert fl.linking == ((3, 0), (0, -2))
    assert fl.charges == (0, 0)
    assert fl.roles == ("observed", "observed")


def test_framing_vector_validation():
    d = parse_pd(POSITIVE_HOPF)
    with pytest.raises(DiagramError):
        linking_matrix(d, [0])
    with pytest.raises(DiagramError):
        linking_matrix(d, "chalkboard")


def test_edge_count_validation():
    with pytest.raises(DiagramError):
        parse_pd("X(4,1,3,2) C: 1 2; 3 4")  # labels appear once only
    with pytest.raises(DiagramError):
        parse_pd("X(1,1,2,2) C: 1 2; 3 4")  # 2-edge component off all crossings


def test_odd_crossing_parity_rejected():
    with pytest.raises(DiagramError):
        parse_pd("X(1,3,2,4) C: 1 2; 3 4")


def test_ambiguous_over_strand_rejected():
    # a two-edge component that is the over-strand at both crossings
    with pytest.raises(AmbiguousDiagram):
        parse_pd("X(3,1,4,2) X(4,2,3,1) C: 1 2; 3 4")


def test_undeclared_edge_rejected():
    with pytest.raises(DiagramError):
        parse_pd("X(4,1,3,2) X(1,4,2,3) C: 1 2; 3 9")


def test_validate_framed_link():
    fl = FramedLink.make([[0, 1], [1, 0]])
    assert validate(fl) is fl
    with pytest.raises(DiagramError):
        FramedLink.make([[0, 1], [2, 0]])
    with pytest.raises(DiagramError):
        FramedLink.make([[0, 1]])
    with pytest.raises(DiagramError):
        FramedLink.make([[0.5]])


def test_validate_surgery_charge_warning():
    with pytest.warns(UserWarning):
        FramedLink.make([[0]], charges=[5], roles=["surgery"])


def test_clasp_templates():
    base = parse_pd(POSITIVE_HOPF)
    for kind, signs in CLASP_SIGNS.items():
        out = insert_clasp(base, over_edge=1, under_edge=3, kind=kind)
        assert crossing_signs(out)[-2:] == signs
        delta = {"r2+": 0, "r2-": 0, "hopf+": 1, "hopf-": -1}[kind]
        assert linking_matrix(out, [0, 0]).linking[0][1] == 1 + delta


def test_chain_link_from_clasps():
    d = Diagram((), ((1,), (2,), (3,)))
    d = insert_clasp(d, over_edge=1, under_edge=2, kind="hopf+")
    d = insert_clasp(d, over_edge=3, under_edge=random_edge(random.Random(0), d, 1), kind="hopf+")
    fl = linking_matrix(d, "blackboard")
    assert fl.linking == ((0, 1, 0), (1, 0, 1), (0, 1, 0))


def test_r2_insertions_preserve_linking_matrix():
    rng = random.Random(2024)
    base = parse_pd(POSITIVE_HOPF)
    reference = linking_matrix(base, [0, 0]).linking
    for _ in range(1000):
        d = base
        for _ in range(rng.randint(1, 4)):
            over_comp = rng.randrange(2)
            under_comp = 1 - over_comp
            d = insert_clasp(
                d,
                over_edge=random_edge(rng, d, over_comp),
                under_edge=random_edge(rng, d, under_comp),
                kind=rng.choice(["r2+", "r2-"]),
            )
        fl = linking_matrix(d, [0, 0])
        assert fl.linking == reference
        assert fl.linking[0][1] == linking_by_over_strand(d, 0, 1)


def test_matrix_always_symmetric_integer():
    rng = random.Random(7)
    d = parse_pd(POSITIVE_HOPF)
    for _ in range(50):
        over = random_edge(rng, d, rng.randrange(2))
        under = random_edge(rng, d, rng.randrange(2))
        if over == under:
            continue
        d = insert_clasp(d, over, under, kind=rng.choice(list(CLASP_SIGNS)))
        fl = linking_matrix(d, "blackboard")
        assert fl.linking == tuple(zip(*fl.linking))
