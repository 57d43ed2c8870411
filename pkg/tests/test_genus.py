import random

import pytest

from qgenus.forms import QuadForm, enumerate_reduced_forms
from qgenus.genus import (
    assigned_characters,
    buell_lift,
    character_vector,
    genus_count_ratio,
    genus_partition,
    num_genera,
    phi_correspondence,
    psi_lift,
    represented_coprime_residues,
    residue_partition,
    smallest_coprime_value,
    smallest_coprime_values,
    theorem1_parameters,
)

from helpers import random_reduced_form


def labels(delta):
    return [c.label for c in assigned_characters(delta)]


def test_assigned_characters_examples():
    assert labels(-20) == ["(r/5)", "(-1/r)"]
    assert set(labels(-180)) == {"(r/3)", "(r/5)", "(-1/r)"}
    assert labels(-63) == ["(r/3)", "(r/7)"]
    assert labels(-4) == ["(-1/r)"]
    assert labels(-8) == ["(-2/r)"]
    assert labels(-24) == ["(r/3)", "(2/r)"]
    assert labels(-32) == ["(-1/r)", "(2/r)"]
    assert labels(-16) == ["(-1/r)"]
    assert labels(-2300) == ["(r/5)", "(r/23)"]


def test_num_genera_matches_partition():
    for delta in range(-3, -400, -1):
        if delta % 4 in (0, 1):
            assert genus_partition(delta).num_genera == num_genera(delta)


def test_represented_coprime_residues_examples():
    assert represented_coprime_residues((1, 0, 5), 20, 10) == {1, 9}
    assert represented_coprime_residues((2, 2, 3), 20, 10) == {3, 7}
    assert represented_coprime_residues((1, 1, 1), 1, 1) == {0}


def test_represented_residues_monotone_in_bound():
    f = (3, 2, 8)
    small = represented_coprime_residues(f, 92, 4)
    large = represented_coprime_residues(f, 92, 12)
    assert small <= large


def test_smallest_coprime_value():
    assert smallest_coprime_value((1, 0, 5), 2 * -20) == 1
    assert smallest_coprime_value((2, 2, 3), 2 * -20) == 3
    # (2,1,8) of -63 must skip even values and multiples of 3, 7
    v = smallest_coprime_value((2, 1, 8), 2 * -252)
    assert v == 11
    vals = smallest_coprime_values((1, 0, 5), 40, count=3)
    assert vals == sorted(vals) and len(set(vals)) == 3


def test_character_vector_examples():
    # canonical character order for -180 is (r/3), (r/5), (-1/r)
    assert character_vector(QuadForm(1, 0, 45)) == (1, 1, 1)
    assert character_vector(QuadForm(2, 2, 23)) == (-1, -1, -1)
    assert character_vector(QuadForm(7, 4, 7)) == (1, -1, -1)
    assert character_vector(QuadForm(8, 6, 9)) == (-1, 1)


def test_character_vector_invariant_under_value_choice():
    # five distinct represented coprime values give the same vector
    for delta in range(-3, -401, -1):
        if delta % 4 not in (0, 1):
            continue
        chars = assigned_characters(delta)
        for f in enumerate_reduced_forms(delta):
            values = smallest_coprime_values(f, 2 * delta, count=5)
            vecs = {tuple(chi(r) for chi in chars) for r in values}
            assert len(vecs) == 1, (delta, f, values)


def test_genus_partition_minus20():
    part = genus_partition(-20)
    assert part.num_genera == 2
    assert part.genera[0].vector == (1, 1)
    assert part.genera[0].forms == (QuadForm(1, 0, 5),)
    assert part.genera[1].vector == (-1, -1)
    assert part.genera[1].forms == (QuadForm(2, 2, 3),)


def test_genus_partition_minus92_and_minus2300():
    part = genus_partition(-92)
    assert part.num_genera == 1
    assert set(part.genera[0].forms) == {QuadForm(1, 0, 23), QuadForm(3, 2, 8), QuadForm(3, -2, 8)}
    part = genus_partition(-2300)
    assert part.num_genera == 2
    assert all(len(g.forms) == 9 for g in part.genera)


def test_genus_count_ratio_table():
    assert genus_count_ratio(-20, 3) == 2
    assert genus_count_ratio(-4, 2) == 1
    assert genus_count_ratio(-92, 5) == 2
    assert genus_count_ratio(-3, 3) == 1  # odd p dividing delta
    assert genus_count_ratio(-3, 2) == 1  # p = 2, delta odd
    assert genus_count_ratio(-12, 2) == 2  # delta = 4 (mod 16)
    assert genus_count_ratio(-8, 2) == 2  # delta = 8 (mod 16)
    assert genus_count_ratio(-20, 2) == 1  # delta = 12 (mod 16)
    assert genus_count_ratio(-32, 2) == 1  # delta = 0 (mod 32)
    assert genus_count_ratio(-16, 2) == 2  # delta = 16 (mod 32)


def test_genus_count_ratio_matches_partitions():
    for delta in range(-3, -200, -1):
        if delta % 4 not in (0, 1):
            continue
        for p in (2, 3, 5, 7):
            want = genus_count_ratio(delta, p)
            got = genus_partition(delta * p * p).num_genera // genus_partition(delta).num_genera
            assert want == got, (delta, p)


def test_phi_correspondence_minus20_p3():
    part_lo, part_hi, mapping = phi_correspondence(-20, 3)
    by_form = {G.forms[0]: part_lo.genera[mapping[i]].forms[0]
               for i, G in enumerate(part_hi.genera)}
    assert by_form[QuadForm(1, 0, 45)] == (1, 0, 5)
    assert by_form[QuadForm(5, 0, 9)] == (1, 0, 5)
    assert by_form[QuadForm(7, 4, 7)] == (2, 2, 3)
    assert by_form[QuadForm(2, 2, 23)] == (2, 2, 3)
    # fibers have size v(delta p^2) / v(delta)
    from collections import Counter

    fibers = Counter(mapping.values())
    assert set(fibers.values()) == {2}


def test_phi_correspondence_total_map():
    for delta, p in [(-92, 5), (-63, 2), (-7, 3), (-28, 3), (-15, 2), (-40, 3)]:
        part_lo, part_hi, mapping = phi_correspondence(delta, p)
        assert set(mapping) == set(range(part_hi.num_genera))
        fiber = part_hi.num_genera // part_lo.num_genera
        from collections import Counter

        assert set(Counter(mapping.values()).values()) == {fiber}


def test_buell_lift_examples():
    assert buell_lift((1, 0, 23), 5) == [
        (1, 0, 575), (25, 0, 23), (25, 10, 24), (25, 20, 27), (25, 30, 32), (25, 40, 39)]
    assert buell_lift((1, 1, 1), 2) == [(1, 2, 4), (4, 2, 1), (4, 6, 3)]
    rng = random.Random(1)
    for _ in range(50):
        f = random_reduced_form(rng, 5000)
        if f.content() != 1:
            continue
        for p in (2, 3, 5):
            for g in buell_lift(f, p):
                assert g.disc == f.disc * p * p


def test_psi_lift_paper_sets():
    part = genus_partition(-2300)
    G1, G2 = part.genera
    want = {
        ((1, 0, 23), 0): {(1, 0, 575), (24, 10, 25), (24, -10, 25)},
        ((1, 0, 23), 1): {(23, 0, 25), (25, 20, 27), (25, -20, 27)},
        ((3, 2, 8), 0): {(9, 2, 64), (16, -14, 39), (24, -22, 29)},
        ((3, 2, 8), 1): {(3, -2, 192), (8, 6, 73), (13, 12, 47)},
    }
    for (f, gi), expected in want.items():
        members = set(psi_lift(f, part.genera[gi], 5).members)
        assert members == {QuadForm(*t) for t in expected}, (f, gi)
    # disjointness of lift sets from different source classes
    a = set(psi_lift((1, 0, 23), G1, 5).members)
    b = set(psi_lift((3, 2, 8), G1, 5).members)
    assert not (a & b)


def test_psi_lift_deduplicates_classes():
    part = genus_partition(-12)
    lift = psi_lift((1, 1, 1), part.genera[0], 2)
    assert lift.members == (QuadForm(1, 0, 3),)


def test_psi_lift_can_be_empty():
    part = genus_partition(-252)
    G2 = part.genera[1]
    assert psi_lift((1, 1, 16), G2, 2).members == ()


def test_theorem1_parameters():
    assert theorem1_parameters(-3) == 0
    assert theorem1_parameters(-15) == 0
    assert theorem1_parameters(-20) == 1
    assert theorem1_parameters(-8) == 1
    assert theorem1_parameters(-112) == 2
    assert theorem1_parameters(-48) == 2
    assert theorem1_parameters(-64) == 2


def test_residue_oracle_agrees_with_characters():
    for delta in range(-3, -151, -1):
        if delta % 4 in (0, 1):
            cells = sorted(tuple(g.forms) for g in genus_partition(delta).genera)
            assert cells == sorted(residue_partition(delta)), delta


def test_bad_discriminant_rejected():
    with pytest.raises(ValueError):
        genus_partition(-5)
    with pytest.raises(ValueError):
        assigned_characters(10)
