import pytest

import freeknots as fk


def test_diagram_round_trip():
    d = fk.Diagram("1 2 1 2")
    assert str(d) == "1 2 1 2"
    assert d.component_count == 1
    assert d.crossing_count == 2
    assert d.is_pure("1")


def test_malformed_input_raises_with_code():
    with pytest.raises(fk.FreeKnotsError) as info:
        fk.Diagram("1 2 1")
    assert info.value.code == "OccurrenceCountNotTwo"


def test_parity_of_odd_chord():
    parities = fk.gaussian_parities(fk.Diagram("1 2 3 1 2 3"))
    assert parities == {"1": 0, "2": 0, "3": 0}
    parities = fk.gaussian_parities(fk.Diagram("1 2 1 2"))
    assert set(parities.values()) == {1}


def test_bracket_reduces_two_chord_knot():
    assert fk.bracket(fk.Diagram("1 2 1 2")) == ["()"]
    assert fk.bracket(fk.Diagram("1 2 3 1 2 3")) == ["()"]


def test_moves_are_descriptions_and_results():
    results = fk.moves(fk.Diagram("1 1"))
    assert len(results) == 1
    description, after = results[0]
    assert "R1" in description
    assert after.crossing_count == 0


def test_split_certificates():
    assert fk.certified_nonsplit(fk.Diagram("1 / 1"), (6, 2, 20000))[0] == "nonsplit"
    assert fk.certified_nonsplit(fk.Diagram("a b / b a"), (6, 2, 20000))[0] == "split"


def test_equivalence_verdicts():
    v = fk.bounded_equiv(fk.Diagram("1 2 1 2"), fk.Diagram("()"), (6, 3, 10000))
    assert v["outcome"] == "equivalent"
    v = fk.bounded_equiv(fk.Diagram("1 / 1"), fk.Diagram("() / ()"), (6, 3, 10000))
    assert v["outcome"] == "distinct"


def test_delta_of_trefoil_shadow_vanishes():
    v = fk.turaev_delta(fk.Diagram("1 2 3 1 2 3"), budget=(8, 2, 20000))
    assert v["terms"] == []
    assert v["undecided"] == 0
    assert len(v["summands"]) == 3


def test_projection_matches_covering():
    d = fk.Diagram("a b c a d c b d")
    assert fk.projection_Kprime(d).canonical() == fk.kprime_from_k2(d).canonical()
