from fractions import Fraction

import pytest

from ktiling.errors import EmptySearchSpace
from ktiling.search import SearchGrid, SearchSpec, candidate_bases, count_candidates, search_lattice_k_tilings, target_det

from conftest import V, load


def test_default_grid_size():
    _, P, _ = load("d8_lemma3")
    spec = SearchSpec(P, 2)
    assert count_candidates(spec) == 1170
    assert str(SearchGrid()) == "a=1/2:5:1/2,b=-2:2:1/2,c=-3:3:1/2"


def test_candidates_satisfy_determinant():
    _, P, _ = load("d8_lemma3")
    spec = SearchSpec(P, 4, SearchGrid.parse("a=1:2:1/2,b=-1:1:1,c=0:1:1"))
    bases = list(candidate_bases(spec))
    assert len(bases) == count_candidates(spec) == 18
    assert all(L.signed_det == target_det(spec) == 5 for L in bases)


def test_grid_parse():
    g = SearchGrid.parse("a=2, c=-1:1:1/3")
    assert g.a.values() == [2]
    assert len(g.c.values()) == 7
    with pytest.raises(ValueError):
        SearchGrid.parse("z=1:2:1")


def test_empty_space():
    _, P, _ = load("d8_lemma3")
    with pytest.raises(EmptySearchSpace):
        search_lattice_k_tilings(SearchSpec(P, 5, SearchGrid.parse("a=-2:0:1")))


def test_finds_known_fivefold_lattice():
    _, P, _ = load("d8_lemma3")
    hits = search_lattice_k_tilings(SearchSpec(P, 5, SearchGrid.parse("a=2,b=0,c=3/2")))
    assert len(hits) == 1
    assert hits[0].lattice.u2 == V(Fraction(3, 2), 2)
    assert hits[0].report.is_tiling


def test_finds_square_lattice_for_decagon():
    _, P, _ = load("d10_lemma4")
    hits = search_lattice_k_tilings(SearchSpec(P, 5, SearchGrid.parse("a=1,b=0,c=0")))
    assert len(hits) == 1


def test_coset_search_finds_twofold_square():
    _, P, _ = load("unit_square")
    hits = search_lattice_k_tilings(SearchSpec(P, 2, SearchGrid.parse("a=1,b=0,c=0"), r=2))
    # every half-integer second offset stacks two one-fold tilings
    assert len(hits) == 4
    assert all(h.report.is_tiling and len(h.offsets) == 2 for h in hits)


def test_progress_callback():
    _, P, _ = load("d8_lemma3")
    seen = []
    search_lattice_k_tilings(SearchSpec(P, 2, SearchGrid.parse("a=1:2:1,b=0,c=0")), lambda i, n: seen.append((i, n)))
    assert seen == [(1, 2), (2, 2)]


def _same_lattice(L, M):
    return all(c.denominator == 1 for u in (M.u1, M.u2) for c in L.coords(u)) and abs(L.signed_det) == abs(M.signed_det)


def test_hits_are_the_lattice_and_its_mirror():
    from ktiling.coverage import verify_k_fold
    from ktiling.lattice import Lattice, TranslateMultiset

    _, P, X = load("d8_lemma3")
    hits = search_lattice_k_tilings(SearchSpec(P, 5, SearchGrid.parse("a=2,b=0,c=-3:3:1/2")))
    cs = sorted(h.lattice.u2.x for h in hits)
    assert cs == [Fraction(n, 2) for n in (-5, -3, -1, 1, 3, 5)]
    mirror = Lattice(V(2, 0), V(Fraction(1, 2), 2))
    for h in hits:
        assert _same_lattice(h.lattice, X.lattice) or _same_lattice(h.lattice, mirror)
        assert verify_k_fold(P, TranslateMultiset(h.lattice), 5).is_tiling


@pytest.mark.parametrize("name", ["d10_lemma4", "d8prime_grs"])
@pytest.mark.parametrize("k", [2, 3, 4])
def test_no_small_k_lattice_on_a_small_grid(name, k):
    _, P, _ = load(name)
    grid = SearchGrid.parse("a=1/2:2:1/2,b=-1:1:1/2,c=-1:1:1/2")
    assert search_lattice_k_tilings(SearchSpec(P, k, grid)) == []
