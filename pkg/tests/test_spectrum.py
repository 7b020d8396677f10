import itertools
import json

import pytest
from hypothesis import given, settings, strategies as st

from orderspec.spectrum import (
    CriterionWitness,
    PrimeGraph,
    Spectrum,
    SpectrumError,
    alpha_invariant,
    contains,
    gm_condition,
    higman_bound_holds,
    isospectral,
    lcm_product,
    max_coclique,
    nonsolvability_criterion,
    normalize,
    prime_graph,
)

from oracles import brute_coclique, brute_criterion, divisor_closure, maximal_elements

SZ8 = Spectrum((4, 5, 7, 13))
SZ8_SQUARE = Spectrum((20, 28, 35, 52, 65, 91))
TWO_FROBENIUS = Spectrum((21, 39, 91))

orders = st.lists(st.integers(1, 400), min_size=1, max_size=8)
spectra = orders.map(normalize)


@pytest.mark.parametrize("values, mu", [([1, 2, 4, 5], (4, 5)), ([6, 3, 2], (6,)), ([7], (7,))])
def test_normalize_examples(values, mu):
    assert tuple(maximal_elements(values)) == mu
    assert normalize(values).mu == mu


def test_normalize_rejects_empty():
    with pytest.raises(SpectrumError):
        normalize([])


def test_spectrum_validates_antichain():
    with pytest.raises(SpectrumError):
        Spectrum((2, 4))
    with pytest.raises(SpectrumError):
        Spectrum((5, 4))
    with pytest.raises(SpectrumError):
        Spectrum(())


def test_contains_examples():
    assert not contains(Spectrum((4, 5)), 10)
    assert contains(SZ8, 1)
    assert not contains(Spectrum((20, 28, 35, 52, 65, 91)), 70)
    assert 70 not in divisor_closure([28, 20, 52, 35, 91, 65])


@given(orders)
def test_normalize_idempotent_and_covering(values):
    s = normalize(values)
    assert normalize(s.mu) == s
    assert all(contains(s, v) for v in values)
    assert divisor_closure(s.mu) == divisor_closure(values)


def test_lcm_product_examples():
    assert lcm_product(Spectrum((4, 5)), Spectrum((4, 5))).mu == (20,)
    assert lcm_product(SZ8, Spectrum((1,))) == SZ8
    assert lcm_product(SZ8, SZ8) == SZ8_SQUARE


@given(spectra, spectra, spectra)
@settings(max_examples=60)
def test_lcm_product_algebra(a, b, c):
    assert lcm_product(a, b) == lcm_product(b, a)
    assert lcm_product(lcm_product(a, b), c) == lcm_product(a, lcm_product(b, c))
    assert lcm_product(a, Spectrum((1,))) == a
    ab = lcm_product(a, b)
    assert all(contains(ab, m) for m in a.mu + b.mu)


def test_lcm_product_overflow():
    big = Spectrum((2**50 + 1,))
    with pytest.raises(OverflowError):
        lcm_product(big, Spectrum((2**50 - 1,)))


def test_prime_graph_examples():
    g = prime_graph(SZ8)
    assert g.vertices == (2, 5, 7, 13) and not g.edges
    g = prime_graph(Spectrum((6,)))
    assert g.vertices == (2, 3) and g.edges == {(2, 3)}
    g = prime_graph(SZ8_SQUARE)
    assert g.edges == set(itertools.combinations((2, 5, 7, 13), 2))


@given(spectra)
def test_prime_graph_definition(s):
    g = prime_graph(s)
    omega = divisor_closure(s.mu)
    for p, q in itertools.combinations(g.vertices, 2):
        assert g.adjacent(p, q) == (p * q in omega)


def test_prime_graph_validation():
    with pytest.raises(SpectrumError):
        PrimeGraph((2, 3), frozenset({(2, 5)}))
    with pytest.raises(SpectrumError):
        PrimeGraph((2, 3), frozenset({(2, 2)}))


def test_max_coclique_examples():
    empty = PrimeGraph((2, 5, 7, 13), frozenset())
    assert max_coclique(empty) == (4, (2, 5, 7, 13))
    complete = PrimeGraph((2, 5, 7, 13), frozenset(itertools.combinations((2, 5, 7, 13), 2)))
    assert max_coclique(complete) == (1, (2,))
    assert max_coclique(PrimeGraph((2, 3, 5), frozenset({(2, 3)}))) == (2, (2, 5))
    assert max_coclique(PrimeGraph((), frozenset())) == (0, ())


PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


@st.composite
def graphs(draw, max_vertices=8):
    vs = sorted(draw(st.sets(st.sampled_from(PRIMES), max_size=max_vertices)))
    pairs = list(itertools.combinations(vs, 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return PrimeGraph(tuple(vs), frozenset(p for p, keep in zip(pairs, mask) if keep))


@given(graphs())
@settings(max_examples=300)
def test_max_coclique_matches_subset_scan(g):
    assert max_coclique(g) == brute_coclique(g.vertices, g.edges)


def test_max_coclique_budget():
    many = PrimeGraph(tuple(range(2, 2 + 70)), frozenset())
    with pytest.raises(SpectrumError):
        max_coclique(many)


@pytest.mark.parametrize("block", [2, 4, 8])
def test_max_coclique_64_vertices_disjoint_cliques(block):
    # 64/block disjoint cliques: one vertex per clique, the least being each block's first
    vs = tuple(range(64))
    edges = frozenset((a, b) for a, b in itertools.combinations(vs, 2) if a // block == b // block)
    assert max_coclique(PrimeGraph(vs, edges)) == (64 // block, tuple(range(0, 64, block)))


def test_alpha_invariant_examples():
    assert alpha_invariant(SZ8) == 1
    assert alpha_invariant(SZ8_SQUARE) == 2
    assert alpha_invariant(Spectrum((1,))) == 0


def test_criterion_examples():
    assert brute_criterion(SZ8_SQUARE.mu) == (2, 5, 7, 13)
    assert nonsolvability_criterion(SZ8_SQUARE).sigma == (2, 5, 7, 13)
    assert brute_criterion(SZ8.mu) is None
    assert nonsolvability_criterion(SZ8) is None
    assert brute_criterion(TWO_FROBENIUS.mu) is None
    assert nonsolvability_criterion(TWO_FROBENIUS) is None


@given(st.lists(st.integers(1, 3000), min_size=1, max_size=7).map(normalize))
@settings(max_examples=150, deadline=None)
def test_criterion_matches_brute(s):
    w = nonsolvability_criterion(s)
    assert (w.sigma if w else None) == brute_criterion(s.mu)


@st.composite
def many_prime_spectra(draw):
    """Spectra built from products of distinct small primes, where witnesses are common."""
    ps = draw(st.lists(st.sampled_from(PRIMES[:8]), min_size=4, max_size=7, unique=True))
    pairs = draw(st.lists(st.sampled_from(list(itertools.combinations(ps, 2))), min_size=1, max_size=12))
    return normalize([a * b for a, b in pairs] + ps)


@given(many_prime_spectra())
@settings(max_examples=150, deadline=None)
def test_criterion_matches_brute_dense(s):
    w = nonsolvability_criterion(s)
    assert (w.sigma if w else None) == brute_criterion(s.mu)


@given(spectra)
@settings(max_examples=60, deadline=None)
def test_square_of_large_coclique_has_witness(s):
    # a coclique of size 4 in x survives as a witness in x * x
    if max_coclique(prime_graph(s))[0] >= 4:
        assert nonsolvability_criterion(lcm_product(s, s)) is not None


def test_gm_condition_examples():
    assert not gm_condition(CriterionWitness((2, 5, 7, 13)))
    assert not gm_condition(CriterionWitness((5, 7, 13, 31)))
    assert not gm_condition(CriterionWitness((7, 11, 23, 59)))
    assert gm_condition(CriterionWitness((3, 5, 17, 23)))


def test_witness_validation():
    with pytest.raises(SpectrumError):
        CriterionWitness((2, 3, 5))
    with pytest.raises(SpectrumError):
        CriterionWitness((2, 3, 5, 9))


def test_higman_bound_examples():
    assert not higman_bound_holds(SZ8)
    assert higman_bound_holds(TWO_FROBENIUS)
    assert higman_bound_holds(Spectrum((1,)))


def test_isospectral_examples():
    assert isospectral(Spectrum((4, 5)), Spectrum((4, 5)))
    assert not isospectral(Spectrum((4, 5)), Spectrum((20,)))


def test_serialization_round_trip():
    assert SZ8_SQUARE.to_csv() == "20,28,35,52,65,91"
    assert Spectrum.from_csv(SZ8_SQUARE.to_csv()) == SZ8_SQUARE
    assert json.loads(SZ8.to_json()) == [4, 5, 7, 13]
    assert Spectrum.from_json(SZ8.to_json()) == SZ8
    assert Spectrum.from_csv("1,2,4,5").mu == (4, 5)
    with pytest.raises(SpectrumError):
        Spectrum.from_csv("4,x")
    with pytest.raises(SpectrumError):
        Spectrum.from_json('{"mu": 4}')


def test_exponent():
    assert SZ8.exponent == 1820


def test_dot_export():
    dot = prime_graph(Spectrum((5, 6))).to_dot()
    assert dot == "graph GK {\n  2;\n  3;\n  5;\n  2 -- 3;\n}\n"
