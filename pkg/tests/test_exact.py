from itertools import combinations

import pytest
from hypothesis import given

from semitotal.config import Guardrails
from semitotal.errors import InvalidVertex, IsolatedVertex, SizeLimitExceeded
from semitotal.exact import (
    Kind,
    all_minimum_sets,
    in_some_minimum_semitotal,
    oracle_minimum,
    oracle_semitotal_forced,
    verify,
    verify_almost,
    verify_dominating,
    verify_semitotal,
    verify_total,
)
from semitotal.graph_core import distance, from_edges, is_star, leaves, path, star

from conftest import trees


def test_verifiers_on_small_paths():
    p4 = path(4)
    assert verify_dominating(p4, {1, 2})
    assert not verify_dominating(p4, {0})
    assert verify_dominating(p4, range(4))
    assert verify_total(p4, {1, 2})
    assert not verify_total(p4, {1, 3})
    assert verify_total(star(3), {0, 1})
    assert verify_semitotal(path(5), {1, 3})
    assert not verify_semitotal(path(6), {1, 4})
    assert verify_almost(p4, {2}, 0)
    assert not verify_almost(p4, {2}, 1)
    assert not verify_almost(path(2), set(), 0)


@given(trees(2, 10))
def test_singletons_are_never_semitotal(t):
    assert not any(verify_semitotal(t, {v}) for v in range(t.n))


def test_verifier_rejects_bad_vertices():
    with pytest.raises(InvalidVertex):
        verify_dominating(path(3), {5})


def test_oracle_spot_values():
    assert oracle_minimum(path(5), Kind.SEMITOTAL).value == 2
    assert oracle_minimum(path(4), Kind.PLAIN).value == 2
    assert oracle_minimum(path(4), Kind.SEMITOTAL).value == 2
    cert = oracle_minimum(path(6), Kind.SEMITOTAL)
    assert (cert.value, cert.witness) == (3, (0, 2, 4))
    assert verify_semitotal(path(6), {1, 3, 5})
    assert oracle_minimum(star(4), Kind.PLAIN).value == 1
    assert oracle_minimum(star(4), Kind.SEMITOTAL).value == 2


def test_oracle_witness_is_lexicographically_first():
    cert = oracle_minimum(path(6), Kind.SEMITOTAL)
    firsts = [s for s in combinations(range(6), 3) if verify_semitotal(path(6), s)]
    assert cert.witness == firsts[0]


def test_oracle_rejects_single_vertex_and_guardrail():
    with pytest.raises(IsolatedVertex):
        oracle_minimum(from_edges(1, []), Kind.PLAIN)
    with pytest.raises(SizeLimitExceeded):
        oracle_minimum(path(8), Kind.PLAIN, limits=Guardrails(oracle_n=6))


def test_all_minimum_sets_examples():
    assert all_minimum_sets(path(4), Kind.SEMITOTAL) == [(0, 2), (1, 2), (1, 3)]
    assert all_minimum_sets(path(2), Kind.SEMITOTAL) == [(0, 1)]
    assert (1, 3) in all_minimum_sets(path(5), Kind.PLAIN)


def test_in_some_minimum_semitotal_examples():
    assert in_some_minimum_semitotal(path(4), 0)
    # {1, 3} is the only minimum semitotal set of P5
    assert not in_some_minimum_semitotal(path(5), 2)
    assert in_some_minimum_semitotal(path(2), 0) and in_some_minimum_semitotal(path(2), 1)
    assert not in_some_minimum_semitotal(path(5), 0)


def test_forced_oracle_contains_vertex():
    cert = oracle_semitotal_forced(path(5), 0)
    assert cert.value == 3 and 0 in cert.witness


@given(trees(2, 10))
def test_chain_and_witnesses(t):
    certs = {k: oracle_minimum(t, k) for k in (Kind.PLAIN, Kind.SEMITOTAL, Kind.TOTAL)}
    assert certs[Kind.PLAIN].value <= certs[Kind.SEMITOTAL].value <= certs[Kind.TOTAL].value
    for kind, cert in certs.items():
        assert verify(t, kind, cert.witness)
        assert len(cert.witness) == cert.value


@given(trees(2, 9))
def test_almost_domination_never_exceeds_domination(t):
    gamma = oracle_minimum(t, Kind.PLAIN).value
    values = [oracle_minimum(t, Kind.ALMOST, v).value for v in range(t.n)]
    assert max(values) <= gamma
    assert gamma in values


@given(trees(2, 9))
def test_all_minimum_sets_are_exactly_the_minimum_sets(t):
    for kind in (Kind.PLAIN, Kind.SEMITOTAL):
        sets = all_minimum_sets(t, kind)
        k = oracle_minimum(t, kind).value
        brute = [s for s in combinations(range(t.n), k) if verify(t, kind, s)]
        assert sets == brute


@given(trees(3, 10))
def test_leaf_free_minimum_sets_exist_off_stars(t):
    if is_star(t):
        return
    lv = leaves(t)
    for kind in (Kind.PLAIN, Kind.SEMITOTAL):
        assert any(not lv & set(s) for s in all_minimum_sets(t, kind))


@given(trees(2, 9))
def test_semitotal_witness_pairs_are_close(t):
    cert = oracle_minimum(t, Kind.SEMITOTAL)
    for u in cert.witness:
        assert any(0 < distance(t, u, w) <= 2 for w in cert.witness)


def test_two_vertices_need_both():
    assert oracle_minimum(path(2), Kind.SEMITOTAL).value == 2
