import itertools
import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbitpoly.rootsys import (AlgebraId, RankError, build_root_system,
                               congruence_number, fundamental_region,
                               is_dominant, reflect, to_dominant)

ALGEBRAS = ["A1", "A2", "A3", "B3", "C2", "C3", "G2", "D4", "F4", "E6"]


def test_algebra_parse():
    assert AlgebraId.parse("a2") == AlgebraId("A", 2)
    assert str(AlgebraId.parse("G2")) == "G2"
    for bad in ["H3", "A0", "E9", "F5", "G3", "Q", "B"]:
        with pytest.raises(RankError):
            AlgebraId.parse(bad)


def test_a1_data():
    rs = build_root_system("A1")
    assert rs.cartan == ((2,),)
    assert rs.weyl_order == 2


def test_a2_data():
    rs = build_root_system("A2")
    assert rs.cartan == ((2, -1), (-1, 2))
    assert rs.weyl_order == 6


def test_cartan_structure():
    for alg in ALGEBRAS:
        rs = build_root_system(alg)
        n = rs.rank
        for i in range(n):
            assert rs.cartan[i][i] == 2
            for j in range(n):
                if i != j:
                    assert rs.cartan[i][j] <= 0


def test_dual_pairing_identity():
    # M @ G == diag(d) exactly, i.e. <a_j, w_k> = d_j * delta
    for alg in ALGEBRAS:
        rs = build_root_system(alg)
        n = rs.rank
        for i in range(n):
            for j in range(n):
                v = sum(rs.cartan[i][k] * rs.gram_omega[k][j] for k in range(n))
                assert v == (rs.symmetrizers[i] if i == j else 0)


def test_reflect_examples():
    a1 = build_root_system("A1")
    assert reflect(a1, 1, (5,)) == (-5,)
    a2 = build_root_system("A2")
    assert reflect(a2, 1, (1, 0)) == (-1, 1)
    with pytest.raises(IndexError):
        reflect(a2, 3, (1, 0))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ALGEBRAS), st.data())
def test_reflect_involution(alg, data):
    rs = build_root_system(alg)
    w = tuple(data.draw(st.integers(-6, 6)) for _ in range(rs.rank))
    i = data.draw(st.integers(1, rs.rank))
    assert reflect(rs, i, reflect(rs, i, w)) == w


def test_to_dominant_examples():
    a1 = build_root_system("A1")
    assert to_dominant(a1, (-3,)) == ((3,), 1, False)
    a2 = build_root_system("A2")
    dom, parity, wall = to_dominant(a2, (-1, -1))
    assert dom == (1, 1) and not wall
    assert parity == _brute_force_parity(a2, (-1, -1))
    assert to_dominant(a2, (2, 1)) == ((2, 1), 0, False)
    assert to_dominant(a2, (0, 2)).on_wall


def _brute_force_parity(rs, w):
    """Shortest reflection word to the dominant chamber, by exhaustive BFS."""
    frontier = {w}
    seen = {w}
    length = 0
    while True:
        if any(is_dominant(v) for v in frontier):
            return length % 2
        nxt = set()
        for v in frontier:
            for i in range(1, rs.rank + 1):
                r = reflect(rs, i, v)
                if r not in seen:
                    seen.add(r)
                    nxt.add(r)
        frontier = nxt
        length += 1


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["A2", "C2", "G2", "A3", "B3"]), st.data())
def test_to_dominant_path_independent(alg, data):
    # Reducing along a random reflection path must land on the same weight
    # with the same parity class.
    rs = build_root_system(alg)
    w = tuple(data.draw(st.integers(-5, 5)) for _ in range(rs.rank))
    dom, parity, _ = to_dominant(rs, w)
    rng = random.Random(data.draw(st.integers(0, 10 ** 6)))
    v, steps = w, 0
    while not is_dominant(v):
        neg = [i for i in range(rs.rank) if v[i] < 0]
        i = rng.choice(neg)
        v = reflect(rs, i + 1, v)
        steps += 1
    assert v == dom
    assert steps % 2 == parity


def test_congruence_examples():
    assert congruence_number(build_root_system("A2"), (1, 1)) == 0
    assert congruence_number(build_root_system("C2"), (1, 0)) == 1
    assert congruence_number(build_root_system("A3"), (1, 0, 1)) == 0
    assert congruence_number(build_root_system("B3"), (0, 0, 1)) == 1
    assert congruence_number(build_root_system("C3"), (1, 0, 1)) == 0
    assert congruence_number(build_root_system("G2"), (3, 1)) == 0


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ALGEBRAS), st.data())
def test_congruence_orbit_invariant(alg, data):
    rs = build_root_system(alg)
    w = tuple(data.draw(st.integers(-4, 4)) for _ in range(rs.rank))
    i = data.draw(st.integers(1, rs.rank))
    assert congruence_number(rs, w) == congruence_number(rs, reflect(rs, i, w))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["A1", "A2", "A3", "B3", "C2", "C3", "E6"]), st.data())
def test_congruence_additive(alg, data):
    rs = build_root_system(alg)
    u = tuple(data.draw(st.integers(-4, 4)) for _ in range(rs.rank))
    v = tuple(data.draw(st.integers(-4, 4)) for _ in range(rs.rank))
    s = tuple(a + b for a, b in zip(u, v))
    want = (congruence_number(rs, u) + congruence_number(rs, v)) % rs.center_order
    assert congruence_number(rs, s) == want


def test_fundamental_region_a1():
    region = fundamental_region(build_root_system("A1"))
    assert region.vertices == ((Fraction(0),), (Fraction(1, 2),))
    assert region.volume == Fraction(1, 2)


def test_fundamental_region_volume():
    # The simplex tiles the torus in |W| copies: volume is exactly 1/|W|.
    for alg in ALGEBRAS:
        rs = build_root_system(alg)
        region = fundamental_region(rs)
        assert region.volume * rs.weyl_order == 1
        assert region.volume > 0


def test_fundamental_region_a2_hit_rate():
    # Rejection-sampling cross-check of the inequality system.
    rs = build_root_system("A2")
    region = fundamental_region(rs)
    rng = random.Random(123)
    box = 1.0  # vertices lie in [0, 1]^2
    hits = 0
    n = 200_000
    xi = rs.highest_root
    for _ in range(n):
        x = (rng.random() * box, rng.random() * box)
        mx = [sum(rs.cartan[i][k] * x[k] for k in range(2)) for i in range(2)]
        if all(v >= 0 for v in mx) and xi[0] * x[0] + xi[1] * x[1] <= 1:
            hits += 1
    estimate = hits / n * box ** 2
    assert abs(estimate - float(region.volume)) < 0.01 * float(region.volume) + 0.002


def test_comark_decomposition():
    # xi = sum q_j / d_j * alpha_j reproduces the highest root.
    for alg in ALGEBRAS:
        rs = build_root_system(alg)
        n = rs.rank
        for k in range(n):
            v = sum(Fraction(rs.comarks[i], rs.symmetrizers[i]) * rs.cartan[i][k]
                    for i in range(n))
            assert v == rs.highest_root[k]


def test_json_dump_canonical():
    rs = build_root_system("C2")
    payload = json.loads(rs.to_json())
    assert payload["algebra"] == "C2"
    assert payload["cartan"] == [[2, -1], [-2, 2]]
    assert all("/" in x for row in payload["gram_omega"] for x in row)
    assert rs.to_json() == build_root_system("C2").to_json()
