import random
from fractions import Fraction

import pytest

from quiverlab.envelopes import (
    WallError,
    chambers,
    coarsen_grading,
    faces,
    feasible_interior,
    primitive_up_to_sign,
    split_N,
    stab_degree_table,
    torus_roots,
    triangle_split_check,
)
from quiverlab.exactlinalg import dot
from quiverlab.torus import fixed_components
from quiverlab.corpus import corpus

RANK2_ROOTS = ((1, 0), (0, 1), (1, -1))


def corpus_candidates(name):
    e = corpus()[name]
    cands = fixed_components(e.quiver, e.split, e.dims, e.action, e.sigma, e.window)
    return e, cands


def sign_vector_oracle(roots, rank, box=6, samples=10000, seed=0):
    """Independent chamber count: collect realized sign vectors of lattice
    points in a box."""
    rng = random.Random(seed)
    seen = set()
    for _ in range(samples):
        x = tuple(Fraction(rng.randint(-box, box)) for _ in range(rank))
        signs = []
        for r in roots:
            p = dot(r, x)
            if p == 0:
                break
            signs.append(1 if p > 0 else -1)
        else:
            seen.add(tuple(signs))
    return seen


def test_primitive_up_to_sign():
    assert primitive_up_to_sign((2, -4)) == (1, -2)
    assert primitive_up_to_sign((-2, 4)) == (1, -2)
    assert primitive_up_to_sign((Fraction(-1, 2), Fraction(1))) == (1, -2)
    assert primitive_up_to_sign((0, 0)) is None


def test_feasible_interior():
    point = feasible_interior([(1, 0), (0, 1)], 2)
    assert point is not None and point[0] > 0 and point[1] > 0
    assert feasible_interior([(1,), (-1,)], 1) is None
    assert feasible_interior([], 2) is not None
    # strict homogeneous chain x > y > 0
    p = feasible_interior([(1, -1), (0, 1)], 2)
    assert p[0] > p[1] > 0


def test_torus_roots_examples():
    _, cands = corpus_candidates("a2sym")
    assert torus_roots(cands) == ((1,),)
    triv_e, triv = corpus_candidates("jordan2")
    zero_sigma = fixed_components(
        triv_e.quiver, triv_e.split, triv_e.dims, triv_e.action, (0,)
    )
    assert torus_roots(zero_sigma) == ()


def test_chambers_rank1():
    chs = chambers(((1,),), 1)
    assert len(chs) == 2
    points = sorted(c.point[0] for c in chs)
    assert points[0] < 0 < points[1]


def test_chambers_rank2_count_and_oracle():
    chs = chambers(RANK2_ROOTS, 2)
    assert len(chs) == 6
    oracle = sign_vector_oracle(RANK2_ROOTS, 2)
    assert {c.signs for c in chs} == oracle


def test_chambers_empty_roots():
    chs = chambers((), 3)
    assert len(chs) == 1 and chs[0].signs == ()


def test_chambers_budget():
    with pytest.raises(ValueError):
        chambers(((1, 0, 0, 0, 1),), 5)


def test_chambers_oracle_on_corpus_rank2():
    e, cands = corpus_candidates("framed2")
    roots = torus_roots(cands)
    chs = chambers(roots, 2)
    oracle = sign_vector_oracle(roots, 2, box=8, samples=20000, seed=3)
    assert {c.signs for c in chs} == oracle


def test_faces_rank1():
    chs = chambers(((1,),), 1)
    fs = faces(chs[0])
    assert len(fs) == 2
    improper = [f for f in fs if f.improper]
    assert len(improper) == 1 and improper[0].span_basis == ((1,),)
    origin = [f for f in fs if not f.improper]
    assert origin[0].point == (Fraction(0),) and origin[0].span_basis == ()


def test_faces_rank2_facets():
    for ch in chambers(RANK2_ROOTS, 2):
        fs = faces(ch)
        facets = [f for f in fs if len(f.zero_set) == 1]
        assert len(facets) == 2  # every sector has two walls
        assert sum(f.improper for f in fs) == 1
        assert any(f.point == (Fraction(0), Fraction(0)) for f in fs)


def test_face_points_lie_in_chamber_closure():
    for ch in chambers(RANK2_ROOTS, 2):
        for f in faces(ch):
            for i, r in enumerate(ch.roots):
                p = dot(r, f.point)
                if i in f.zero_set:
                    assert p == 0
                else:
                    assert (p > 0) == (ch.sign_of(i) > 0) and p != 0


def test_split_N_basic():
    e, cands = corpus_candidates("a2sym")
    cand = next(c for c in cands if dict(c.nonzero_tangent()) == {(1,): 1, (-1,): 1})
    ns = split_N(cand, (1,))
    assert dict(ns.n_plus) == {(1,): 1}
    assert dict(ns.n_minus) == {(-1,): 1}
    assert ns.rank_plus == ns.rank_minus == 1
    with pytest.raises(WallError):
        split_N(cand, (0,))


def test_split_N_opposite_chamber_swaps():
    for name in ("a2sym", "framed2", "loop2"):
        e, cands = corpus_candidates(name)
        roots = torus_roots(cands)
        chs = chambers(roots, e.action.rank)
        for cand in cands:
            for ch in chs:
                ns = split_N(cand, ch.point)
                opp = split_N(cand, tuple(-x for x in ch.point))
                assert ns.n_plus == opp.n_minus and ns.n_minus == opp.n_plus


def test_rank_completeness():
    # rank N^- + rank N^+ + dim F = dim X
    from quiverlab.surgery import dim_quiver_variety

    for name in ("jordan2", "a2sym", "loop2", "framed2"):
        e, cands = corpus_candidates(name)
        roots = torus_roots(cands)
        chs = chambers(roots, e.action.rank)
        dim_x = dim_quiver_variety(e.quiver, e.dims)
        for cand in cands:
            for ch in chs:
                ns = split_N(cand, ch.point)
                assert ns.rank_minus + ns.rank_plus + cand.dim_fixed() == dim_x
                assert ns.rank_minus == ns.rank_plus


def test_stab_degree_table():
    e, cands = corpus_candidates("a2sym")
    table = stab_degree_table(e.quiver, e.split, e.dims, cands, (1,))
    assert table.dim_ambient == 2
    assert all(r.consistent for r in table.rows)
    # off-diagonal bound for dims 0 and 2 in ambient dim 2: (0+2)/2 - 1 = 0
    by_dim = {}
    for r in table.rows:
        by_dim.setdefault(r.dim_fixed, r.name)
    pair = next(
        p
        for p in table.pairs
        if {p.first, p.second} == {by_dim[0], by_dim[2]}
    )
    assert pair.off_diagonal_bound == 0


def test_stab_degree_table_sigma_zero():
    e = corpus()["jordan2"]
    cands = fixed_components(e.quiver, e.split, e.dims, e.action, (0,))
    table = stab_degree_table(e.quiver, e.split, e.dims, cands, (1,))
    (row,) = table.rows
    assert row.dim_fixed == 4 and row.attracting_dim == 4 and row.rank_minus == 0


def test_triangle_degenerate_faces():
    e, cands = corpus_candidates("framed2")
    roots = torus_roots(cands)
    ch = chambers(roots, 2)[0]
    fs = faces(ch)
    improper = next(f for f in fs if f.improper)
    origin = next(f for f in fs if len(f.zero_set) == len(roots))
    for cand in cands:
        r1 = triangle_split_check(cand, ch, improper)
        assert r1.ok and not r1.side_quotient
        r2 = triangle_split_check(cand, ch, origin)
        assert r2.ok and not r2.side_face
        assert r2.side_quotient == r2.n_minus_full


def test_triangle_all_corpus_triples():
    for name in ("jordan2", "a2sym", "loop2", "framed2"):
        e, cands = corpus_candidates(name)
        roots = torus_roots(cands)
        chs = chambers(roots, e.action.rank)
        for cand in cands:
            for ch in chs:
                for f in faces(ch):
                    rpt = triangle_split_check(cand, ch, f)
                    assert rpt.ok, (name, cand.name(), ch.signs, sorted(f.zero_set))
                    assert rpt.n_minus_full == rpt.side_face + rpt.side_quotient


def test_triangle_with_paired_coarse_candidate():
    e, cands = corpus_candidates("framed2")
    roots = torus_roots(cands)
    ch = chambers(roots, 2)[0]
    facet = next(f for f in faces(ch) if len(f.zero_set) == 1)
    cand = cands[0]
    good = coarsen_grading(cand, facet.span_basis)
    assert triangle_split_check(cand, ch, facet, good).ok
    bad = {n: {(99,): sum(t.values())} for n, t in good.items()}
    rpt = triangle_split_check(cand, ch, facet, bad)
    assert not rpt.ok and not rpt.pairing_ok


def test_triangle_foreign_face_detected():
    # a face from a different root system is flagged, not silently accepted
    e, cands = corpus_candidates("framed2")
    roots = torus_roots(cands)
    chs = chambers(roots, 2)
    foreign = chambers(((1, 1),), 2)
    f = next(f for f in faces(foreign[0]) if not f.improper and f.zero_set)
    flagged = 0
    for cand in cands:
        rpt = triangle_split_check(cand, chs[0], f)
        if rpt.problems:
            flagged += 1
    assert flagged > 0
