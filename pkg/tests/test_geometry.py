from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spacetime_lattice.geometry import (ArityMismatch, DimensionMismatch, ProductForm, RelationId,
                                        betweenness, dot, eval_relation, in_sim_origin,
                                        in_time_axis, mink, origin, product_from_sqdist, sq_dist,
                                        unit, vadd, vscale, vsub)

from helpers import dims, nonzero_rationals, rationals

F = Fraction
R = RelationId
E, M = ProductForm.EUCLID, ProductForm.MINKOWSKI
e1, e2, e3 = unit(1, 3), unit(2, 3), unit(3, 3)
o3 = origin(3)


@st.composite
def point_pairs(draw):
    d = draw(dims)
    vec = st.tuples(*[rationals] * d)
    return draw(vec), draw(vec)


@st.composite
def time_points(draw, d=None):
    d = d or draw(dims)
    return (draw(rationals),) + (F(0),) * (d - 1)


@st.composite
def space_points(draw, d):
    return (F(0),) + tuple(draw(rationals) for _ in range(d - 1))


# -- examples --------------------------------------------------------------

def test_products():
    assert dot(unit(1, 2), unit(2, 2)) == 0
    assert dot((F(3, 5), F(4, 5)), (F(3, 5), F(4, 5))) == 1
    assert dot((F(7), F(-2)), origin(2)) == 0
    assert mink(unit(1, 2), unit(1, 2)) == 1
    assert mink(unit(2, 2), unit(2, 2)) == -1
    assert mink((F(5, 3), F(4, 3)), (F(4, 3), F(5, 3))) == 0


def test_squared_distances():
    assert sq_dist(E, unit(1, 2), unit(2, 2)) == 2
    assert sq_dist(M, origin(2), vadd(unit(1, 2), unit(2, 2))) == 0
    p = (F(1, 3), F(-2))
    assert sq_dist(E, p, p) == 0 and sq_dist(M, p, p) == 0


def test_polarization_examples():
    assert product_from_sqdist(E, unit(1, 2), unit(2, 2)) == 0
    assert product_from_sqdist(M, unit(2, 2), unit(2, 2)) == -1


def test_betweenness_examples():
    o, u = origin(2), unit(1, 2)
    assert betweenness(o, vscale(F(1, 2), u), u)
    assert not betweenness(o, vscale(2, u), u)
    p = (F(1), F(2))
    assert betweenness(p, p, p)
    assert not betweenness(p, o, p)


def test_relation_examples():
    assert eval_relation(R.Lambda, (o3, vadd(e1, e2)))
    assert eval_relation(R.S, (o3, e2))
    assert not eval_relation(R.Rest, (o3, e2))
    assert eval_relation(R.Rest, (o3, vscale(5, e1)))
    assert eval_relation(R.Delta, (o3, e2, vadd(e1, e3)))
    assert eval_relation(R.CongE, (o3, e1, o3, e2))
    assert not eval_relation(R.CongMu, (o3, e1, o3, e2))
    assert eval_relation(R.CongS, (o3, e2, e1, vadd(e1, e3)))
    assert not eval_relation(R.CongS, (o3, e1, o3, e1))


def test_subspaces():
    assert in_time_axis(vscale(3, e1))
    assert in_sim_origin(vadd(e2, e3))
    assert not in_time_axis(vadd(e1, e2))


def test_dimension_and_arity_errors():
    with pytest.raises(DimensionMismatch):
        dot(unit(1, 2), e1)
    with pytest.raises(DimensionMismatch):
        dot((F(1),), (F(1),))
    with pytest.raises(ArityMismatch):
        eval_relation(R.CongE, (o3, e1))
    with pytest.raises(ValueError):
        unit(0, 3)


def test_relation_names():
    assert [r.arity for r in R] == [3, 2, 2, 2, 4, 4, 4, 3]
    assert R.parse("cong_mu") is R.CongMu and R.parse("Lambda") is R.Lambda
    with pytest.raises(ValueError):
        R.parse("nope")


# -- properties --------------------------------------------------------------

@given(point_pairs())
def test_products_symmetric(pq):
    p, q = pq
    assert dot(p, q) == dot(q, p) and mink(p, q) == mink(q, p)


@given(point_pairs())
def test_polarization_round_trip(pq):
    p, q = pq
    assert product_from_sqdist(E, p, q) == dot(p, q)
    assert product_from_sqdist(M, p, q) == mink(p, q)


@given(point_pairs())
def test_lightlike_iff_null_minkowski_distance(pq):
    p, q = pq
    assert eval_relation(R.Lambda, (p, q)) == (sq_dist(M, p, q) == 0)


@given(dims.flatmap(lambda d: st.tuples(st.tuples(*[rationals] * d), nonzero_rationals,
                                           st.permutations(range(1, d)))))
def test_lightlike_constructed(args):
    p, t, perm = args
    d = len(p)
    step = (t,) + tuple(t if i == perm[0] else F(0) for i in range(1, d))
    q = vadd(p, step)
    assert eval_relation(R.Lambda, (p, q))
    assert sq_dist(M, p, q) == 0


@given(point_pairs())
def test_subspace_bridges(pq):
    p, q = pq
    assert eval_relation(R.S, (p, q)) == in_sim_origin(vsub(p, q))
    assert eval_relation(R.Rest, (p, q)) == in_time_axis(vsub(p, q))


@given(point_pairs())
def test_interdefinability_identities(pq):
    p, q = pq
    assert eval_relation(R.S, (p, q)) == eval_relation(R.CongS, (p, q, p, q))
    assert eval_relation(R.Lambda, (p, q)) == eval_relation(R.CongMu, (p, q, p, p))
    assert eval_relation(R.Delta, (p, q, p)) == eval_relation(R.S, (p, q))
    assert eval_relation(R.Delta, (p, p, q)) == eval_relation(R.Lambda, (p, q))


@given(point_pairs(), st.fractions(min_value=0, max_value=1, max_denominator=10))
def test_betweenness_constructed(pq, t):
    p, r = pq
    q = vadd(p, vscale(t, vsub(r, p)))
    assert betweenness(p, q, r)


# -- products vs time axis T and simultaneity slice S -------------------------

@given(dims.flatmap(lambda d: st.tuples(time_points(d), st.tuples(*[rationals] * d))),
       st.sampled_from([E, M]))
def test_prod_i(args, form):
    p, q = args
    if p[0] == 0:
        return
    # project q onto the orthogonal complement of p
    q = vsub(q, vscale(form(p, q) / form(p, p), p))
    assert form(p, q) == 0
    assert in_sim_origin(q)


@given(dims.flatmap(lambda d: st.tuples(st.tuples(*[rationals] * d), st.booleans())),
       st.sampled_from([E, M]))
def test_prod_ii(args, form):
    p, force_time = args
    d = len(p)
    if force_time:
        p = (p[0],) + (F(0),) * (d - 1)
    spanning = [unit(i, d) for i in range(2, d + 1)]
    assert all(form(p, s) == 0 for s in spanning) == in_time_axis(p)


@given(dims.flatmap(lambda d: st.tuples(time_points(d), space_points(d))), st.sampled_from([E, M]))
def test_prod_iii(args, form):
    p, q = args
    assert form(p, q) == 0


@given(dims.flatmap(lambda d: st.tuples(time_points(d), time_points(d))))
def test_prod_iv(args):
    p, q = args
    assert dot(p, q) == mink(p, q)


@given(dims.flatmap(lambda d: st.tuples(space_points(d), space_points(d))))
def test_prod_v(args):
    p, q = args
    assert dot(p, q) == -mink(p, q)


@given(dims.flatmap(lambda d: st.tuples(space_points(d), st.tuples(*[rationals] * d))))
def test_prod_vi(args):
    p, q = args
    d = len(p)
    # make q's spatial part Euclidean-orthogonal to p's, so both products vanish
    pp = dot(p, p)
    if pp:
        c = dot(p, q) / pp
        q = (q[0],) + tuple(q[i] - c * p[i] for i in range(1, d))
    if dot(p, q) == 0 and mink(p, q) == 0:
        assert in_sim_origin(p) or in_sim_origin(q)


@given(point_pairs())
def test_prod_vi_unconstrained(pq):
    p, q = pq
    if dot(p, q) == 0 and mink(p, q) == 0:
        assert in_sim_origin(p) or in_sim_origin(q)
