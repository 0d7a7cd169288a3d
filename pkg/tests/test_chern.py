"""Chern engine tests: splitting-principle oracle, Whitney checks, sections."""

import math
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fanocalc.chern import (
    BundleModel,
    InconsistentPairingError,
    PlaneClass,
    SectionModel,
    TotalChernClass,
    euler_of_section,
    plane_intersection_matrix,
    plane_normal_bundle,
    section_chern,
    section_degree,
    tangent_bundle,
    tensor_chern,
    unit_total,
    universal_bundles,
)
from fanocalc.schubert import Grassmannian, sigma, unit

GR24 = Grassmannian(2, 4)
GR25 = Grassmannian(2, 5)
GR26 = Grassmannian(2, 6)
GR36 = Grassmannian(3, 6)


def split_bundle(ctx, roots):
    """Bundle with split total class prod_i (1 + roots[i] * sigma_1)."""
    s1 = sigma(ctx, 1)
    comps = [unit(ctx)]
    for i in range(1, len(roots) + 1):
        e_i = sum(math.prod(c) for c in combinations(roots, i))
        comps.append(e_i * s1 ** i)
    return BundleModel(len(roots), TotalChernClass(ctx, comps))


def direct_tensor_total(ctx, xs, ys):
    """prod over all root pairs of (1 + (x + y) sigma_1), multiplied out."""
    s1 = sigma(ctx, 1)
    total = unit_total(ctx)
    for x in xs:
        for y in ys:
            total = total * TotalChernClass(ctx, [unit(ctx), (x + y) * s1])
    return total


# ---------------------------------------------------------------------------
# tensor products via the splitting principle

@settings(max_examples=25, deadline=None)
@given(
    xs=st.lists(st.integers(min_value=-3, max_value=3), min_size=1, max_size=3),
    ys=st.lists(st.integers(min_value=-3, max_value=3), min_size=1, max_size=3),
)
def test_tensor_chern_matches_split_roots(xs, ys):
    got = tensor_chern(split_bundle(GR26, tuple(xs)), split_bundle(GR26, tuple(ys)))
    assert got == direct_tensor_total(GR26, xs, ys)


def test_tensor_chern_fixed_split_example():
    got = tensor_chern(split_bundle(GR25, (1, -2)), split_bundle(GR25, (3,)))
    assert got == direct_tensor_total(GR25, (1, -2), (3,))


def test_tensor_degree_one_is_mixed_first_chern():
    sub, quot = universal_bundles(GR25)
    c1 = tensor_chern(sub, quot).component(1)
    expected = quot.rank * sub.total.component(1) + sub.rank * quot.total.component(1)
    assert c1 == expected


def test_tensor_rank_cap():
    big = BundleModel(7, unit_total(GR25))
    small = BundleModel(1, unit_total(GR25))
    with pytest.raises(ValueError):
        tensor_chern(big, small)


# ---------------------------------------------------------------------------
# universal bundles and the tangent bundle

@pytest.mark.parametrize("ctx", [GR24, GR25, GR26, GR36], ids=repr)
def test_whitney_identity(ctx):
    sub, quot = universal_bundles(ctx)
    # sub is the dual of the tautological subbundle S, so c(S) = dual total
    assert sub.total.dual() * quot.total == unit_total(ctx)


@pytest.mark.parametrize("ctx", [GR24, GR25, GR26, GR36], ids=repr)
def test_top_chern_integrates_to_euler_number(ctx):
    top = tangent_bundle(ctx).total.component(ctx.dim)
    assert top.integral() == math.comb(ctx.n, ctx.k)


def test_tangent_chern_classes_of_gr25():
    total = tangent_bundle(GR25).total
    assert total.component(1).terms == {(1,): 5}
    assert total.component(2).terms == {(2,): 11, (1, 1): 12}
    assert total.component(3).terms == {(3,): 15, (2, 1): 30}
    assert total.component(4).terms == {(3, 1): 35, (2, 2): 25}
    assert total.component(5).terms == {(3, 2): 30}
    assert total.component(6).terms == {(3, 3): 10}


def test_dual_is_an_involution():
    sub, _ = universal_bundles(GR26)
    assert sub.total.dual().dual() == sub.total


def test_inverse_is_a_series_inverse():
    _, quot = universal_bundles(GR25)
    limit = 5
    product = quot.total * quot.total.inverse(limit)
    for i in range(1, limit + 1):
        assert product.component(i).is_zero()


def test_bundle_rank_constrains_total_class():
    s1 = sigma(GR25, 1)
    total = TotalChernClass(GR25, [unit(GR25), s1, s1 * s1])
    with pytest.raises(ValueError):
        BundleModel(1, total)


# ---------------------------------------------------------------------------
# linear sections

def w5_model() -> SectionModel:
    return section_chern(tangent_bundle(GR25).total, 2)


def v14_model() -> SectionModel:
    return section_chern(tangent_bundle(GR26).total, 4)


def test_w5_section_invariants():
    model = w5_model()
    assert model.dim == 4
    assert model.index == 3
    assert model.chern.component(1).terms == {(1,): 3}
    assert model.chern.component(2).terms == {(2,): 4, (1, 1): 5}
    assert section_degree(model, sigma(GR25, 1) ** 4) == 5
    assert section_degree(model, model.chern.component(2) * sigma(GR25, 1) ** 2) == 22
    assert euler_of_section(model) == 6


def test_v14_section_invariants():
    model = v14_model()
    assert model.dim == 4
    assert model.index == 2
    assert model.chern.component(1).terms == {(1,): 2}
    assert model.chern.component(2).terms == {(2,): 2, (1, 1): 4}
    assert section_degree(model, sigma(GR26, 1) ** 4) == 14
    assert section_degree(model, model.chern.component(2) * sigma(GR26, 1) ** 2) == 38
    assert euler_of_section(model) == 12


def test_codim_zero_section_is_the_ambient_space():
    model = section_chern(tangent_bundle(GR24).total, 0)
    assert model.dim == 4
    assert model.index == 4
    assert section_degree(model, sigma(GR24, 1) ** 4) == 2
    assert euler_of_section(model) == 6


def test_section_chern_limit_independence():
    ambient = tangent_bundle(GR25).total
    short = section_chern(ambient, 2)
    long = section_chern(ambient, 2, limit=6)
    for i in range(short.chern.limit + 1):
        assert short.chern.component(i) == long.chern.component(i)


def test_section_codim_bounds():
    ambient = tangent_bundle(GR25).total
    with pytest.raises(ValueError):
        section_chern(ambient, -1)
    with pytest.raises(ValueError):
        section_chern(ambient, 6)


def test_index_requires_multiple_of_sigma1():
    model = SectionModel(GR25, 0, unit_total(GR25, 1))
    with pytest.raises(ValueError):
        model.index


# ---------------------------------------------------------------------------
# planes and their intersection matrix

def test_plane_normal_bundles():
    w5 = w5_model()
    xi = PlaneClass(GR25, (2, 2), "Xi")
    pi = PlaneClass(GR25, (3, 1), "Pi")
    assert plane_normal_bundle(w5, xi) == (0, 2)
    assert plane_normal_bundle(w5, pi) == (0, 1)
    v14 = v14_model()
    assert plane_normal_bundle(v14, PlaneClass(GR26, (4, 2))) == (-1, 2)


def test_plane_intersection_matrix():
    w5 = w5_model()
    planes = (PlaneClass(GR25, (2, 2)), PlaneClass(GR25, (3, 1)))
    matrix = plane_intersection_matrix(w5, planes)
    assert matrix == [[2, -1], [-1, 1]]
    det = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    assert det == 1


def test_plane_matrix_reads_h2_decomposition_from_ambient():
    # sigma_1^4 = 3 sigma_{3,1} + 2 sigma_{2,2} forces h^2 = 2 Xi + 3 Pi
    w5 = w5_model()
    planes = (PlaneClass(GR25, (2, 2)), PlaneClass(GR25, (3, 1)))
    explicit = plane_intersection_matrix(w5, planes, h2_coefficients=(2, 3))
    assert explicit == plane_intersection_matrix(w5, planes)


def test_plane_matrix_inconsistent_systems():
    w5 = w5_model()
    planes = (PlaneClass(GR25, (2, 2)), PlaneClass(GR25, (3, 1)))
    with pytest.raises(InconsistentPairingError):
        plane_intersection_matrix(w5, planes, h2_coefficients=(0, 0))
    with pytest.raises(InconsistentPairingError):
        plane_intersection_matrix(w5, planes, h2_coefficients=(0, 4))
    with pytest.raises(InconsistentPairingError):
        plane_intersection_matrix(w5, planes, h2_coefficients=(1, 1))


def test_plane_class_must_be_a_surface_class():
    w5 = w5_model()
    with pytest.raises(ValueError):
        plane_normal_bundle(w5, PlaneClass(GR25, (1,)))
