import pytest

from hochschild.engine import (
    Analysis,
    PreconditionError,
    analyze,
    kernel_description,
    verify_infinite_part,
)
from hochschild.grading import NotWeightedHomogeneousError
from hochschild.poly import Polynomial


def curve_a(k):
    return Polynomial(2, {(k + 1, 0): 1, (0, 2): 1})


def curve_d(k):
    return Polynomial(2, {(2, 1): 1, (0, k - 1): 1})


def surface_d(k):
    return Polynomial(3, {(2, 0, 0): 1, (0, 2, 1): 1, (0, 0, k): 1})


def test_a2_curve_cohomology_details():
    r = analyze(curve_a(2))
    assert r.crosscheck == "agree"
    assert r.milnor == 2
    assert [d.structure for d in r.degrees] == \
        ["A", "A + C^2", "C^2", "C^2", "C^2", "C^2", "C^2"]
    # weights (2, 3), degree 6: Milnor part lives at weights 0 and 2,
    # the odd colon-quotient part at weights 6 and 8
    assert r.degrees[2].oracle_graded == {0: 1, 2: 1}
    assert r.degrees[3].oracle_graded == {6: 1, 8: 1}
    assert r.degrees[3].top_weight == 8


def test_a2_curve_homology_details():
    r = analyze(curve_a(2), direction="homology")
    assert r.crosscheck == "agree"
    assert [d.structure for d in r.degrees][:3] == \
        ["A", "A^2/(A grad f)", "C^2"]
    # HH_2 = Milnor algebra shifted by w1 + w2 = 5
    assert r.degrees[2].oracle_graded == {5: 1, 7: 1}


def test_route_for_d_curve():
    an = Analysis(curve_d(5))
    route = an.route()
    assert route is not None
    assert route.dim == 5
    # J = <f, d2 f> has colength 10, K has colength 5
    assert len(route.basis) == 5


def test_route_uses_non_zero_divisor_back_substitution():
    # E7 curve: d2 f is a zero divisor, so the route must solve for g2
    f = Polynomial(2, {(3, 0): 1, (1, 3): 1})
    an = Analysis(f)
    route = an.route()
    assert route is not None
    assert route.back == (1,)
    assert route.dim == 7


def test_shared_analysis_between_directions():
    an = Analysis(surface_d(4))
    coh = analyze(an.f, direction="cohomology", analysis=an)
    hom = analyze(an.f, direction="homology", analysis=an)
    assert coh.crosscheck == "agree" and hom.crosscheck == "agree"
    assert coh.degrees[3].finite_dim == hom.degrees[3].finite_dim == 5


def test_verify_infinite_part_h1_curve():
    an = Analysis(curve_a(2))
    r = analyze(an.f, analysis=an)
    d, w = an.ws.degree, an.ws.weights
    assert verify_infinite_part(r.degrees[0], an, 0)
    assert verify_infinite_part(r.degrees[1], an, 2 * d - w[0] - w[1])
    # the wrong shift must not validate
    assert not verify_infinite_part(r.degrees[1], an, 0)


def test_kernel_families_verified():
    for f in (curve_a(3), curve_d(5), surface_d(4),
              Polynomial(3, {(2, 0, 0): 1, (0, 3, 0): 1, (0, 0, 4): 1}),
              Polynomial(2, {(3, 0): 1, (1, 3): 1})):
        desc = kernel_description(Analysis(f))
        assert desc.verified
        assert desc.families


def test_kernel_families_d_surface_names():
    desc = kernel_description(Analysis(surface_d(5)))
    names = {fam.name for fam in desc.families}
    assert {"grad_wedge_e1", "grad_wedge_e2", "grad_wedge_e3",
            "d_surface_b", "d_surface_a"} <= names


def test_non_weighted_homogeneous_rejected():
    f = Polynomial(2, {(2, 0): 1, (3, 0): 1})
    with pytest.raises(NotWeightedHomogeneousError):
        analyze(f)


def test_non_isolated_singularity_structural_mode_fails():
    f = Polynomial(2, {(2, 1): 1})   # z1^2 z2, non-isolated
    with pytest.raises((PreconditionError, NotWeightedHomogeneousError)):
        analyze(f, mode="structural")


def test_graded_mode_skips_crosscheck():
    r = analyze(curve_a(1), mode="graded", p_max=2)
    assert r.crosscheck == "skipped"
    assert all(d.expected_graded is None for d in r.degrees)
    assert all(d.oracle_graded is not None for d in r.degrees)


def test_structural_mode_skips_oracle():
    r = analyze(curve_a(1), mode="structural", p_max=2)
    assert r.crosscheck == "skipped"
    assert all(d.oracle_graded is None for d in r.degrees)


def test_smooth_surface_has_zero_finite_parts():
    f = Polynomial(3, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 1): 1})
    r = analyze(f)
    assert r.milnor == 0
    assert r.crosscheck == "agree"
    assert all(d.finite_dim == 0 for d in r.degrees if d.finite_dim is not None)
