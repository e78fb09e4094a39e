import pytest

from cayleycert.errors import SamplingError, StructureError
from cayleycert.group import ActionGen
from cayleycert.poly import RatFunc
from cayleycert.ratmap import (EquivMap, Relation, check_equivariance,
                               check_inverse_pair, check_target_relations,
                               compose, compose_pair, linear_slice, product,
                               projective_space, random_point, torus)
from cayleycert.su3 import (link_phi, link_quotient, link_segre, quotient_variety,
                            s3_gamma_group, torus_variety)


def test_random_point_torus_satisfies_relation():
    spec = torus("T", ("t1", "t2", "t3"))
    for seed in range(20):
        p = random_point(spec, seed)
        assert p[0] * p[1] * p[2] == 1
        assert all(x != 0 for x in p)


def test_random_point_linear_slice_sums_to_zero():
    spec = linear_slice("t", ("u1", "u2", "u3"))
    for seed in range(20):
        p = random_point(spec, seed)
        assert sum(p) == 0


def test_random_point_projective_not_zero():
    spec = projective_space("P", ("a", "b", "c"))
    for seed in range(20):
        p = random_point(spec, seed)
        assert any(p)


def test_random_point_quadric_relation():
    rel = Relation("torus-product", ("a11", "a12", "a21", "a22"), "a21",
                   exponents=(1, -1, -1, 1))
    spec = projective_space("Q", ("a11", "a12", "a21", "a22"), relations=(rel,),
                            multiplicative=True)
    for seed in range(20):
        p = random_point(spec, seed)
        assert p[0] * p[3] == p[1] * p[2]


def test_random_point_reject_budget():
    spec = torus("T", ("t1", "t2", "t3"))
    with pytest.raises(SamplingError):
        random_point(spec, 0, retries=5, reject=lambda p: True)


def test_identity_map_is_equivariant():
    spec, actions = torus_variety()
    group = s3_gamma_group()
    ident = EquivMap("id", spec, spec, RatFunc.variables(spec.coords),
                     group, actions, actions)
    cert = check_equivariance(ident, seed=1)
    assert cert.ok


def test_quotient_link_equivariance_and_mutation():
    pair = link_quotient()
    assert check_equivariance(pair.forward, seed=2).ok
    m = pair.forward
    swapped = EquivMap("broken", m.source, m.target,
                       (m.components[0], m.components[2], m.components[1]),
                       m.group, m.source_action, m.target_action)
    cert = check_equivariance(swapped, seed=2)
    assert not cert.ok
    failed = {v.name for v in cert.failing()}
    assert "equivariance[(1 2)]" in failed


def test_failure_carries_witness_point():
    pair = link_quotient()
    m = pair.forward
    swapped = EquivMap("broken", m.source, m.target,
                       (m.components[0], m.components[2], m.components[1]),
                       m.group, m.source_action, m.target_action)
    cert = check_equivariance(swapped, seed=2)
    witnesses = [v.witness for v in cert.failing() if v.witness]
    assert witnesses, "expected a witness point for the failing generator"


def test_semilinearity_mismatch_is_structural_failure():
    pair = link_quotient()
    m = pair.forward
    src = dict(m.source_action)
    g = src["gamma"]
    src["gamma"] = ActionGen(perm=g.perm, twist=g.twist, conjugate=False,
                             projective=g.projective)
    broken = EquivMap("broken", m.source, m.target, m.components,
                      m.group, src, m.target_action)
    cert = check_equivariance(broken, seed=2)
    assert any(v.status == "fail" and "semilinearity" in v.detail
               for v in cert.verdicts)


def test_inverse_pair_identity_maps():
    spec, actions = torus_variety()
    group = s3_gamma_group()
    ident = EquivMap("id", spec, spec, RatFunc.variables(spec.coords),
                     group, actions, actions)
    cert = check_inverse_pair(ident, ident, seed=3, trials=10)
    assert cert.ok


def test_compose_requires_matching_interface():
    q = link_quotient()
    s = link_segre()
    with pytest.raises(StructureError):
        compose(q.forward, s.forward)


def test_compose_with_identity_is_same_map():
    pair = link_quotient()
    m = pair.forward
    tspec, tactions = torus_variety()
    group = s3_gamma_group()
    ident = EquivMap("id", tspec, tspec, RatFunc.variables(tspec.coords),
                     group, tactions, tactions)
    same = compose(m, ident)
    assert same.source is m.source and same.target.same_shape(m.target)
    for a, b in zip(same.components, m.components):
        assert a == b


def test_group_relations_default_sample_width():
    # the defining relations hold at the default 50 random tuples
    from cayleycert.group import GroupSpec
    from cayleycert.ratmap import check_group_relations
    spec, table = torus_variety()
    proto = s3_gamma_group()
    grp = GroupSpec(name=proto.name, generators=tuple(table.items()),
                    order=proto.order, relations=proto.relations,
                    gamma_labels=proto.gamma_labels)
    cert = check_group_relations(spec, grp, seed=0)
    assert cert.ok
    assert all("50 random tuples" in v.detail for v in cert.verdicts)


def test_composition_of_passes_passes():
    # precomposing with a certified equivariant iso keeps verdicts green
    chain = compose_pair(link_quotient().reversed(), link_phi())
    cert = check_equivariance(chain.forward, seed=4)
    assert cert.ok
    cert2 = check_inverse_pair(chain.forward, chain.inverse, seed=4, trials=25)
    assert cert2.ok


def test_projective_rescaling_does_not_change_verdicts():
    pair = link_phi()
    m = pair.forward
    x1 = RatFunc.variable(m.source.coords, "x1")
    x2 = RatFunc.variable(m.source.coords, "x2")
    scale = x1 + 2 * x2
    # rescale the first projective block by a common polynomial
    comps = tuple((scale * c) if i < 3 else c for i, c in enumerate(m.components))
    rescaled = EquivMap("rescaled", m.source, m.target, comps,
                        m.group, m.source_action, m.target_action)
    assert check_equivariance(rescaled, seed=5).ok


def test_target_relation_validation_catches_bad_map():
    spec, actions = torus_variety()
    group = s3_gamma_group()
    qspec, qactions = quotient_variety()
    x1, x2, x3 = RatFunc.variables(qspec.coords)
    bad = EquivMap("bad", qspec, spec, (x1, x2, x3), group, qactions, actions)
    cert = check_target_relations(bad)
    assert not cert.ok


def test_inverse_pair_spot_check_counts_locus():
    pair = link_quotient()
    cert = check_inverse_pair(pair.forward, pair.inverse, seed=6, trials=40)
    assert cert.ok
    spot = [v for v in cert.verdicts if v.name.startswith("spot-check")]
    assert spot and "agreements" in spot[0].detail


def test_product_variety_flattens_blocks():
    spec = product("TxGm2", torus("T", ("t1", "t2", "t3")),
                   torus("Gm2", ("s1", "s2"), product_one=False))
    assert spec.coords == ("t1", "t2", "t3", "s1", "s2")
    p = random_point(spec, 9)
    assert p[0] * p[1] * p[2] == 1 and p[3] != 0 and p[4] != 0


def test_duplicate_coordinates_rejected():
    with pytest.raises(StructureError):
        product("bad", torus("A", ("x", "y"), product_one=False),
                torus("B", ("x", "z"), product_one=False))
