from fractions import Fraction

import pytest

from cherednik.errors import CapExceeded, TieDetected
from cherednik.groups import build_sn, build_zm
from cherednik.pbw import Parameter
from cherednik.restricted import (act_on_baby_verma, build_restricted,
                                  distinguished_rep)
from conftest import algebra, group, parameter, partition, restricted

F = Fraction


# ---- dimensions -----------------------------------------------------------------

@pytest.mark.parametrize("spec,expected", [
    ("Zm:2", 8), ("Zm:3", 27), ("Zm:1", 1), ("Sn:2:permutation", 8),
])
def test_restricted_dimension_small(spec, expected):
    assert restricted(spec, "1" if spec != "Zm:1" else "zero").dim == expected


def test_restricted_dimension_s3():
    assert restricted("Sn:3:reduced", "1").dim == 216


def test_cap_exceeded():
    g = build_sn(4, "permutation")
    with pytest.raises(CapExceeded):
        build_restricted(g, Parameter.constant(g, 1))


def test_associativity_sampled():
    import random
    R = restricted("Sn:3:reduced", "1")
    rng = random.Random(4)
    for _ in range(40):
        i, j, k = (rng.randrange(R.dim) for _ in range(3))
        lhs = R.multiply_vec(R.multiply_basis(i, j), {k: F(1)})
        rhs = R.multiply_vec({i: F(1)}, R.multiply_basis(j, k))
        assert lhs == rhs


def test_unit_law():
    R = restricted("Zm:3", "generic")
    for i in (0, R.dim // 2, R.dim - 1):
        assert R.multiply_vec(R.unit, {i: F(1)}) == {i: F(1)}
        assert R.multiply_vec({i: F(1)}, R.unit) == {i: F(1)}


# ---- baby Vermas ------------------------------------------------------------------

def test_baby_verma_z2():
    R = restricted("Zm:2", "1")
    g = R.group
    mod = R.baby_verma(g.irrep("chi0"))
    assert mod.dim == 2
    assert mod.weights == [0, 1]
    H = R.algebra
    xmat = act_on_baby_verma(H.x(0), mod)
    assert xmat[1][0] == 1 and xmat[0][1] == 0 and xmat[0][0] == 0
    ymat = act_on_baby_verma(H.y(0), mod)
    assert ymat[0][1] == 1 and ymat[1][0] == 0    # x-bar -> c * 1 with c = 1
    assert act_on_baby_verma(H.one(), mod) == [[F(1), F(0)], [F(0), F(1)]]


def test_baby_verma_dimensions():
    R = restricted("Sn:3:reduced", "1")
    g = R.group
    assert R.baby_verma(g.irrep((2, 1))).dim == 12
    assert R.baby_verma(g.irrep((3,))).dim == 6
    R1 = restricted("Zm:1", "zero")
    assert R1.baby_verma(R1.group.irrep("triv")).dim == 1


def test_baby_verma_y_action_scales_with_parameter():
    g = build_zm(2)
    R = build_restricted(g, Parameter.constant(g, F(7, 2)))
    mod = R.baby_verma(g.irrep("chi0"))
    ymat = act_on_baby_verma(R.algebra.y(0), mod)
    assert ymat[0][1] == F(7, 2)


# ---- simple heads -------------------------------------------------------------------

def test_simple_head_z2_generic():
    # at c = 1 both blocks are singletons and the standard module is simple
    R = restricted("Zm:2", "1")
    g = R.group
    head = R.simple_module(g.irrep("chi0"))
    assert head.dim == 2
    assert R.is_simple(head)


def test_simple_head_z2_zero():
    R = restricted("Zm:2", "zero")
    g = R.group
    head = R.simple_module(g.irrep("chi0"))
    assert head.dim == 1
    assert head.weights == [0]


def test_head_of_simple_is_itself():
    R = restricted("Zm:2", "1")
    g = R.group
    L = R.simple_module(g.irrep("chi0"))
    again = R.simple_head(L)
    assert again.dim == L.dim


def test_head_grading_starts_at_rep():
    R = restricted("Sn:3:reduced", "1")
    g = R.group
    L = R.simple_module(g.irrep((2, 1)))
    assert min(L.weights) == 0
    assert L.weights.count(0) == 2    # L(rep)_0 = rep


# ---- e L(rep) dimensions ----------------------------------------------------------

def test_dim_e_simple_z2_zero():
    R = restricted("Zm:2", "zero")
    g = R.group
    assert R.dim_e_simple(g.irrep("chi0")) == 1
    assert R.dim_e_simple(g.irrep("chi1")) == 0


def test_dim_e_simple_trivial_group():
    R = restricted("Zm:1", "zero")
    assert R.dim_e_simple(R.group.irrep("triv")) == 1


# ---- block partitions ----------------------------------------------------------------

def test_cm_z2_generic():
    part = partition("Zm:2", "1")
    assert [list(b.labels) for b in part.blocks] == [["chi0"], ["chi1"]]
    assert part.route_agreement
    assert part.all_singletons()


def test_cm_z2_zero():
    part = partition("Zm:2", "zero")
    assert len(part.blocks) == 1
    blk = part.blocks[0]
    assert sorted(blk.labels) == ["chi0", "chi1"]
    assert blk.distinguished == "chi0"


def test_cm_z3_zero_and_generic():
    part0 = partition("Zm:3", "zero")
    assert len(part0.blocks) == 1
    assert part0.blocks[0].distinguished == "chi0"
    partg = partition("Zm:3", "generic")
    assert len(partg.blocks) == 3 and partg.all_singletons()


def test_cm_trivial_group():
    part = partition("Zm:1", "zero")
    assert [list(b.labels) for b in part.blocks] == [["triv"]]


def test_cm_s3_generic():
    part = partition("Sn:3:reduced", "1")
    assert len(part.blocks) == 3
    assert part.all_singletons()
    assert part.route_agreement


def test_thm_block_checks_s3():
    part = partition("Sn:3:reduced", "1")
    for blk in part.blocks:
        for lbl in blk.labels:
            expected = 1 if lbl == blk.distinguished else 0
            assert part.verification["e_dims"][str(lbl)] == expected
        rpt = part.verification["center_surjectivity"][str(blk.distinguished)]
        assert rpt["surjective"]
        assert rpt["dim_end"] == rpt["dim_center_image"]


def test_center_surjectivity_z2():
    R = restricted("Zm:2", "1")
    rpt = R.center_surjectivity_on_baby_verma(R.group.irrep("chi0"))
    assert rpt == {"dim_end": 1, "dim_center_image": 1, "surjective": True}


def test_center_surjectivity_s3_two_dim_block():
    R = restricted("Sn:3:reduced", "1")
    rpt = R.center_surjectivity_on_baby_verma(R.group.irrep((2, 1)))
    assert rpt["surjective"]


def test_center_surjectivity_fails_off_distinguished():
    """The surjectivity statement is sharp: at c = 0 the S_3 block is
    {all three irreducibles} with the trivial rep distinguished, and the
    center does not surject onto End of the standard module at (2,1)."""
    R = restricted("Sn:3:reduced", "zero")
    part = R.cm_partition(seed=0, verify=False)
    assert len(part.blocks) == 1
    assert str(part.blocks[0].distinguished) == "(3,)"
    good = R.center_surjectivity_on_baby_verma(R.group.irrep((3,)))
    bad = R.center_surjectivity_on_baby_verma(R.group.irrep((2, 1)))
    assert good["surjective"]
    assert not bad["surjective"]
    assert bad["dim_end"] == 4 and bad["dim_center_image"] == 1


def test_center_idempotent_identities():
    R = restricted("Zm:3", "generic")
    prods, unit = R.center_structure()
    from cherednik.comalg import idempotents_of_commutative_algebra
    idems = idempotents_of_commutative_algebra(prods, unit,
                                               conductor=R.group.conductor)
    alg_mul = R.multiply_vec
    zbasis = R.center()
    vecs = []
    for coords in idems:
        vec = {}
        for c, z in zip(coords, zbasis):
            for k, v in z.items():
                vec[k] = vec.get(k, F(0)) + c * v
        vecs.append({k: v for k, v in vec.items() if v})
    total = {}
    for e in vecs:
        assert alg_mul(e, e) == e
        for k, v in e.items():
            total[k] = total.get(k, F(0)) + v
    assert {k: v for k, v in total.items() if v} == R.unit


def test_skew_backend_agrees_at_zero():
    p1 = partition("Zm:3", "zero")
    R2 = restricted("Zm:3", "zero", backend="skew")
    p2 = R2.cm_partition(seed=0, verify=False)
    shape = lambda p: sorted(sorted(map(str, b.labels)) for b in p.blocks)
    assert shape(p1) == shape(p2)


def test_block_fingerprints_distinguish():
    part = partition("Sn:3:reduced", "1")
    fps = [b.fingerprint for b in part.blocks]
    assert len(set(fps)) == len(fps)


def test_distinguished_rep_tie_detected():
    with pytest.raises(TieDetected):
        distinguished_rep(["a", "b"], {"a": 1, "b": 1})
    assert distinguished_rep(["a", "b"], {"a": 0, "b": 1}) == "a"
    assert distinguished_rep(["a"], {"a": 5}) == "a"


def test_partition_payload_schema():
    part = partition("Zm:2", "1")
    payload = part.payload()
    assert set(payload) >= {"group", "parameter", "blocks", "verified",
                            "generic_confirmed", "route_agreement"}
    for blk in payload["blocks"]:
        assert set(blk) == {"labels", "b_invariants", "distinguished"}


def test_cm_s3_permutation_rep_matches_reduced():
    """The same group in its 3-dimensional permutation representation (one
    invariant direction) yields the same block partition."""
    part_perm = partition("Sn:3:permutation", "1")
    part_red = partition("Sn:3:reduced", "1")
    shape = lambda p: sorted(sorted(map(str, b.labels)) for b in p.blocks)
    assert shape(part_perm) == shape(part_red)
    assert {str(b.distinguished) for b in part_perm.blocks} == \
        {str(b.distinguished) for b in part_red.blocks}


def test_block_count_equals_idempotent_count():
    for spec, ctag in (("Zm:3", "generic"), ("Sn:3:reduced", "1"),
                       ("Zm:2", "zero")):
        part = partition(spec, ctag)
        R = restricted(spec, ctag)
        assert len(part.blocks) == R.block_count(seed=0)


def test_nonzero_fiber_point():
    """The quotient at b != 0 keeps dimension |W|^3 (free fiber) and its
    block count matches the fiber geometry of the two-sided quotient."""
    import random
    g = build_zm(2)
    for par, expected_blocks in ((Parameter.zero(g), 1),
                                 (Parameter.constant(g, 1), 2)):
        R = build_restricted(g, par, b_point=(F(1),))
        assert R.dim == 8 and not R.graded
        rng = random.Random(2)
        for _ in range(40):
            i, j, k = (rng.randrange(R.dim) for _ in range(3))
            lhs = R.multiply_vec(R.multiply_basis(i, j), {k: F(1)})
            rhs = R.multiply_vec({i: F(1)}, R.multiply_basis(j, k))
            assert lhs == rhs
        # at c = 0 the two fiber roots are exchanged by the group: one
        # point with nilpotents; at c = 1 the fiber splits into two
        assert R.block_count(seed=1) == expected_blocks


def test_cm_partition_requires_graded_fiber():
    from cherednik.errors import CherednikError
    g = build_zm(2)
    R = build_restricted(g, Parameter.zero(g), b_point=(F(1),))
    with pytest.raises(CherednikError):
        R.cm_partition()


def test_ungraded_head_at_free_orbit():
    # over the free fiber at c = 0 the standard module is already simple
    g = build_zm(2)
    R = build_restricted(g, Parameter.zero(g), b_point=(F(1),))
    mod = R.baby_verma(g.irrep("chi0"))
    assert mod.dim == 2 and mod.weights is None
    assert R.simple_head(mod).dim == 2


def test_act_on_baby_verma_dimension_mismatch():
    from cherednik.errors import DimensionMismatch
    R = restricted("Zm:2", "1")
    mod = R.baby_verma(R.group.irrep("chi0"))
    other = algebra("Zm:3", "zero")
    with pytest.raises(DimensionMismatch):
        act_on_baby_verma(other.one(), mod)


def test_module_level_operations():
    from cherednik.restricted import (baby_verma, cm_partition, dim_e_simple,
                                      simple_head)
    g = group("Zm:2")
    par = parameter("Zm:2", "1")
    mod = baby_verma(g, par, "chi0")
    assert mod.dim == 2
    head = simple_head(mod, expect_simple=True)
    assert head.dim == 2
    part = cm_partition(g, par, seed=0, verify=False)
    assert len(part.blocks) == 2
    assert dim_e_simple(g, par, "chi0") == 1


def test_baby_verma_routes_through_stabilizer():
    from cherednik.restricted import baby_verma
    g = group("Sn:3:permutation")
    par = parameter("Sn:3:permutation", "1")
    mod = baby_verma(g, par, (2,), p=(F(1), F(1), F(0)))
    # standard module of the order-2 stabilizer: dim |W_p| * dim rep = 2
    assert mod.dim == 2


def test_graded_character_of_baby_verma():
    """Module weights reproduce dim(rep) * coinvariant Hilbert series."""
    R = restricted("Sn:3:reduced", "1")
    g = R.group
    rep = g.irrep((2, 1))
    mod = R.baby_verma(rep)
    from collections import Counter
    got = Counter(mod.weights)
    expected = Counter()
    for d, layer in enumerate(R.itx.coinvariant_basis):
        if layer:
            expected[d] = len(layer) * rep.dim
    assert got == expected
