import pytest

from src.dell import (
    ambient_context,
    check_endomorphism_transfer,
    dell_upper,
    endo_transfer,
    ext2_vanishing_via_dell,
    fac_context,
    global_dell_estimate,
    is_self_injective,
    rel_syzygy,
    right_approx,
    stable_syzygy,
    syzygy_chain,
)
from src.data.enumerate import enumerate_modules
from src.errors import PreconditionError
from src.modrep import is_isomorphic, regular_module, standard_modules
from src.tautilt import annihilator, dual_quotient


def _indecomposables_a2(std_a2):
    (s1, s2), (p1, _), _ = std_a2
    return [s1, s2, p1]


def test_ambient_context_registers_projectives(a3z):
    ctx = ambient_context(a3z)
    assert ctx.label == f"{a3z.name}-mod"
    assert len(ctx.projective_ids) == 3
    assert ctx.contains(regular_module(a3z))


def test_stable_syzygies_over_zero_relation_algebra(a3z, std_a3z):
    ctx = ambient_context(a3z)
    s1, s2, s3 = std_a3z.simples
    first = stable_syzygy(ctx, s1, 1)
    assert first.total_multiplicity == 1
    assert is_isomorphic(first.module(a3z), s2)
    assert stable_syzygy(ctx, s1, 2).summands == []
    assert stable_syzygy(ctx, s3, 0).summands == []
    assert rel_syzygy(ctx, s1).dim == 1
    with pytest.raises(ValueError):
        stable_syzygy(ctx, s1, -1)


def test_syzygy_chain_stabilizes(a3z, std_a3z):
    ctx = ambient_context(a3z)
    chain = syzygy_chain(ctx, std_a3z.simples, depth=3)
    assert chain.certain
    assert chain.stabilized_at == 2
    # projectives plus S1, S2, then plus S2, then projectives only
    assert [len(level) for level in chain.levels] == [5, 4, 3, 3]


def test_dell_of_simple_over_a2(a2, std_a2):
    ctx = ambient_context(a2)
    pool = _indecomposables_a2(std_a2)
    s1 = std_a2.simples[0]
    result = dell_upper(ctx, s1, pool=pool, pool_complete=True)
    assert result.bounded
    assert result.level == 1
    assert result.exact and result.verified
    assert result.pd_bound == 1
    assert str(result) == "Bounded(1, exact)"
    # without a complete pool the same level is only an upper bound
    loose = dell_upper(ctx, s1)
    assert loose.level == 1 and not loose.exact


def test_dell_of_projective_is_zero(a2, std_a2):
    ctx = ambient_context(a2)
    result = dell_upper(ctx, std_a2.projectives[1])
    assert str(result) == "Bounded(0, exact)"
    assert result.witness == []


def test_dell_over_self_injective_nakayama(n32):
    assert is_self_injective(n32)
    ctx = ambient_context(n32)
    for S in standard_modules(n32).simples:
        result = dell_upper(ctx, S)
        assert result.bounded and result.level == 0
        assert result.exact and result.verified
        assert len(result.witness) == 1
        # Ω of a simple is again simple, so the projective dimension is not finite
        assert result.pd_bound is None


def test_dell_record_serializes_witness(n32):
    ctx = ambient_context(n32)
    record = dell_upper(ctx, standard_modules(n32).simples[0]).to_record()
    assert record.status == "bounded"
    assert record.level == 0
    assert len(record.witness) == 1
    assert "# multiplicity 1" in record.witness[0]


def test_global_estimate_over_a2(a2, std_a2):
    assert not is_self_injective(a2)
    ctx = ambient_context(a2)
    estimate = global_dell_estimate(ctx, _indecomposables_a2(std_a2), complete=True)
    assert estimate.bound == 1
    assert estimate.modules == 3
    assert estimate.unknown == 0
    assert estimate.scope == "complete finite-type pool"
    partial = global_dell_estimate(ctx, _indecomposables_a2(std_a2)[:2])
    assert partial.scope == "pool of 2 modules"


def test_fac_context_needs_support_tau_tilting(std_a2, apr_tilting):
    with pytest.raises(PreconditionError):
        fac_context(std_a2.projectives[0])
    ctx = fac_context(apr_tilting)
    assert ctx.label == "fac(P1⊕S1)"
    assert len(ctx.projectives) == 2
    s2 = std_a2.simples[1]
    assert not ctx.contains(s2)
    with pytest.raises(PreconditionError):
        rel_syzygy(ctx, s2)
    with pytest.raises(PreconditionError):
        dell_upper(ctx, s2)


def test_dell_in_fac_of_tau_tilting(tstar):
    ctx = fac_context(tstar)
    dabar = dual_quotient(annihilator(tstar))
    result = dell_upper(ctx, dabar)
    # D(Ā) lies in add(T*), so it is projective in fac(T*)
    assert str(result) == "Bounded(0, exact)"
    assert result.pd_bound == 0


def test_right_approximation(apr_tilting, std_a2):
    s1, s2 = std_a2.simples
    f = right_approx(apr_tilting, s1)
    assert f.is_homomorphism()
    assert f.is_surjective()
    with pytest.raises(PreconditionError):
        right_approx(apr_tilting, s2)


def test_ext2_certificate_through_projective_dimension(a3z, std_a3z):
    ctx = ambient_context(a3z)
    P1 = std_a3z.projectives[0]
    cert = ext2_vanishing_via_dell(P1, std_a3z.simples[0], ctx)
    assert cert.applicable and cert.route == "pd"
    assert cert.ext2_dim == 0
    assert cert.shift_identity and cert.syzygy_vanishing
    assert cert.consistent


def test_ext2_certificate_requires_context_projective(a3z, std_a3z):
    ctx = ambient_context(a3z)
    s1 = std_a3z.simples[0]
    with pytest.raises(PreconditionError):
        ext2_vanishing_via_dell(s1, s1, ctx)


def test_ext2_certificate_not_applicable_without_self_orthogonality(tstar):
    ctx = fac_context(tstar)
    cert = ext2_vanishing_via_dell(tstar, dual_quotient(annihilator(tstar)), ctx)
    assert not cert.applicable
    assert "not self-orthogonal" in cert.note


def test_endomorphism_algebra_of_tstar(tstar):
    transfer = endo_transfer(tstar)
    B = transfer.algebra
    assert B.dim == 4
    assert len(B.vertices) == 3
    assert transfer.functor(transfer.module).dim == 4
    assert transfer.dual_module().dim == tstar.dim
    assert transfer.check()["F(DAbar)=DT"]


def test_endomorphism_transfer_checks(apr_tilting, tstar):
    v = check_endomorphism_transfer(apr_tilting)
    assert v.theorem == "endomorphism-transfer"
    assert v.applicable and v.consistent
    assert v.conditions["pd_finite"] and v.conditions["one_tilting"]
    assert v.witness["B_dim"] == 3
    skipped = check_endomorphism_transfer(tstar)
    assert not skipped.applicable


def test_ext2_certificate_follows_long_syzygy_chains(loc2):
    ctx = ambient_context(loc2)
    T = regular_module(loc2)
    S = standard_modules(loc2).simples[0]
    cert = ext2_vanishing_via_dell(T, S, ctx)
    assert cert.route == "pd"
    assert cert.shift_identity and cert.syzygy_vanishing
    assert cert.syzygy_levels == 5
    assert cert.consistent
    assert ext2_vanishing_via_dell(T, S, ctx, shift_degrees=3).syzygy_levels == 4


def test_ext2_certificate_stops_at_zero_syzygy(a3z, std_a3z):
    ctx = ambient_context(a3z)
    cert = ext2_vanishing_via_dell(regular_module(a3z), std_a3z.simples[0], ctx)
    assert cert.syzygy_levels == 3
    assert cert.consistent


def test_endomorphism_transfer_functor_conditions(apr_tilting):
    v = check_endomorphism_transfer(apr_tilting)
    assert v.conditions["F(DAbar)=DT"]
    assert v.conditions["hom_fidelity"]
    assert v.conditions["witness_transports"] is True
    assert v.conditions["bridge"] is True


def test_endomorphism_transfer_bridge_at_positive_level(a3z):
    pool = enumerate_modules(a3z, 2)
    v = check_endomorphism_transfer(regular_module(a3z), pool=pool, pool_complete=True)
    assert v.applicable and v.consistent
    assert v.conditions["witness_transports"] is True
    assert v.conditions["bridge"] is True
    assert v.witness["dell_B_certified"] == 2
