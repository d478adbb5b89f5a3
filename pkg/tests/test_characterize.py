"""Theorem-level procedures: build, characterize, scans, enumeration."""

import pytest

from cyclochar import characterize as ch, codes, gf, polyring as pr
from cyclochar.errors import ConditionFailedError, InvalidArgumentError
from cyclochar.numth import rem


class TestCheckConditions:
    def test_example1(self):
        assert ch.check_conditions(4, 3, 2, 5) == (True, True)

    def test_binary_first_condition_vacuous(self):
        for e1 in range(3):
            for e2 in range(7):
                assert ch.check_conditions(2, 3, e1, e2)[0]

    def test_shared_factor_detected(self):
        cond1, cond2 = ch.check_conditions(3, 4, 0, 2)
        assert not cond2  # gcd(40, 2) = 2

    def test_remainder_normalization(self):
        # huge and negative exponents reduce before the gcd
        assert ch.check_conditions(4, 3, 2 + 3 * 10**9, 5 - 63 * 10**9) == (True, True)


class TestBuildCode:
    def test_example1_report(self):
        ctx = gf.field_for(4, 3)
        rep = ch.build_code(ctx, 4, 3, 2, 5)
        assert (rep.n, rep.dim, rep.min_distance) == (63, 4, 47)
        assert rep.distribution.entries == {0: 1, 47: 189, 48: 63, 63: 3}
        assert rep.three_weight_match and rep.griesmer_optimal
        assert (rep.dual_b1, rep.dual_b2, rep.dual_b3) == (0, 0, 3843)
        assert rep.dual_min_weight == 3

    def test_q2_k3(self):
        ctx = gf.field_for(2, 3)
        rep = ch.build_code(ctx, 2, 3, 0, 1)
        assert (rep.n, rep.dim, rep.min_distance) == (7, 4, 3)
        assert sorted(rep.distribution.entries) == [0, 3, 4, 7]

    def test_example2_single_code(self):
        ctx = gf.field_for(3, 4)
        rep = ch.build_code(ctx, 3, 4, 0, 1)
        assert (rep.n, rep.dim, rep.min_distance) == (80, 5, 53)
        assert rep.distribution.enumerator() == "1 + 160z^53 + 80z^54 + 2z^80"

    def test_condition_failure_names_gcd(self):
        ctx = gf.field_for(3, 2)
        with pytest.raises(ConditionFailedError) as exc:
            ch.build_code(ctx, 3, 2, 0, 2)
        assert "gcd(Delta,e2)=2" in exc.value.failed

    def test_wrong_context_rejected(self):
        ctx = gf.field_for(2, 3)
        with pytest.raises(InvalidArgumentError):
            ch.build_code(ctx, 4, 3, 2, 5)


class TestCharacterizeCode:
    def test_example1_roundtrip(self):
        ctx = gf.field_for(4, 3)
        h = pr.poly_mul(
            ctx, pr.minimal_polynomial(ctx, 42), pr.minimal_polynomial(ctx, 5)
        )
        assert ch.characterize_code(ctx, h, 4, 3) == (2, 5)

    def test_reject_condition_violation(self):
        # q=3, k=2: e2=2 shares a factor with Delta=4; oracle must also fail
        ctx = gf.field_for(3, 2)
        h = pr.poly_mul(
            ctx, pr.minimal_polynomial(ctx, 0), pr.minimal_polynomial(ctx, 2)
        )
        assert ch.characterize_code(ctx, h, 3, 2) is None
        code = codes.cyclic_code(ctx, h)
        wd = codes.weight_distribution_bruteforce(ctx, code)
        assert wd != codes.three_weight_distribution(3, 2)

    def test_reject_wrong_dimension(self):
        ctx = gf.field_for(4, 3)
        assert ch.characterize_code(ctx, pr.minimal_polynomial(ctx, 5), 4, 3) is None

    def test_reject_multiple_linear_factors(self):
        # q=4, k=2: three degree-one factors, total degree k+1
        ctx = gf.field_for(4, 2)
        h = pr.ONE
        for a in (0, 5, 10):
            h = pr.poly_mul(ctx, h, pr.minimal_polynomial(ctx, a))
        assert pr.degree(h) == 3
        assert ch.characterize_code(ctx, h, 4, 2) is None

    def test_reject_two_full_degree_factors(self):
        ctx = gf.field_for(2, 5)
        h = pr.poly_mul(
            ctx, pr.minimal_polynomial(ctx, 1), pr.minimal_polynomial(ctx, 3)
        )
        assert ch.characterize_code(ctx, h, 2, 5) is None

    def test_invalid_divisor_rejected(self):
        ctx = gf.field_for(2, 3)
        with pytest.raises(InvalidArgumentError):
            ch.characterize_code(ctx, (1, 1, 1), 2, 3)  # x^2+x+1 does not divide x^7-1

    @pytest.mark.parametrize("q,k", [(2, 3), (3, 2), (4, 2), (2, 4), (3, 3)])
    def test_roundtrip_every_qualifying_code(self, q, k):
        ctx = gf.field_for(q, k)
        for spec in ch.enumerate_codes(ctx, q, k):
            h = codes.parity_check_from_exponents(ctx, spec.e1, spec.e2)
            got = ch.characterize_code(ctx, h, q, k)
            assert got is not None
            e1, e2 = got
            assert rem(e1, q - 1) == rem(spec.e1, q - 1)
            assert e2 == spec.e2

    @pytest.mark.parametrize("q,k", [(3, 2), (2, 4), (4, 2)])
    def test_converse_negative_exhaustive(self, q, k):
        # every coset-product parity check of total degree k+1 that the
        # decision rejects must fail the distribution oracle, and vice versa
        from itertools import combinations

        from cyclochar.numth import coset_representatives

        ctx = gf.field_for(q, k)
        n = q**k - 1
        table = codes.three_weight_distribution(q, k)
        reps = coset_representatives(q, n)
        polys = {rep: pr.minimal_polynomial(ctx, rep) for rep in reps}
        for count in (1, 2, 3):
            for combo in combinations(reps, count):
                if sum(pr.degree(polys[r]) for r in combo) != k + 1:
                    continue
                h = pr.ONE
                for r in combo:
                    h = pr.poly_mul(ctx, h, polys[r])
                accepted = ch.characterize_code(ctx, h, q, k) is not None
                wd = codes.weight_distribution_bruteforce(
                    ctx, codes.cyclic_code(ctx, h)
                )
                assert accepted == (wd == table)


class TestOneWeight:
    def test_linear_factor_weight(self):
        ctx = gf.field_for(4, 3)
        assert ch.one_weight_check(ctx, 42, 4, 1, 63) == 63

    def test_full_degree_weight(self):
        ctx = gf.field_for(4, 3)
        assert ch.one_weight_check(ctx, 5, 4, 3, 63) == 48

    def test_blocked_by_u(self):
        ctx = gf.field_for(4, 3)
        assert ch.one_weight_check(ctx, 3, 4, 3, 63) is None

    def test_wrong_kprime(self):
        ctx = gf.field_for(4, 3)
        with pytest.raises(InvalidArgumentError):
            ch.one_weight_check(ctx, 5, 4, 2, 63)

    def test_divisibility_precondition(self):
        ctx = gf.field_for(4, 3)
        with pytest.raises(InvalidArgumentError):
            ch.one_weight_check(ctx, 5, 4, 3, 62)


class TestFullWeightDivisor:
    def test_roundtrip_table_code(self):
        ctx = gf.field_for(3, 2)
        rep = ch.build_code(ctx, 3, 2, 0, 1)
        got = ch.full_weight_divisor(ctx, rep.code)
        assert got == pr.minimal_polynomial(ctx, 0)

    def test_roundtrip_nonzero_e1(self):
        ctx = gf.field_for(4, 2)
        rep = ch.build_code(ctx, 4, 2, 1, 1)
        got = ch.full_weight_divisor(ctx, rep.code)
        assert got == pr.minimal_polynomial(ctx, rem(ctx.delta * 1, ctx.m))

    def test_repetition_code(self):
        ctx = gf.field_for(2, 3)
        code = codes.cyclic_code(ctx, pr.minimal_polynomial(ctx, 0))
        assert ch.full_weight_divisor(ctx, code) == (1, 1)  # x - 1 over F_2

    def test_simplex_has_no_full_weight_words(self):
        ctx = gf.field_for(2, 3)
        code = codes.cyclic_code(ctx, pr.minimal_polynomial(ctx, 1))
        with pytest.raises(InvalidArgumentError):
            ch.full_weight_divisor(ctx, code)


class TestTwoWeightGapScan:
    def test_q2_k4_has_a_solved_two_weight_code(self):
        ctx = gf.field_for(2, 4)
        entries = ch.two_weight_gap_scan(ctx, 2, 4)
        solved = [e for e in entries if e.two_weight and e.kprime == 4]
        assert solved, "expected a full-degree two-weight code at (2, 4)"
        for e in solved:
            assert abs(e.weights[0] - e.weights[1]) != 1
            assert e.solution is not None

    @pytest.mark.parametrize("q,k", [(4, 2), (3, 3), (5, 2), (2, 6)])
    def test_scan_completes_without_violations(self, q, k):
        ctx = gf.field_for(q, k)
        entries = ch.two_weight_gap_scan(ctx, q, k)
        for e in entries:
            if e.two_weight:
                assert abs(e.weights[0] - e.weights[1]) != 1

    def test_one_weight_codes_flagged_not_two_weight(self):
        ctx = gf.field_for(2, 3)
        entries = ch.two_weight_gap_scan(ctx, 2, 3)
        by_exp = {e.exponent: e for e in entries}
        assert not by_exp[0].two_weight  # repetition code
        assert not by_exp[1].two_weight  # simplex


class TestEnumerateCodes:
    def test_example2_full_listing(self):
        ctx = gf.field_for(3, 4)
        specs = ch.enumerate_codes(ctx, 3, 4)
        assert len(specs) == 16
        listing = {(spec.delta * spec.e1 % spec.n, spec.e2) for spec in specs}
        assert listing == {
            (d, e2)
            for d in (0, 40)
            for e2 in (1, 7, 11, 13, 17, 23, 41, 53)
        }

    def test_q2_k3_reps(self):
        ctx = gf.field_for(2, 3)
        specs = ch.enumerate_codes(ctx, 2, 3)
        assert [(s.e1, s.e2) for s in specs] == [(0, 1), (0, 3)]

    @pytest.mark.parametrize("q,k", [(2, 4), (3, 3), (4, 2), (5, 2)])
    def test_every_enumerated_code_builds(self, q, k):
        ctx = gf.field_for(q, k)
        for spec in ch.enumerate_codes(ctx, q, k):
            rep = ch.build_code(ctx, q, k, spec.e1, spec.e2)
            assert rep.three_weight_match
