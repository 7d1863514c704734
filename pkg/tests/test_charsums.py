import pytest

from ghwlab.charsums import (
    CycloClass,
    class_index,
    gaussian_period_bf,
    gaussian_period_closed_N2,
    period_sum_sides,
    omega_bf,
    omega_bf_all_b,
    omega_closed,
    omega_params,
)
from ghwlab.cyclo import CycInt, QuadVal, quad_to_cyc
from ghwlab.errors import InconsistentParams, LogOfZero, NotADivisor, ZeroA
from ghwlab.gf import build_field

from .oracles import PolyField, cyclotomic_power


def brute_period(ctx, N, i):
    """Independent period: traces by Frobenius conjugates over the class alpha^i <alpha^N>."""
    P = PolyField(ctx.p, ctx.modulus)
    gen = P.fast_pow(ctx.alpha.coeffs, N)
    x = P.fast_pow(ctx.alpha.coeffs, i)
    exps = []
    for _ in range((ctx.q - 1) // N):
        exps.append(P.trace(x))
        x = P.mul(x, gen)
    return CycInt(ctx.p, cyclotomic_power(ctx.p, exps))


def test_class_index_basics():
    F = build_field(3, 6)
    assert class_index(F, 4, F.one) == 0
    assert class_index(F, 4, F.alpha) == 1
    with pytest.raises(LogOfZero):
        class_index(F, 4, F.zero)
    with pytest.raises(NotADivisor):
        class_index(F, 5, F.one)


def test_prime_field_in_class_zero_of_order_p_plus_1():
    F = build_field(3, 6)
    assert [class_index(F, 4, y) for y in (1, 2)] == [0, 0]


def test_classes_partition():
    F = build_field(5, 2)
    for N in (2, 3, 4, 6, 8, 12, 24):
        seen = []
        for i in range(N):
            cls = CycloClass(F, N, i)
            assert len(list(cls)) == len(cls) == 24 // N
            seen.extend(cls.codes().tolist())
        assert sorted(seen) == list(range(1, 25))


@pytest.mark.parametrize("p,m", [(3, 2), (3, 4), (5, 2), (7, 2), (3, 3)])
def test_periods_sum_to_minus_one(p, m):
    F = build_field(p, m)
    q1 = F.q - 1
    for N in [N for N in range(1, q1 + 1) if q1 % N == 0]:
        total = sum((gaussian_period_bf(F, N, i) for i in range(N)), CycInt.integer(p, 0))
        assert total == CycInt.integer(p, -1)


def test_period_values_f9_and_f5():
    F9 = build_field(3, 2)
    assert gaussian_period_bf(F9, 2, 0) == CycInt.integer(3, 1)
    assert gaussian_period_bf(F9, 2, 1) == CycInt.integer(3, -2)
    F5 = build_field(5, 1)
    assert gaussian_period_bf(F5, 2, 0) == CycInt(5, cyclotomic_power(5, [1, 4]))


@pytest.mark.parametrize("p,m,N", [(3, 2, 2), (3, 3, 2), (5, 2, 3), (7, 2, 8), (3, 4, 5)])
def test_period_against_independent_oracle(p, m, N):
    F = build_field(p, m)
    for i in range(N):
        assert gaussian_period_bf(F, N, i) == brute_period(F, N, i)


def test_closed_n2_values():
    assert gaussian_period_closed_N2(3, 2, 0) == QuadVal(3, 2, 0)
    assert gaussian_period_closed_N2(5, 1, 0) == QuadVal(5, -1, 1)
    for p, m in [(3, 1), (3, 5), (5, 3), (7, 3), (13, 2)]:
        assert gaussian_period_closed_N2(p, m, 0) + gaussian_period_closed_N2(p, m, 1) == QuadVal(p, -2, 0)


@pytest.mark.parametrize("p,m", [(p, m) for p in (3, 5, 7, 11, 13) for m in range(1, 5) if p**m <= 20_000])
def test_quadratic_period_closed_form(p, m):
    F = build_field(p, m)
    for i in (0, 1):
        assert quad_to_cyc(p, gaussian_period_closed_N2(p, m, i)) == gaussian_period_bf(F, 2, i)


def test_omega_small_cases():
    F = build_field(3, 2)
    # M = 4, d = 2, a = 1: Omega(1, 0) = 2 * eta_0^{(2,9)} = 2
    assert omega_bf(F, F.one, F.zero, 4) == CycInt.integer(3, 2)
    # M = q - 1: Omega(a, b) = sum chi((a + b) x)
    for a in range(1, 9):
        for b in range(9):
            s = F.code(F.add(F.elem(a), F.elem(b)))
            want = CycInt.integer(3, 8 if s == 0 else -1)
            assert omega_bf(F, a, b, 8) == want


def test_omega_b_zero_is_scaled_period():
    F = build_field(7, 2)
    params = omega_params(7, 2, 8)
    for a in range(1, F.q):
        t = class_index(F, params.d, a)
        assert omega_bf(F, a, 0, 8) == gaussian_period_bf(F, params.d, t).scale(params.d)
        assert omega_closed(F, params, a, 0).spike_coeff == 0


def test_omega_params():
    P = omega_params(3, 2, 4)
    assert (P.f, P.h, P.d, P.first_case) == (1, 1, 2, True)
    P = omega_params(7, 2, 8)
    assert (P.f, P.h, P.d, P.first_case) == (1, 1, 6, True)
    P = omega_params(3, 4, 2)
    assert (P.f, P.h, P.first_case) == (1, 2, False)
    with pytest.raises(InconsistentParams):
        omega_params(3, 3, 4)  # m not a multiple of 2f
    with pytest.raises(InconsistentParams):
        omega_params(3, 6, 4)  # h = 3 shares a factor with p
    with pytest.raises(InconsistentParams):
        omega_params(5, 2, 4)  # 5^f is never -1 mod 4


def test_omega_zero_a():
    F = build_field(3, 2)
    with pytest.raises(ZeroA):
        omega_bf(F, F.zero, F.one, 4)
    with pytest.raises(ZeroA):
        omega_closed(F, omega_params(3, 2, 4), F.zero, F.one)


def test_omega_single_matches_row():
    F = build_field(7, 2)
    row = omega_bf_all_b(F, 5, 8)
    for b in range(F.q):
        assert row[b] == omega_bf(F, 5, b, 8)


@pytest.mark.parametrize(
    "p,m,M",
    [(3, 2, 4), (7, 2, 8), (3, 2, 2), (5, 2, 3), (5, 2, 2), (7, 2, 4), (5, 2, 6), (3, 4, 2), (3, 4, 4), (3, 4, 5)],
)
def test_omega_closed_exhaustive(p, m, M):
    F = build_field(p, m)
    params = omega_params(p, m, M)
    for a in range(1, F.q):
        row = omega_bf_all_b(F, a, M)
        for b in range(F.q):
            assert omega_closed(F, params, a, b).to_cyc(F) == row[b], (a, b)


@pytest.mark.parametrize("p", [3, 7, 11])
def test_period_sum_identity(p):
    lhs, rhs = period_sum_sides(p, 2)
    assert lhs == rhs
    assert lhs.is_rational()


def test_period_sum_identity_m6():
    # s = 3 odd and gcd(6, 7) = 1; right side lives in F_49
    lhs, rhs = period_sum_sides(7, 6)
    assert lhs == rhs
