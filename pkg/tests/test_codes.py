import numpy as np
import pytest

from ghwlab.codes import (
    build_defining_set,
    codeword,
    d_mode_params,
    defining_set_from_codes,
    expected_weights,
    summarize,
    closed_length_dimension,
)
from ghwlab.errors import InvalidDMode
from ghwlab.gf import FqElem, build_field

from .oracles import PolyField, code_words, defining_set


def make(p, m, mode):
    F = build_field(p, m)
    params = d_mode_params(p, m, mode)
    return F, params, build_defining_set(F, params)


@pytest.mark.parametrize(
    "p,m,mode,n",
    [(3, 3, "one", 8), (5, 2, "special", 0), (3, 2, "special", 4), (7, 2, "special", 12), (11, 2, "special", 20)],
)
def test_defining_set_sizes(p, m, mode, n):
    F, params, D = make(p, m, mode)
    assert D.n == n
    # independent recount via polynomial arithmetic
    assert len(defining_set(PolyField(p, F.modulus), params.d)) == n


def test_defining_set_invariants():
    F, params, D = make(7, 2, "special")
    logs = [F.dlog(x) for x in D.elements]
    assert logs == sorted(logs) and len(set(logs)) == len(logs)
    assert all(F.trace(F.pow(x, params.d)) == 0 for x in D.elements)


def test_special_36_is_everything():
    # x^d lies in mu_4 inside F_9, and Tr^6_2 multiplies F_9 by 3 = 0
    F, params, D = make(3, 6, "special")
    assert D.n == 728
    assert closed_length_dimension(params) == (364, 6)
    assert not params.flags.gcd_m_p_is_1


def test_codeword_basics():
    F, _, D = make(3, 3, "one")
    assert codeword(F, D, F.zero) == (0,) * 8
    zero_msgs = [c for c in range(F.q) if not any(codeword(F, D, c))]
    assert zero_msgs == [0, 1, 2]  # the kernel is F_p
    F, _, D = make(7, 2, "special")
    assert [c for c in range(F.q) if not any(codeword(F, D, c))] == [0]


def test_codewords_match_oracle():
    for p, m, mode in [(3, 3, "one"), (3, 2, "special"), (7, 2, "special")]:
        F, params, D = make(p, m, mode)
        P = PolyField(p, F.modulus)
        oracle_D = [F.code(FqElem(x)) for x in defining_set(P, params.d)]
        assert sorted(oracle_D) == sorted(D.codes.tolist())
        ours = {codeword(F, D, a) for a in range(F.q)}
        # same coordinate order for the oracle
        ordered = [F.elem(c).coeffs for c in D.codes]
        assert ours == code_words(P, ordered)


def test_summary_one_33():
    F, _, D = make(3, 3, "one")
    s = summarize(F, D)
    assert (s.n, s.k, s.kernel_dim) == (8, 2, 1)
    assert s.weight_distribution == {0: 3, 6: 24}
    assert sum(s.weight_distribution.values()) == 27


def test_summary_special_32():
    F, params, D = make(3, 2, "special")
    s = summarize(F, D)
    assert (s.n, s.k) == (4, 2)
    assert set(s.nonzero_weights) == {2, 4} == expected_weights(params)


def test_summary_special_72():
    F, params, D = make(7, 2, "special")
    s = summarize(F, D)
    assert (s.n, s.k) == (12, 2)
    assert set(s.nonzero_weights) == {6, 12} == expected_weights(params)
    assert not s.warnings


@pytest.mark.parametrize("p,m", [(3, 2), (3, 4), (3, 5), (5, 2), (5, 3), (7, 3)])
def test_one_mode_single_weight_and_hyperplane(p, m):
    F, params, D = make(p, m, "one")
    s = summarize(F, D)
    assert s.nonzero_weights == [p ** (m - 1) - p ** (m - 2)]
    assert (s.n, s.k) == closed_length_dimension(params)
    # D u {0} is closed under addition and scaling
    tilde = set(D.codes.tolist()) | {0}
    codes = np.array(sorted(tilde))
    x, y = np.meshgrid(codes, codes)
    assert set(F.add_codes(x, y).ravel().tolist()) <= tilde
    for c in range(1, p):
        assert set(F.mul_codes(c, codes).tolist()) <= tilde


def test_hypothesis_warnings_reported():
    F, _, D = make(3, 6, "one")
    s = summarize(F, D)
    assert any("gcd(m, p) = 1" in w for w in s.warnings)
    F, _, D = make(3, 6, "special")
    s = summarize(F, D)
    assert s.n == 728 and s.closed_n == 364
    assert any("differs from brute force" in w for w in s.warnings)


def test_invalid_modes():
    with pytest.raises(InvalidDMode):
        d_mode_params(3, 3, "special")
    with pytest.raises(InvalidDMode):
        d_mode_params(3, 2, "two")


def test_custom_defining_set():
    F = build_field(3, 2)
    D = defining_set_from_codes(F, [5, 1, 1, 0, 7])
    assert D.n == 3
    assert D.params is None
    s = summarize(F, D)
    assert s.closed_n is None
