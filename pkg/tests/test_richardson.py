import warnings

import pytest

from schubert_bd.clans import is_disconnected, is_symmetric, parse_clan
from schubert_bd.errors import IncomparablePair, NegativeVNotSupported, TypeDCase5Excluded
from schubert_bd.oracle import get_oracle
from schubert_bd.richardson import (
    CaseId,
    LengthMismatchWarning,
    evaluate_constant,
    expand_richardson_class,
    expansion_degree,
    gamma_of_pair,
    pair_case,
    structure_constant,
    target_clan,
    valid_pairs,
)
from schubert_bd.weyl import (
    CosetDescriptor,
    CosetSign,
    bruhat_leq,
    coset_max_rep,
    coset_min_rep,
    identity,
    longest_element,
    multiply,
    parse_signed_perm,
    word_to_element,
)

C = parse_clan


def P(text, t):
    return parse_signed_perm(text, t)


B_U, B_V = P("-2,-3,-4,1", "B"), P("2,3,4,1", "B")
D_U, D_V = P("-2,-3,4,1", "D"), P("2,3,1,4", "D")


@pytest.mark.parametrize("u,v,clan,case", [
    ("-2,1,-3,-4", "2,1,3,4", "-,+,-,-,-,-,-,+,-", CaseId.C1),
    ("-2,-3,1,-4", "2,1,3,4", "-,1,1,-,-,-,2,2,-", CaseId.C2),
    ("-2,-3,-1,-4", "2,1,3,4", "-,1,2,-,-,-,1,2,-", CaseId.C3),
    ("-2,-1,-3,-4", "2,1,3,4", "-,1,2,-,-,-,2,1,-", CaseId.C4),
    ("-2,-3,-4,-1", "2,3,4,1", "-,-,-,1,+,1,-,-,-", CaseId.C5),
])
def test_gamma_type_b(u, v, clan, case):
    u, v = P(u, "B"), P(v, "B")
    assert gamma_of_pair(u, v) == C(clan)
    assert pair_case(u, v).case is case


def test_gamma_type_d():
    assert gamma_of_pair(D_U, D_V) == C("-,-,1,1,2,2,-,-")
    assert gamma_of_pair(B_U, B_V) == C("-,-,-,+,-,+,-,-,-")


def test_pair_errors():
    neg_v = coset_min_rep(CosetDescriptor(CosetSign.NEGATIVE, 2), 3, "B")
    u = coset_max_rep(CosetDescriptor(CosetSign.NEGATIVE, 3), 3, "B")
    with pytest.raises(NegativeVNotSupported):
        gamma_of_pair(u, neg_v)
    u = coset_max_rep(CosetDescriptor(CosetSign.NEGATIVE, 4), 4, "D")
    v = coset_min_rep(CosetDescriptor(CosetSign.POSITIVE, 4), 4, "D")
    with pytest.raises(TypeDCase5Excluded):
        gamma_of_pair(u, v)
    u = coset_max_rep(CosetDescriptor(CosetSign.POSITIVE, 1), 3, "B")
    v = coset_min_rep(CosetDescriptor(CosetSign.POSITIVE, 3), 3, "B")
    with pytest.raises(IncomparablePair):
        gamma_of_pair(u, v)


def test_target_clan():
    assert target_clan(4, "B") == C("1,2,-,-,-,-,-,2,1")
    assert target_clan(4, "D") == C("1,2,-,-,-,-,2,1")
    assert is_symmetric(target_clan(5, "B")) and is_symmetric(target_clan(5, "D"))


def test_published_constants():
    w = word_to_element((2, 1, 3, 2, 4, 3, 4), 4, "B")
    assert structure_constant(B_U, B_V, w) == 2
    res = evaluate_constant(B_U, B_V, word=(1, 2, 1, 4, 3, 2, 1))
    assert res.value == 0 and res.clan == C("1,-,-,2,-,1,-,-,2")
    assert evaluate_constant(D_U, D_V, word=(2, 1, 3, 2, 4)).value == 1


def test_word_and_element_agree():
    word = (2, 1, 3, 2, 4, 3, 4)
    by_word = evaluate_constant(B_U, B_V, word=word)
    by_elem = evaluate_constant(B_U, B_V, w=word_to_element(word, 4, "B"))
    assert by_word.value == by_elem.value and by_word.clan == by_elem.clan


def test_length_mismatch_is_zero_with_warning():
    with pytest.warns(LengthMismatchWarning):
        res = evaluate_constant(B_U, B_V, w=identity(4, "B"))
    assert res.value == 0 and res.length_mismatch


def test_published_expansions():
    exp = expand_richardson_class(B_U, B_V)
    assert exp.degree == expansion_degree(B_U, B_V) == 7
    got = {w: c for w, c in exp.coefficients.items()}
    assert got == {word_to_element((1, 2, 1, 3, 2, 4, 3), 4, "B"): 1,
                   word_to_element((2, 1, 3, 2, 4, 3, 4), 4, "B"): 2}
    exp = expand_richardson_class(D_U, D_V)
    assert exp.degree == 5
    assert dict(exp.coefficients) == {word_to_element((1, 2, 1, 4, 2), 4, "D"): 1,
                                      word_to_element((2, 1, 3, 2, 4), 4, "D"): 1}
    assert len(exp.rows) == 28


@pytest.mark.parametrize("n,t,count", [(2, "B", 7), (3, "B", 15), (4, "B", 26), (5, "B", 40),
                                       (2, "D", 6), (3, "D", 14), (4, "D", 25), (5, "D", 39)])
def test_valid_pair_counts(n, t, count):
    pairs = valid_pairs(n, t)
    assert len(pairs) == count
    brute = 0
    for pv in range(1, n + 1):
        v = coset_min_rep(CosetDescriptor(CosetSign.POSITIVE, pv), n, t)
        for sign in CosetSign:
            for pu in range(1, n + 1):
                u = coset_max_rep(CosetDescriptor(sign, pu), n, t)
                brute += bruhat_leq(v, u)
    # D excludes case 5 even though it is never comparable anyway
    assert brute == count


@pytest.mark.parametrize("n,t", [(n, t) for t in "BD" for n in (2, 3, 4, 5)])
def test_connectedness_follows_case(n, t):
    for u, v in valid_pairs(n, t):
        case = pair_case(u, v).case
        assert is_disconnected(gamma_of_pair(u, v)) == (case in (CaseId.C1, CaseId.C2, CaseId.C3))


@pytest.mark.parametrize("n,t", [(2, "B"), (2, "D"), (3, "D")])
def test_agrees_with_oracle(n, t):
    w0 = longest_element(n, t)
    oracle = get_oracle(n, t)
    for u, v in valid_pairs(n, t):
        truth = oracle.expansion(multiply(w0, u), v)
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            exp = expand_richardson_class(u, v)
        assert {row.w: row.coefficient for row in exp.rows} == truth
