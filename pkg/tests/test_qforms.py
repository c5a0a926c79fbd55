import itertools
from math import gcd

import pytest

from polyrep.qforms import (
    CLASS_Z4,
    TABLE_ROLES,
    DiscriminantError,
    F_A2_direct,
    F_values,
    HypothesisError,
    N_by_enumeration,
    QuadForm,
    chi,
    conductor,
    dirichlet_N,
    is_fundamental,
    lemma5_closed,
    lemma7_closed,
    omega,
    positive_representations,
    prime_class,
    principal_R,
    reduced_forms,
    represent_count,
)

from conftest import brute_represent

PROJECT_D = (-3, -4, -8, -24, -40, -56, -88, -136, -184, -232, -328, -568)


@pytest.mark.parametrize(
    "d, forms, structure",
    [
        (-8, [(1, 0, 2)], "h1"),
        (-56, [(1, 0, 14), (2, 0, 7), (3, 2, 5), (3, -2, 5)], "Z4"),
        (-24, [(1, 0, 6), (2, 0, 3)], "h2"),
        (-7, [(1, 1, 2)], "h1"),
        (-84, [(1, 0, 21), (2, 2, 11), (3, 0, 7), (5, 4, 5)], "other"),
    ],
)
def test_reduced_forms_examples(d, forms, structure):
    cd = reduced_forms(d)
    assert list(cd.reduced_forms) == [QuadForm(*f) for f in forms]
    assert cd.h == len(forms)
    assert cd.structure == structure


@pytest.mark.parametrize("d", [0, 5, -1, -2, -6])
def test_reduced_forms_rejects_non_discriminants(d):
    with pytest.raises(DiscriminantError):
        reduced_forms(d)


def test_table_roles_agree_with_ambiguous_form_rule():
    for d, (i, a, a2) in TABLE_ROLES.items():
        cd = reduced_forms(d)
        assert cd.structure == "Z4"
        assert cd.role("I") == i and i.a == 1
        assert a2.is_ambiguous and a2 != i
        assert not a.is_ambiguous and cd.role("A3") == a.mirror()


def test_principal_role_is_principal_form():
    for d in range(-3, -400, -1):
        if d % 4 in (0, 1):
            cd = reduced_forms(d)
            if cd.roles:
                assert cd.role("I") == QuadForm(1, d % 2, (d % 2 - d) // 4)


def test_class_numbers_match_form_counting_by_brute_force():
    # count primitive reduced forms by scanning a wide (a, b) box
    for d in range(-3, -300, -1):
        if d % 4 not in (0, 1):
            continue
        count = 0
        for a in range(1, 40):
            for b in range(-a, a + 1):
                if (b * b - d) % (4 * a):
                    continue
                c = (b * b - d) // (4 * a)
                reduced = abs(b) <= a <= c and not ((abs(b) == a or a == c) and b < 0)
                count += reduced and gcd(a, b, c) == 1
        assert reduced_forms(d).h == count, d


@pytest.mark.parametrize("d, f", [(-8, 1), (-16, 2), (-12, 2), (-3, 1), (-27, 3), (-400, 10), (-1600, 20)])
def test_conductor_examples(d, f):
    assert conductor(d) == f
    assert is_fundamental(d) == (f == 1)


@pytest.mark.parametrize("form, n, count", [((1, 0, 2), 9, 6), ((1, 0, 14), 39, 4), ((3, 2, 5), 39, 0)])
def test_represent_count_examples(form, n, count):
    assert represent_count(form, n) == count


def test_represent_count_against_box_enumeration():
    forms = [(1, 0, 1), (1, 1, 1), (1, 0, 2), (2, 0, 3), (3, 2, 5), (5, 4, 10), (11, 2, 13), (2, 2, 2), (3, 0, 12)]
    for form in forms:
        for n in range(1, 120):
            assert represent_count(form, n) == brute_represent(form, n), (form, n)


def test_non_primitive_forms_use_content():
    for n in range(1, 300):
        assert represent_count((2, 0, 2), n) == (represent_count((1, 0, 1), n // 2) if n % 2 == 0 else 0)
        assert represent_count((2, 0, 12), n) == (represent_count((1, 0, 6), n // 2) if n % 2 == 0 else 0)


def test_mirror_forms_represent_equally():
    forms = [f for d in PROJECT_D + (-23, -39, -84) for f in reduced_forms(d).reduced_forms if f.b]
    for f in forms:
        for n in range(1, 2001):
            assert represent_count(f, n) == represent_count(f.mirror(), n)


def _unimodular(limit=3, count=20):
    mats = []
    for p, q, r, s in itertools.product(range(-limit, limit + 1), repeat=4):
        if p * s - q * r == 1 and (p, q, r, s) != (1, 0, 0, 1):
            mats.append((p, q, r, s))
    return mats[:: max(1, len(mats) // count)][:count]


def _substitute(form, mat):
    a, b, c = form
    p, q, r, s = mat
    return QuadForm(
        a * p * p + b * p * r + c * r * r,
        2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s,
        a * q * q + b * q * s + c * s * s,
    )


def test_unimodular_invariance():
    mats = _unimodular()
    assert len(mats) == 20
    for form in [QuadForm(1, 0, 14), QuadForm(3, 2, 5), QuadForm(2, 0, 3), QuadForm(1, 1, 2)]:
        base = [represent_count(form, n) for n in range(1, 501)]
        for mat in mats:
            g = _substitute(form, mat)
            assert g.discriminant == form.discriminant
            assert [represent_count(g, n) for n in range(1, 501)] == base, (form, mat)


@pytest.mark.parametrize("d, w", [(-3, 6), (-4, 4), (-56, 2), (-7, 2)])
def test_omega(d, w):
    assert omega(d) == w


@pytest.mark.parametrize("n, d, value", [(9, -8, 6), (25, -4, 12), (39, -56, 8)])
def test_dirichlet_examples(n, d, value):
    assert dirichlet_N(n, d) == value


def test_dirichlet_rejects_non_coprime():
    with pytest.raises(HypothesisError):
        dirichlet_N(2, -8)


@pytest.mark.parametrize("n, d, value", [(39, -56, 8), (1, -8, 2), (5, -8, 0)])
def test_N_by_enumeration_examples(n, d, value):
    assert N_by_enumeration(n, d) == value


@pytest.mark.parametrize("d", PROJECT_D)
def test_dirichlet_equals_enumeration(d):
    for n in range(1, 2001):
        if gcd(n, d) == 1:
            assert dirichlet_N(n, d) == N_by_enumeration(n, d), n


def test_principal_R():
    assert principal_R(9, -8) == 6
    assert principal_R(25, -4) == 12
    with pytest.raises(HypothesisError):
        principal_R(2, -8)
    with pytest.raises(HypothesisError):
        principal_R(5, -24)
    for d in (-3, -4, -7, -8, -11, -19, -43, -67, -163):
        cd = reduced_forms(d)
        for n in range(1, 500):
            if gcd(n, d) == 1:
                assert principal_R(n, d) == represent_count(cd.role("I"), n)


@pytest.mark.parametrize("p, role", [(3, "A"), (5, "A"), (23, "I"), (2, "A2"), (7, "A2"), (11, None)])
def test_prime_class_examples(p, role):
    cd = reduced_forms(-56)
    assert prime_class(p, cd) == role
    forms = [f for f in cd.reduced_forms if represent_count(f, p)]
    assert (role is None) == (not forms)


def test_F_values_examples():
    cd = reduced_forms(-56)
    assert F_values(39, cd) == (4, 0, 4)
    assert F_values(1, cd) == (1, 1, 1)
    f_i, f_a, f_a2 = F_values(25, reduced_forms(-24))
    assert f_a2 is None
    assert f_a == (represent_count((1, 0, 6), 25) - represent_count((2, 0, 3), 25)) // 2
    assert f_i == N_by_enumeration(25, -24) // 2
    with pytest.raises(HypothesisError):
        F_values(5, reduced_forms(-8))


def test_F_A2_sign_rule_matches_counts():
    for d in (-56, -136, -184, -328, -568, -39, -55, -68):
        cd = reduced_forms(d)
        for n in range(1, 1500):
            assert F_values(n, cd).F_A2 == F_A2_direct(n, cd), (d, n)


def test_chi():
    assert chi(1, -24) == 1
    assert abs(chi(25, -24)) <= 1
    for n in range(1, 600):
        assert abs(chi(n, -40)) <= 1
    with pytest.raises(HypothesisError):
        chi(7, -60)
    with pytest.raises(HypothesisError):
        chi(4, -32)  # gcd(n, f) != 1


def test_lemma5_examples():
    assert lemma5_closed(25, -24) == (represent_count((1, 0, 6), 25), represent_count((2, 0, 3), 25))
    assert lemma5_closed(49, -40) == (represent_count((1, 0, 10), 49), represent_count((2, 0, 5), 49))
    with pytest.raises(HypothesisError):
        lemma5_closed(13, -24)  # (-24/13) = -1 at odd order
    with pytest.raises(HypothesisError):
        lemma5_closed(1, -60)


@pytest.mark.parametrize("d", [-15, -20, -24, -40, -52, -88, -232, -427])
def test_lemma5_equals_enumeration(d):
    cd = reduced_forms(d)
    for n in range(1, 2001):
        try:
            got = lemma5_closed(n, d)
        except HypothesisError:
            continue
        assert got == (represent_count(cd.role("I"), n), represent_count(cd.role("A"), n)), n


def test_lemma7_examples():
    assert lemma7_closed(39, -56) == (4, 4)
    assert lemma7_closed(1, -56) == (2, 0)
    assert lemma7_closed(259, -136) == (represent_count((1, 0, 34), 259), represent_count((2, 0, 17), 259))
    with pytest.raises(HypothesisError):
        lemma7_closed(5, -24)
    with pytest.raises(HypothesisError):
        lemma7_closed(5, -63)  # Z4 but not fundamental


def test_lemma7_equals_enumeration_on_fundamental_z4():
    for d in [d for d in CLASS_Z4 if is_fundamental(d)][:12]:
        cd = reduced_forms(d)
        for n in range(1, 1001):
            want = (represent_count(cd.role("I"), n), represent_count(cd.role("A2"), n))
            assert lemma7_closed(n, d, cd) == want, (d, n)


def test_positive_representations_and_nagell():
    assert positive_representations(1, 2, 3) == [(1, 1)]
    assert positive_representations(1, 1, 5) == [(1, 2), (2, 1)]
    from polyrep.arith import primes_up_to

    for c in (1, 2, 3, 5, 11, 29):
        for d in (1, 2, 6, 10, 14):
            for p in primes_up_to(3000):
                reps = positive_representations(c, d, p)
                if c == d:
                    reps = {tuple(sorted(r)) for r in reps}
                assert len(reps) <= 1, (c, d, p)


def test_classdata_is_immutable():
    cd = reduced_forms(-56)
    with pytest.raises(TypeError):
        cd.roles["I"] = QuadForm(1, 0, 1)
    with pytest.raises(AttributeError):
        cd.d = -8
