"""Buchberger over exact fields: order conventions, reduced bases, radical
membership."""
import numpy as np
import pytest

from edgeideal.errors import GroebnerTimeoutError
from edgeideal.groebner import (
    PrimeField,
    RationalField,
    Ring,
    buchberger,
    field_for,
    ideal_contains_one,
    is_groebner,
    leading,
    normal_form,
    poly_str,
    radical_membership,
    s_polynomial,
)


def P(ring, *terms):
    """Build {exponents: coeff} from (coeff, exps) pairs."""
    out = {}
    for coeff, exps in terms:
        m = tuple(exps)
        assert len(m) == ring.n
        out[m] = ring.field.coerce(coeff)
    return out


def test_fields():
    q = RationalField()
    assert q.coerce(2) + q.coerce(3) == 5
    f7 = PrimeField(7)
    assert f7.mul(f7.coerce(3), f7.coerce(5)) == 1
    assert f7.div(f7.one, f7.coerce(3)) == 5  # 3 * 5 = 15 = 1 mod 7
    assert f7.coerce(-1) == 6
    assert field_for("q").name == "QQ"
    assert field_for("p:7").p == 7


def test_monomial_order_first_listed_largest():
    ring = Ring(("x", "y"), RationalField())
    key = ring.key
    # degree first, then x beats y
    assert key((2, 0)) > key((1, 1)) > key((0, 2)) > key((1, 0)) > key((0, 1))
    ring3 = Ring(("a", "b", "c"), RationalField())
    # degrevlex tie-break inside one degree: a^2 > ab > b^2 > ac > bc > c^2
    # (last variable scarcest wins, so b^2 beats ac; deglex would flip them)
    degree2 = [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]
    assert sorted(degree2, key=ring3.key, reverse=True) == degree2


def test_leading_and_poly_str():
    ring = Ring(("x", "y"), RationalField())
    f = P(ring, (1, (1, 1)), (2, (0, 1)))
    lm, lc = leading(ring, f)
    assert lm == (1, 1) and lc == 1
    assert poly_str(ring, f) == "x*y + 2*y"
    assert poly_str(ring, {}) == "0"


def test_hand_derived_reduced_basis():
    # ring k[x1, y1, x2, y2]; ideal (x1*y2, x1*y1 + x2*y2)
    # S(x1*y2, x1*y1 + x2*y2) = y1*(x1*y2) - y2*(x1*y1 + x2*y2) = -x2*y2^2
    # which is irreducible by the pair, so the reduced basis gains x2*y2^2
    ring = Ring(("x1", "y1", "x2", "y2"), RationalField())
    g1 = P(ring, (1, (1, 0, 0, 1)))
    g2 = P(ring, (1, (1, 1, 0, 0)), (1, (0, 0, 1, 1)))
    gb = buchberger(ring, [g1, g2])
    expected = [
        P(ring, (1, (1, 0, 0, 1))),
        P(ring, (1, (1, 1, 0, 0)), (1, (0, 0, 1, 1))),
        P(ring, (1, (0, 0, 1, 2))),
    ]
    assert sorted(map(sorted, gb)) == sorted(map(sorted, expected))
    assert is_groebner(ring, gb)


def test_s_polynomial_coprime_leading_terms_reduce():
    ring = Ring(("x", "y"), RationalField())
    f = P(ring, (1, (2, 0)), (1, (0, 1)))
    g = P(ring, (1, (0, 2)), (1, (1, 0)))
    basis = [(leading(ring, f)[0], leading(ring, f)[1], f),
             (leading(ring, g)[0], leading(ring, g)[1], g)]
    s = s_polynomial(ring, basis[0], basis[1])
    assert s  # nonzero before reduction
    gb = buchberger(ring, [f, g])
    assert is_groebner(ring, gb)


def test_normal_form_properties():
    ring = Ring(("x", "y", "z"), RationalField())
    rng = np.random.default_rng(61)

    def random_poly():
        out = {}
        for _ in range(int(rng.integers(1, 5))):
            m = tuple(int(v) for v in rng.integers(0, 3, size=3))
            out[m] = ring.field.coerce(int(rng.integers(-3, 4)) or 1)
        return out

    for _ in range(20):
        gens = [random_poly() for _ in range(2)]
        gb = buchberger(ring, gens)
        if ideal_contains_one(gb, ring):
            continue
        basis = [(leading(ring, p)[0], leading(ring, p)[1], p) for p in gb]
        for g in gens:
            assert normal_form(ring, g, basis) == {}
        f = random_poly()
        r = normal_form(ring, f, basis)
        assert normal_form(ring, r, basis) == r


def test_reduced_basis_independent_of_generator_order():
    ring = Ring(("x", "y", "z"), RationalField())
    gens = [
        P(ring, (1, (1, 1, 0)), (-1, (0, 0, 2))),
        P(ring, (1, (0, 1, 1)), (1, (1, 0, 0))),
        P(ring, (2, (1, 0, 1))),
    ]
    reference = None
    import itertools
    for perm in itertools.permutations(gens):
        gb = buchberger(ring, list(perm))
        canon = sorted(sorted((m, str(c)) for m, c in p.items()) for p in gb)
        if reference is None:
            reference = canon
        assert canon == reference


def test_basis_over_prime_field_matches_rationals_here():
    ring_q = Ring(("x", "y"), RationalField())
    ring_p = Ring(("x", "y"), PrimeField(32003))
    gens_q = [P(ring_q, (1, (1, 0)), (1, (0, 1))), P(ring_q, (1, (0, 2)))]
    gens_p = [P(ring_p, (1, (1, 0)), (1, (0, 1))), P(ring_p, (1, (0, 2)))]
    gb_q = buchberger(ring_q, gens_q)
    gb_p = buchberger(ring_p, gens_p)
    assert sorted(sorted(p) for p in gb_q) == sorted(sorted(p) for p in gb_p)


def test_stop_on_unit():
    ring = Ring(("x",), RationalField())
    gb = buchberger(ring, [P(ring, (1, (1,)), (1, (0,))), P(ring, (1, (1,)))],
                    stop_on_unit=True)
    assert ideal_contains_one(gb, ring)


def test_radical_membership_cases():
    ring = Ring(("x", "y"), RationalField())
    x_sq = P(ring, (1, (2, 0)))
    gb = buchberger(ring, [x_sq])
    x = P(ring, (1, (1, 0)))
    y = P(ring, (1, (0, 1)))
    xy = P(ring, (1, (1, 1)))
    x_plus_y = P(ring, (1, (1, 0)), (1, (0, 1)))
    assert radical_membership(ring, x, gb, assume_gb_prefix=len(gb))
    assert radical_membership(ring, xy, gb, assume_gb_prefix=len(gb))
    assert not radical_membership(ring, y, gb, assume_gb_prefix=len(gb))
    assert not radical_membership(ring, x_plus_y, gb, assume_gb_prefix=len(gb))


def test_radical_membership_prefix_matches_plain():
    ring = Ring(("x", "y", "z"), PrimeField(101))
    gens = [P(ring, (1, (1, 1, 0)), (1, (0, 0, 1))), P(ring, (1, (0, 2, 0)))]
    gb = buchberger(ring, gens)
    probe = P(ring, (1, (0, 1, 0)), (1, (0, 0, 1)))
    with_prefix = radical_membership(ring, probe, gb, assume_gb_prefix=len(gb))
    plain = radical_membership(ring, probe, list(gens))
    assert with_prefix == plain


def test_aux_variable_name_collision():
    ring = Ring(("z", "z_"), RationalField())
    f = P(ring, (1, (1, 0)))
    assert radical_membership(ring, f, [f])


def test_timeout_raises():
    # cyclic-style generators blow up enough that a zero budget trips first
    ring = Ring(tuple("abcd"), RationalField())
    gens = [
        P(ring, (1, (1, 0, 0, 0)), (1, (0, 1, 0, 0)), (1, (0, 0, 1, 0)), (1, (0, 0, 0, 1))),
        P(ring, (1, (1, 1, 0, 0)), (1, (0, 1, 1, 0)), (1, (0, 0, 1, 1)), (1, (1, 0, 0, 1))),
        P(ring, (1, (1, 1, 1, 1)), (-1, (0, 0, 0, 0))),
    ]
    with pytest.raises(GroebnerTimeoutError):
        buchberger(ring, gens, budget=1e-9)
