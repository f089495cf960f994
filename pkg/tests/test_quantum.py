import pytest

from sftoric.errors import IsP2, NotPrimitivePair, WrongChern
from sftoric.fan import Fan, P2_RAYS
from sftoric.laurent import QPoly
from sftoric.quantum import (
    c1_one_classes,
    c1_two_classes,
    gw_c1_1,
    gw_c1_2_point,
    primitive_pairs,
    quantum_product,
    quantum_sr_relations,
)


def qm(k, *exps_list):
    out = QPoly.zero(k)
    for item in exps_list:
        if isinstance(item, tuple) and len(item) == 2 and isinstance(item[0], int) and isinstance(item[1], tuple):
            c, exps = item
        else:
            c, exps = 1, item
        out = out + QPoly.monomial(k, exps, c)
    return out


def test_primitive_pairs_examples(bundled):
    assert primitive_pairs(bundled["F0"][0]) == [(1, 3), (2, 4)]
    assert primitive_pairs(bundled["X1"][0]) == [(1, 3), (2, 4)]
    assert len(primitive_pairs(bundled["X3"][0])) == 9
    with pytest.raises(IsP2):
        primitive_pairs(Fan(P2_RAYS))


def test_gw_c1_2_examples(bundled):
    x3 = bundled["X3"][0]
    assert gw_c1_2_point(x3, (0, 0, 1, 0, 0, 0)) == 1
    assert gw_c1_2_point(x3, (0, 0, 1, 1, 0, 0)) == 1
    assert gw_c1_2_point(x3, (0, 0, 1, 0, 1, 0)) == 0
    assert gw_c1_2_point(x3, (0, 0, 1, 1, 1, 0)) == 1
    assert gw_c1_2_point(x3, (0, 0, 1, 2, 1, 0)) == 0  # 2 D4 violates the endpoint
    with pytest.raises(WrongChern):
        gw_c1_2_point(x3, (0, 0, 2, 0, 0, 0))


def test_gw_c1_2_two_sided(bundled):
    # X8 pair {1,3}: the fiber D2 meets the singleton chains {1} and {3}
    x8 = bundled["X8"][0]
    assert gw_c1_2_point(x8, (1, 1, 1, 0, 0, 0, 0, 0)) == 1
    assert gw_c1_2_point(x8, (0, 1, 1, 0, 0, 0, 0, 0)) == 1
    assert gw_c1_2_point(x8, (1, 1, 0, 0, 0, 0, 0, 0)) == 1
    # multiplicity two on a singleton chain violates the endpoint condition
    assert gw_c1_2_point(x8, (2, 1, 0, 0, 0, 0, 0, 0)) == 0
    assert gw_c1_2_point(x8, (2, 1, 1, 0, 0, 0, 0, 0)) == 0
    # X9 pair {1,4}: fiber D2 + D3 between two singleton chains
    x9 = bundled["X9"][0]
    assert gw_c1_2_point(x9, (1, 1, 1, 1, 0, 0, 0, 0)) == 1
    assert gw_c1_2_point(x9, (0, 1, 1, 0, 0, 0, 0, 0)) == 1


def test_gw_c1_1_examples(bundled):
    x3 = bundled["X3"][0]
    assert gw_c1_1(x3, (1, 0, 0, 0, 1, 1)) == 1
    assert gw_c1_1(x3, (0, 0, 0, 0, 0, 1)) == 1
    assert gw_c1_1(x3, (1, 0, 0, 1, 1, 1)) == 1
    # disconnected support: D1 + D6 are adjacent, D1 + D5 are not
    assert gw_c1_1(x3, (1, 0, 0, 0, 0, 1)) == 1
    with pytest.raises(WrongChern):
        gw_c1_1(x3, (0, 0, 1, 0, 0, 0))


def test_gw_values_are_zero_or_one(bundled):
    import random

    rng = random.Random(13)
    from sftoric.homology import chern_number

    for name in ("X3", "X8", "X11"):
        fan = bundled[name][0]
        for _ in range(200):
            alpha = tuple(rng.randrange(3) for _ in range(fan.d))
            c1 = chern_number(fan, alpha)
            if c1 == 2:
                assert gw_c1_2_point(fan, alpha) in (0, 1)
            elif c1 == 1:
                assert gw_c1_1(fan, alpha) in (0, 1)


def test_enumerated_classes_are_bounded(bundled):
    for name, (fan, _) in bundled.items():
        for rep in c1_two_classes(fan) + c1_one_classes(fan):
            assert all(0 <= m <= fan.d + 2 for m in rep), name


def test_quantum_product_x3_worked_example(bundled):
    fan, spec = bundled["X3"]
    el = quantum_product(fan, spec, 2, 4)
    k = spec.k
    assert el.scalar == qm(k, (1, 0, 1, 2)) + QPoly.monomial(k, (1, 1, 1, 2), -1)
    # q1q3q4 (D1+D5+D6) - q1q2q3q4 (D1+D4+D5+D6), reduced: coordinates 5, 6
    # are eliminated, leaving q1q3q4(D1+D2-D3-D4) - q1q2q3q4(D1+D2-D3)
    a = qm(k, (1, 0, 1, 1))
    b = qm(k, (1, 1, 1, 1))
    assert el.divisor == (a - b, a - b, b - a, -a, QPoly.zero(k), QPoly.zero(k))


def test_quantum_product_f0(bundled):
    fan, spec = bundled["F0"]
    el13 = quantum_product(fan, spec, 1, 3)
    assert el13.scalar == qm(2, (1, 0))
    assert all(c.is_zero() for c in el13.divisor)
    el24 = quantum_product(fan, spec, 2, 4)
    assert el24.scalar == qm(2, (0, 1))
    assert all(c.is_zero() for c in el24.divisor)


def test_quantum_product_x1(bundled):
    fan, spec = bundled["X1"]
    el13 = quantum_product(fan, spec, 1, 3)
    assert el13.scalar == qm(2, (1, 1))
    assert all(c.is_zero() for c in el13.divisor)
    el24 = quantum_product(fan, spec, 2, 4)
    assert el24.scalar == qm(2, (1, 0)) + QPoly.monomial(2, (1, 1), -1)
    assert all(c.is_zero() for c in el24.divisor)


def test_quantum_product_errors(bundled):
    fan, spec = bundled["X3"]
    with pytest.raises(NotPrimitivePair):
        quantum_product(fan, spec, 1, 2)
    with pytest.raises(NotPrimitivePair):
        quantum_product(fan, spec, 3, 3)
    p2fan, p2spec = bundled["P2"]
    with pytest.raises(IsP2):
        quantum_product(p2fan, p2spec, 1, 2)


def test_quantum_product_basis_independence(bundled):
    fan, spec = bundled["X3"]
    for pair in ((2, 4), (1, 3), (3, 6)):
        default = quantum_product(fan, spec, *pair)
        for subset in ((1, 4, 5, 6), (3, 4, 5, 6), (2, 3, 4, 5)):
            other = quantum_product(fan, spec, *pair, subset=subset)
            assert other.scalar == default.scalar
            assert other.divisor == default.divisor


def test_positive_q_weight_and_classical_limit(bundled):
    # every monomial of every product has positive area at the sample point,
    # so the q -> 0 limit inside the Kahler cone recovers D_i D_j = 0
    for name, (fan, spec) in bundled.items():
        if fan.d == 3:
            continue
        for _, el in quantum_sr_relations(fan, spec):
            polys = (el.scalar,) + el.divisor
            for qp in polys:
                for exps in qp.terms:
                    weight = sum(e * t for e, t in zip(exps, spec.sample_point))
                    assert weight > 0, (name, exps)


def test_relation_count(bundled):
    for name, (fan, spec) in bundled.items():
        if fan.d == 3:
            continue
        rels = quantum_sr_relations(fan, spec)
        assert len(rels) == fan.d * (fan.d - 3) // 2, name
