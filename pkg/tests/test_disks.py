from itertools import product

import pytest

from sftoric.disks import (
    DiskClass,
    admissible_sequences,
    enumerate_admissible,
    is_admissible_class,
    is_admissible_sequence,
    maslov_index,
    open_gw,
)
from sftoric.errors import WrongMaslov
from sftoric.fan import Fan, P2_RAYS


def dc(fan, i, **mult):
    alpha = [0] * fan.d
    for key, v in mult.items():
        alpha[int(key[1:]) - 1] = v
    return DiskClass(i, tuple(alpha))


def brute_force_admissible(s, center):
    """Independent transcription of the three defining conditions."""
    if not s:
        return True
    keys = sorted(s)
    if any(s[k] < 1 for k in keys):
        return False
    if s[keys[0]] > 1 or s[keys[-1]] > 1:
        return False
    for i in keys[:-1]:
        step = s[i + 1] - s[i]
        if i < center and step not in (0, 1):
            return False
        if i >= center and step not in (0, -1):
            return False
    return True


def test_sequence_examples():
    assert is_admissible_sequence({0: 1}, 0)
    assert is_admissible_sequence({-1: 1, 0: 2, 1: 1}, 0)
    assert not is_admissible_sequence({0: 2, 1: 1}, 0)
    assert is_admissible_sequence({}, 0)
    with pytest.raises(ValueError):
        is_admissible_sequence({0: 1, 2: 1}, 0)  # gap in the interval


def test_sequence_brute_force_oracle():
    # criterion: exhaustive agreement on all chains of length <= 4, entries <= 5
    for length in range(1, 5):
        for center in range(length):
            admissible = set()
            for values in product(range(1, 6), repeat=length):
                s = dict(enumerate(values))
                expected = brute_force_admissible(s, center)
                assert is_admissible_sequence(s, center) == expected, (s, center)
                if expected:
                    admissible.add(values)
            generated = {
                tuple(seq[i] for i in range(length))
                for seq in admissible_sequences(0, length - 1, center)
            }
            assert generated == admissible, (length, center)


def test_maslov_examples(bundled):
    x3 = bundled["X3"][0]
    for i in range(1, 7):
        assert maslov_index(x3, DiskClass.basic(x3, i)) == 2
    assert maslov_index(x3, dc(x3, 1, D1=1)) == 2
    assert maslov_index(x3, dc(x3, 2, D6=1)) == 4


def test_admissible_class_examples(bundled):
    x3 = bundled["X3"][0]
    assert is_admissible_class(x3, dc(x3, 1, D1=1))
    assert is_admissible_class(x3, dc(x3, 4, D4=1, D5=1))
    assert not is_admissible_class(x3, dc(x3, 2, D1=1))
    # support must be an interval containing the basic index
    assert not is_admissible_class(x3, dc(x3, 4, D5=1))
    assert is_admissible_class(x3, dc(x3, 5, D5=1))


def test_open_gw_examples(bundled):
    x3 = bundled["X3"][0]
    for i in range(1, 7):
        assert open_gw(x3, DiskClass.basic(x3, i)) == 1
    assert open_gw(x3, dc(x3, 5, D4=1, D5=1)) == 1
    assert open_gw(x3, dc(x3, 1, D1=2)) == 0
    with pytest.raises(WrongMaslov):
        open_gw(x3, dc(x3, 2, D6=1))


def test_enumerate_examples(bundled):
    p2 = Fan(P2_RAYS)
    assert enumerate_admissible(p2) == [DiskClass.basic(p2, i) for i in (1, 2, 3)]
    x1 = bundled["X1"][0]
    out = enumerate_admissible(x1)
    assert len(out) == 5
    assert dc(x1, 4, D4=1) in out
    x3 = bundled["X3"][0]
    assert len(enumerate_admissible(x3)) == 11


def test_enumerate_order_and_invariants(bundled):
    for name, (fan, _) in bundled.items():
        out = enumerate_admissible(fan)
        keys = [(b.i, b.total_multiplicity(), b.alpha) for b in out]
        assert keys == sorted(keys), name
        assert len(out) == len(set(out)), name
        for b in out:
            assert maslov_index(fan, b) == 2, name
            assert open_gw(fan, b) == 1, name
        chains = fan.minus_two_chains()
        max_len = max((len(c) for c in chains), default=0)
        assert len(out) <= fan.d * max_len**2 + fan.d, name


def test_fano_fans_have_only_basic_classes(bundled):
    for name in ("P2", "F0", "F1", "dP2", "dP3"):
        fan = bundled[name][0]
        assert enumerate_admissible(fan) == [
            DiskClass.basic(fan, i) for i in range(1, fan.d + 1)
        ]
