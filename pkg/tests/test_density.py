import io
import json
from fractions import Fraction

import pytest

import brute
from apcover.density import (
    argmax_upto,
    compare_ratio,
    limit_ratio_sq,
    profile,
    q_point,
    write_csv,
    write_jsonl,
)
from apcover.sequence import count_leq


@pytest.mark.parametrize(
    "lead, level, value, count",
    [
        (4, 0, 4, 4),
        (1, 2, 26, 16),
        (2, 3, 170, 44),
    ],
)
def test_q_point_examples(lead, level, value, count):
    q = q_point(lead, level)
    assert (q.value, q.count) == (value, count)


def test_q_point_validation():
    with pytest.raises(ValueError):
        q_point(0, 3)
    with pytest.raises(ValueError):
        q_point(5, 3)
    with pytest.raises(ValueError):
        q_point(1, -1)


def test_q_point_consistent_with_count_leq():
    for lead in (1, 2, 3, 4):
        for level in range(21):
            q = q_point(lead, level)
            assert count_leq(q.value) == q.count


def test_limit_ratio_sq_values():
    assert limit_ratio_sq(1) == 15
    assert limit_ratio_sq(2) == Fraction(27, 2)
    assert limit_ratio_sq(3) == Fraction(147, 11)
    assert limit_ratio_sq(4) == Fraction(96, 7)
    # the maximum is at lead 1: 15 > 96/7 > 27/2 > 147/11
    assert (
        limit_ratio_sq(1)
        > limit_ratio_sq(4)
        > limit_ratio_sq(2)
        > limit_ratio_sq(3)
    )
    with pytest.raises(ValueError):
        limit_ratio_sq(0)


def test_compare_ratio_examples():
    assert compare_ratio(26, 25) == 1
    assert compare_ratio(26, 26) == 0
    assert compare_ratio(19, 18) == -1
    with pytest.raises(ValueError):
        compare_ratio(0, 5)


def test_compare_ratio_is_exact():
    # counts 16/16, values 26/27: 16^2*27 > 16^2*26
    assert compare_ratio(26, 27) == 1
    assert compare_ratio(27, 26) == -1


def test_profile_level_zero():
    prof = profile(0)
    assert [(s.n, s.count) for s in prof.samples] == [
        (1, 1),
        (2, 2),
        (3, 3),
        (4, 4),
    ]
    assert prof.argmax.n == 4


def test_profile_argmax_at_level_20():
    prof = profile(20)
    assert len(prof.samples) == 84
    assert prof.argmax.n == q_point(1, 20).value
    values = [s.n for s in prof.samples]
    assert values == sorted(values)


def test_profile_sample_fields():
    for s in profile(6).samples:
        assert s.ratio_num == s.count * s.count
        assert s.ratio_den == s.n
        exact = (s.count * s.count / s.n) ** 0.5
        assert abs(s.ratio - exact) <= 1e-12 * exact


@pytest.mark.parametrize(
    "n_max, expected",
    [(1, 1), (4, 4), (30, 26), (1000, 426)],
)
def test_argmax_upto_small(n_max, expected):
    assert argmax_upto(n_max) == expected


def test_argmax_upto_matches_full_scan_to_2000():
    elements = brute.elements_upto(2000)
    for n_max in (2, 3, 7, 50, 333, 2000):
        assert argmax_upto(n_max) == brute.argmax_full_scan(elements, n_max)


def test_argmax_at_1e6_frozen_and_cross_checked():
    n_max = 10**6
    assert argmax_upto(n_max) == 436_906
    assert brute.argmax_full_scan(brute.elements_upto(n_max), n_max) == 436_906


def test_csv_export_golden():
    buf = io.StringIO()
    write_csv(profile(1).samples, buf)
    assert buf.getvalue() == (
        "n,count,ratio\n"
        "1,1,1\n"
        "2,2,1.41421356237\n"
        "3,3,1.73205080757\n"
        "4,4,2\n"
        "6,6,2.44948974278\n"
        "10,8,2.52982212813\n"
        "14,10,2.67261241912\n"
        "18,12,2.82842712475\n"
    )


def test_jsonl_export():
    buf = io.StringIO()
    write_jsonl(profile(0).samples, buf)
    lines = buf.getvalue().splitlines()
    assert len(lines) == 4
    first = json.loads(lines[0])
    assert first == {
        "n": 1,
        "count": 1,
        "ratio_num": 1,
        "ratio_den": 1,
        "ratio": 1.0,
    }
    assert list(json.loads(lines[3]).items()) == [
        ("n", 4),
        ("count", 4),
        ("ratio_num", 16),
        ("ratio_den", 4),
        ("ratio", 2.0),
    ]


def test_exports_byte_stable():
    a, b = io.StringIO(), io.StringIO()
    samples = profile(8).samples
    write_csv(samples, a)
    write_csv(profile(8).samples, b)
    assert a.getvalue() == b.getvalue()
    a, b = io.StringIO(), io.StringIO()
    write_jsonl(samples, a)
    write_jsonl(profile(8).samples, b)
    assert a.getvalue() == b.getvalue()
