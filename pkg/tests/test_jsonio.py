"""JSON round trips for quartics, curvature tensors, and coframes."""

import json

import pytest

from cubicdisc.scalars import EXACT, FLOAT
from cubicdisc import jsonio, irrep, hk, models, orbit

bk = EXACT


def test_scalar_roundtrip_exact():
    x = bk.scalar("3/4", -2, 0, "1/6")
    d = jsonio.scalar_to_json(x, bk)
    assert d == {"a": "3/4", "b": "-2", "c": "0", "d": "1/6"}
    assert jsonio.scalar_from_json(d, bk) == x


def test_scalar_float_form():
    d = jsonio.scalar_to_json(complex(1.5, -2.0), FLOAT)
    assert d == {"re": 1.5, "im": -2.0}
    assert jsonio.scalar_from_json(d, FLOAT) == complex(1.5, -2.0)
    with pytest.raises(ValueError):
        jsonio.scalar_from_json(d, bk)


def test_quartic_roundtrip():
    q = irrep.s_hat(bk)
    text = jsonio.dumps(q)
    data = json.loads(text)
    assert data["kind"] == "quartic"
    assert len(data["components"]) == 35
    back = jsonio.loads(text, bk)
    assert back == q


def test_quartic_roundtrip_random():
    q = orbit.random_quartic(42, bk)
    assert jsonio.loads(jsonio.dumps(q), bk) == q


def test_hk_roundtrip():
    K = hk.kappa(irrep.s_hat(bk))
    text = jsonio.dumps(K)
    back = jsonio.loads(text, bk)
    assert back == K


def test_exact_payload_loads_into_float_backend():
    q = irrep.s_hat(bk)
    qf = jsonio.loads(jsonio.dumps(q), FLOAT)
    v = qf.S[0, 1, 2, 3]
    assert abs(v - (-0.75)) < 1e-12


def test_coframe_roundtrip():
    cs = models.compact_model(bk)
    text = jsonio.dumps(cs)
    back = jsonio.loads(text, bk)
    assert back.h == cs.h
    for k in range(models.N_FORMS):
        assert set(back.d[k]) == set(cs.d[k])
        for key in cs.d[k]:
            assert back.d[k][key] == cs.d[k][key]
    assert back.is_closed()


def test_unknown_kind_rejected():
    with pytest.raises(ValueError):
        jsonio.loads(json.dumps({"kind": "mystery"}), bk)


def test_dumps_deterministic():
    q = irrep.s_hat(bk)
    assert jsonio.dumps(q) == jsonio.dumps(q)
