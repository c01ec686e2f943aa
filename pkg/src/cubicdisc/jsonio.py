"""JSON serialization for scalars, quartics, curvature tensors, and coframes.

Exact scalars are stored as their four rational coordinates in the number
field (strings like "3/4"); float-backend scalars as {"re": ..., "im": ...}.
Quartics store the 35 independent components keyed by nondecreasing 1-based
index words; curvature tensors store their nonzero mixed components keyed by
four-letter index words; coframes store the coefficient list of each
differential.
"""

import json
from fractions import Fraction

import numpy as np

from .scalars import EXACT, ExactScalar
from .tensors import zeros
from .hk import SymQuartic, HKTensor
from .models import CoframeSystem, LABELS, N_FORMS


def scalar_to_json(x, bk):
    if bk.name == "exact":
        return {"a": str(x.a), "b": str(x.b), "c": str(x.c), "d": str(x.d)}
    z = bk.to_complex(x)
    return {"re": z.real, "im": z.imag}


def scalar_from_json(d, bk):
    if bk.name == "exact":
        if "re" in d:
            raise ValueError("cannot load float scalars into the exact backend")
        return ExactScalar(Fraction(d["a"]), Fraction(d["b"]),
                           Fraction(d["c"]), Fraction(d["d"]))
    if "re" in d:
        return complex(d["re"], d["im"])
    s = ExactScalar(Fraction(d["a"]), Fraction(d["b"]),
                    Fraction(d["c"]), Fraction(d["d"]))
    return s.to_complex()


def _nonzero(v, bk):
    if bk.name == "exact":
        return bool(v)
    return abs(bk.to_complex(v)) > 0.0


def quartic_to_json(q):
    """The 35 independent components, keyed like "1124", sorted."""
    bk = q.bk
    out = {}
    for a in range(4):
        for b in range(a, 4):
            for c in range(b, 4):
                for d in range(c, 4):
                    key = "%d%d%d%d" % (a + 1, b + 1, c + 1, d + 1)
                    out[key] = scalar_to_json(q.S[a, b, c, d], bk)
    return {"kind": "quartic", "components": dict(sorted(out.items()))}


def quartic_from_json(data, bk=EXACT):
    import itertools
    S = zeros((4, 4, 4, 4), bk)
    for key, val in data["components"].items():
        idx = tuple(int(ch) - 1 for ch in key)
        v = scalar_from_json(val, bk)
        for perm in set(itertools.permutations(idx)):
            S[perm] = v
    return SymQuartic(S, bk)


def hk_to_json(K):
    bk = K.bk
    comps = {}
    for a in range(4):
        for b in range(4):
            for c in range(4):
                for d in range(4):
                    v = K.Kmix[a, b, c, d]
                    if _nonzero(v, bk):
                        key = "%d%d%d%d" % (a + 1, b + 1, c + 1, d + 1)
                        comps[key] = scalar_to_json(v, bk)
    return {"kind": "hk_tensor", "components": dict(sorted(comps.items()))}


def hk_from_json(data, bk=EXACT):
    Kmix = zeros((4, 4, 4, 4), bk)
    for key, val in data["components"].items():
        idx = tuple(int(ch) - 1 for ch in key)
        Kmix[idx] = scalar_from_json(val, bk)
    return HKTensor(Kmix, bk)


def coframe_to_json(cs):
    bk = cs.bk
    d = {}
    for k in range(N_FORMS):
        rows = []
        for (i, j) in sorted(cs.d[k]):
            rows.append([LABELS[i], LABELS[j], scalar_to_json(cs.d[k][(i, j)], bk)])
        d[LABELS[k]] = rows
    out = {"kind": "coframe", "labels": list(LABELS), "d": d}
    out["h"] = None if cs.h is None else scalar_to_json(cs.h, bk)
    return out


def coframe_from_json(data, bk=EXACT):
    index = {name: k for k, name in enumerate(data["labels"])}
    d = {}
    for name, rows in data["d"].items():
        form = {}
        for (l1, l2, val) in rows:
            form[(index[l1], index[l2])] = scalar_from_json(val, bk)
        d[index[name]] = form
    h = None if data.get("h") is None else scalar_from_json(data["h"], bk)
    return CoframeSystem(d, bk, h=h)


_DUMPERS = {SymQuartic: quartic_to_json, HKTensor: hk_to_json,
            CoframeSystem: coframe_to_json}
_LOADERS = {"quartic": quartic_from_json, "hk_tensor": hk_from_json,
            "coframe": coframe_from_json}


def dumps(obj):
    for cls, fn in _DUMPERS.items():
        if isinstance(obj, cls):
            return json.dumps(fn(obj), indent=2, sort_keys=True)
    raise TypeError("cannot serialize %r" % (type(obj),))


def loads(text, bk=EXACT):
    data = json.loads(text)
    kind = data.get("kind")
    if kind not in _LOADERS:
        raise ValueError("unknown payload kind %r" % (kind,))
    return _LOADERS[kind](data, bk)
