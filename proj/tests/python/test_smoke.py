import math
import os
import sys

if "QGT_MODULE_DIR" in os.environ:
    sys.path.insert(0, os.environ["QGT_MODULE_DIR"])

import _qgt  # noqa: E402


def approx(a, b, tol=1e-9):
    return abs(a - b) <= tol


def main():
    assert _qgt.mobius(1) == 1
    assert _qgt.mobius(6) == 1
    assert _qgt.totient(12) == 4
    assert _qgt.ramanujan_sum(9, 0) == 6
    assert _qgt.cyclotomic_poly(6) == [1, -1, 1]

    f8 = _qgt.Field(2, 3)
    assert f8.q == 8
    assert f8.modulus == [1, 1, 0, 1]
    rows = f8.table()
    assert rows[4]["power"] == "a^3" and rows[4]["polynomial"] == "1+a"
    assert f8.mul(2, 2) == 4
    assert f8.trace(1) == 1

    f9 = _qgt.Field(3, 2)
    rep = _qgt.mub_odd_verify(f9)
    assert rep["bases"] == 10 and rep["pass"]

    rep = _qgt.mub_even_verify(2)
    assert rep["bases"] == 5 and rep["pass"]

    r = _qgt.Ring(3)
    assert r.size == 64
    assert len(r.teichmuller) == 8
    a, b = r.two_adic(5)
    assert r.add(a, r.add(b, b)) == 5

    g = _qgt.gauss_sum_field(_qgt.Field(5, 1), 1, 1)
    assert approx(abs(g), math.sqrt(5))

    code = _qgt.code_distance(7, _qgt.Field(2, 1), [1, 1, 0, 1])
    assert code["k"] == 4 and code["d_min"] == 3 and not code["is_mds"]

    pg = _qgt.pg_census(2, _qgt.Field(2, 1))
    assert pg["points"] == 7 and pg["max_arc"] == 4

    rows = _qgt.lock_sweep(10)
    assert rows[0][0] == 2 and len(rows) == 9

    assert _qgt.bruck_ryser_excluded(6)
    assert not _qgt.bruck_ryser_excluded(4)

    print("python smoke ok")


if __name__ == "__main__":
    main()
