"""Smoke test for the fibercount_py extension module."""

from fractions import Fraction

import fibercount_py as fc


def main():
    p2 = fc.Polytope([[1, 0], [0, 1], [-1, -1]])
    assert p2.dim == 2 and p2.is_reflexive()
    dual = p2.polar_dual()
    assert len(dual.lattice_points()) == 10
    assert dual.interior_points() == [[0, 0]]
    assert len(dual.boundary_points()) == 9
    assert dual.polar_dual() == p2

    half = fc.Polytope.from_json('{"dim": 2, "vertices": [["1/2", 0], [0, 1], [-1, -1]]}')
    assert Fraction(1, 2) in [c for v in half.vertices() for c in v]

    f = fc.Laurent("x + y + x^-1*y^-1")
    assert f.vars == ["x", "y"] and f.num_terms() == 3
    assert f.newton_polytope() == p2

    spec = fc.CiSpec("4;2")
    assert spec.h0() == spec.h0_oracle() == 30
    assert spec.r_boundary() == 29
    rep = spec.verify()
    assert rep.status == "PASS", rep
    assert rep.values["r"] == 29

    reports = fc.sweep(5)
    assert len(reports) == 12 and all(r.passed for r in reports)

    toric = {r.id: r.values["components"] for r in fc.toric_fixtures()}
    assert toric["P2"] == 9 and toric["P3"] == 34

    rep = fc.verify_toric([[1, 0], [1, 1], [0, 1], [-1, -1]], name="Bl1P2")
    assert rep.values["components"] == 8

    assert all(r.passed for r in fc.threefolds())

    pencil = fc.sextic_pencil()
    assert pencil["derived_identity"] and not pencil["printed_identity"]
    assert pencil["h0_minus_1"] == 2

    try:
        fc.CiSpec("3;4")
    except ValueError:
        pass
    else:
        raise AssertionError("non-Fano spec accepted")

    print("smoke test: ok")


if __name__ == "__main__":
    main()
