"""Smoke test for the compiled extension; run under ctest with the
build directory on sys.path."""

import json
import sys

import _core


def main() -> int:
    assert _core.schema_version == 1

    field = json.loads(_core.field_json(4))
    assert field["conductor"] == 4
    assert field["degree"] == 2
    assert field["torsion_order"] == 4

    splitting = json.loads(_core.splitting_json(4, 5))
    assert splitting["ramification_e"] == 1
    assert splitting["residue_degree_f"] == 1
    assert splitting["num_primes_g"] == 2

    basis = _core.kernel_basis(4, 5)
    assert basis == [[1, -1]] or basis == [[-1, 1]]

    weil = json.loads(_core.construct_weil_json(4, 5, basis[0], 1))
    assert weil["slope"]["entries"] == basis[0]
    assert weil["explicit_power"]["den"] == "5"

    prof = json.loads(_core.invariants_json(4, 5, 2, basis[0]))
    assert [entry["invariant"] for entry in prof["entries"]] == ["1/2", "1/2"]
    assert prof["division_rank"] == 4

    assert _core.first_hit_l(4, 5, 1, 100) == 13
    assert _core.first_hit_l(4, 5, 1, 12) is None
    report = json.loads(_core.search_l_json(4, 5, 1, 100))
    assert report["first_hit"] == 13
    hits = [c["l"] for c in report["candidates"] if c["hit"]]
    assert hits and hits[0] == 13
    assert _core.search_l_json(4, 5, 1, 100, "ab", 1) == _core.search_l_json(
        4, 5, 1, 100, "ab", 8
    )

    assert _core.condition_c(13, 5, 4)
    assert not _core.condition_c(13, 3, 4)

    assert _core.enumerate_m(2, 2, 4, False, 1, 50) == [5, 13, 29, 37]
    assert _core.wieferich_search(2, 10000) == [1093, 3511]
    assert _core.power_obstruction(2, 5, False) == 8
    assert _core.cyclic_invariant(1, 2, 4, 1) == "1/2"
    assert _core.torsion_character_check(4, 1)

    try:
        _core.field_json(6)
    except ValueError:
        pass
    else:
        raise AssertionError("conductor 6 should be rejected")

    print("python smoke OK")
    return 0


if __name__ == "__main__":
    sys.exit(main())
