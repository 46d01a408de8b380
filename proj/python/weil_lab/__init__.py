"""Weight-0 Weil numbers, Brauer invariants, and cyclic-extension searches.

Thin re-export of the compiled extension. Structured results come back
as JSON strings matching the CLI report layout; rationals are exact
"num/den" strings.
"""

from ._core import (  # noqa: F401
    condition_c,
    construct_weil_json,
    cyclic_invariant,
    enumerate_m,
    field_json,
    first_hit_l,
    invariants_json,
    kernel_basis,
    power_obstruction,
    schema_version,
    search_l_json,
    splitting_json,
    torsion_character_check,
    wieferich_search,
)

__all__ = [
    "condition_c",
    "construct_weil_json",
    "cyclic_invariant",
    "enumerate_m",
    "field_json",
    "first_hit_l",
    "invariants_json",
    "kernel_basis",
    "power_obstruction",
    "schema_version",
    "search_l_json",
    "splitting_json",
    "torsion_character_check",
    "wieferich_search",
]
