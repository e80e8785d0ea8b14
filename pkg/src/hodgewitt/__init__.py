"""Exact slope-number and Hodge-Witt-number calculus for varieties in characteristic p.

Given Frobenius slopes, Hodge numbers and domino numbers, compute slope
numbers m^{i,j} and Hodge-Witt numbers h_W^{i,j}, compare Newton, slope-number
and Hodge polygons, and check the hypothesis chain

    Hodge-Witt + slope-number symmetry => Hodge-Witt symmetry => Hodge symmetry

on concrete profiles.
"""

from .catalog import (
    CatalogEntry,
    CatalogError,
    abelian_variety,
    curve,
    elliptic_curve,
    get_entry,
    k3,
    kunneth_product,
    list_entries,
    list_ids,
    point,
    random_profile,
    wedge_power,
)
from .hodge_witt import (
    EkedahlResult,
    apply_ekedahl_equality,
    check_betti_parity,
    check_hodge_symmetry,
    check_hodge_witt_symmetry,
    check_mazur_ogus,
    hodge_witt_numbers,
)
from .polygon import (
    Polygon,
    PolygonDomainError,
    PolygonError,
    lies_on_or_above,
    polygon_from_slope_multiset,
    polygons_equal,
)
from .profile import (
    ZERO_DOMINOES,
    CohomologyProfile,
    DominoesUnknownError,
    DominoTable,
    Flags,
    HypothesisError,
    MissingHodgeDataError,
    NumberTable,
    ProfileError,
    SlopeMultiset,
    Violation,
    betti_number,
    check_slope_duality,
    hodge_polygon,
    is_ordinary,
    newton_polygon,
    validate_profile,
)
from .profile_io import (
    ProfileFormatError,
    dumps_profile,
    load_profile,
    loads_profile,
    profile_from_dict,
    profile_to_dict,
)
from .rational import format_rational, parse_rational
from .report import CHECK_IDS, CheckResult, Evidence, VerificationReport
from .slopes import (
    check_slope_symmetry,
    slope_number_polygon,
    slope_number_table,
    slope_numbers,
)
from .verifier import verify_main_theorem

__version__ = "0.1.0"
