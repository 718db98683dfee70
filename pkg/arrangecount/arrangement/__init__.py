from .charpoly import (
    POSET_BUDGET,
    WHITNEY_BUDGET,
    PosetNode,
    deletion_restriction_check,
    generic_charpoly,
    intersection_poset,
    mobius_charpoly,
    whitney_charpoly,
    zaslavsky_bounded,
    zaslavsky_regions,
)
from .families import (
    ArrangementFamily,
    FamilyKind,
    extended_catalan_forms,
    four_line_arrangement,
    instantiate,
)
from .flats import FlatSystem, is_central, is_essential, rank
from .hyperplane import Arrangement, Hyperplane
