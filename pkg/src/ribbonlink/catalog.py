"""Bundled diagrams used by the command-line verification suites."""

from .diagrams import parse_pd

# "nonalt6" is a 6-crossing alternating diagram with one crossing switched
# (the record rotated so the new incoming under-strand starts it), which
# makes the Tait signs mixed.
CATALOG = {
    "kink": "X(1,2,2,1)",
    "hopf": "X(1,4,2,3) X(3,2,4,1)",
    "trefoil": "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",
    "figure8": "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)",
    "nonalt6": "X(8,2,9,1) X(3,11,4,10) X(5,1,6,12) X(7,2,8,3) "
               "X(9,7,10,6) X(11,5,12,4)",
}

CATALOG_ORDER = ("kink", "hopf", "trefoil", "figure8", "nonalt6")


def load(name):
    try:
        return parse_pd(CATALOG[name])
    except KeyError:
        raise KeyError(f"no catalog diagram named {name!r}; "
                       f"choose from {', '.join(CATALOG_ORDER)}") from None


def all_diagrams():
    return {name: load(name) for name in CATALOG_ORDER}
