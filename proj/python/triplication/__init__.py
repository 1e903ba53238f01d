"""Strong starters of order 3m from triplication tables."""

from ._core import (
    Table,
    TriplicationError,
    check_congruous,
    classify,
    crt,
    enumerate_strong_starters,
    epicycloidal,
    epicycloidal_keys,
    epicycloidal_table,
    one_starter_keys,
    one_starter_table,
    random_table,
    recover,
    solve,
    solve_all,
    three_starter_keys,
)


def parse_pairs(text):
    """'2,3;4,6;1,5' -> [(2, 3), (4, 6), (1, 5)]"""
    out = []
    for item in text.split(";"):
        x, y = item.split(",")
        out.append((int(x), int(y)))
    return out


__all__ = [
    "Table",
    "TriplicationError",
    "check_congruous",
    "classify",
    "crt",
    "enumerate_strong_starters",
    "epicycloidal",
    "epicycloidal_keys",
    "epicycloidal_table",
    "one_starter_keys",
    "one_starter_table",
    "parse_pairs",
    "random_table",
    "recover",
    "solve",
    "solve_all",
    "three_starter_keys",
]
