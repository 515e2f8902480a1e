"""Published values, transcribed cell by cell.

These constants are the reference side of every table diff and of the
worked-example claims. They are never used to compute anything.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict


class PublishedTable(BaseModel):
    """A printed table: row n -> values for columns l = 1..width."""

    model_config = ConfigDict(frozen=True)

    table_id: int
    title: str
    graph: str
    """Which graphs the rows describe."""

    width: int
    rows: dict[int, tuple[int, ...]]


PUBLISHED_TABLES: dict[int, PublishedTable] = {
    # -----------------------------------------------------------------------
    # Complete graphs: clique counts, excluding the empty clique
    # -----------------------------------------------------------------------
    1: PublishedTable(
        table_id=1,
        title="Number of cliques of K_n",
        graph="K_n",
        width=10,
        rows={
            1: (1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
            2: (2, 1, 0, 0, 0, 0, 0, 0, 0, 0),
            3: (3, 3, 1, 0, 0, 0, 0, 0, 0, 0),
            4: (4, 6, 4, 1, 0, 0, 0, 0, 0, 0),
            5: (5, 10, 10, 5, 1, 0, 0, 0, 0, 0),
            6: (6, 15, 20, 15, 6, 1, 0, 0, 0, 0),
            7: (7, 21, 35, 35, 21, 7, 1, 0, 0, 0),
            8: (8, 28, 56, 70, 56, 28, 8, 1, 0, 0),
            9: (9, 36, 84, 126, 126, 84, 36, 9, 1, 0),
            10: (10, 45, 120, 210, 252, 210, 120, 45, 10, 1),
        },
    ),
    # -----------------------------------------------------------------------
    # Complete graphs: vertex clique degrees
    # -----------------------------------------------------------------------
    2: PublishedTable(
        table_id=2,
        title="Vertex clique degrees of K_n",
        graph="K_n",
        width=10,
        rows={
            1: (1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
            2: (1, 1, 0, 0, 0, 0, 0, 0, 0, 0),
            3: (1, 2, 1, 0, 0, 0, 0, 0, 0, 0),
            4: (1, 3, 3, 1, 0, 0, 0, 0, 0, 0),
            5: (1, 4, 6, 4, 1, 0, 0, 0, 0, 0),
            6: (1, 5, 10, 10, 5, 1, 0, 0, 0, 0),
            7: (1, 6, 15, 20, 15, 6, 1, 0, 0, 0),
            8: (1, 7, 21, 35, 35, 21, 7, 1, 0, 0),
            9: (1, 8, 28, 56, 70, 56, 28, 8, 1, 0),
            10: (1, 9, 36, 84, 126, 126, 84, 36, 9, 1),
        },
    ),
    # -----------------------------------------------------------------------
    # Fibonacci family
    # -----------------------------------------------------------------------
    3: PublishedTable(
        table_id=3,
        title="Number of cliques of J_n(s2)",
        graph="J_n(s2)",
        width=7,
        rows={
            1: (1, 0, 0, 0, 0, 0, 0),
            2: (2, 1, 0, 0, 0, 0, 0),
            3: (3, 2, 0, 0, 0, 0, 0),
            4: (4, 3, 0, 0, 0, 0, 0),
            5: (5, 5, 1, 0, 0, 0, 0),
            6: (6, 7, 2, 0, 0, 0, 0),
            7: (7, 10, 5, 1, 0, 0, 0),
            8: (8, 13, 8, 2, 0, 0, 0),
            9: (9, 17, 12, 6, 1, 0, 0),
            10: (10, 22, 22, 16, 6, 1, 0),
            11: (11, 27, 32, 26, 11, 1, 0),
            12: (12, 33, 47, 46, 17, 7, 1),
        },
    ),
    # -----------------------------------------------------------------------
    # Modulo-k family (k not printed)
    # -----------------------------------------------------------------------
    4: PublishedTable(
        table_id=4,
        title="Number of cliques of J_n(s3)",
        graph="J_n(s3)",
        width=3,
        rows={
            1: (1, 0, 0),
            2: (2, 1, 0),
            3: (3, 2, 0),
            4: (4, 4, 1),
            5: (5, 6, 2),
            6: (6, 8, 3),
            7: (7, 10, 4),
            8: (8, 12, 5),
            9: (9, 14, 6),
            10: (10, 16, 7),
            11: (11, 18, 8),
            12: (12, 20, 9),
            13: (13, 22, 10),
            14: (14, 24, 11),
            15: (15, 26, 12),
            16: (16, 28, 13),
            17: (17, 30, 14),
            18: (18, 32, 15),
        },
    ),
    # -----------------------------------------------------------------------
    # Set family over {1, 2, 3}
    # -----------------------------------------------------------------------
    5: PublishedTable(
        table_id=5,
        title="Number of cliques of J_n(s4)",
        graph="J_n(s4)",
        width=5,
        rows={
            1: (1, 0, 0, 0, 0),
            2: (2, 1, 0, 0, 0),
            3: (3, 2, 0, 0, 0),
            4: (4, 3, 1, 0, 0),
            5: (5, 5, 2, 0, 0),
            6: (6, 8, 5, 1, 0),
            7: (7, 11, 8, 2, 0),
            8: (8, 14, 11, 3, 0),
            9: (9, 18, 17, 7, 1),
            10: (10, 21, 20, 8, 1),
            11: (11, 25, 26, 12, 2),
            12: (12, 28, 29, 13, 2),
            13: (13, 32, 36, 17, 3),
        },
    ),
}


# Worked example on J_8(s1): counts through the maximal-clique
# decomposition, the overlaps discounted, and the final census.
DISCOUNT_EXAMPLE_ORDER = 8
DISCOUNT_EXAMPLE_INITIAL: dict[int, int] = {2: 20, 3: 15}
DISCOUNT_EXAMPLE_DISCOUNTS: dict[int, int] = {1: 6, 2: 4, 3: 1}
DISCOUNT_EXAMPLE_FINAL: dict[int, int] = {1: 8, 2: 16, 3: 14}


class PrintedGraphFacts(BaseModel):
    """Invariants printed for one named graph."""

    model_config = ConfigDict(frozen=True)

    family: str
    n: int
    max_degree: int
    jaconian_set: tuple[int, ...]
    girth: int
    circumference: int


PRINTED_GRAPH_FACTS: tuple[PrintedGraphFacts, ...] = (
    PrintedGraphFacts(family="s1", n=8, max_degree=6, jaconian_set=(4,), girth=3, circumference=5),
    PrintedGraphFacts(family="s2", n=12, max_degree=8, jaconian_set=(6, 7), girth=3, circumference=7),
)
