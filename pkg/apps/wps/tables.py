"""
Published lists of weighted projective 3- and 4-spaces that pass the
criterion, as (weights, relation, n).
"""

# c_i < 50 and a, b <= 50
PUBLISHED_THREE_SPACES = [
    ((47, 13, 12, 30), (1, 1, 5, 2), 1),
    ((19, 41, 15, 20), (1, 1, 4, 3), 3),
    ((43, 17, 15, 20), (1, 1, 4, 3), 1),
    ((26, 49, 15, 25), (1, 1, 5, 3), 3),
    ((11, 32, 18, 27), (2, 1, 3, 2), 2),
    ((13, 28, 18, 27), (2, 1, 3, 2), 2),
    ((17, 20, 18, 27), (2, 1, 3, 2), 1),
    ((47, 7, 18, 27), (1, 1, 3, 2), 1),
    ((23, 44, 18, 45), (2, 1, 5, 2), 2),
    ((29, 32, 18, 45), (2, 1, 5, 2), 1),
    ((23, 20, 22, 33), (2, 1, 3, 2), 1),
    ((25, 16, 22, 33), (2, 1, 3, 2), 1),
    ((29, 20, 26, 39), (2, 1, 3, 2), 1),
    ((31, 16, 26, 39), (2, 1, 3, 2), 1),
    ((29, 50, 27, 36), (2, 1, 4, 3), 2),
    ((31, 46, 27, 36), (2, 1, 4, 3), 1),
    ((35, 38, 27, 36), (2, 1, 4, 3), 1),
    ((43, 49, 27, 45), (2, 1, 5, 3), 1),
    ((44, 47, 27, 45), (2, 1, 5, 3), 1),
    ((17, 33, 28, 42), (3, 1, 3, 2), 1),
    ((19, 27, 28, 42), (3, 1, 3, 2), 1),
    ((37, 16, 30, 45), (2, 1, 3, 2), 1),
    ((23, 27, 32, 48), (3, 1, 3, 2), 1),
    ((43, 46, 33, 44), (2, 1, 4, 3), 1),
    ((47, 38, 33, 44), (2, 1, 4, 3), 1),
    ((49, 34, 33, 44), (2, 1, 4, 3), 1),
]

# search(3, 50) also finds these; both pass the tetrahedron and 3d checks
UNPUBLISHED_THREE_SPACES = [
    (11, 45, 26, 39),
    (13, 45, 28, 42),
]

# a, b, c_i < 65
PUBLISHED_FOUR_SPACES = [
    ((47, 13, 12, 30, 60), (1, 1, 5, 2, 1), 1),
    ((19, 11, 13, 52, 52), (1, 3, 4, 1, 1), 3),
    ((21, 10, 13, 52, 52), (2, 1, 4, 1, 1), 1),
    ((19, 41, 15, 20, 60), (1, 1, 4, 3, 1), 3),
    ((43, 17, 15, 20, 60), (1, 1, 4, 3, 1), 1),
    ((22, 7, 17, 51, 51), (2, 1, 3, 1, 1), 1),
    ((11, 32, 18, 27, 54), (2, 1, 3, 2, 1), 2),
    ((13, 28, 18, 27, 54), (2, 1, 3, 2, 1), 2),
    ((17, 20, 18, 27, 54), (2, 1, 3, 2, 1), 1),
    ((47, 7, 18, 27, 54), (1, 1, 3, 2, 1), 1),
    ((25, 7, 19, 57, 57), (2, 1, 3, 1, 1), 1),
    ((53, 7, 20, 30, 60), (1, 1, 3, 2, 1), 1),
    ((15, 7, 26, 52, 52), (3, 1, 2, 1, 1), 1),
    ((9, 13, 29, 58, 58), (5, 1, 2, 1, 1), 1),
    ((17, 7, 29, 58, 58), (3, 1, 2, 1, 1), 1),
    ((19, 7, 32, 64, 64), (3, 1, 2, 1, 1), 1),
]


def space_key(weights) -> tuple:
    """P(a, b, c) and P(b, a, c) are the same space."""
    a, b, *c = weights
    return (min(a, b), max(a, b), *c)
