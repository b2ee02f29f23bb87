"""Small hand-checked grids shared by several test modules."""

# 3x3 worked example: input and the output of the weight-ordered repair
EXAMPLE_IN = [[0, 0, 0], [1, 0, 1], [0, 0, 1]]
EXAMPLE_OUT = [[0, 0, 1], [1, 0, 1], [0, 1, 0]]

# 4x3 tiling that cannot be repaired when a bound is 1
BOUND_ONE_ROWS = [[1, 0, 1, 1], [0, 1, 0, 1], [1, 1, 0, 0]]

# 6x6 pair for the naive cyclic schedule with bounds 3
NAIVE_LEFT = [
    [0, 0, 1, 0, 1, 0],
    [1, 0, 1, 0, 1, 1],
    [1, 1, 0, 1, 0, 1],
    [0, 1, 1, 0, 0, 1],
    [0, 0, 1, 1, 0, 1],
    [1, 0, 0, 0, 1, 1],
]
NAIVE_RIGHT = [
    [0, 0, 1, 0, 1, 0],
    [1, 0, 1, 0, 1, 1],
    [1, 1, 0, 1, 0, 1],
    [0, 1, 1, 0, 0, 1],
    [0, 0, 1, 1, 1, 0],
    [1, 0, 0, 0, 1, 1],
]
