"""Golden matrices for the path graphs on 3 and 10 vertices."""

WALK_Q_PATH3 = [
    [1, 2, 6],
    [1, 4, 12],
    [1, 2, 6],
]

REDUCED_PATH3 = [
    [1, 2],
    [1, 4],
]

WALK_Q_PATH10 = [
    [1, 2, 6, 20, 70, 252, 924, 3432, 12870, 48620],
    [1, 4, 14, 50, 182, 672, 2508, 9438, 35750, 136134],
    [1, 4, 16, 62, 238, 912, 3498, 13442, 51764, 199746],
    [1, 4, 16, 64, 254, 1002, 3938, 15442, 60468, 236568],
    [1, 4, 16, 64, 256, 1022, 4068, 16142, 63868, 252072],
    [1, 4, 16, 64, 256, 1022, 4068, 16142, 63868, 252072],
    [1, 4, 16, 64, 254, 1002, 3938, 15442, 60468, 236568],
    [1, 4, 16, 62, 238, 912, 3498, 13442, 51764, 199746],
    [1, 4, 14, 50, 182, 672, 2508, 9438, 35750, 136134],
    [1, 2, 6, 20, 70, 252, 924, 3432, 12870, 48620],
]

REDUCED_PATH10 = [
    [1, 2, 6, 20, 70],
    [1, 4, 14, 50, 182],
    [1, 4, 16, 62, 238],
    [1, 4, 16, 64, 254],
    [1, 4, 16, 64, 256],
]

WALK_A_PATH3 = [
    [1, 1, 2],
    [1, 2, 2],
    [1, 1, 2],
]
