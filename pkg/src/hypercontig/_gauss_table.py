"""Generated by scripts/regen_gauss_table.py; do not edit by hand."""

GAUSS_RELATIONS = (
    (('+a', '-a'), (
        ((1, 0, 0), 'a*z - a'),
        ((0, 0, 0), '-a*z + 2*a + b*z - c'),
        ((-1, 0, 0), '-a + c'),
    )),
    (('+a', '+b'), (
        ((1, 0, 0), 'a'),
        ((0, 1, 0), '-b'),
        ((0, 0, 0), '-a + b'),
    )),
    (('+a', '-b'), (
        ((1, 0, 0), 'a*z - a'),
        ((0, 0, 0), 'a + b - c'),
        ((0, -1, 0), '-b + c'),
    )),
    (('+a', '+c'), (
        ((1, 0, 0), 'a*c*z - a*c'),
        ((0, 0, 1), 'a*b*z - a*c*z - b*c*z + c^2*z'),
        ((0, 0, 0), 'a*c + b*c*z - c^2*z'),
    )),
    (('+a', '-c'), (
        ((1, 0, 0), 'a'),
        ((0, 0, 0), '-a + c - 1'),
        ((0, 0, -1), '-c + 1'),
    )),
    (('-a', '+b'), (
        ((0, 1, 0), 'b*z - b'),
        ((0, 0, 0), 'a + b - c'),
        ((-1, 0, 0), '-a + c'),
    )),
    (('-a', '-b'), (
        ((0, 0, 0), 'a*z - a - b*z + b'),
        ((0, -1, 0), '-b + c'),
        ((-1, 0, 0), 'a - c'),
    )),
    (('-a', '+c'), (
        ((0, 0, 1), 'b*z - c*z'),
        ((0, 0, 0), 'c*z - c'),
        ((-1, 0, 0), 'c'),
    )),
    (('-a', '-c'), (
        ((0, 0, 0), 'a + b*z - c*z + z - 1'),
        ((0, 0, -1), 'c*z - c - z + 1'),
        ((-1, 0, 0), '-a + c'),
    )),
    (('+b', '-b'), (
        ((0, 1, 0), 'b*z - b'),
        ((0, 0, 0), 'a*z - b*z + 2*b - c'),
        ((0, -1, 0), '-b + c'),
    )),
    (('+b', '+c'), (
        ((0, 1, 0), 'b*c*z - b*c'),
        ((0, 0, 1), 'a*b*z - a*c*z - b*c*z + c^2*z'),
        ((0, 0, 0), 'a*c*z + b*c - c^2*z'),
    )),
    (('+b', '-c'), (
        ((0, 1, 0), 'b'),
        ((0, 0, 0), '-b + c - 1'),
        ((0, 0, -1), '-c + 1'),
    )),
    (('-b', '+c'), (
        ((0, 0, 1), 'a*z - c*z'),
        ((0, 0, 0), 'c*z - c'),
        ((0, -1, 0), 'c'),
    )),
    (('-b', '-c'), (
        ((0, 0, 0), 'a*z + b - c*z + z - 1'),
        ((0, 0, -1), 'c*z - c - z + 1'),
        ((0, -1, 0), '-b + c'),
    )),
    (('+c', '-c'), (
        ((0, 0, 1), 'a*b*z - a*c*z - b*c*z + c^2*z'),
        ((0, 0, 0), 'a*c*z + b*c*z - 2*c^2*z + c^2 + c*z - c'),
        ((0, 0, -1), 'c^2*z - c^2 - c*z + c'),
    )),
)
