"""Golden rows for the t = 2 scan families.

Each tuple is (n, q, p1, p2, h_n, h_nq).  The class numbers were verified
against an independent reduced-form count and the published tables for this
family; the reference enumeration walks triples with q < p1 < p2.
"""

CONGRUENT_T2 = [
    (52779, 3, 73, 241, 80, 48),
    (134123, 11, 89, 137, 88, 56),
    (220971, 3, 73, 1009, 96, 128),
    (263019, 3, 73, 1201, 104, 152),
    (264603, 3, 193, 457, 104, 184),
    (274219, 11, 97, 257, 88, 136),
    (289299, 3, 73, 1321, 168, 152),
    (326091, 3, 73, 1489, 224, 160),
    (417171, 3, 241, 577, 264, 168),
    (462011, 11, 97, 433, 256, 80),
    (468003, 3, 73, 2137, 152, 312),
]

NON_CONGRUENT_T2 = [
    (42267, 3, 73, 193, 24, 96),
    (73803, 3, 73, 337, 32, 120),
    (89571, 3, 73, 409, 80, 56),
    (94827, 3, 73, 433, 72, 96),
    (98067, 3, 97, 337, 48, 104),
    (119019, 3, 97, 409, 144, 88),
    (126003, 3, 97, 433, 56, 80),
    (131619, 3, 73, 601, 88, 64),
    (132987, 3, 97, 457, 64, 168),
    (146179, 11, 97, 137, 80, 168),
]

# hypothesis numbers whose congruence holds although the theta counts rule
# congruence out: the congruence criterion is necessary, not sufficient
EXCEPTIONS = [68547, 110627, 126363, 167907]
