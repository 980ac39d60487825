"""Known classification counts, used as test targets and for context.

Keys are vertex counts (code lengths).  `*_CONNECTED` counts orbits of
connected graphs; `*_ALL` counts orbits of all graphs (the Euler transform
of the connected column).  Entries beyond n = 9 (general) and n = 12
(bipartite) are far past desk scale and serve as reference values only.
"""

LC_ORBITS_CONNECTED = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 4, 6: 11, 7: 26, 8: 101, 9: 440,
    10: 3132, 11: 40457, 12: 1274068,
}

LC_ORBITS_ALL = {
    1: 1, 2: 2, 3: 3, 4: 6, 5: 11, 6: 26, 7: 59, 8: 182, 9: 675,
    10: 3990, 11: 45144, 12: 1323363,
}

ELC_ORBITS_CONNECTED = {
    1: 1, 2: 1, 3: 2, 4: 4, 5: 10, 6: 35, 7: 134, 8: 777, 9: 6702,
    10: 104825, 11: 3370317, 12: 231557290,
}

ELC_ORBITS_ALL = {
    1: 1, 2: 2, 3: 4, 4: 9, 5: 21, 6: 64, 7: 218, 8: 1068, 9: 8038,
    10: 114188, 11: 3493965, 12: 235176097,
}

ELC_BIPARTITE_CONNECTED = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 8, 7: 15, 8: 43, 9: 110, 10: 370,
    11: 1260, 12: 5366, 13: 25684, 14: 154104, 15: 1156716, 17: 157302628,
}

ELC_BIPARTITE_ALL = {
    1: 1, 2: 2, 3: 3, 4: 6, 5: 10, 6: 22, 7: 43, 8: 104, 9: 250, 10: 720,
    11: 2229, 12: 8361, 13: 36441, 14: 199610, 15: 1395326,
}

CODES_INDECOMPOSABLE = {
    1: 1, 2: 1, 3: 2, 4: 3, 5: 6, 6: 13, 7: 30, 8: 76, 9: 220, 10: 700,
    11: 2520, 12: 10503, 13: 51368, 14: 306328, 15: 2313432,
    16: 23069977, 17: 314605256,
}

CODES_ISODUAL = {
    2: 1, 4: 1, 6: 3, 8: 10, 10: 40, 12: 229, 14: 1880,
}
