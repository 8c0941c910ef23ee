// Conway polynomials for p < 110, r >= 2, p^r <= 2^32.
// Coefficients ascending; the leading 1 is included.
pub(super) static CONWAY: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (2, 9, &[1, 0, 0, 0, 1, 0, 0, 0, 0, 1]),
    (2, 10, &[1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1]),
    (2, 11, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 12, &[1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1]),
    (2, 13, &[1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 14, &[1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (2, 15, &[1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 16, &[1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 17, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 18, &[1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1]),
    (2, 19, &[1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 20, &[1, 1, 0, 0, 1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (
        2,
        21,
        &[1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    ),
    (
        2,
        22,
        &[1, 0, 0, 0, 0, 1, 1, 0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    ),
    (
        2,
        23,
        &[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    ),
    (
        2,
        24,
        &[
            1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1,
        ],
    ),
    (
        2,
        25,
        &[
            1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1,
        ],
    ),
    (
        2,
        26,
        &[
            1, 1, 0, 0, 1, 0, 1, 1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1,
        ],
    ),
    (
        2,
        27,
        &[
            1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1,
        ],
    ),
    (
        2,
        28,
        &[
            1, 0, 1, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1,
        ],
    ),
    (
        2,
        29,
        &[
            1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1,
        ],
    ),
    (
        2,
        30,
        &[
            1, 1, 1, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1,
        ],
    ),
    (
        2,
        31,
        &[
            1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1,
        ],
    ),
    (
        2,
        32,
        &[
            1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1,
        ],
    ),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (3, 6, &[2, 2, 1, 0, 2, 0, 1]),
    (3, 7, &[1, 0, 2, 0, 0, 0, 0, 1]),
    (3, 8, &[2, 2, 2, 0, 1, 2, 0, 0, 1]),
    (3, 9, &[1, 1, 2, 2, 0, 0, 0, 0, 0, 1]),
    (3, 10, &[2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1]),
    (3, 11, &[1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 12, &[2, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 1]),
    (3, 13, &[1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 14, &[2, 0, 1, 2, 0, 1, 2, 1, 1, 2, 0, 0, 0, 0, 1]),
    (3, 15, &[1, 1, 2, 0, 0, 1, 0, 0, 2, 0, 0, 0, 0, 0, 0, 1]),
    (3, 16, &[2, 1, 2, 2, 2, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 17, &[1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 18, &[2, 0, 2, 0, 2, 1, 2, 0, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 19, &[1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 20, &[2, 1, 0, 2, 2, 2, 0, 0, 1, 1, 1, 1, 0, 2, 0, 0, 0, 0, 0, 0, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (5, 4, &[2, 4, 4, 0, 1]),
    (5, 5, &[3, 4, 0, 0, 0, 1]),
    (5, 6, &[2, 0, 1, 4, 1, 0, 1]),
    (5, 7, &[3, 3, 0, 0, 0, 0, 0, 1]),
    (5, 8, &[2, 4, 3, 0, 1, 0, 0, 0, 1]),
    (5, 9, &[3, 1, 0, 2, 0, 0, 0, 0, 0, 1]),
    (5, 10, &[2, 1, 4, 2, 3, 3, 0, 0, 0, 0, 1]),
    (5, 11, &[3, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (5, 12, &[2, 2, 3, 4, 4, 0, 1, 1, 0, 0, 0, 0, 1]),
    (5, 13, &[3, 3, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (7, 2, &[3, 6, 1]),
    (7, 3, &[4, 0, 6, 1]),
    (7, 4, &[3, 4, 5, 0, 1]),
    (7, 5, &[4, 1, 0, 0, 0, 1]),
    (7, 6, &[3, 6, 4, 5, 1, 0, 1]),
    (7, 7, &[4, 6, 0, 0, 0, 0, 0, 1]),
    (7, 8, &[3, 2, 6, 4, 0, 0, 0, 0, 1]),
    (7, 9, &[4, 6, 0, 1, 6, 0, 0, 0, 0, 1]),
    (7, 10, &[3, 3, 2, 1, 4, 1, 1, 0, 0, 0, 1]),
    (7, 11, &[4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (11, 2, &[2, 7, 1]),
    (11, 3, &[9, 2, 0, 1]),
    (11, 4, &[2, 10, 8, 0, 1]),
    (11, 5, &[9, 0, 10, 0, 0, 1]),
    (11, 6, &[2, 7, 6, 4, 3, 0, 1]),
    (11, 7, &[9, 4, 0, 0, 0, 0, 0, 1]),
    (11, 8, &[2, 7, 1, 7, 7, 0, 0, 0, 1]),
    (11, 9, &[9, 8, 9, 0, 0, 0, 0, 0, 0, 1]),
    (13, 2, &[2, 12, 1]),
    (13, 3, &[11, 2, 0, 1]),
    (13, 4, &[2, 12, 3, 0, 1]),
    (13, 5, &[11, 4, 0, 0, 0, 1]),
    (13, 6, &[2, 11, 11, 10, 0, 0, 1]),
    (13, 7, &[11, 3, 0, 0, 0, 0, 0, 1]),
    (13, 8, &[2, 3, 2, 12, 8, 0, 0, 0, 1]),
    (17, 2, &[3, 16, 1]),
    (17, 3, &[14, 1, 0, 1]),
    (17, 4, &[3, 10, 7, 0, 1]),
    (17, 5, &[14, 1, 0, 0, 0, 1]),
    (17, 6, &[3, 3, 10, 0, 2, 0, 1]),
    (17, 7, &[14, 12, 0, 0, 0, 0, 0, 1]),
    (19, 2, &[2, 18, 1]),
    (19, 3, &[17, 4, 0, 1]),
    (19, 4, &[2, 11, 2, 0, 1]),
    (19, 5, &[17, 5, 0, 0, 0, 1]),
    (19, 6, &[2, 6, 17, 17, 0, 0, 1]),
    (19, 7, &[17, 6, 0, 0, 0, 0, 0, 1]),
    (23, 2, &[5, 21, 1]),
    (23, 3, &[18, 2, 0, 1]),
    (23, 4, &[5, 19, 3, 0, 1]),
    (23, 5, &[18, 3, 0, 0, 0, 1]),
    (23, 6, &[5, 1, 9, 9, 1, 0, 1]),
    (23, 7, &[18, 21, 0, 0, 0, 0, 0, 1]),
    (29, 2, &[2, 24, 1]),
    (29, 3, &[27, 2, 0, 1]),
    (29, 4, &[2, 15, 2, 0, 1]),
    (29, 5, &[27, 3, 0, 0, 0, 1]),
    (29, 6, &[2, 13, 17, 25, 1, 0, 1]),
    (31, 2, &[3, 29, 1]),
    (31, 3, &[28, 1, 0, 1]),
    (31, 4, &[3, 16, 3, 0, 1]),
    (31, 5, &[28, 7, 0, 0, 0, 1]),
    (31, 6, &[3, 8, 16, 19, 0, 0, 1]),
    (37, 2, &[2, 33, 1]),
    (37, 3, &[35, 6, 0, 1]),
    (37, 4, &[2, 24, 6, 0, 1]),
    (37, 5, &[35, 10, 0, 0, 0, 1]),
    (37, 6, &[2, 30, 4, 35, 0, 0, 1]),
    (41, 2, &[6, 38, 1]),
    (41, 3, &[35, 1, 0, 1]),
    (41, 4, &[6, 23, 0, 0, 1]),
    (41, 5, &[35, 14, 40, 0, 0, 1]),
    (43, 2, &[3, 42, 1]),
    (43, 3, &[40, 1, 0, 1]),
    (43, 4, &[3, 42, 5, 0, 1]),
    (43, 5, &[40, 8, 0, 0, 0, 1]),
    (47, 2, &[5, 45, 1]),
    (47, 3, &[42, 3, 0, 1]),
    (47, 4, &[5, 40, 8, 0, 1]),
    (47, 5, &[42, 1, 0, 0, 0, 1]),
    (53, 2, &[2, 49, 1]),
    (53, 3, &[51, 3, 0, 1]),
    (53, 4, &[2, 38, 9, 0, 1]),
    (53, 5, &[51, 3, 0, 0, 0, 1]),
    (59, 2, &[2, 58, 1]),
    (59, 3, &[57, 5, 0, 1]),
    (59, 4, &[2, 40, 2, 0, 1]),
    (59, 5, &[57, 8, 0, 0, 0, 1]),
    (61, 2, &[2, 60, 1]),
    (61, 3, &[59, 7, 0, 1]),
    (61, 4, &[2, 40, 3, 0, 1]),
    (61, 5, &[59, 12, 0, 0, 0, 1]),
    (67, 2, &[2, 63, 1]),
    (67, 3, &[65, 6, 0, 1]),
    (67, 4, &[2, 54, 8, 0, 1]),
    (67, 5, &[65, 2, 0, 0, 0, 1]),
    (71, 2, &[7, 69, 1]),
    (71, 3, &[64, 4, 0, 1]),
    (71, 4, &[7, 41, 4, 0, 1]),
    (71, 5, &[64, 18, 0, 0, 0, 1]),
    (73, 2, &[5, 70, 1]),
    (73, 3, &[68, 2, 0, 1]),
    (73, 4, &[5, 56, 16, 0, 1]),
    (73, 5, &[68, 9, 0, 0, 0, 1]),
    (79, 2, &[3, 78, 1]),
    (79, 3, &[76, 9, 0, 1]),
    (79, 4, &[3, 66, 2, 0, 1]),
    (79, 5, &[76, 5, 0, 0, 0, 1]),
    (83, 2, &[2, 82, 1]),
    (83, 3, &[81, 3, 0, 1]),
    (83, 4, &[2, 42, 4, 0, 1]),
    (83, 5, &[81, 9, 0, 0, 0, 1]),
    (89, 2, &[3, 82, 1]),
    (89, 3, &[86, 3, 0, 1]),
    (89, 4, &[3, 72, 4, 0, 1]),
    (97, 2, &[5, 96, 1]),
    (97, 3, &[92, 9, 0, 1]),
    (97, 4, &[5, 80, 6, 0, 1]),
    (101, 2, &[2, 97, 1]),
    (101, 3, &[99, 3, 0, 1]),
    (101, 4, &[2, 78, 1, 0, 1]),
    (103, 2, &[5, 102, 1]),
    (103, 3, &[98, 2, 0, 1]),
    (103, 4, &[5, 88, 2, 0, 1]),
    (107, 2, &[2, 103, 1]),
    (107, 3, &[105, 5, 0, 1]),
    (107, 4, &[2, 79, 13, 0, 1]),
    (109, 2, &[6, 108, 1]),
    (109, 3, &[103, 1, 0, 1]),
    (109, 4, &[6, 98, 11, 0, 1]),
];
