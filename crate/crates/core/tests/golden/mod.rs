//! Reference data for the acceptance suite, transcribed from published tables.

#![allow(dead_code)]

/// Range, then terms with triplets in parentheses (ranges 4 to 8).
pub const RANGE_TERMS: &[(u32, &str)] = &[
    (4, "(11, 13, 15)"),
    (5, "(19, 21, 23), (27, 29, 31)"),
    (6, "39, (43, 45, 47), (51, 53, 55), (59, 61, 63)"),
    (7, "71, (75, 77, 79), (83, 85, 87), (91, 93, 95), 103, (107, 109, 111), (115, 117, 119), (123, 125, 127)"),
    (8, "143, 151, (155, 157, 159), 167, (171, 173, 175), (179, 181, 183), (187, 189, 191), 199, (203, 205, 207), (211, 213, 215), (219, 221, 223), 231, (235, 237, 239), (243, 245, 247), (251, 253, 255)"),
];

/// Lone terms of ranges 6 to 11.
pub const LONE_TERMS: &[(u32, &str)] = &[
    (6, "39"),
    (7, "71, 103"),
    (8, "143, 151, 167, 199, 231"),
    (9, "271, 279, 295, 327, 359, 399, 407, 423, 455, 487"),
    (10, "543, 559, 567, 591, 599, 615, 655, 663, 679, 711, 743, 783, 791, 807, 839, 871, 911, 919, 935, 967, 999"),
    (11, "1055, 1071, 1079, 1103, 1111, 1127, 1167, 1175, 1191, 1223, 1255, 1295, 1303, 1319, 1351, 1383, 1423, 1431, 1447, 1479, 1511, 1567, 1583, 1591, 1615, 1623, 1639, 1679, 1687, 1703, 1735, 1767, 1807, 1815, 1831, 1863, 1895, 1935, 1943, 1959, 1991, 2023"),
];

/// Tree roots of ranges 6 to 13.
pub const ROOT_LISTS: &[(u32, &str)] = &[
    (6, "39"),
    (7, "71, 103"),
    (8, "143, 151, 167, 199, 231"),
    (9, "271, 279, 295, 327, 359, 399, 407, 423, 455, 487"),
    (10, "543, 559, 567, 591, 599, 615, 655, 663, 679, 711, 743, 783, 791, 807, 839, 871, 911, 919, 935, 967, 999"),
    (11, "1055, 1071, 1079, 1103, 1111, 1127, 1167, 1175, 1191, 1223, 1255, 1295, 1303, 1319, 1351, 1383, 1423, 1431, 1447, 1479, 1511, 1567, 1583, 1591, 1615, 1623, 1639, 1679, 1687, 1703, 1735, 1767, 1807, 1815, 1831, 1863, 1895, 1935, 1943, 1959, 1991, 2023"),
    (12, "2111, 2143, 2159, 2167, 2207, 2223, 2231, 2255, 2263, 2279, 2335, 2351, 2359, 2383, 2391, 2407, 2447, 2455, 2471, 2503, 2535, 2591, 2607, 2615, 2639, 2647, 2663, 2703, 2711, 2727, 2759, 2791, 2831, 2839, 2855, 2887, 2919, 2959, 2967, 2983, 3015, 3047, 3103, 3119, 3127, 3151, 3159, 3175, 3215, 3223, 3239, 3271, 3303, 3343, 3351, 3367, 3399, 3431, 3471, 3479, 3495, 3527, 3559, 3615, 3631, 3639, 3663, 3671, 3687, 3727, 3735, 3751, 3783, 3815, 3855, 3863, 3879, 3911, 3943, 3983, 3991, 4007, 4039, 4071"),
    (13, "4159, 4191, 4207, 4215, 4255, 4271, 4279, 4303, 4311, 4327, 4383, 4399, 4407, 4431, 4439, 4455, 4495, 4503, 4519, 4551, 4583, 4639, 4655, 4663, 4687, 4695, 4711, 4751, 4759, 4775, 4807, 4839, 4879, 4887, 4903, 4935, 4967, 5007, 5015, 5031, 5063, 5095, 5151, 5167, 5175, 5199, 5207, 5223, 5263, 5271, 5287, 5319, 5351, 5391, 5399, 5415, 5447, 5479, 5519, 5527, 5543, 5575, 5607, 5663, 5679, 5687, 5711, 5719, 5735, 5775, 5783, 5799, 5831, 5863, 5903, 5911, 5927, 5959, 5991, 6031, 6039, 6055, 6087, 6119, 6207, 6239, 6255, 6263, 6303, 6319, 6327, 6351, 6359, 6375, 6431, 6447, 6455, 6479, 6487, 6503, 6543, 6551, 6567, 6599, 6631, 6687, 6703, 6711, 6735, 6743, 6759, 6799, 6807, 6823, 6855, 6887, 6927, 6935, 6951, 6983, 7015, 7055, 7063, 7079, 7111, 7143, 7199, 7215, 7223, 7247, 7255, 7271, 7311, 7319, 7335, 7367, 7399, 7439, 7447, 7463, 7495, 7527, 7567, 7575, 7591, 7623, 7655, 7711, 7727, 7735, 7759, 7767, 7783, 7823, 7831, 7847, 7879, 7911, 7951, 7959, 7975, 8007, 8039, 8079, 8087, 8103, 8135, 8167"),
];

/// Levels 0 to 4 of the tree rooted at 39.
pub const TREE_39_LEVELS: &[&str] = &[
    "39",
    "155, 157, 159",
    "619, 621, 623, 627, 629, 631, 635, 637, 639",
    "2475, 2477, 2479, 2483, 2485, 2487, 2491, 2493, 2495, 2507, 2509, 2511, 2515, 2517, 2519, 2523, 2525, 2527, 2539, 2541, 2543, 2547, 2549, 2551, 2555, 2557, 2559",
    "9899, 9901, 9903, 9907, 9909, 9911, 9915, 9917, 9919, 9931, 9933, 9935, 9939, 9941, 9943, 9947, 9949, 9951, 9963, 9965, 9967, 9971, 9973, 9975, 9979, 9981, 9983, 10027, 10029, 10031, 10035, 10037, 10039, 10043, 10045, 10047, 10059, 10061, 10063, 10067, 10069, 10071, 10075, 10077, 10079, 10091, 10093, 10095, 10099, 10101, 10103, 10107, 10109, 10111, 10155, 10157, 10159, 10163, 10165, 10167, 10171, 10173, 10175, 10187, 10189, 10191, 10195, 10197, 10199, 10203, 10205, 10207, 10219, 10221, 10223, 10227, 10229, 10231, 10235, 10237, 10239",
];

/// Zero-masked prime triplets of ranges 4 to 10.
pub const MASKED_PRIME_TRIPLETS: &[(u32, &str)] = &[
    (4, "11/13/0"),
    (5, "19/0/23, 0/29/31"),
    (6, "43/0/47, 59/61/0"),
    (7, "107/109/0"),
    (8, "179/181/0"),
    (9, "307/0/311, 347/349/0, 379/0/383, 0/461/463, 499/0/503"),
    (
        10,
        "0/821/823, 827/829/0, 859/0/863, 883/0/887, 1019/1021/0",
    ),
];

/// Zero-masked prime triplets at depth 3 below root 39.
pub const TREE_39_DEPTH_3_PRIMES: &str = "2539/0/2543, 0/2549/2551";
