// Table entries as (1-based indices, a, b, c) meaning a*sqrt(b)/c.

pub const SU3_F: &[(&[usize], i64, i64, i64)] = &[
    (&[1, 2, 3], 1, 1, 1),
    (&[1, 4, 7], 1, 1, 2),
    (&[1, 5, 6], -1, 1, 2),
    (&[2, 4, 6], 1, 1, 2),
    (&[2, 5, 7], 1, 1, 2),
    (&[3, 4, 5], 1, 1, 2),
    (&[3, 6, 7], -1, 1, 2),
    (&[4, 5, 8], 1, 3, 2),
    (&[6, 7, 8], 1, 3, 2),
];

pub const SU3_D: &[(&[usize], i64, i64, i64)] = &[
    (&[1, 1, 8], 1, 3, 3),
    (&[2, 2, 8], 1, 3, 3),
    (&[3, 3, 8], 1, 3, 3),
    (&[8, 8, 8], -1, 3, 3),
    (&[4, 4, 8], -1, 3, 6),
    (&[5, 5, 8], -1, 3, 6),
    (&[6, 6, 8], -1, 3, 6),
    (&[7, 7, 8], -1, 3, 6),
    (&[1, 4, 6], 1, 1, 2),
    (&[1, 5, 7], 1, 1, 2),
    (&[2, 4, 7], -1, 1, 2),
    (&[2, 5, 6], 1, 1, 2),
    (&[3, 4, 4], 1, 1, 2),
    (&[3, 5, 5], 1, 1, 2),
    (&[3, 6, 6], -1, 1, 2),
    (&[3, 7, 7], -1, 1, 2),
];

pub const SU3_OMEGA5: &[(&[usize], i64, i64, i64)] = &[
    (&[1, 2, 3, 4, 5], 1, 1, 4),
    (&[1, 2, 3, 6, 7], 1, 1, 4),
    (&[1, 2, 4, 5, 8], 1, 3, 12),
    (&[1, 2, 6, 7, 8], -1, 3, 12),
    (&[1, 3, 4, 6, 8], -1, 3, 12),
    (&[1, 3, 5, 7, 8], -1, 3, 12),
    (&[2, 3, 4, 7, 8], 1, 3, 12),
    (&[2, 3, 5, 6, 8], -1, 3, 12),
    (&[4, 5, 6, 7, 8], -1, 3, 6),
];

pub const SU4_F: &[(&[usize], i64, i64, i64)] = &[
    (&[1, 2, 3], 1, 1, 1),
    (&[1, 4, 7], 1, 1, 2),
    (&[1, 5, 6], -1, 1, 2),
    (&[1, 9, 12], 1, 1, 2),
    (&[1, 10, 11], -1, 1, 2),
    (&[2, 4, 6], 1, 1, 2),
    (&[2, 5, 7], 1, 1, 2),
    (&[2, 9, 11], 1, 1, 2),
    (&[2, 10, 12], 1, 1, 2),
    (&[3, 4, 5], 1, 1, 2),
    (&[3, 6, 7], -1, 1, 2),
    (&[3, 9, 10], 1, 1, 2),
    (&[3, 11, 12], -1, 1, 2),
    (&[4, 5, 8], 1, 3, 2),
    (&[4, 9, 14], 1, 1, 2),
    (&[4, 10, 13], -1, 1, 2),
    (&[5, 9, 13], 1, 1, 2),
    (&[5, 10, 14], 1, 1, 2),
    (&[6, 7, 8], 1, 3, 2),
    (&[6, 11, 14], 1, 1, 2),
    (&[6, 12, 13], -1, 1, 2),
    (&[7, 11, 13], 1, 1, 2),
    (&[7, 12, 14], 1, 1, 2),
    (&[8, 9, 10], 1, 3, 6),
    (&[8, 11, 12], 1, 3, 6),
    (&[8, 13, 14], -1, 3, 3),
    (&[9, 10, 15], 1, 6, 3),
    (&[11, 12, 15], 1, 6, 3),
    (&[13, 14, 15], 1, 6, 3),
];

pub const SU4_D: &[(&[usize], i64, i64, i64)] = &[
    (&[4, 4, 3], 1, 1, 2),
    (&[5, 5, 3], 1, 1, 2),
    (&[6, 6, 3], -1, 1, 2),
    (&[7, 7, 3], -1, 1, 2),
    (&[9, 9, 3], 1, 1, 2),
    (&[10, 10, 3], 1, 1, 2),
    (&[11, 11, 3], -1, 1, 2),
    (&[12, 12, 3], -1, 1, 2),
    (&[1, 1, 8], 1, 3, 3),
    (&[2, 2, 8], 1, 3, 3),
    (&[3, 3, 8], 1, 3, 3),
    (&[4, 4, 8], -1, 3, 6),
    (&[5, 5, 8], -1, 3, 6),
    (&[6, 6, 8], -1, 3, 6),
    (&[7, 7, 8], -1, 3, 6),
    (&[8, 8, 8], -1, 3, 3),
    (&[9, 9, 8], 1, 3, 6),
    (&[10, 10, 8], 1, 3, 6),
    (&[11, 11, 8], 1, 3, 6),
    (&[12, 12, 8], 1, 3, 6),
    (&[13, 13, 8], -1, 3, 3),
    (&[14, 14, 8], -1, 3, 3),
    (&[1, 1, 15], 1, 6, 6),
    (&[2, 2, 15], 1, 6, 6),
    (&[3, 3, 15], 1, 6, 6),
    (&[4, 4, 15], 1, 6, 6),
    (&[5, 5, 15], 1, 6, 6),
    (&[6, 6, 15], 1, 6, 6),
    (&[7, 7, 15], 1, 6, 6),
    (&[8, 8, 15], 1, 6, 6),
    (&[9, 9, 15], -1, 6, 6),
    (&[10, 10, 15], -1, 6, 6),
    (&[11, 11, 15], -1, 6, 6),
    (&[12, 12, 15], -1, 6, 6),
    (&[13, 13, 15], -1, 6, 6),
    (&[14, 14, 15], -1, 6, 6),
    (&[15, 15, 15], -1, 6, 3),
    (&[1, 4, 6], 1, 1, 2),
    (&[1, 5, 7], 1, 1, 2),
    (&[1, 9, 11], 1, 1, 2),
    (&[1, 10, 12], 1, 1, 2),
    (&[2, 4, 7], -1, 1, 2),
    (&[2, 5, 6], 1, 1, 2),
    (&[2, 9, 12], -1, 1, 2),
    (&[2, 10, 11], 1, 1, 2),
    (&[4, 9, 13], 1, 1, 2),
    (&[4, 10, 14], 1, 1, 2),
    (&[5, 9, 14], -1, 1, 2),
    (&[5, 10, 13], 1, 1, 2),
    (&[6, 11, 13], 1, 1, 2),
    (&[6, 12, 14], 1, 1, 2),
    (&[7, 11, 14], -1, 1, 2),
    (&[7, 12, 13], 1, 1, 2),
];

pub const SU4_OMEGA5: &[(&[usize], i64, i64, i64)] = &[
    (&[1, 2, 3, 4, 5], 1, 1, 4),
    (&[1, 2, 3, 6, 7], 1, 1, 4),
    (&[1, 2, 3, 9, 10], 1, 1, 4),
    (&[1, 2, 3, 11, 12], 1, 1, 4),
    (&[1, 2, 4, 5, 8], 1, 3, 12),
    (&[1, 2, 4, 9, 14], 1, 1, 12),
    (&[1, 2, 4, 10, 13], -1, 1, 12),
    (&[1, 2, 5, 9, 13], 1, 1, 12),
    (&[1, 2, 5, 10, 14], 1, 1, 12),
    (&[1, 2, 6, 7, 8], -1, 3, 12),
    (&[1, 2, 6, 11, 14], -1, 1, 12),
    (&[1, 2, 6, 12, 13], 1, 1, 12),
    (&[1, 2, 7, 11, 13], -1, 1, 12),
    (&[1, 2, 7, 12, 14], -1, 1, 12),
    (&[1, 2, 8, 9, 10], 1, 3, 36),
    (&[1, 2, 8, 11, 12], -1, 3, 36),
    (&[1, 2, 9, 10, 15], 1, 6, 18),
    (&[1, 2, 11, 12, 15], -1, 6, 18),
    (&[1, 3, 4, 6, 8], -1, 3, 12),
    (&[1, 3, 4, 11, 13], 1, 1, 12),
    (&[1, 3, 4, 12, 14], 1, 1, 12),
    (&[1, 3, 5, 7, 8], -1, 3, 12),
    (&[1, 3, 5, 11, 14], -1, 1, 12),
    (&[1, 3, 5, 12, 13], 1, 1, 12),
    (&[1, 3, 6, 9, 13], -1, 1, 12),
    (&[1, 3, 6, 10, 14], -1, 1, 12),
    (&[1, 3, 7, 9, 14], 1, 1, 12),
    (&[1, 3, 7, 10, 13], -1, 1, 12),
    (&[1, 3, 8, 9, 11], -1, 3, 36),
    (&[1, 3, 8, 10, 12], -1, 3, 36),
    (&[1, 3, 9, 11, 15], -1, 6, 18),
    (&[1, 3, 10, 12, 15], -1, 6, 18),
    (&[1, 4, 5, 9, 12], 1, 1, 12),
    (&[1, 4, 5, 10, 11], -1, 1, 12),
    (&[1, 4, 7, 9, 10], 1, 1, 12),
    (&[1, 4, 7, 11, 12], 1, 1, 12),
    (&[1, 4, 7, 13, 14], 1, 1, 12),
    (&[1, 4, 8, 11, 13], -1, 3, 36),
    (&[1, 4, 8, 12, 14], -1, 3, 36),
    (&[1, 4, 11, 13, 15], 1, 6, 36),
    (&[1, 4, 12, 14, 15], 1, 6, 36),
    (&[1, 5, 6, 9, 10], -1, 1, 12),
    (&[1, 5, 6, 11, 12], -1, 1, 12),
    (&[1, 5, 6, 13, 14], -1, 1, 12),
    (&[1, 5, 8, 11, 14], 1, 3, 36),
    (&[1, 5, 8, 12, 13], -1, 3, 36),
    (&[1, 5, 11, 14, 15], -1, 6, 36),
    (&[1, 5, 12, 13, 15], 1, 6, 36),
    (&[1, 6, 7, 9, 12], 1, 1, 12),
    (&[1, 6, 7, 10, 11], -1, 1, 12),
    (&[1, 6, 8, 9, 13], -1, 3, 36),
    (&[1, 6, 8, 10, 14], -1, 3, 36),
    (&[1, 6, 9, 13, 15], 1, 6, 36),
    (&[1, 6, 10, 14, 15], 1, 6, 36),
    (&[1, 7, 8, 9, 14], 1, 3, 36),
    (&[1, 7, 8, 10, 13], -1, 3, 36),
    (&[1, 7, 9, 14, 15], -1, 6, 36),
    (&[1, 7, 10, 13, 15], 1, 6, 36),
    (&[1, 9, 12, 13, 14], -1, 1, 12),
    (&[1, 10, 11, 13, 14], 1, 1, 12),
    (&[2, 3, 4, 7, 8], 1, 3, 12),
    (&[2, 3, 4, 11, 14], 1, 1, 12),
    (&[2, 3, 4, 12, 13], -1, 1, 12),
    (&[2, 3, 5, 6, 8], -1, 3, 12),
    (&[2, 3, 5, 11, 13], 1, 1, 12),
    (&[2, 3, 5, 12, 14], 1, 1, 12),
    (&[2, 3, 6, 9, 14], 1, 1, 12),
    (&[2, 3, 6, 10, 13], -1, 1, 12),
    (&[2, 3, 7, 9, 13], 1, 1, 12),
    (&[2, 3, 7, 10, 14], 1, 1, 12),
    (&[2, 3, 8, 9, 12], 1, 3, 36),
    (&[2, 3, 8, 10, 11], -1, 3, 36),
    (&[2, 3, 9, 12, 15], 1, 6, 18),
    (&[2, 3, 10, 11, 15], -1, 6, 18),
    (&[2, 4, 5, 9, 11], 1, 1, 12),
    (&[2, 4, 5, 10, 12], 1, 1, 12),
    (&[2, 4, 6, 9, 10], 1, 1, 12),
    (&[2, 4, 6, 11, 12], 1, 1, 12),
    (&[2, 4, 6, 13, 14], 1, 1, 12),
    (&[2, 4, 8, 11, 14], -1, 3, 36),
    (&[2, 4, 8, 12, 13], 1, 3, 36),
    (&[2, 4, 11, 14, 15], 1, 6, 36),
    (&[2, 4, 12, 13, 15], -1, 6, 36),
    (&[2, 5, 7, 9, 10], 1, 1, 12),
    (&[2, 5, 7, 11, 12], 1, 1, 12),
    (&[2, 5, 7, 13, 14], 1, 1, 12),
    (&[2, 5, 8, 11, 13], -1, 3, 36),
    (&[2, 5, 8, 12, 14], -1, 3, 36),
    (&[2, 5, 11, 13, 15], 1, 6, 36),
    (&[2, 5, 12, 14, 15], 1, 6, 36),
    (&[2, 6, 7, 9, 11], 1, 1, 12),
    (&[2, 6, 7, 10, 12], 1, 1, 12),
    (&[2, 6, 8, 9, 14], 1, 3, 36),
    (&[2, 6, 8, 10, 13], -1, 3, 36),
    (&[2, 6, 9, 14, 15], -1, 6, 36),
    (&[2, 6, 10, 13, 15], 1, 6, 36),
    (&[2, 7, 8, 9, 13], 1, 3, 36),
    (&[2, 7, 8, 10, 14], 1, 3, 36),
    (&[2, 7, 9, 13, 15], -1, 6, 36),
    (&[2, 7, 10, 14, 15], -1, 6, 36),
    (&[2, 9, 11, 13, 14], -1, 1, 12),
    (&[2, 10, 12, 13, 14], -1, 1, 12),
    (&[3, 4, 5, 9, 10], 1, 1, 6),
    (&[3, 4, 5, 13, 14], 1, 1, 12),
    (&[3, 4, 8, 9, 13], -1, 3, 36),
    (&[3, 4, 8, 10, 14], -1, 3, 36),
    (&[3, 4, 9, 13, 15], 1, 6, 36),
    (&[3, 4, 10, 14, 15], 1, 6, 36),
    (&[3, 5, 8, 9, 14], 1, 3, 36),
    (&[3, 5, 8, 10, 13], -1, 3, 36),
    (&[3, 5, 9, 14, 15], -1, 6, 36),
    (&[3, 5, 10, 13, 15], 1, 6, 36),
    (&[3, 6, 7, 11, 12], -1, 1, 6),
    (&[3, 6, 7, 13, 14], -1, 1, 12),
    (&[3, 6, 8, 11, 13], 1, 3, 36),
    (&[3, 6, 8, 12, 14], 1, 3, 36),
    (&[3, 6, 11, 13, 15], -1, 6, 36),
    (&[3, 6, 12, 14, 15], -1, 6, 36),
    (&[3, 7, 8, 11, 14], -1, 3, 36),
    (&[3, 7, 8, 12, 13], 1, 3, 36),
    (&[3, 7, 11, 14, 15], 1, 6, 36),
    (&[3, 7, 12, 13, 15], -1, 6, 36),
    (&[3, 9, 10, 13, 14], -1, 1, 12),
    (&[3, 11, 12, 13, 14], 1, 1, 12),
    (&[4, 5, 6, 7, 8], -1, 3, 6),
    (&[4, 5, 6, 11, 14], -1, 1, 12),
    (&[4, 5, 6, 12, 13], 1, 1, 12),
    (&[4, 5, 7, 11, 13], -1, 1, 12),
    (&[4, 5, 7, 12, 14], -1, 1, 12),
    (&[4, 5, 8, 9, 10], 1, 3, 9),
    (&[4, 5, 8, 13, 14], 5, 3, 36),
    (&[4, 5, 9, 10, 15], 1, 6, 18),
    (&[4, 5, 13, 14, 15], -1, 6, 18),
    (&[4, 6, 7, 9, 14], -1, 1, 12),
    (&[4, 6, 7, 10, 13], 1, 1, 12),
    (&[4, 6, 8, 9, 11], 1, 3, 18),
    (&[4, 6, 8, 10, 12], 1, 3, 18),
    (&[4, 6, 9, 11, 15], 1, 6, 36),
    (&[4, 6, 10, 12, 15], 1, 6, 36),
    (&[4, 7, 8, 9, 12], 1, 3, 18),
    (&[4, 7, 8, 10, 11], -1, 3, 18),
    (&[4, 7, 9, 12, 15], 1, 6, 36),
    (&[4, 7, 10, 11, 15], -1, 6, 36),
    (&[4, 8, 9, 13, 15], -1, 2, 12),
    (&[4, 8, 10, 14, 15], -1, 2, 12),
    (&[4, 9, 11, 12, 14], -1, 1, 12),
    (&[4, 10, 11, 12, 13], 1, 1, 12),
    (&[5, 6, 7, 9, 13], -1, 1, 12),
    (&[5, 6, 7, 10, 14], -1, 1, 12),
    (&[5, 6, 8, 9, 12], -1, 3, 18),
    (&[5, 6, 8, 10, 11], 1, 3, 18),
    (&[5, 6, 9, 12, 15], -1, 6, 36),
    (&[5, 6, 10, 11, 15], 1, 6, 36),
    (&[5, 7, 8, 9, 11], 1, 3, 18),
    (&[5, 7, 8, 10, 12], 1, 3, 18),
    (&[5, 7, 9, 11, 15], 1, 6, 36),
    (&[5, 7, 10, 12, 15], 1, 6, 36),
    (&[5, 8, 9, 14, 15], 1, 2, 12),
    (&[5, 8, 10, 13, 15], -1, 2, 12),
    (&[5, 9, 11, 12, 13], -1, 1, 12),
    (&[5, 10, 11, 12, 14], -1, 1, 12),
    (&[6, 7, 8, 11, 12], 1, 3, 9),
    (&[6, 7, 8, 13, 14], 5, 3, 36),
    (&[6, 7, 11, 12, 15], 1, 6, 18),
    (&[6, 7, 13, 14, 15], -1, 6, 18),
    (&[6, 8, 11, 13, 15], -1, 2, 12),
    (&[6, 8, 12, 14, 15], -1, 2, 12),
    (&[6, 9, 10, 11, 14], -1, 1, 12),
    (&[6, 9, 10, 12, 13], 1, 1, 12),
    (&[7, 8, 11, 14, 15], 1, 2, 12),
    (&[7, 8, 12, 13, 15], -1, 2, 12),
    (&[7, 9, 10, 11, 13], -1, 1, 12),
    (&[7, 9, 10, 12, 14], -1, 1, 12),
    (&[8, 9, 10, 11, 12], -1, 3, 18),
    (&[8, 9, 10, 13, 14], 1, 3, 36),
    (&[8, 11, 12, 13, 14], 1, 3, 36),
    (&[9, 10, 11, 12, 15], -1, 6, 9),
    (&[9, 10, 13, 14, 15], -1, 6, 9),
    (&[11, 12, 13, 14, 15], -1, 6, 9),
];
