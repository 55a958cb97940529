//! Published Poincaré series coefficients for ternary forms of degree 3..7.

/// One published series: every nonzero coefficient up to `max_degree`.
#[derive(Debug, Clone, Copy)]
pub struct PublishedSeries {
    pub d: u32,
    pub max_degree: u32,
    pub nonzero: &'static [(u32, u64)],
}

impl PublishedSeries {
    /// Expected coefficient at `n`, or `None` past the published range.
    ///
    /// The published displays start at the first positive degree; the
    /// constant term is 1 for every `d`.
    pub fn expected(&self, n: u32) -> Option<u64> {
        if n == 0 {
            return Some(1);
        }
        (n <= self.max_degree).then(|| {
            self.nonzero
                .iter()
                .find(|&&(k, _)| k == n)
                .map_or(0, |&(_, v)| v)
        })
    }
}

pub const TERNARY_SERIES: [PublishedSeries; 5] = [
    PublishedSeries {
        d: 3,
        max_degree: 26,
        nonzero: &[
            (4, 1), (6, 1), (8, 1), (10, 1), (12, 2), (14, 1),
            (16, 2), (18, 2), (20, 2), (22, 2), (24, 3), (26, 2),
        ],
    },
    PublishedSeries {
        d: 4,
        max_degree: 30,
        nonzero: &[
            (3, 1), (6, 2), (9, 4), (12, 7), (15, 11),
            (18, 19), (21, 29), (24, 44), (27, 67), (30, 98),
        ],
    },
    PublishedSeries {
        d: 5,
        max_degree: 30,
        nonzero: &[
            (6, 2), (9, 1), (12, 19), (15, 24), (18, 178),
            (21, 383), (24, 1470), (27, 3331), (30, 9381),
        ],
    },
    PublishedSeries {
        d: 6,
        max_degree: 13,
        nonzero: &[
            (3, 1), (4, 1), (5, 1), (6, 4), (7, 5), (8, 8),
            (9, 17), (10, 28), (11, 48), (12, 99), (13, 172),
        ],
    },
    PublishedSeries {
        d: 7,
        max_degree: 21,
        nonzero: &[(6, 3), (9, 13), (12, 421), (15, 4992), (18, 60303), (21, 548966)],
    },
];

pub fn published(d: u32) -> Option<&'static PublishedSeries> {
    TERNARY_SERIES.iter().find(|s| s.d == d)
}
