//! Embedded reference values used as verification targets.
//!
//! The count table, row sums and densest-packing counts below were computed
//! independently of this crate and are stored as decimal strings so that no
//! integer-width assumptions sneak in. The verification suites re-derive all
//! of them from scratch and compare.

use num_bigint::BigUint;

/// Largest side length covered by [`table_row`].
pub const MAX_TABLE_N: u32 = 15;

/// `COUNT_TABLE[n - 1]` holds the published counts for side length `n`,
/// starting at `l = 0`. Rows are truncated where the reference data stops
/// (`l = 11` at most); truncated rows continue with unpublished nonzero
/// values, they do *not* end the count row.
static COUNT_TABLE: [&[&str]; MAX_TABLE_N as usize] = [
    &["1"],
    &["1", "3"],
    &["1", "9", "24", "18"],
    &["1", "18", "126", "434", "762", "630", "187"],
    &[
        "1", "30", "387", "2814", "12699", "36894", "69242", "81936", "57672", "21432", "3135",
    ],
    &[
        "1", "45", "915", "11127", "90270", "515970", "2139120", "6523428", "14683401", "24256853",
        "28975770", "24383838",
    ],
    &[
        "1",
        "63",
        "1845",
        "33365",
        "417435",
        "3836439",
        "26841853",
        "146208393",
        "628823088",
        "2153224090",
        "5892984618",
        "12892017948",
    ],
    &[
        "1",
        "84",
        "3339",
        "83568",
        "1478160",
        "19662060",
        "204334715",
        "1701554868",
        "11554013295",
        "64766667704",
        "302315092020",
        "1181998895448",
    ],
    &[
        "1",
        "108",
        "5586",
        "184254",
        "4354497",
        "78536358",
        "1124301411",
        "13119112488",
        "127156871457",
        "1038068322606",
        "7212713283360",
        "42993319234518",
    ],
    &[
        "1",
        "135",
        "8802",
        "369254",
        "11203269",
        "261985815",
        "4914087052",
        "75970268748",
        "987147811836",
        "10940096605816",
        "104581114754595",
        "869988063985737",
    ],
    &[
        "1",
        "165",
        "13230",
        "686952",
        "25970895",
        "762098799",
        "18070041680",
        "355864850838",
        "5938169156829",
        "85230974965513",
        "1064629166358066",
        "11681266282861098",
    ],
    &[
        "1",
        "198",
        "19140",
        "1203930",
        "55414395",
        "1990014156",
        "58055896449",
        "1414611219018",
        "29375579984238",
        "527873999198830",
        "8307168403048731",
        "115585010198220444",
    ],
    &[
        "1",
        "234",
        "26829",
        "2009018",
        "110505120",
        "4761037260",
        "167316709165",
        "4931688363498",
        "124419130905960",
        "2728420121843584",
        "52640100670770348",
        "902231390539173210",
    ],
    &[
        "1",
        "273",
        "36621",
        "3217749",
        "208300257",
        "10594451901",
        "440911546295",
        "15439933756251",
        "464317587238419",
        "12178604171344167",
        "282021772415608164",
        "5822744874311864316",
    ],
    &[
        "1",
        "315",
        "48867",
        "4977219",
        "374375664",
        "22178743326",
        "1077784772922",
        "44182928710470",
        "1559497806005040",
        "48137813623437500",
        "1315457502665712336",
        "32139701729335767774",
    ],
];

/// Published row sums `Σ_l L(n, l)` for `n = 1..=6`.
pub static ROW_SUMS: [(u32, &str); 6] = [
    (1, "1"),
    (2, "4"),
    (3, "52"),
    (4, "2158"),
    (5, "286242"),
    (6, "121479420"),
];

/// Published densest-packing counts (the last nonzero entry of each count
/// row) for `n = 1..=10`.
pub static MAX_TILINGS: [(u32, &str); 10] = [
    (1, "1"),
    (2, "3"),
    (3, "18"),
    (4, "187"),
    (5, "3135"),
    (6, "81462"),
    (7, "3198404"),
    (8, "186498819"),
    (9, "15952438877"),
    (10, "1983341709785"),
];

/// The published counts for side length `n`, starting at `l = 0`, or `None`
/// outside `1..=15`. See [`COUNT_TABLE`] for the truncation convention.
pub fn table_row(n: u32) -> Option<&'static [&'static str]> {
    if (1..=MAX_TABLE_N).contains(&n) {
        Some(COUNT_TABLE[n as usize - 1])
    } else {
        None
    }
}

/// The published count for `(n, l)`, or `None` where the reference data has no
/// entry.
pub fn table_count(n: u32, l: usize) -> Option<BigUint> {
    table_row(n)?
        .get(l)
        .map(|s| s.parse().expect("embedded table entries are decimal"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_shape() {
        assert_eq!(table_row(1).unwrap().len(), 1);
        assert_eq!(table_row(4).unwrap().len(), 7);
        assert_eq!(table_row(5).unwrap().len(), 11);
        for n in 6..=15 {
            assert_eq!(table_row(n).unwrap().len(), 12, "n = {n}");
        }
        assert!(table_row(0).is_none());
        assert!(table_row(16).is_none());
    }

    #[test]
    fn entries_parse() {
        for n in 1..=MAX_TABLE_N {
            for l in 0..table_row(n).unwrap().len() {
                assert!(table_count(n, l).is_some());
            }
        }
        assert_eq!(table_count(3, 2).unwrap(), 24u32.into());
        assert_eq!(
            table_count(15, 11).unwrap().to_string(),
            "32139701729335767774"
        );
        assert!(table_count(3, 4).is_none());
    }

    #[test]
    fn short_rows_end_at_densest_packing() {
        // Rows up to n = 5 are complete: their last entry is the
        // densest-packing count, which also appears in MAX_TILINGS.
        for n in 1..=5u32 {
            let row = table_row(n).unwrap();
            let (rn, max) = MAX_TILINGS[n as usize - 1];
            assert_eq!(rn, n);
            assert_eq!(row[row.len() - 1], max);
        }
    }
}
