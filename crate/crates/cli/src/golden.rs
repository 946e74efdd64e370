//! Locked reference renderings of the two tables and their hand-written
//! factored transcriptions.

use sov_core::exactalg::parse::{parse_laurent, parse_laurent_with};
use sov_core::exactalg::{LaurentPoly, Sym};
use sov_core::macdonald::{macdonald_poly, monomial_sym, tvars, Weight};
use sov_core::sov::sep_poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Table {
    Macdonald,
    Separated,
}

/// One table entry: the canonical text and an independent factored form.
#[derive(Clone, Copy, Debug)]
pub struct Entry {
    pub table: Table,
    pub weight: [i32; 3],
    pub canonical: &'static str,
    pub factored: &'static str,
}

impl Entry {
    pub fn weight(&self) -> Weight {
        Weight::new(&self.weight).expect("table weights are dominant")
    }
}

macro_rules! entry {
    ($table:ident, $dir:literal, $a:literal, $b:literal, $c:literal) => {
        Entry {
            table: Table::$table,
            weight: [$a, $b, $c],
            canonical: include_str!(concat!("../golden/", $dir, "/", $a, "_", $b, "_", $c, ".txt")),
            factored: include_str!(concat!("../golden/", $dir, "/", $a, "_", $b, "_", $c, ".factored")),
        }
    };
}

pub const ENTRIES: &[Entry] = &[
    entry!(Macdonald, "macdonald", 0, 0, 0),
    entry!(Macdonald, "macdonald", 0, 0, 1),
    entry!(Macdonald, "macdonald", 0, 1, 1),
    entry!(Macdonald, "macdonald", 0, 0, 2),
    entry!(Macdonald, "macdonald", 1, 1, 1),
    entry!(Macdonald, "macdonald", 0, 1, 2),
    entry!(Macdonald, "macdonald", 1, 1, 2),
    entry!(Macdonald, "macdonald", 0, 2, 2),
    entry!(Macdonald, "macdonald", 0, 0, 3),
    entry!(Separated, "seppoly", 0, 0, 0),
    entry!(Separated, "seppoly", 0, 0, 1),
    entry!(Separated, "seppoly", 0, 1, 1),
    entry!(Separated, "seppoly", 0, 0, 2),
    entry!(Separated, "seppoly", 0, 1, 2),
    entry!(Separated, "seppoly", 0, 2, 2),
    entry!(Separated, "seppoly", 0, 0, 3),
    entry!(Separated, "seppoly", 0, 1, 3),
    entry!(Separated, "seppoly", 0, 2, 3),
    entry!(Separated, "seppoly", 0, 3, 3),
];

/// Parses a rendering of `P_λ` (atoms `m[a,b,c]`) or of `S_λ` (variable `y`).
pub fn parse_rendering(table: Table, n: usize, src: &str) -> sov_core::Result<LaurentPoly> {
    match table {
        Table::Macdonald => {
            let hook = |name: &str, args: &[i64]| -> Option<LaurentPoly> {
                if name != "m" || args.len() != n {
                    return None;
                }
                let parts: Vec<i32> = args.iter().map(|&a| i32::try_from(a).ok()).collect::<Option<_>>()?;
                Weight::new(&parts).ok().map(|w| monomial_sym(&w))
            };
            parse_laurent_with(src.trim(), &tvars(n), Some(&hook))
        }
        Table::Separated => parse_laurent(src.trim(), &[Sym::Y]),
    }
}

/// The polynomial the entry describes, computed from scratch.
pub fn computed(e: &Entry) -> sov_core::Result<(String, LaurentPoly)> {
    let l = e.weight();
    match e.table {
        Table::Macdonald => {
            let p = macdonald_poly(&l)?;
            Ok((p.render(), p.polynomial))
        }
        Table::Separated => {
            let s = sep_poly(&l)?;
            Ok((s.render(), s.to_laurent_in(Sym::Y)))
        }
    }
}

/// The factored transcription and the computed polynomial are equal.
pub fn transcription_agrees(e: &Entry) -> sov_core::Result<bool> {
    let (_, poly) = computed(e)?;
    let parsed = parse_rendering(e.table, 3, e.factored)?;
    Ok(parsed == poly.with_vars(parsed.vars())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nineteen_entries_with_trailing_newline() {
        assert_eq!(ENTRIES.len(), 19);
        for e in ENTRIES {
            assert!(e.canonical.ends_with('\n') && !e.canonical.ends_with("\n\n"), "{:?}", e.weight);
            assert!(!e.factored.trim().is_empty());
        }
    }

    #[test]
    fn canonical_text_parses_back() {
        for e in ENTRIES {
            let (_, poly) = computed(e).unwrap();
            let parsed = parse_rendering(e.table, 3, e.canonical).unwrap();
            assert_eq!(parsed, poly.with_vars(parsed.vars()).unwrap(), "{:?}", e.weight);
        }
    }
}
