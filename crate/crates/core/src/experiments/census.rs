use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumeration::free_trees;
use crate::graph::Tree;
use crate::Error;

use super::{pool, TreeAudit};

/// First line of every census CSV.
pub const CENSUS_CSV_HEADER_LINE: &str = "# lapdist-census v1";

const BATCH: usize = 1024;

/// One order of the tree census. `ratio` is `trees_extremal / trees_total`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: usize,
    pub trees_total: usize,
    pub trees_extremal: usize,
    pub ratio: f64,
    pub violations_thm1: usize,
    pub violations_thm2: usize,
    pub violations_thm4: usize,
    pub violations_thm5: usize,
}

#[derive(Clone, Copy, Debug, Default)]
struct Tally {
    total: usize,
    extremal: usize,
    upper: usize,
    lower: usize,
    transfer: usize,
    characterization: usize,
}

impl Tally {
    fn add(mut self, audit: &TreeAudit) -> Self {
        self.total += 1;
        self.extremal += usize::from(audit.extremal());
        self.upper += usize::from(audit.violates_domination_bound());
        self.lower += usize::from(audit.violates_diameter_bound());
        self.transfer += usize::from(audit.violates_equality_transfer());
        self.characterization += usize::from(audit.violates_characterization());
        self
    }

    fn merge(self, o: Tally) -> Tally {
        Tally {
            total: self.total + o.total,
            extremal: self.extremal + o.extremal,
            upper: self.upper + o.upper,
            lower: self.lower + o.lower,
            transfer: self.transfer + o.transfer,
            characterization: self.characterization + o.characterization,
        }
    }

    fn row(self, n: usize) -> CensusRow {
        CensusRow {
            n,
            trees_total: self.total,
            trees_extremal: self.extremal,
            ratio: if self.total == 0 { 0.0 } else { self.extremal as f64 / self.total as f64 },
            violations_thm1: self.upper,
            violations_thm2: self.lower,
            violations_thm4: self.transfer,
            violations_thm5: self.characterization,
        }
    }
}

fn tally_batch(batch: &[Tree]) -> Tally {
    batch.iter().fold(Tally::default(), |t, tree| t.add(&TreeAudit::of(tree)))
}

/// Census rows for every order in `orders`, in order. `on_row` sees each row
/// as soon as it is complete. Counts do not depend on `workers`.
pub fn census<I, F>(orders: I, workers: Option<usize>, mut on_row: F) -> Result<Vec<CensusRow>, Error>
where
    I: IntoIterator<Item = usize>,
    F: FnMut(&CensusRow) -> Result<(), Error>,
{
    let pool = pool(workers)?;
    let mut rows = Vec::new();
    for n in orders {
        let stream = free_trees(n)?;
        let tally = pool.install(|| {
            stream.batches(BATCH).par_bridge().map(|b| tally_batch(&b)).reduce(Tally::default, Tally::merge)
        });
        let row = tally.row(n);
        on_row(&row)?;
        rows.push(row);
    }
    Ok(rows)
}

/// Census over externally supplied trees, one row per order present,
/// sorted by order. Trees need not be pairwise non-isomorphic.
pub fn census_of_trees<I>(trees: I, workers: Option<usize>) -> Result<Vec<CensusRow>, Error>
where
    I: IntoIterator<Item = Tree>,
    I::IntoIter: Send,
{
    let pool = pool(workers)?;
    let trees = trees.into_iter();
    let tallies = pool.install(|| {
        trees
            .par_bridge()
            .map(|t| {
                let mut m = std::collections::BTreeMap::new();
                m.insert(t.order(), Tally::default().add(&TreeAudit::of(&t)));
                m
            })
            .reduce(std::collections::BTreeMap::new, |mut a, b| {
                for (n, t) in b {
                    let e = a.entry(n).or_insert_with(Tally::default);
                    *e = e.merge(t);
                }
                a
            })
    });
    Ok(tallies.into_iter().map(|(n, t)| t.row(n)).collect())
}

/// Streaming census CSV: the version line, then the header with the first row.
pub struct CensusWriter<W: Write> {
    inner: csv::Writer<W>,
    rows: usize,
}

impl<W: Write> CensusWriter<W> {
    pub fn new(mut out: W) -> Result<Self, Error> {
        writeln!(out, "{CENSUS_CSV_HEADER_LINE}")?;
        let inner = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
        Ok(CensusWriter { inner, rows: 0 })
    }

    /// Appends and flushes one row.
    pub fn write_row(&mut self, row: &CensusRow) -> Result<(), Error> {
        self.inner.serialize(row)?;
        self.inner.flush()?;
        self.rows += 1;
        Ok(())
    }

    /// Flushes, writing the bare header if no row was written.
    pub fn finish(mut self) -> Result<(), Error> {
        if self.rows == 0 {
            self.inner.write_record([
                "n",
                "trees_total",
                "trees_extremal",
                "ratio",
                "violations_thm1",
                "violations_thm2",
                "violations_thm4",
                "violations_thm5",
            ])?;
        }
        self.inner.flush()?;
        Ok(())
    }
}

/// Writes the version line, the header and `rows`.
pub fn write_census_csv<W: Write>(out: W, rows: &[CensusRow]) -> Result<(), Error> {
    let mut w = CensusWriter::new(out)?;
    for row in rows {
        w.write_row(row)?;
    }
    w.finish()
}

/// Reads rows written by [`write_census_csv`]; `#` lines are skipped.
pub fn read_census_csv<R: BufRead>(input: R) -> Result<Vec<CensusRow>, Error> {
    let mut r = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(input);
    let rows = r.deserialize().collect::<Result<Vec<CensusRow>, _>>()?;
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::reference::census_reference;

    #[test]
    fn small_orders_match_reference() {
        let rows = census(5..=10, Some(2), |_| Ok(())).unwrap();
        // P5, the chair and the star all attain the bound
        assert_eq!((rows[0].trees_total, rows[0].trees_extremal), (3, 3));
        for row in &rows[1..] {
            let (total, extremal, ratio) = census_reference(row.n).unwrap();
            assert_eq!((row.trees_total, row.trees_extremal), (total, extremal), "n = {}", row.n);
            assert!((row.ratio - ratio).abs() < 5e-10);
            assert_eq!(row.violations_thm1 + row.violations_thm2, 0);
            assert_eq!(row.violations_thm4 + row.violations_thm5, 0);
        }
    }

    #[test]
    fn csv_round_trip() {
        let rows = census(1..=9, None, |_| Ok(())).unwrap();
        let mut buf = Vec::new();
        write_census_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("# lapdist-census v1\nn,trees_total,"));
        assert!(!text.contains('\r'));
        assert_eq!(read_census_csv(&buf[..]).unwrap(), rows);
    }

    #[test]
    fn external_trees_agree_with_generated() {
        let trees: Vec<Tree> = (7..=8).flat_map(|n| free_trees(n).unwrap()).collect();
        let from_input = census_of_trees(trees, Some(1)).unwrap();
        let generated = census(7..=8, Some(1), |_| Ok(())).unwrap();
        assert_eq!(from_input, generated);
    }
}
