//! Experiment drivers: the tree census, the small-graph counterexample scan,
//! the Γ(12, 8) spectra and a self-check suite.

mod census;
mod counterexamples;
mod random;
pub mod reference;
mod tables;
mod verify;

pub use census::{
    census, census_of_trees, read_census_csv, write_census_csv, CensusRow, CensusWriter, CENSUS_CSV_HEADER_LINE,
};
pub use counterexamples::{counterexamples, read_counterexamples_csv, write_counterexamples_csv, CounterexampleRecord};
pub use random::{random_gamma_spec, random_tree};
pub use tables::{gamma_spectra, table1_check, GammaRow, TableCheck};
pub use verify::{verify, CheckOutcome, VerifyConfig};

use rayon::{ThreadPool, ThreadPoolBuilder};

use crate::domination::tree_domination_number;
use crate::families::is_gamma_member;
use crate::graph::Tree;
use crate::scalar::{ceil_div, rational_from_int};
use crate::spectral::forest_inertia;

/// Per-tree quantities behind every census column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeAudit {
    pub order: usize,
    pub diameter: usize,
    pub gamma: usize,
    /// `m[0,1)`.
    pub below_one: usize,
    /// `m[0,2)`.
    pub below_two: usize,
    pub gamma_member: bool,
}

impl TreeAudit {
    pub fn of(tree: &Tree) -> Self {
        let one = rational_from_int(1);
        let two = rational_from_int(2);
        TreeAudit {
            order: tree.order(),
            diameter: tree.diameter(),
            gamma: tree_domination_number(tree),
            below_one: forest_inertia(tree, &one).below,
            below_two: forest_inertia(tree, &two).below,
            gamma_member: is_gamma_member(tree).is_some(),
        }
    }

    /// `⌈(d+1)/3⌉`.
    pub fn lower_bound(&self) -> usize {
        ceil_div(self.diameter + 1, 3)
    }

    pub fn extremal(&self) -> bool {
        self.below_one == self.lower_bound()
    }

    /// `m[0,1) <= γ` fails.
    pub fn violates_domination_bound(&self) -> bool {
        self.below_one > self.gamma
    }

    /// `m[0,1) >= ⌈(d+1)/3⌉` fails.
    pub fn violates_diameter_bound(&self) -> bool {
        self.below_one < self.lower_bound()
    }

    /// `γ >= ⌈(d+1)/3⌉` fails.
    pub fn violates_domination_diameter(&self) -> bool {
        self.gamma < self.lower_bound()
    }

    /// `3γ = d+1` and `3m[0,1) = d+1` disagree.
    pub fn violates_equality_transfer(&self) -> bool {
        (3 * self.gamma == self.diameter + 1) != (3 * self.below_one == self.diameter + 1)
    }

    /// `3m[0,1) = d+1` and membership in Γ(n, d) disagree.
    pub fn violates_characterization(&self) -> bool {
        (3 * self.below_one == self.diameter + 1) != self.gamma_member
    }

    /// `m[0,2) <= n - γ` fails. The bound needs an isolate-free graph, so
    /// the one-vertex tree never counts.
    pub fn violates_upper_band(&self) -> bool {
        self.order > 1 && self.below_two + self.gamma > self.order
    }
}

/// Thread pool with `workers` threads, or the global default when `None`.
pub(crate) fn pool(workers: Option<usize>) -> Result<ThreadPool, crate::Error> {
    let mut builder = ThreadPoolBuilder::new();
    if let Some(w) = workers {
        builder = builder.num_threads(w.max(1));
    }
    builder.build().map_err(|e| crate::Error::Io(std::io::Error::other(e.to_string())))
}
