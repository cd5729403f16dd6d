use std::io::{Read, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumeration::connected_graphs;
use crate::io::to_graph6;
use crate::scalar::{ceil_div, rational_one};
use crate::spectral::{eigenvalues_dense, inertia_at};
use crate::{Error, Graph};

use super::pool;

/// A connected graph with `m[0,1) < ⌈(d+1)/3⌉`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub graph6: String,
    pub n: usize,
    pub diameter: usize,
    pub m_below_1: usize,
    pub bound: usize,
    /// Descending, three decimals.
    pub spectrum: Vec<f64>,
}

fn inspect(graph: &Graph) -> Result<Option<CounterexampleRecord>, Error> {
    let diameter = graph.diameter()?;
    let bound = ceil_div(diameter + 1, 3);
    let m = inertia_at(graph, &rational_one()).below;
    if m >= bound {
        return Ok(None);
    }
    Ok(Some(CounterexampleRecord {
        graph6: to_graph6(graph)?,
        n: graph.order(),
        diameter,
        m_below_1: m,
        bound,
        spectrum: eigenvalues_dense(graph, 1e-10)?.rounded_descending(),
    }))
}

/// Every connected graph on `n` vertices (up to isomorphism) violating the
/// diameter bound, in the enumeration order of [`connected_graphs`].
pub fn counterexamples(n: usize, workers: Option<usize>) -> Result<Vec<CounterexampleRecord>, Error> {
    let graphs = connected_graphs(n)?;
    let found: Vec<Option<CounterexampleRecord>> =
        pool(workers)?.install(|| graphs.par_iter().map(inspect).collect::<Result<_, _>>())?;
    Ok(found.into_iter().flatten().collect())
}

#[derive(Serialize, Deserialize)]
struct FlatRecord {
    graph6: String,
    n: usize,
    diameter: usize,
    m_below_1: usize,
    bound: usize,
    spectrum: String,
}

/// CSV with the spectrum as one space-separated field.
pub fn write_counterexamples_csv<W: Write>(out: W, records: &[CounterexampleRecord]) -> Result<(), Error> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    if records.is_empty() {
        w.write_record(["graph6", "n", "diameter", "m_below_1", "bound", "spectrum"])?;
    }
    for r in records {
        let spectrum: Vec<String> = r.spectrum.iter().map(|x| format!("{x:.3}")).collect();
        w.serialize(FlatRecord {
            graph6: r.graph6.clone(),
            n: r.n,
            diameter: r.diameter,
            m_below_1: r.m_below_1,
            bound: r.bound,
            spectrum: spectrum.join(" "),
        })?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_counterexamples_csv<R: Read>(input: R) -> Result<Vec<CounterexampleRecord>, Error> {
    let mut r = csv::Reader::from_reader(input);
    let mut out = Vec::new();
    for flat in r.deserialize::<FlatRecord>() {
        let flat = flat?;
        let spectrum = flat
            .spectrum
            .split_whitespace()
            .map(|t| t.parse::<f64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Error::Io(std::io::Error::new(std::io::ErrorKind::InvalidData, e)))?;
        out.push(CounterexampleRecord {
            graph6: flat.graph6,
            n: flat.n,
            diameter: flat.diameter,
            m_below_1: flat.m_below_1,
            bound: flat.bound,
            spectrum,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trip() {
        let found = counterexamples(6, None).unwrap();
        let mut buf = Vec::new();
        write_counterexamples_csv(&mut buf, &found).unwrap();
        assert_eq!(read_counterexamples_csv(&buf[..]).unwrap(), found);
    }

    #[test]
    fn none_below_six() {
        for n in 1..=5 {
            assert!(counterexamples(n, None).unwrap().is_empty(), "n = {n}");
        }
    }

    #[test]
    fn six_vertex_records() {
        let found = counterexamples(6, Some(2)).unwrap();
        assert_eq!(found.len(), 9);
        for r in &found {
            assert_eq!((r.diameter, r.m_below_1, r.bound), (3, 1, 2));
            assert_eq!(r.spectrum.len(), 6);
        }
    }
}
