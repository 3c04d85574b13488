//! Derangement graphs built explicitly and diagonalized numerically.

use std::collections::BTreeMap;

use itertools::Itertools;
use nalgebra::{DMatrix, SymmetricEigen};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{check_cap, domain, Result};
use crate::exactalg::{rat, to_f64, Rational};
use crate::partitions::Partition;
use crate::spectra::{spectrum_table, AlphaSpec, EtaValue, Method};

/// Largest `n` for [`build_perm_derangement_graph`].
pub const PERM_GRAPH_CAP: usize = 7;
/// Largest `n` for [`build_matching_derangement_graph`].
pub const MATCHING_GRAPH_CAP: usize = 6;
/// Largest vertex count for [`spectrum_numeric`].
pub const EIGEN_CAP: usize = 12000;

/// Simple graph with bit-packed adjacency rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseGraph {
    vertices: usize,
    words: usize,
    bits: Vec<u64>,
}

impl DenseGraph {
    /// Builds the graph on `vertices` vertices from a row predicate,
    /// evaluating rows in parallel.
    pub fn from_fn(vertices: usize, adjacent: impl Fn(usize, usize) -> bool + Sync) -> Self {
        let words = vertices.div_ceil(64);
        let mut bits = vec![0u64; vertices * words];
        if words > 0 {
            bits.par_chunks_mut(words).enumerate().for_each(|(u, row)| {
                for v in (0..vertices).filter(|&v| adjacent(u, v)) {
                    row[v / 64] |= 1 << (v % 64);
                }
            });
        }
        DenseGraph {
            vertices,
            words,
            bits,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.bits[u * self.words..(u + 1) * self.words]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.vertices).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// The common degree, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = if self.vertices == 0 {
            0
        } else {
            self.degree(0)
        };
        (0..self.vertices).all(|u| self.degree(u) == d).then_some(d)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.vertices)
            .all(|u| (0..self.vertices).all(|v| self.has_edge(u, v) == self.has_edge(v, u)))
    }

    pub fn has_loops(&self) -> bool {
        (0..self.vertices).any(|u| self.has_edge(u, u))
    }

    pub fn adjacency(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.vertices, self.vertices, |u, v| {
            self.has_edge(u, v) as u8 as f64
        })
    }
}

/// Cayley graph of `S_n` generated by the derangements, on permutations in
/// lexicographic one-line order.
pub fn build_perm_derangement_graph(n: usize) -> Result<DenseGraph> {
    check_cap("n", n, PERM_GRAPH_CAP)?;
    let perms: Vec<Vec<u8>> = (0..n as u8).permutations(n).collect();
    Ok(DenseGraph::from_fn(perms.len(), |u, v| {
        perms[u].iter().zip(&perms[v]).all(|(a, b)| a != b)
    }))
}

/// Perfect matchings of `[2n]` as partner arrays, in lexicographic order.
pub fn perfect_matchings(n: usize) -> Vec<Vec<u8>> {
    fn go(partner: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        let Some(i) = partner.iter().position(|&p| p == u8::MAX) else {
            out.push(partner.clone());
            return;
        };
        for j in i + 1..partner.len() {
            if partner[j] == u8::MAX {
                partner[i] = j as u8;
                partner[j] = i as u8;
                go(partner, out);
                partner[i] = u8::MAX;
                partner[j] = u8::MAX;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![u8::MAX; 2 * n], &mut out);
    out
}

/// Perfect matchings of `K_{2n}`, adjacent when they share no edge.
pub fn build_matching_derangement_graph(n: usize) -> Result<DenseGraph> {
    check_cap("n", n, MATCHING_GRAPH_CAP)?;
    let ms = perfect_matchings(n);
    Ok(DenseGraph::from_fn(ms.len(), |u, v| {
        ms[u].iter().zip(&ms[v]).all(|(a, b)| a != b)
    }))
}

/// Adjacency eigenvalues in ascending order.
pub fn spectrum_numeric(g: &DenseGraph) -> Result<Vec<f64>> {
    check_cap("vertices", g.vertex_count(), EIGEN_CAP)?;
    let mut ev: Vec<f64> = SymmetricEigen::new(g.adjacency())
        .eigenvalues
        .iter()
        .copied()
        .collect();
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}

/// One exact eigenvalue with the shapes that produce it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub shapes: Vec<Partition>,
    pub eta: String,
    pub expected_mult: u64,
    pub found_mult: u64,
    pub max_residual: f64,
}

/// Outcome of matching a numeric spectrum against the exact one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub alpha: u32,
    pub vertices: usize,
    pub degree: Option<usize>,
    pub entries: Vec<SpectrumEntry>,
    pub unmatched: usize,
    pub pass: bool,
}

/// Relative tolerance for matching eigenvalues of the graph at `α`.
pub fn tolerance(alpha: u32) -> f64 {
    if alpha == 1 {
        1e-8
    } else {
        1e-6
    }
}

/// Builds the graph for `α ∈ {1, 2}`, diagonalizes it and accounts for every
/// eigenvalue with the exact η values and multiplicities. Shapes sharing an η
/// value are pooled.
pub fn verify_spectrum(n: usize, alpha: u32) -> Result<SpectrumReport> {
    let g = match alpha {
        1 => build_perm_derangement_graph(n)?,
        2 => build_matching_derangement_graph(n)?,
        _ => {
            return domain(format!(
                "derangement graphs exist for alpha 1 and 2, not {alpha}"
            ))
        }
    };
    let numeric = spectrum_numeric(&g)?;
    let table = spectrum_table(n, &AlphaSpec::Value(rat(alpha as i64)), Method::Auto)?;
    let mut groups: BTreeMap<Rational, (Vec<Partition>, u64)> = BTreeMap::new();
    for row in table.rows {
        let EtaValue::Value(v) = row.eta else {
            unreachable!("numeric alpha yields numeric eta")
        };
        let entry = groups.entry(v).or_default();
        entry.0.push(row.shape);
        entry.1 += row.mult.expect("multiplicity is defined at alpha 1 and 2");
    }
    let tol = tolerance(alpha);
    let mut used = vec![false; numeric.len()];
    let entries: Vec<SpectrumEntry> = groups
        .into_iter()
        .rev()
        .map(|(eta, (shapes, expected))| {
            let target = to_f64(&eta);
            let window = tol * target.abs().max(1.0);
            let mut found = 0;
            let mut worst: f64 = 0.0;
            for (x, u) in numeric.iter().zip(used.iter_mut()) {
                let r = (x - target).abs();
                if !*u && r <= window {
                    *u = true;
                    found += 1;
                    worst = worst.max(r);
                }
            }
            SpectrumEntry {
                shapes,
                eta: eta.to_string(),
                expected_mult: expected,
                found_mult: found,
                max_residual: worst,
            }
        })
        .collect();
    let unmatched = used.iter().filter(|u| !**u).count();
    let pass = unmatched == 0 && entries.iter().all(|e| e.expected_mult == e.found_mult);
    Ok(SpectrumReport {
        n,
        alpha,
        vertices: g.vertex_count(),
        degree: g.regular_degree(),
        entries,
        unmatched,
        pass,
    })
}
