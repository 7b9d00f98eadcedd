//! The full computation for one quiver, with its intermediate products.

use std::time::{Duration, Instant};

use crate::catalog::Catalog;
use crate::count::{count_paths, summarize, topo_sort, HasseSize, LengthDistribution, Summary};
use crate::error::Result;
use crate::hasse::{build_hasse, prune_to_finite, HasseGraph};
use crate::prec::{build_prec_table, PrecTable};
use crate::quiver::{Quiver, QuiverClass};

/// Wall-clock time spent in each stage.
#[derive(Clone, Copy, Debug, Default)]
pub struct Timings {
    pub catalog: Duration,
    pub prec: Duration,
    pub hasse: Duration,
    pub count: Duration,
}

pub struct Analysis {
    pub class: QuiverClass,
    pub catalog: Catalog,
    pub table: PrecTable,
    /// Size of the Hasse quiver before pruning.
    pub raw_hasse: HasseSize,
    pub hasse: HasseGraph,
    pub distribution: LengthDistribution,
    pub timings: Timings,
}

impl Analysis {
    pub fn hasse_size(&self) -> HasseSize {
        HasseSize {
            vertices: self.hasse.vertex_count(),
            arrows: self.hasse.edge_count(),
        }
    }

    pub fn summary(&self) -> Summary {
        summarize(
            &self.distribution,
            &self.class.to_string(),
            self.class.vertex_count(),
            self.hasse_size(),
        )
    }
}

/// Everything up to and including the pruned Hasse quiver.
pub struct HasseStage {
    pub class: QuiverClass,
    pub catalog: Catalog,
    pub table: PrecTable,
    /// Size of the Hasse quiver before pruning.
    pub raw_hasse: HasseSize,
    pub hasse: HasseGraph,
    pub timings: Timings,
}

/// Catalog, relation table and pruned Hasse quiver, without counting.
pub fn hasse_only(q: &Quiver) -> Result<HasseStage> {
    let class = q.classify()?;
    let mut timings = Timings::default();
    let clock = Instant::now();
    let catalog = Catalog::for_quiver(q)?;
    timings.catalog = clock.elapsed();
    let clock = Instant::now();
    let table = build_prec_table(&catalog)?;
    timings.prec = clock.elapsed();
    let clock = Instant::now();
    let full = build_hasse(&catalog, &table)?;
    let raw_hasse = HasseSize {
        vertices: full.vertex_count(),
        arrows: full.edge_count(),
    };
    let hasse = prune_to_finite(&full);
    drop(full);
    timings.hasse = clock.elapsed();
    Ok(HasseStage {
        class,
        catalog,
        table,
        raw_hasse,
        hasse,
        timings,
    })
}

pub fn analyze(q: &Quiver) -> Result<Analysis> {
    let HasseStage {
        class,
        catalog,
        table,
        raw_hasse,
        hasse,
        mut timings,
    } = hasse_only(q)?;
    let clock = Instant::now();
    let order = topo_sort(&hasse)?;
    let distribution = count_paths(&hasse, &order)?;
    timings.count = clock.elapsed();
    Ok(Analysis {
        class,
        catalog,
        table,
        raw_hasse,
        hasse,
        distribution,
        timings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::preset;

    #[test]
    fn a1_and_a2() {
        let a1 = analyze(&preset("A:1").unwrap()).unwrap().summary();
        assert_eq!(
            (a1.min_length, a1.max_length, a1.total.as_str()),
            (1, 1, "1")
        );
        let a2 = analyze(&preset("A:2").unwrap()).unwrap();
        assert_eq!(a2.distribution, [(2, 1), (3, 1)].into_iter().collect());
    }

    #[test]
    fn dtilde4_summary() {
        let s = analyze(&preset("Dtilde4-paper").unwrap())
            .unwrap()
            .summary();
        assert_eq!(s.total, "210284");
        assert_eq!((s.min_length, s.max_length), (5, 22));
        assert!(s.no_gap && s.min_length_is_rank());
        assert_eq!(
            s.hasse,
            HasseSize {
                vertices: 314,
                arrows: 743
            }
        );
    }
}
