//! Level-by-level search over candidate graphs, set counting and `mydim`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::dissolve::{
    count_nonspherical_sets, count_sets, solve_general, solve_spherical, GeneralVerdict, Orientation,
    SphericalVerdict, VerdictRef,
};
use crate::exact::literal::render;
use crate::exact::{Mode, RealAlg};
use crate::graph::{class_key, decode, enumerate_classes, extensions, is_self_complementary, Graph, GraphCode};
use crate::Error;

/// Runs independent jobs; implementations may do so in parallel but must
/// return results in input order.
pub trait Executor: Sync {
    fn map<T: Sync, R: Send>(&self, items: &[T], f: &(dyn Fn(&T) -> R + Sync)) -> Vec<R>;
}

pub struct Sequential;

impl Executor for Sequential {
    fn map<T: Sync, R: Send>(&self, items: &[T], f: &(dyn Fn(&T) -> R + Sync)) -> Vec<R> {
        items.iter().map(f).collect()
    }
}

/// One solution in printable form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionRecord {
    pub a: String,
    pub b: String,
    pub psd: bool,
    pub rank: usize,
    pub orientation: Orientation,
    /// Spherical mode only.
    pub jspherical: Option<bool>,
    /// General mode only.
    pub spherical: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtlasEntry {
    pub n: usize,
    pub class_key: GraphCode,
    pub mode: Mode,
    pub survived: bool,
    /// Admissible solutions followed by rejected (indefinite) ones.
    pub solutions: Vec<SolutionRecord>,
    pub set_count: usize,
    /// General mode: admissible sets that are not spherical.
    pub nonspherical_count: usize,
    /// Spherical mode: admissible sets of rank below `d`.
    pub low_rank_count: usize,
    pub self_complementary: bool,
    pub parent: Option<GraphCode>,
}

impl AtlasEntry {
    pub fn graph(&self) -> Graph {
        decode(self.class_key.as_str(), self.n).expect("class keys are valid codes")
    }

    pub fn indefinite_only(&self) -> bool {
        self.survived && !self.solutions.iter().any(|s| s.psd)
    }
}

/// Counts for one level of the atlas.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LevelCounts {
    /// Classes solved at this level by each pipeline.
    pub general_candidates: usize,
    pub spherical_candidates: usize,
    pub surviving_general: usize,
    pub surviving_spherical: usize,
    pub spherical_sets: usize,
    pub nonspherical_sets: usize,
    pub low_rank_spherical_sets: usize,
    pub indefinite_spherical: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AtlasSummary {
    pub d: usize,
    pub levels: BTreeMap<usize, LevelCounts>,
}

impl AtlasSummary {
    pub fn add(&mut self, e: &AtlasEntry) {
        let c = self.levels.entry(e.n).or_default();
        match e.mode {
            Mode::General => {
                c.general_candidates += 1;
                if e.survived {
                    c.surviving_general += 1;
                }
                c.nonspherical_sets += e.nonspherical_count;
            }
            Mode::Spherical => {
                c.spherical_candidates += 1;
                if e.survived {
                    c.surviving_spherical += 1;
                }
                if e.indefinite_only() {
                    c.indefinite_spherical += 1;
                }
                c.spherical_sets += e.set_count;
                c.low_rank_spherical_sets += e.low_rank_count;
            }
        }
    }

    /// Summary of `entries`, with a (possibly empty) row for every order in
    /// `orders`.
    pub fn from_entries(d: usize, orders: core::ops::RangeInclusive<usize>, entries: &[AtlasEntry]) -> Self {
        let mut s = AtlasSummary { d, levels: orders.map(|n| (n, LevelCounts::default())).collect() };
        for e in entries {
            s.add(e);
        }
        s
    }

    /// Total number of sets at level `n`.
    pub fn total_sets(&self, n: usize) -> usize {
        self.levels.get(&n).map_or(0, |c| c.spherical_sets + c.nonspherical_sets)
    }
}

fn render_pair(a: &RealAlg, b: &RealAlg) -> (String, String) {
    (render(a), render(b))
}

pub fn spherical_entry(v: &SphericalVerdict, key: GraphCode, parent: Option<GraphCode>) -> AtlasEntry {
    let solutions = v
        .solutions
        .iter()
        .chain(&v.rejected)
        .map(|s| {
            let (a, b) = render_pair(&s.point.a, &s.point.b);
            SolutionRecord {
                a,
                b,
                psd: s.psd,
                rank: s.rank,
                orientation: s.orientation,
                jspherical: Some(s.jspherical),
                spherical: None,
            }
        })
        .collect();
    let low_rank_count = v
        .solutions
        .iter()
        .filter(|s| s.rank < v.d && (!v.self_complementary || s.orientation == Orientation::Graph))
        .count();
    AtlasEntry {
        n: v.graph.order(),
        class_key: key,
        mode: Mode::Spherical,
        survived: v.survived,
        solutions,
        set_count: count_sets(VerdictRef::Spherical(v)),
        nonspherical_count: 0,
        low_rank_count,
        self_complementary: v.self_complementary,
        parent,
    }
}

pub fn general_entry(v: &GeneralVerdict, key: GraphCode, parent: Option<GraphCode>) -> AtlasEntry {
    let solutions = v
        .solutions
        .iter()
        .chain(&v.rejected)
        .map(|s| {
            let (a, b) = render_pair(&s.point.a, &s.point.b);
            SolutionRecord {
                a,
                b,
                psd: s.psd,
                rank: s.rank,
                orientation: s.orientation,
                jspherical: None,
                spherical: Some(s.spherical),
            }
        })
        .collect();
    AtlasEntry {
        n: v.graph.order(),
        class_key: key,
        mode: Mode::General,
        survived: v.survived,
        solutions,
        set_count: count_sets(VerdictRef::General(v)),
        nonspherical_count: count_nonspherical_sets(v),
        low_rank_count: 0,
        self_complementary: v.self_complementary,
        parent,
    }
}

/// Solve one class. Complete and empty graphs carry a single distance and
/// never survive.
pub fn solve_entry(g: &Graph, key: GraphCode, parent: Option<GraphCode>, d: usize, mode: Mode) -> Result<AtlasEntry, Error> {
    if g.is_complete() || g.is_empty() {
        return Ok(AtlasEntry {
            n: g.order(),
            class_key: key,
            mode,
            survived: false,
            solutions: Vec::new(),
            set_count: 0,
            nonspherical_count: 0,
            low_rank_count: 0,
            self_complementary: is_self_complementary(g)?,
            parent,
        });
    }
    Ok(match mode {
        Mode::Spherical => spherical_entry(&solve_spherical(g, d)?, key, parent),
        Mode::General => general_entry(&solve_general(g, d)?, key, parent),
    })
}

/// One representative per class at order `n0`.
pub fn seed(n0: usize) -> Result<Vec<Graph>, Error> {
    enumerate_classes(n0)
}

fn solve_all(
    jobs: Vec<(Graph, GraphCode, Option<GraphCode>)>,
    d: usize,
    mode: Mode,
    exec: &impl Executor,
) -> Result<Vec<AtlasEntry>, Error> {
    let out = exec.map(&jobs, &|(g, key, parent)| solve_entry(g, key.clone(), parent.clone(), d, mode));
    let mut entries = out.into_iter().collect::<Result<Vec<_>, _>>()?;
    entries.sort_by(|x, y| x.class_key.cmp(&y.class_key));
    Ok(entries)
}

/// Solve every class at the seed level.
pub fn seed_level(n0: usize, d: usize, mode: Mode, exec: &impl Executor) -> Result<Vec<AtlasEntry>, Error> {
    let jobs = seed(n0)?.into_iter().map(|g| (g, class_key(&g).expect("seed order is small"), None)).collect();
    solve_all(jobs, d, mode, exec)
}

/// Extend the survivors of one level by a vertex in both orientations and
/// solve every new class.
pub fn step(survivors: &[AtlasEntry], d: usize, mode: Mode, exec: &impl Executor) -> Result<Vec<AtlasEntry>, Error> {
    let mut live: Vec<&AtlasEntry> = survivors.iter().filter(|e| e.survived).collect();
    live.sort_by(|x, y| x.class_key.cmp(&y.class_key));
    let candidates: Vec<(Graph, GraphCode)> = live
        .iter()
        .flat_map(|e| {
            let g = e.graph();
            [g, g.complement()].into_iter().flat_map(|h| extensions(&h)).map(move |h| (h, e.class_key.clone()))
        })
        .collect();
    let keys = exec.map(&candidates, &|(h, _)| class_key(h));
    let mut next: BTreeMap<GraphCode, GraphCode> = BTreeMap::new();
    for (key, (_, parent)) in keys.into_iter().zip(candidates) {
        next.entry(key?).or_insert(parent);
    }
    let n = live.first().map_or(0, |e| e.n) + 1;
    let jobs = next.into_iter().map(|(key, parent)| (decode(key.as_str(), n).expect("valid key"), key, Some(parent))).collect();
    solve_all(jobs, d, mode, exec)
}

/// Both pipelines from `n_seed` to `n_max`.
pub fn full_atlas(
    d: usize,
    n_seed: usize,
    n_max: usize,
    modes: &[Mode],
    exec: &impl Executor,
) -> Result<(AtlasSummary, Vec<AtlasEntry>), Error> {
    let mut all = Vec::new();
    for &mode in modes {
        let mut level = seed_level(n_seed, d, mode, exec)?;
        for n in n_seed..=n_max {
            let survivors: Vec<AtlasEntry> = level.iter().filter(|e| e.survived).cloned().collect();
            all.append(&mut level);
            if n < n_max && !survivors.is_empty() {
                level = step(&survivors, d, mode, exec)?;
            }
        }
    }
    all.sort_by(|x, y| (x.n, x.mode, &x.class_key).cmp(&(y.n, y.mode, &y.class_key)));
    Ok((AtlasSummary::from_entries(d, n_seed..=n_max, &all), all))
}

/// Smallest dimension with a representation of `g` itself (edges carrying
/// the shorter distance).
pub fn mydim(g: &Graph) -> Result<usize, Error> {
    let n = g.order();
    Ok(mydim_bounded(g, n - 1)?.unwrap_or(n - 1))
}

/// `mydim` if it is at most `max_dim`, searching upwards from 1.
pub fn mydim_bounded(g: &Graph, max_dim: usize) -> Result<Option<usize>, Error> {
    if g.is_complete() || g.is_empty() {
        return Err(Error::NotTwoDistanceGraph);
    }
    let n = g.order();
    for d in 1..=max_dim.min(n - 2) {
        let v = solve_general(g, d)?;
        if v.continuum || v.solutions.iter().any(|s| s.orientation == Orientation::Graph) {
            return Ok(Some(d));
        }
    }
    // n points always fit in R^(n-1)
    Ok((max_dim >= n - 1).then_some(n - 1))
}

/// `mydim` where complete and empty graphs count as the simplex they span.
pub fn mydim_or_simplex(g: &Graph) -> Result<usize, Error> {
    if g.is_complete() || g.is_empty() {
        Ok(g.order() - 1)
    } else {
        mydim(g)
    }
}

/// Per order, how many graphs (a graph and its complement counted
/// separately) have each value of `mydim`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MydimCensus {
    pub dims: BTreeMap<usize, BTreeMap<usize, usize>>,
}

impl MydimCensus {
    /// Graphs with `mydim` exactly `d`, per order.
    pub fn exactly(&self, d: usize) -> BTreeMap<usize, usize> {
        self.select(|m| m == d)
    }

    /// Graphs representable in `R^d`, per order.
    pub fn at_most(&self, d: usize) -> BTreeMap<usize, usize> {
        self.select(|m| m <= d)
    }

    fn select(&self, keep: impl Fn(usize) -> bool) -> BTreeMap<usize, usize> {
        self.dims
            .iter()
            .map(|(&n, h)| (n, h.iter().filter(|(&m, _)| keep(m)).map(|(_, c)| c).sum()))
            .filter(|&(_, c)| c > 0)
            .collect()
    }
}

/// `mydim` over every graph of order `d+1..=n_full`, and above that over the
/// classes of `general_survivors` (the general atlas in dimension `d`), which
/// hold every graph with `mydim <= d`. Counts above `n_full` are therefore
/// only meaningful for dimensions up to `d`.
pub fn mydim_census(
    d: usize,
    n_full: usize,
    general_survivors: &[AtlasEntry],
    exec: &impl Executor,
) -> Result<MydimCensus, Error> {
    let mut graphs: Vec<Graph> = Vec::new();
    let push_class = |g: Graph, graphs: &mut Vec<Graph>| -> Result<(), Error> {
        graphs.push(g);
        if !is_self_complementary(&g)? {
            graphs.push(g.complement());
        }
        Ok(())
    };
    for n in d + 1..=n_full {
        for g in enumerate_classes(n)? {
            push_class(g, &mut graphs)?;
        }
    }
    let mut seen: BTreeSet<(usize, GraphCode)> = BTreeSet::new();
    for e in general_survivors.iter().filter(|e| e.survived && e.n > n_full && e.mode == Mode::General) {
        if seen.insert((e.n, e.class_key.clone())) {
            push_class(e.graph(), &mut graphs)?;
        }
    }
    let dims = exec.map(&graphs, &mydim_or_simplex);
    let mut census = MydimCensus::default();
    for (g, md) in graphs.iter().zip(dims) {
        *census.dims.entry(g.order()).or_default().entry(md?).or_insert(0) += 1;
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dimensions() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(mydim(&c5).unwrap(), 2);
        let path = decode("aba", 3).unwrap();
        assert_eq!(mydim(&path).unwrap(), 1);
        assert_eq!(mydim(&Graph::complete(4)), Err(Error::NotTwoDistanceGraph));
        assert_eq!(mydim_or_simplex(&Graph::complete(4)).unwrap(), 3);
    }

    #[test]
    fn seeds() {
        assert_eq!(seed(2).unwrap().len(), 1);
    }
}
