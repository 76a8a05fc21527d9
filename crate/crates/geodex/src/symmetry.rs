//! Transitivity predicates and local-action analysis: arc-, geodesic- and
//! distance-transitivity at each level, decided by orbit-size comparison
//! from a single deterministic seed tuple.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::{tuple_orbit_stats, PermGroup, DEFAULT_TUPLE_BUDGET};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TransitivityMode {
    Arc,
    Geodesic,
    Distance,
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelReport {
    pub s: usize,
    pub tuple_count: usize,
    pub orbit_covers: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TransitivityReport {
    pub mode: TransitivityMode,
    /// largest s with transitivity at every level i <= s (0 when already
    /// level 1 fails)
    pub max_s: usize,
    pub per_s: Vec<LevelReport>,
}

impl TransitivityReport {
    pub fn transitive_up_to(&self, s: usize) -> bool {
        self.max_s >= s
    }
}

/// Every generator must preserve adjacency.
pub fn check_automorphisms(g: &Graph, group: &PermGroup) -> Result<()> {
    if group.degree() != g.n()
        || !group.gens().iter().all(|p| crate::aut::is_automorphism(g, p))
    {
        return Err(Error::NotAutomorphisms);
    }
    Ok(())
}

pub fn is_vertex_transitive(g: &Graph, group: &PermGroup) -> Result<bool> {
    check_automorphisms(g, group)?;
    Ok(group.is_transitive())
}

fn distance_pairs(g: &Graph, s: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0..g.n()).flat_map(move |u| {
        let table = g.distances_from(u);
        (0..g.n())
            .filter(move |&v| table.get(v) == Some(s))
            .map(move |v| vec![u, v])
    })
}

fn universe(g: &Graph, mode: TransitivityMode, s: usize) -> Box<dyn Iterator<Item = Vec<usize>> + '_> {
    match mode {
        TransitivityMode::Arc => Box::new(g.s_arcs(s)),
        TransitivityMode::Geodesic => Box::new(g.s_geodesics(s)),
        TransitivityMode::Distance => Box::new(distance_pairs(g, s)),
    }
}

/// Orbit-covering test per level 1..=s_max. The seed is the
/// lexicographically least tuple of the universe; an empty universe at some
/// level means no transitivity there.
pub fn transitivity(
    g: &Graph,
    group: &PermGroup,
    mode: TransitivityMode,
    s_max: usize,
    budget: usize,
) -> Result<TransitivityReport> {
    check_automorphisms(g, group)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut per_s = Vec::new();
    for s in 1..=s_max {
        let seed = universe(g, mode, s).next();
        let (count, covers) = match seed {
            None => (0, false),
            Some(seed) => {
                let stats = tuple_orbit_stats(group, &seed, universe(g, mode, s), budget)?;
                (stats.universe_size, stats.covers)
            }
        };
        per_s.push(LevelReport { s, tuple_count: count, orbit_covers: covers });
    }
    let max_s = per_s.iter().take_while(|r| r.orbit_covers).count();
    Ok(TransitivityReport { mode, max_s, per_s })
}

/// Geodesic-transitive: transitive on i-geodesics for every i up to the
/// diameter.
pub fn is_geodesic_transitive(g: &Graph, group: &PermGroup) -> Result<bool> {
    let d = g.diameter()?;
    if d == 0 {
        return Ok(true);
    }
    let report = transitivity(g, group, TransitivityMode::Geodesic, d, DEFAULT_TUPLE_BUDGET)?;
    Ok(report.max_s == d)
}

/// The permutation group induced by a vertex stabiliser on the neighbourhood
/// of that vertex, with its transitivity pedigree.
#[derive(Debug)]
pub struct LocalAction {
    pub vertex: usize,
    pub degree: usize,
    pub image_order: u128,
    pub kernel_order: u128,
    pub faithful: bool,
    pub transitive: bool,
    pub two_transitive: bool,
    pub primitive: bool,
    pub two_primitive: bool,
}

pub fn local_action(g: &Graph, group: &PermGroup, u: usize) -> Result<LocalAction> {
    check_automorphisms(g, group)?;
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let stab = group.stabilizer(u);
    let neighborhood: Vec<usize> = g.neighbors(u).collect();
    let act = stab.action_on_set(&neighborhood)?;
    let transitive = act.group.is_transitive();
    let (two_transitive, primitive, two_primitive) = if transitive {
        (
            act.group.is_two_transitive()?,
            act.group.is_primitive()?,
            act.group.is_two_primitive()?,
        )
    } else {
        (false, false, false)
    };
    Ok(LocalAction {
        vertex: u,
        degree: neighborhood.len(),
        image_order: act.group.order(),
        kernel_order: act.kernel_order,
        faithful: act.faithful(),
        transitive,
        two_transitive,
        primitive,
        two_primitive,
    })
}

/// Outcome of the b_2 <= 1 / b_3 <= 1 forcing check on one instance.
#[derive(Clone, Debug, Serialize)]
pub struct ForcingReport {
    /// 2 or 3: the geodesic-transitivity level whose b-parameter was used
    pub s_used: usize,
    pub b_value: usize,
    pub diameter: usize,
    pub geodesic_transitive: bool,
}

/// Instance check of small-b forcing: a 2-geodesic-transitive graph with
/// b_2 <= 1 (or a 3-geodesic-transitive graph with b_3 <= 1) must be
/// geodesic-transitive. Verifies the conclusion on this graph; errors when
/// neither hypothesis applies.
pub fn small_b_forcing(g: &Graph, group: &PermGroup) -> Result<ForcingReport> {
    check_automorphisms(g, group)?;
    let d = g.diameter()?;
    let geo = transitivity(
        g,
        group,
        TransitivityMode::Geodesic,
        3.min(d),
        DEFAULT_TUPLE_BUDGET,
    )?;
    // b_s for s = 2, 3: diameter-s graphs have b_s = 0
    let b_at = |s: usize| -> Result<Option<usize>> {
        if d < s {
            return Ok(None);
        }
        if d == s {
            return Ok(Some(0));
        }
        Ok(g.intersection_numbers(s)?.map(|nums| nums.b))
    };
    let mut usable = Vec::new();
    if geo.transitive_up_to(2) {
        if let Some(b2) = b_at(2)? {
            if b2 <= 1 {
                usable.push((2, b2));
            }
        }
    }
    if geo.transitive_up_to(3) {
        if let Some(b3) = b_at(3)? {
            if b3 <= 1 {
                usable.push((3, b3));
            }
        }
    }
    let Some(&(s_used, b_value)) = usable.first() else {
        return Err(Error::HypothesisNotMet(
            "graph is neither 2-geodesic-transitive with b_2 <= 1 \
             nor 3-geodesic-transitive with b_3 <= 1"
                .into(),
        ));
    };
    let geodesic_transitive = is_geodesic_transitive(g, group)?;
    Ok(ForcingReport { s_used, b_value, diameter: d, geodesic_transitive })
}
