use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use super::partition::clique_partition_min2;
use super::run_with_workers;
use crate::chroma::{hue_profile, HueProfile, ProfileError};
use crate::cotree::is_cograph;
use crate::families::{is_corona_of_complete, thm222_predicate, thm_2k1_predicate, thm_3k_predicate};
use crate::graph::{
    enumerate_connected_nonisomorphic, from_graph6, to_graph6, try_canonical_form, Graph,
    GeneratorOrderError,
};

/// A problem with one input graph; the search carries on without it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    /// 1-based line number for text input, otherwise the input position.
    pub line: usize,
    pub message: String,
}

/// The graphs a search runs over.
#[derive(Debug, Clone)]
pub struct Universe {
    pub description: String,
    graphs: Vec<(usize, Graph)>,
    errors: Vec<InputError>,
}

impl Universe {
    /// Connected graphs of every order in `min_order..=max_order`, one per
    /// isomorphism class.
    pub fn connected(min_order: usize, max_order: usize) -> Result<Universe, GeneratorOrderError> {
        let mut graphs = Vec::new();
        for n in min_order.max(1)..=max_order {
            graphs.extend(enumerate_connected_nonisomorphic(n)?);
        }
        Ok(Universe::from_graphs(
            format!("connected graphs, {min_order} <= n <= {max_order}"),
            graphs,
        ))
    }

    pub fn from_graphs(description: impl Into<String>, graphs: Vec<Graph>) -> Universe {
        Universe {
            description: description.into(),
            graphs: graphs.into_iter().enumerate().map(|(i, g)| (i + 1, g)).collect(),
            errors: Vec::new(),
        }
    }

    /// One graph6 string per line; blank lines are skipped and bad lines
    /// are recorded.
    pub fn from_graph6_lines(description: impl Into<String>, text: &str) -> Universe {
        let mut graphs = Vec::new();
        let mut errors = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            match from_graph6(line) {
                Ok(g) => graphs.push((i + 1, g)),
                Err(e) => errors.push(InputError {
                    line: i + 1,
                    message: e.to_string(),
                }),
            }
        }
        Universe {
            description: description.into(),
            graphs,
            errors,
        }
    }

    /// Moves graphs above `max_order` vertices to the error list.
    pub fn limit_order(&mut self, max_order: usize) {
        let errors = &mut self.errors;
        self.graphs.retain(|(line, g)| {
            let keep = g.order() <= max_order;
            if !keep {
                errors.push(InputError {
                    line: *line,
                    message: format!("order {} exceeds the limit of {max_order}", g.order()),
                });
            }
            keep
        });
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn errors(&self) -> &[InputError] {
        &self.errors
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FamilyTags {
    pub corona_of_complete: Option<usize>,
    pub thm222: bool,
    pub thm_2k1: bool,
    /// Least `k` for which the clique-plus-matching structure holds.
    pub thm_3k: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    /// Canonically relabeled when the order allows, else as given.
    pub graph: Graph,
    pub graph6: String,
    pub degree_sequence: Vec<usize>,
    pub profile: HueProfile,
    pub cograph: bool,
    pub complement_well_hued: bool,
    pub clique_partition_min2: bool,
    pub families: FamilyTags,
}

impl Row {
    pub fn compute(g: &Graph) -> Result<Row, ProfileError> {
        let profile = hue_profile(g)?;
        let graph = match try_canonical_form(g) {
            Ok(form) => from_graph6(&form).expect("canonical form parses"),
            Err(_) => g.clone(),
        };
        let n = graph.order();
        let families = FamilyTags {
            corona_of_complete: is_corona_of_complete(&graph),
            thm222: thm222_predicate(&graph).holds(),
            thm_2k1: thm_2k1_predicate(&graph).holds(),
            thm_3k: (2..=n / 3).find(|&k| {
                thm_3k_predicate(&graph, k)
                    .expect("k in range")
                    .holds()
            }),
        };
        Ok(Row {
            graph6: to_graph6(&graph),
            degree_sequence: graph.degree_sequence(),
            cograph: is_cograph(&graph),
            complement_well_hued: hue_profile(&graph.complement())?.well_hued,
            clique_partition_min2: clique_partition_min2(&graph).is_some(),
            families,
            profile,
            graph,
        })
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn size(&self) -> usize {
        self.graph.size()
    }

    pub fn flag(&self, f: Flag) -> bool {
        match f {
            Flag::WellCovered => self.profile.well_covered,
            Flag::WellBicovered => self.profile.well_bicovered,
            Flag::WellHued => self.profile.well_hued,
            Flag::WellEquiHued => self.profile.well_equi_hued,
            Flag::Cograph => self.cograph,
            Flag::ComplementWellHued => self.complement_well_hued,
            Flag::CliquePartitionMin2 => self.clique_partition_min2,
            Flag::CoronaOfComplete => self.families.corona_of_complete.is_some(),
            Flag::Thm222 => self.families.thm222,
            Flag::Thm2k1 => self.families.thm_2k1,
            Flag::Thm3k => self.families.thm_3k.is_some(),
            Flag::Connected => self.graph.is_connected(),
            Flag::Complete => self.graph.is_clique(self.graph.vertices()),
        }
    }

    fn sort_key(&self) -> (usize, usize, &[usize], &str) {
        (self.order(), self.size(), &self.degree_sequence, &self.graph6)
    }

    pub fn to_tsv(&self) -> String {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        let bit = |b: bool| if b { "1" } else { "0" }.to_string();
        let opt = |o: Option<usize>| o.map_or("-".to_string(), |v| v.to_string());
        [
            self.graph6.clone(),
            self.order().to_string(),
            self.size().to_string(),
            join(&self.degree_sequence),
            self.profile.sequence.as_deref().map_or("-".to_string(), join),
            self.profile.chromatic_number.to_string(),
            bit(self.profile.well_covered),
            bit(self.profile.well_bicovered),
            bit(self.profile.well_hued),
            bit(self.profile.well_equi_hued),
            bit(self.cograph),
            bit(self.complement_well_hued),
            bit(self.clique_partition_min2),
            opt(self.families.corona_of_complete),
            bit(self.families.thm222),
            bit(self.families.thm_2k1),
            opt(self.families.thm_3k),
        ]
        .join("\t")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "graph6": self.graph6,
            "n": self.order(),
            "m": self.size(),
            "degree_sequence": self.degree_sequence,
            "sequence": self.profile.sequence,
            "chi": self.profile.chromatic_number,
            "well_covered": self.profile.well_covered,
            "well_bicovered": self.profile.well_bicovered,
            "well_hued": self.profile.well_hued,
            "well_equi_hued": self.profile.well_equi_hued,
            "cograph": self.cograph,
            "complement_well_hued": self.complement_well_hued,
            "clique_partition_min2": self.clique_partition_min2,
            "families": {
                "corona_of_complete": self.families.corona_of_complete,
                "thm222": self.families.thm222,
                "thm_2k1": self.families.thm_2k1,
                "thm_3k": self.families.thm_3k,
            },
        })
    }
}

pub const TSV_COLUMNS: [&str; 17] = [
    "graph6",
    "n",
    "m",
    "degree_sequence",
    "sequence",
    "chi",
    "well_covered",
    "well_bicovered",
    "well_hued",
    "well_equi_hued",
    "cograph",
    "complement_well_hued",
    "clique_partition_min2",
    "corona_of_complete",
    "thm222",
    "thm_2k1",
    "thm_3k",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flag {
    WellCovered,
    WellBicovered,
    WellHued,
    WellEquiHued,
    Cograph,
    ComplementWellHued,
    CliquePartitionMin2,
    CoronaOfComplete,
    Thm222,
    Thm2k1,
    Thm3k,
    Connected,
    Complete,
}

impl Flag {
    pub const ALL: [Flag; 13] = [
        Flag::WellCovered,
        Flag::WellBicovered,
        Flag::WellHued,
        Flag::WellEquiHued,
        Flag::Cograph,
        Flag::ComplementWellHued,
        Flag::CliquePartitionMin2,
        Flag::CoronaOfComplete,
        Flag::Thm222,
        Flag::Thm2k1,
        Flag::Thm3k,
        Flag::Connected,
        Flag::Complete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Flag::WellCovered => "well_covered",
            Flag::WellBicovered => "well_bicovered",
            Flag::WellHued => "well_hued",
            Flag::WellEquiHued => "well_equi_hued",
            Flag::Cograph => "cograph",
            Flag::ComplementWellHued => "complement_well_hued",
            Flag::CliquePartitionMin2 => "clique_partition_min2",
            Flag::CoronaOfComplete => "corona_of_complete",
            Flag::Thm222 => "thm222",
            Flag::Thm2k1 => "thm_2k1",
            Flag::Thm3k => "thm_3k",
            Flag::Connected => "connected",
            Flag::Complete => "complete",
        }
    }
}

/// A flag that must hold, or with a leading `!`, must not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Filter {
    pub flag: Flag,
    pub expected: bool,
}

impl Filter {
    pub fn accepts(&self, row: &Row) -> bool {
        row.flag(self.flag) == self.expected
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown filter {0:?}")]
pub struct UnknownFilter(pub String);

impl FromStr for Filter {
    type Err = UnknownFilter;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (expected, name) = match s.strip_prefix('!') {
            Some(rest) => (false, rest),
            None => (true, s),
        };
        Flag::ALL
            .iter()
            .find(|f| f.name() == name)
            .map(|&flag| Filter { flag, expected })
            .ok_or_else(|| UnknownFilter(s.to_string()))
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.expected {
            f.write_str("!")?;
        }
        f.write_str(self.flag.name())
    }
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub universe: String,
    pub filters: Vec<Filter>,
    /// Graphs examined, counting duplicates.
    pub scanned: usize,
    pub rows: Vec<Row>,
    pub errors: Vec<InputError>,
}

impl SearchReport {
    fn filter_text(&self) -> String {
        if self.filters.is_empty() {
            return "none".to_string();
        }
        self.filters.iter().map(Filter::to_string).collect::<Vec<_>>().join(",")
    }

    pub fn meta_json(&self) -> Value {
        json!({
            "meta": {
                "library": "wellhued",
                "version": env!("CARGO_PKG_VERSION"),
                "universe": self.universe,
                "filters": self.filters.iter().map(Filter::to_string).collect::<Vec<_>>(),
                "scanned": self.scanned,
                "rows": self.rows.len(),
                "input_errors": self.errors.len(),
            }
        })
    }

    /// Metadata comment line, column header, then one line per row.
    pub fn to_tsv(&self) -> String {
        let mut out = format!(
            "# wellhued {}\tuniverse={}\tfilters={}\tscanned={}\trows={}\n",
            env!("CARGO_PKG_VERSION"),
            self.universe,
            self.filter_text(),
            self.scanned,
            self.rows.len(),
        );
        out.push_str(&TSV_COLUMNS.join("\t"));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.to_tsv());
            out.push('\n');
        }
        out
    }

    /// Metadata object, then one object per row.
    pub fn to_jsonl(&self) -> String {
        let mut out = self.meta_json().to_string();
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.to_json().to_string());
            out.push('\n');
        }
        out
    }
}

/// Computes a row per graph, keeps the rows passing every filter, drops
/// isomorphic duplicates and sorts by order, size, degree sequence, then
/// graph6. Output does not depend on `workers`.
pub fn search(universe: &Universe, filters: &[Filter], workers: Option<usize>) -> SearchReport {
    let computed: Vec<(usize, Result<Row, ProfileError>)> = run_with_workers(workers, || {
        universe
            .graphs
            .par_iter()
            .map(|(line, g)| (*line, Row::compute(g)))
            .collect()
    });
    let mut errors = universe.errors.clone();
    let mut rows = Vec::new();
    let mut seen = BTreeSet::new();
    for (line, result) in computed {
        match result {
            Ok(row) => {
                if filters.iter().all(|f| f.accepts(&row)) && seen.insert(row.graph6.clone()) {
                    rows.push(row);
                }
            }
            Err(e) => errors.push(InputError {
                line,
                message: e.to_string(),
            }),
        }
    }
    errors.sort_by_key(|e| e.line);
    rows.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    SearchReport {
        universe: universe.description.clone(),
        filters: filters.to_vec(),
        scanned: universe.len(),
        rows,
        errors,
    }
}
