use std::fmt::Write as _;

use rayon::prelude::*;

use super::FinitePoset;
use crate::error::Result;
use crate::reduce::{Item, Reducer, Reducibility};

/// The partial order induced by a reducibility on a list of items.
#[derive(Clone, Debug)]
pub struct DegreePoset {
    pub items: Vec<Item>,
    pub relation: Reducibility,
    /// `matrix[i][j]`: item `i` reduces to item `j`.
    pub matrix: Vec<Vec<bool>>,
    /// Equivalence classes, each sorted, ordered by least member.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// The order on classes, labelled by member names.
    pub poset: FinitePoset,
    /// Covering pairs `(upper, lower)` of classes.
    pub hasse: Vec<(usize, usize)>,
}

pub fn degree_poset(items: Vec<Item>, relation: Reducibility, reducer: &Reducer) -> Result<DegreePoset> {
    let n = items.len();
    let cells: Vec<bool> = (0..n * n)
        .into_par_iter()
        .map(|k| Ok(reducer.reduces(&items[k / n], &items[k % n], relation)?.is_some()))
        .collect::<Result<_>>()?;
    let matrix: Vec<Vec<bool>> = cells.chunks(n.max(1)).take(n).map(<[bool]>::to_vec).collect();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (i..n).filter(|&j| j == i || (matrix[i][j] && matrix[j][i])).collect();
        for &j in &members {
            class_of[j] = classes.len();
        }
        classes.push(members);
    }
    let labels = classes
        .iter()
        .map(|c| {
            let mut names: Vec<&str> = c.iter().map(|&i| items[i].name()).collect();
            names.sort_unstable();
            names.join(", ")
        })
        .collect();
    let poset = FinitePoset::new(labels, |a, b| matrix[classes[a][0]][classes[b][0]])?;
    let hasse = poset.covers();
    Ok(DegreePoset { items, relation, matrix, classes, class_of, poset, hasse })
}

impl DegreePoset {
    pub fn is_reflexive(&self) -> bool {
        (0..self.items.len()).all(|i| self.matrix[i][i])
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.items.len();
        (0..n).all(|i| {
            (0..n).all(|j| !self.matrix[i][j] || (0..n).all(|k| !self.matrix[j][k] || self.matrix[i][k]))
        })
    }

    /// Graphviz text: one node per class, one edge per covering pair,
    /// pointing from the upper class down.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph degrees {\n");
        for (c, label) in self.poset.labels().iter().enumerate() {
            writeln!(out, "  \"c{c}\" [label=\"{}\"];", escape(label)).expect("string write");
        }
        for &(hi, lo) in &self.hasse {
            writeln!(out, "  \"c{hi}\" -> \"c{lo}\";").expect("string write");
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
