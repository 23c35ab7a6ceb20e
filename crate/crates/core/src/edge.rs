//! Edge colouring with at most `Δ + 1` colours.
//!
//! Edges are inserted one at a time. Each insertion builds a fan around one
//! endpoint, flips an alternating two-coloured path, and rotates a prefix of
//! the fan so that a colour becomes free at both ends of the new edge
//! (Misra and Gries' form of Vizing's argument).

use crate::colouring::{verify_colouring, Colour, Colouring};
use crate::error::{Error, Result};
use crate::exact::chromatic_number_ie;
use crate::graph::Graph;

/// A colour for every canonical edge index of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColouring {
    colours: Vec<Option<Colour>>,
}

impl EdgeColouring {
    pub fn from_partial(colours: Vec<Option<Colour>>) -> Self {
        Self { colours }
    }

    pub fn from_total(colours: Vec<Colour>) -> Self {
        Self::from_partial(colours.into_iter().map(Some).collect())
    }

    pub fn get(&self, e: usize) -> Option<Colour> {
        self.colours[e]
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn as_slice(&self) -> &[Option<Colour>] {
        &self.colours
    }

    pub fn palette_size(&self) -> Colour {
        self.colours.iter().flatten().copied().max().unwrap_or(0)
    }
}

/// A partial edge colouring together with, for every vertex, the neighbour
/// reached through each colour.
#[derive(Clone, Debug)]
pub struct EdgeState<'g> {
    g: &'g Graph,
    palette: Colour,
    colours: Vec<Option<Colour>>,
    at: Vec<Vec<Option<usize>>>,
}

impl<'g> EdgeState<'g> {
    /// Everything uncoloured, colours `1..=palette`.
    pub fn new(g: &'g Graph, palette: Colour) -> Self {
        Self {
            g,
            palette,
            colours: vec![None; g.m()],
            at: vec![vec![None; palette as usize + 1]; g.n()],
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn palette(&self) -> Colour {
        self.palette
    }

    fn index(&self, u: usize, v: usize) -> usize {
        self.g.edge_index(u, v).expect("edge of the graph")
    }

    pub fn colour(&self, u: usize, v: usize) -> Option<Colour> {
        self.colours[self.index(u, v)]
    }

    /// The neighbour joined to `v` by an edge of colour `c`.
    pub fn via(&self, v: usize, c: Colour) -> Option<usize> {
        self.at[v][c as usize]
    }

    pub fn is_free(&self, v: usize, c: Colour) -> bool {
        self.at[v][c as usize].is_none()
    }

    /// Smallest colour free at `v`.
    pub fn free_colour(&self, v: usize) -> Option<Colour> {
        (1..=self.palette).find(|&c| self.is_free(v, c))
    }

    /// Colours `uv` with `c`, which must be free at both ends.
    pub fn set(&mut self, u: usize, v: usize, c: Colour) -> Result<()> {
        let e = self.index(u, v);
        if self.colours[e].is_some() || !self.is_free(u, c) || !self.is_free(v, c) {
            return Err(Error::InvariantViolation(format!(
                "cannot colour edge ({u}, {v}) with {c}"
            )));
        }
        self.colours[e] = Some(c);
        self.at[u][c as usize] = Some(v);
        self.at[v][c as usize] = Some(u);
        Ok(())
    }

    pub fn clear(&mut self, u: usize, v: usize) -> Option<Colour> {
        let e = self.index(u, v);
        let c = self.colours[e].take()?;
        self.at[u][c as usize] = None;
        self.at[v][c as usize] = None;
        Some(c)
    }

    pub fn coloured_edges(&self) -> usize {
        self.colours.iter().flatten().count()
    }

    pub fn to_colouring(&self) -> EdgeColouring {
        EdgeColouring::from_partial(self.colours.clone())
    }

    /// The colour index agrees with the assignment and no colour repeats at a
    /// vertex.
    pub fn is_consistent(&self) -> bool {
        let mut expected = vec![vec![None; self.palette as usize + 1]; self.g.n()];
        for (e, (u, v)) in self.g.edges().enumerate() {
            if let Some(c) = self.colours[e] {
                let c = c as usize;
                if c == 0 || c > self.palette as usize {
                    return false;
                }
                if expected[u][c].is_some() || expected[v][c].is_some() {
                    return false;
                }
                expected[u][c] = Some(v);
                expected[v][c] = Some(u);
            }
        }
        expected == self.at
    }
}

/// Fan around `centre`: `leaves[0]` joins the centre by an uncoloured edge,
/// and for `i >= 1` the colour of `centre–leaves[i]` is free at `leaves[i-1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    pub centre: usize,
    pub leaves: Vec<usize>,
}

impl Fan {
    pub fn is_valid(&self, state: &EdgeState<'_>) -> bool {
        self.is_valid_prefix(state, self.leaves.len())
    }

    fn is_valid_prefix(&self, state: &EdgeState<'_>, len: usize) -> bool {
        let g = state.graph();
        let leaves = &self.leaves[..len];
        if leaves.is_empty() || leaves.iter().any(|&w| !g.has_edge(self.centre, w)) {
            return false;
        }
        let mut sorted = leaves.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != leaves.len() || state.colour(self.centre, leaves[0]).is_some() {
            return false;
        }
        leaves.windows(2).all(|pair| {
            state
                .colour(self.centre, pair[1])
                .is_some_and(|c| state.is_free(pair[0], c))
        })
    }
}

/// Builds a maximal fan around `centre` starting from the uncoloured edge to
/// `first`, scanning neighbours in increasing order.
pub fn build_fan(state: &EdgeState<'_>, centre: usize, first: usize, steps: &mut u64) -> Fan {
    let g = state.graph();
    let mut leaves = vec![first];
    let mut used = vec![false; g.n()];
    used[first] = true;
    loop {
        let last = *leaves.last().expect("non-empty fan");
        let next = g.neighbours(centre).iter().copied().find(|&w| {
            *steps += 1;
            !used[w]
                && state
                    .colour(centre, w)
                    .is_some_and(|c| state.is_free(last, c))
        });
        match next {
            Some(w) => {
                used[w] = true;
                leaves.push(w);
            }
            None => return Fan { centre, leaves },
        }
    }
}

/// Rotates colours down the fan: `centre–leaves[i]` takes the colour of
/// `centre–leaves[i+1]` for `i < j`, and `centre–leaves[j]` becomes
/// uncoloured.
pub fn downshift(state: &mut EdgeState<'_>, fan: &Fan, j: usize) -> Result<()> {
    if j == 0 || j >= fan.leaves.len() || !fan.is_valid_prefix(state, j + 1) {
        return Err(Error::InvariantViolation(format!(
            "downshift from {j} on an invalid fan"
        )));
    }
    let v = fan.centre;
    let shifted: Vec<Colour> = (1..=j)
        .map(|i| state.clear(v, fan.leaves[i]).expect("fan edges are coloured"))
        .collect();
    for (i, c) in shifted.into_iter().enumerate() {
        state.set(v, fan.leaves[i], c)?;
    }
    Ok(())
}

/// Exchanges colours `a` and `b` on the maximal `{a, b}`-coloured path or
/// cycle through `start`. Returns the number of recoloured edges.
pub fn kempe_flip(state: &mut EdgeState<'_>, start: usize, a: Colour, b: Colour) -> usize {
    let mut edges = Vec::new();
    for first in [a, b] {
        let mut v = start;
        let mut c = first;
        while let Some(w) = state.via(v, c) {
            let key = (v.min(w), v.max(w));
            if edges.contains(&key) {
                break;
            }
            edges.push(key);
            v = w;
            c = if c == a { b } else { a };
        }
    }
    let old: Vec<Colour> = edges
        .iter()
        .map(|&(u, v)| state.clear(u, v).expect("path edges are coloured"))
        .collect();
    for (&(u, v), c) in edges.iter().zip(old) {
        let swapped = if c == a { b } else { a };
        state.set(u, v, swapped).expect("swap keeps the colouring proper");
    }
    edges.len()
}

/// Work counters for one run of [`vizing_colour_traced`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VizingStats {
    /// Neighbour inspections, path edges walked and fan edges rotated.
    pub steps: u64,
}

pub fn vizing_colour(g: &Graph) -> Result<EdgeColouring> {
    vizing_colour_traced(g, |_| {}).map(|(ec, _)| ec)
}

/// Colours edges in canonical order, calling `after_insert` with the state
/// after each one.
pub fn vizing_colour_traced(
    g: &Graph,
    mut after_insert: impl FnMut(&EdgeState<'_>),
) -> Result<(EdgeColouring, VizingStats)> {
    let palette = g.max_degree() as Colour + 1;
    let mut state = EdgeState::new(g, palette);
    let mut stats = VizingStats::default();
    for (u, v) in g.edges() {
        insert_edge(&mut state, u, v, &mut stats)?;
        after_insert(&state);
    }
    Ok((state.to_colouring(), stats))
}

fn insert_edge(state: &mut EdgeState<'_>, x: usize, v: usize, stats: &mut VizingStats) -> Result<()> {
    let fan = build_fan(state, x, v, &mut stats.steps);
    let last = *fan.leaves.last().expect("non-empty fan");
    let c = state.free_colour(x).expect("centre has an uncoloured edge");
    let d = state.free_colour(last).expect("a colour is free at every vertex");
    stats.steps += kempe_flip(state, x, c, d) as u64;
    let pick = (0..fan.leaves.len())
        .find(|&i| state.is_free(fan.leaves[i], d) && fan.is_valid_prefix(state, i + 1))
        .ok_or_else(|| {
            Error::InvariantViolation(format!(
                "no fan prefix around {x} has colour {d} free at its tip"
            ))
        })?;
    if pick > 0 {
        downshift(state, &fan, pick)?;
        stats.steps += pick as u64;
    }
    state.set(x, fan.leaves[pick], d)
}

/// True iff `ec` colours every edge and is a proper vertex colouring of the
/// line graph.
pub fn verify_edge_colouring(g: &Graph, ec: &EdgeColouring) -> bool {
    if ec.len() != g.m() {
        return false;
    }
    let (line, _) = g.line_graph();
    let as_vertices = Colouring::from_partial(ec.as_slice().to_vec());
    verify_colouring(&line, &as_vertices, ec.palette_size())
}

/// The chromatic index, computed exactly as the chromatic number of the line
/// graph. The result is checked to be `Δ` or `Δ + 1`.
pub fn chromatic_index_via_line_graph(g: &Graph) -> Result<usize> {
    let (line, _) = g.line_graph();
    let index = chromatic_number_ie(&line)?;
    let delta = g.max_degree();
    if index != delta && index != delta + 1 {
        return Err(Error::InvariantViolation(format!(
            "chromatic index {index} outside {{{delta}, {}}}",
            delta + 1
        )));
    }
    Ok(index)
}
