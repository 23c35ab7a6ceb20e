//! Constructive reductions between colouring problems, each with a way to
//! translate a witness for the output back into one for the input.

use std::fmt;

use crate::colouring::{verify_colouring, Colour, Colouring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Builds a `q`-colouring from a decision procedure by repeatedly either
/// adding a non-edge `vw` (when `G + vw` stays colourable) or identifying
/// `v` with `w` (when it does not), until the graph is complete.
///
/// Makes one oracle call per step and every step removes a non-edge, so
/// there are at most `n(n-1)/2` calls, each on a graph with at most `n`
/// vertices. Returns `None` when the chain of answers shows `G` has no
/// `q`-colouring; answers that cannot all be right give an oracle error.
pub fn construct_from_decision<F>(g: &Graph, q: Colour, mut oracle: F) -> Result<Option<Colouring>>
where
    F: FnMut(&Graph, Colour) -> Result<bool>,
{
    let mut h = g.clone();
    let mut rep: Vec<usize> = (0..g.n()).collect();
    let mut said_yes = false;
    while let Some((v, w)) = first_non_edge(&h) {
        let plus = h.add_edge(v, w)?;
        if oracle(&plus, q)? {
            said_yes = true;
            h = plus;
        } else {
            let (merged, mapping) = h.identify(v, w)?;
            rep.iter_mut().for_each(|r| *r = mapping[*r]);
            h = merged;
        }
    }
    if h.n() > q as usize {
        return if said_yes {
            Err(Error::Oracle(format!(
                "oracle accepted a supergraph but the chain ended at K{} with q = {q}",
                h.n()
            )))
        } else {
            Ok(None)
        };
    }
    let f = Colouring::from_total(rep.iter().map(|&r| r as Colour + 1).collect());
    if !verify_colouring(g, &f, q) {
        return Err(Error::Oracle("constructed colouring is not proper".into()));
    }
    Ok(Some(f))
}

fn first_non_edge(g: &Graph) -> Option<(usize, usize)> {
    (0..g.n()).find_map(|v| ((v + 1)..g.n()).find(|&w| !g.has_edge(v, w)).map(|w| (v, w)))
}

/// A CNF formula over variables `1..=r`. A literal `+i` is `x_i` and `-i`
/// is its negation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    r: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(r: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        for (j, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::Input(format!("clause {} is empty", j + 1)));
            }
            if let Some(&lit) = clause
                .iter()
                .find(|&&l| l == 0 || l.unsigned_abs() as usize > r)
            {
                return Err(Error::Input(format!(
                    "literal {lit} in clause {} is outside 1..={r}",
                    j + 1
                )));
            }
        }
        Ok(Self { r, clauses })
    }

    pub fn variables(&self) -> usize {
        self.r
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// `assignment[i]` is the value of `x_{i+1}`.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.r
            && self.clauses.iter().all(|c| {
                c.iter()
                    .any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0))
            })
    }

    /// Tries all `2^r` assignments, lowest binary value first.
    pub fn brute_force_satisfy(&self) -> Option<Vec<bool>> {
        assert!(self.r < 64, "brute force over at most 63 variables");
        (0u64..1 << self.r)
            .map(|bits| (0..self.r).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>())
            .find(|a| self.is_satisfied_by(a))
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let clauses: Vec<String> = self
            .clauses
            .iter()
            .map(|c| {
                let lits: Vec<String> = c
                    .iter()
                    .map(|&l| if l > 0 { format!("x{l}") } else { format!("!x{}", -l) })
                    .collect();
                format!("({})", lits.join(" | "))
            })
            .collect();
        write!(f, "{}", clauses.join(" & "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Colouring(Colouring),
    Assignment(Vec<bool>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BackMap {
    /// `indicators[v][i-1]` is the vertex whose colour says whether `v`
    /// gets colour `i`; it does when it matches the fixed vertex `one`.
    Indicators { one: usize, indicators: Vec<Vec<usize>> },
    /// `x_i` is true when `literals[i-1]` shares the colour of clique vertex `i`.
    Literals { literals: Vec<usize> },
    /// Drop the colour of `apex` and close the gap in the palette.
    DropApex { apex: usize },
}

/// The output of a reduction: the graph, a description of how it was built,
/// and what is needed to translate a colouring of it back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub graph: Graph,
    pub note: String,
    /// Number of colours the output graph is asked to use.
    pub target_q: Colour,
    pub back_map: BackMap,
}

impl ReductionArtifact {
    /// Translates a proper colouring of [`Self::graph`] with at most
    /// [`Self::target_q`] distinct colours into a witness for the input.
    pub fn back_translate(&self, f: &Colouring) -> Result<Witness> {
        let q = f.palette_size();
        if !verify_colouring(&self.graph, f, q) {
            return Err(Error::Input("not a proper colouring of the reduced graph".into()));
        }
        if f.distinct_colours() > self.target_q as usize {
            return Err(Error::Input(format!(
                "colouring uses {} colours, the reduction allows {}",
                f.distinct_colours(),
                self.target_q
            )));
        }
        let colour = |v: usize| f.get(v).expect("total colouring");
        match &self.back_map {
            BackMap::Indicators { one, indicators } => {
                let colours = indicators
                    .iter()
                    .enumerate()
                    .map(|(v, ind)| {
                        ind.iter()
                            .position(|&x| colour(x) == colour(*one))
                            .map(|i| i as Colour + 1)
                            .ok_or_else(|| {
                                Error::InvariantViolation(format!("no indicator of vertex {v} is set"))
                            })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Witness::Colouring(Colouring::from_total(colours)))
            }
            BackMap::Literals { literals } => Ok(Witness::Assignment(
                literals
                    .iter()
                    .enumerate()
                    .map(|(i, &lit)| colour(lit) == colour(i + 1))
                    .collect(),
            )),
            BackMap::DropApex { apex } => {
                let gone = colour(*apex);
                Ok(Witness::Colouring(Colouring::from_total(
                    (0..self.graph.n())
                        .filter(|&v| v != *apex)
                        .map(|v| {
                            let c = colour(v);
                            if c > gone {
                                c - 1
                            } else {
                                c
                            }
                        })
                        .collect(),
                )))
            }
        }
    }
}

/// Vertex layout of [`reduce_qcol_to_3col`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndicatorLayout {
    pub n: usize,
    pub q: usize,
}

impl IndicatorLayout {
    /// `v_i`, for `i` in `1..=q`.
    pub fn indicator(&self, v: usize, i: usize) -> usize {
        3 + 2 * self.q * v + i - 1
    }

    /// `v_i'`, for `i` in `1..=q`.
    pub fn rung(&self, v: usize, i: usize) -> usize {
        3 + 2 * self.q * v + self.q + i - 1
    }

    /// First of the three fresh vertices for edge number `e` and colour `i`.
    pub fn triangle(&self, e: usize, i: usize) -> usize {
        3 + 2 * self.q * self.n + 3 * (self.q * e + i - 1)
    }

    /// The fixed vertex at the end of the rung path: 2 for even `q`, 1 for odd.
    pub fn anchor(&self) -> usize {
        if self.q.is_multiple_of(2) {
            2
        } else {
            1
        }
    }
}

/// A graph that is 3-colourable exactly when `g` is `q`-colourable, on
/// `3 + 2qn + 3qm` vertices.
///
/// Vertices 0, 1, 2 form a triangle naming the three colours. Each vertex
/// `v` gets indicators `v_1..v_q`, all adjacent to 2, and rungs
/// `v_1'..v_q'` forming a path from 2 to the anchor with `v_i'` adjacent to
/// `v_i`; if no indicator takes the colour of 1 the path cannot be
/// coloured. Each edge `vw` and colour `i` gets a fresh triangle joined to
/// `v_i`, `w_i` and 1, forbidding both indicators to take the colour of 1.
pub fn reduce_qcol_to_3col(g: &Graph, q: usize) -> Result<ReductionArtifact> {
    if q < 3 {
        return Err(Error::Domain(format!("reduction to 3-colouring needs q >= 3, got {q}")));
    }
    let layout = IndicatorLayout { n: g.n(), q };
    let total = 3 + 2 * q * g.n() + 3 * q * g.m();
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    for v in 0..g.n() {
        for i in 1..=q {
            edges.push((2, layout.indicator(v, i)));
            edges.push((layout.indicator(v, i), layout.rung(v, i)));
            if i < q {
                edges.push((layout.rung(v, i), layout.rung(v, i + 1)));
            }
        }
        edges.push((2, layout.rung(v, 1)));
        edges.push((layout.rung(v, q), layout.anchor()));
    }
    for (e, (v, w)) in g.edges().enumerate() {
        for i in 1..=q {
            let t = layout.triangle(e, i);
            edges.extend([(t, t + 1), (t + 1, t + 2), (t, t + 2)]);
            edges.extend([(t, layout.indicator(v, i)), (t + 1, layout.indicator(w, i)), (t + 2, 1)]);
        }
    }
    let graph = Graph::new(total, edges)?;
    let indicators = (0..g.n())
        .map(|v| (1..=q).map(|i| layout.indicator(v, i)).collect())
        .collect();
    Ok(ReductionArtifact {
        graph,
        note: format!("{q}-colouring of n={} m={} as 3-colouring", g.n(), g.m()),
        target_q: 3,
        back_map: BackMap::Indicators { one: 1, indicators },
    })
}

/// Vertex layout of [`reduce_sat_to_colouring`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SatLayout {
    pub r: usize,
}

impl SatLayout {
    /// `v_i`, for `i` in `1..=r`.
    pub fn positive(&self, i: usize) -> usize {
        self.r + 2 * i - 1
    }

    /// `v̄_i`, for `i` in `1..=r`.
    pub fn negative(&self, i: usize) -> usize {
        self.r + 2 * i
    }

    /// `w_j`, for `j` in `1..=s`.
    pub fn clause(&self, j: usize) -> usize {
        3 * self.r + j
    }
}

/// A graph on `3r + s + 1` vertices that is `(r+1)`-colourable exactly when
/// the formula is satisfiable.
///
/// Clique vertex 0 stands for false and `i` for "`x_i` is true"; the literal
/// pair of `x_i` sees every true colour except `i`, so one of them takes
/// colour `i` and the other the false colour. Clause vertex `w_j` sees the
/// clique outside its variables, and the opposite literal of each variable
/// occurring with a single sign. A variable occurring with both signs
/// satisfies the clause on its own, so it leaves colour `i` free at `w_j`.
pub fn reduce_sat_to_colouring(phi: &CnfFormula) -> ReductionArtifact {
    reduce_sat_with_empty_clauses(phi, 0)
}

/// [`reduce_sat_to_colouring`] for a formula that also has `empty` empty
/// clauses, placed after the others. An empty clause has no variables, so
/// its vertex sees the whole clique and no `(r+1)`-colouring exists.
pub fn reduce_sat_with_empty_clauses(phi: &CnfFormula, empty: usize) -> ReductionArtifact {
    let r = phi.variables();
    let s = phi.clauses().len() + empty;
    let layout = SatLayout { r };
    let mut edges = Vec::new();
    for a in 0..=r {
        for b in a + 1..=r {
            edges.push((a, b));
        }
    }
    for i in 1..=r {
        edges.push((layout.positive(i), layout.negative(i)));
        for t in (1..=r).filter(|&t| t != i) {
            edges.push((layout.positive(i), t));
            edges.push((layout.negative(i), t));
        }
    }
    for (j, clause) in phi.clauses().iter().enumerate() {
        let w = layout.clause(j + 1);
        let has = |lit: i32| clause.contains(&lit);
        for c in 0..=r {
            if c == 0 || !(has(c as i32) || has(-(c as i32))) {
                edges.push((w, c));
            }
        }
        for i in 1..=r as i32 {
            match (has(i), has(-i)) {
                (true, false) => edges.push((w, layout.negative(i as usize))),
                (false, true) => edges.push((w, layout.positive(i as usize))),
                _ => {}
            }
        }
    }
    for j in phi.clauses().len() + 1..=s {
        edges.extend((0..=r).map(|c| (layout.clause(j), c)));
    }
    let graph = Graph::new(3 * r + s + 1, edges).expect("vertices in range");
    ReductionArtifact {
        graph,
        note: format!("satisfiability of {s} clauses over {r} variables as {}-colouring", r + 1),
        target_q: r as Colour + 1,
        back_map: BackMap::Literals {
            literals: (1..=r).map(|i| layout.positive(i)).collect(),
        },
    }
}

/// `g` plus a vertex adjacent to everything: `q`-colourable inputs become
/// `(q+1)`-colourable outputs and back.
pub fn reduce_col_to_col_plus_one(g: &Graph, q: Colour) -> ReductionArtifact {
    ReductionArtifact {
        graph: g.add_apex(),
        note: format!("{q}-colouring of n={} plus an apex", g.n()),
        target_q: q + 1,
        back_map: BackMap::DropApex { apex: g.n() },
    }
}

/// The crossing gadget: every 3-colouring gives the two terminals on each
/// axis the same colour, and every such terminal pattern extends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarityGadget {
    pub graph: Graph,
    pub north: usize,
    pub south: usize,
    pub east: usize,
    pub west: usize,
}

/// Centre 0; inner ring 1..=4 at 0°, 90°, 180°, 270°; outer ring 5..=12 at
/// multiples of 45° starting from 0°.
pub fn planarity_gadget() -> PlanarityGadget {
    let inner = |k: usize| 1 + k % 4;
    let outer = |k: usize| 5 + k % 8;
    let mut edges = Vec::new();
    for k in 0..4 {
        edges.push((inner(k), inner(k + 1)));
        edges.push((0, inner(k)));
        edges.push((inner(k), outer(2 * k)));
        edges.push((inner(k), outer(2 * k + 1)));
    }
    for k in 0..8 {
        edges.push((outer(k), outer(k + 1)));
    }
    PlanarityGadget {
        graph: Graph::new(13, edges).expect("vertices in range"),
        east: outer(0),
        north: outer(2),
        west: outer(4),
        south: outer(6),
    }
}

/// Backtracking search for a proper colouring with colours `1..=q` that
/// extends `fixed`. Picks the uncoloured vertex with the fewest remaining
/// colours (then highest degree, then lowest index), prunes as soon as a
/// vertex has none, and only opens one new colour at a time.
pub fn backtrack_colour(g: &Graph, q: Colour, fixed: &[(usize, Colour)]) -> Option<Colouring> {
    let mut f = Colouring::uncoloured(g.n());
    for &(v, c) in fixed {
        if c == 0 || c > q || g.neighbours(v).iter().any(|&w| f.get(w) == Some(c)) {
            return None;
        }
        f.set(v, c);
    }
    let used = f.palette_size();
    search(g, q, &mut f, used).then_some(f)
}

fn available(g: &Graph, q: Colour, f: &Colouring, v: usize) -> u64 {
    let full = if q >= 64 { u64::MAX } else { (1u64 << q) - 1 };
    g.neighbours(v)
        .iter()
        .filter_map(|&w| f.get(w))
        .fold(full, |mask, c| mask & !(1u64 << (c - 1)))
}

fn search(g: &Graph, q: Colour, f: &mut Colouring, used: Colour) -> bool {
    let mut pick: Option<(u32, usize, usize, u64)> = None;
    for v in (0..g.n()).filter(|&v| f.get(v).is_none()) {
        let avail = available(g, q, f, v);
        let key = (avail.count_ones(), usize::MAX - g.degree(v), v);
        if pick.is_none_or(|(a, d, u, _)| key < (a, d, u)) {
            pick = Some((key.0, key.1, key.2, avail));
        }
    }
    let Some((count, _, v, avail)) = pick else {
        return true;
    };
    if count == 0 {
        return false;
    }
    for c in 1..=q.min(used + 1) {
        if avail >> (c - 1) & 1 == 1 {
            f.set(v, c);
            if search(g, q, f, used.max(c)) {
                return true;
            }
            f.clear(v);
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{exhaustive_decide, ie_decide, least_colourable_q};
    use crate::families;
    use proptest::prelude::*;

    fn ie_oracle(h: &Graph, q: Colour) -> Result<bool> {
        ie_decide(h, q).map(|(yes, _)| yes)
    }

    #[test]
    fn construction_examples() {
        let k3 = families::complete(3);
        let f = construct_from_decision(&k3, 3, ie_oracle).unwrap().unwrap();
        assert_eq!(f.distinct_colours(), 3);
        let c5 = families::cycle(5);
        let f = construct_from_decision(&c5, 3, ie_oracle).unwrap().unwrap();
        assert!(verify_colouring(&c5, &f, 3));
        assert_eq!(construct_from_decision(&families::paw(), 2, ie_oracle).unwrap(), None);
        let liar = |_: &Graph, _: Colour| Ok(true);
        assert!(matches!(
            construct_from_decision(&families::complete(4), 3, liar),
            Ok(None)
        ));
        assert!(matches!(
            construct_from_decision(&families::empty(4), 3, liar),
            Err(Error::Oracle(_))
        ));
    }

    #[test]
    fn cnf_validation() {
        assert!(CnfFormula::new(2, vec![vec![1, -2]]).is_ok());
        assert!(CnfFormula::new(2, vec![vec![]]).is_err());
        assert!(CnfFormula::new(2, vec![vec![3]]).is_err());
        assert!(CnfFormula::new(2, vec![vec![0]]).is_err());
        let phi = CnfFormula::new(2, vec![vec![1, -2], vec![2]]).unwrap();
        assert_eq!(phi.to_string(), "(x1 | !x2) & (x2)");
        assert_eq!(phi.brute_force_satisfy(), Some(vec![true, true]));
    }

    #[test]
    fn ladder_sizes_and_examples() {
        let h = reduce_qcol_to_3col(&families::complete(3), 3).unwrap();
        assert_eq!(h.graph.n(), 48);
        assert!(reduce_qcol_to_3col(&families::complete(3), 2).is_err());

        let c4 = families::cycle(4);
        let h = reduce_qcol_to_3col(&c4, 3).unwrap();
        let f = backtrack_colour(&h.graph, 3, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let Witness::Colouring(back) = h.back_translate(&f).unwrap() else {
            panic!("expected a colouring")
        };
        assert!(verify_colouring(&c4, &back, 3));

        let h = reduce_qcol_to_3col(&families::complete(4), 3).unwrap();
        assert!(backtrack_colour(&h.graph, 3, &[(0, 1), (1, 2), (2, 3)]).is_none());
    }

    #[test]
    fn single_clause_instance() {
        let phi = CnfFormula::new(3, vec![vec![1, -2, -3]]).unwrap();
        let art = reduce_sat_to_colouring(&phi);
        assert_eq!(art.graph.n(), 11);
        let l = SatLayout { r: 3 };
        let mut colours: [Colour; 11] = std::array::from_fn(|v| v.min(3) as Colour);
        for (v, c) in [
            (l.positive(1), 1),
            (l.negative(1), 0),
            (l.positive(2), 0),
            (l.negative(2), 2),
            (l.positive(3), 3),
            (l.negative(3), 0),
            (l.clause(1), 2),
        ] {
            colours[v] = c;
        }
        let f = Colouring::from_total(colours.iter().map(|c| c + 1).collect());
        assert!(verify_colouring(&art.graph, &f, 4));
        let mut clause_nbrs = art.graph.neighbours(l.clause(1)).to_vec();
        clause_nbrs.sort_unstable();
        let mut expected = vec![0, l.negative(1), l.positive(2), l.positive(3)];
        expected.sort_unstable();
        assert_eq!(clause_nbrs, expected);
        assert_eq!(
            art.back_translate(&f).unwrap(),
            Witness::Assignment(vec![true, false, true])
        );
    }

    #[test]
    fn satisfiability_small_cases() {
        let contra = CnfFormula::new(1, vec![vec![1], vec![-1]]).unwrap();
        let art = reduce_sat_to_colouring(&contra);
        assert_eq!(art.graph.n(), 6);
        assert!(exhaustive_decide(&art.graph, 2).unwrap().is_none());

        let art = reduce_sat_with_empty_clauses(&CnfFormula::new(1, vec![vec![1]]).unwrap(), 1);
        assert_eq!(art.graph.n(), 6);
        assert!(exhaustive_decide(&art.graph, 2).unwrap().is_none());

        let none = CnfFormula::new(1, vec![]).unwrap();
        let art = reduce_sat_to_colouring(&none);
        assert_eq!(art.graph.n(), 4);
        assert!(exhaustive_decide(&art.graph, 2).unwrap().is_some());

        let tautology = CnfFormula::new(1, vec![vec![1, -1]]).unwrap();
        let art = reduce_sat_to_colouring(&tautology);
        let f = exhaustive_decide(&art.graph, 2).unwrap().unwrap();
        let Witness::Assignment(a) = art.back_translate(&f).unwrap() else {
            panic!("expected an assignment")
        };
        assert!(tautology.is_satisfied_by(&a));
    }

    #[test]
    fn apex_examples() {
        let art = reduce_col_to_col_plus_one(&families::complete(3), 3);
        assert_eq!(art.graph, families::complete(4));
        let f = Colouring::from_total(vec![4, 1, 3, 2]);
        let Witness::Colouring(back) = art.back_translate(&f).unwrap() else {
            panic!("expected a colouring")
        };
        assert!(verify_colouring(&families::complete(3), &back, 3));
        for (g, chi) in [(families::cycle(5), 4), (families::paw(), 4)] {
            let art = reduce_col_to_col_plus_one(&g, chi - 1);
            assert_eq!(least_colourable_q(&art.graph).unwrap(), chi);
        }
    }

    #[test]
    fn gadget_shape() {
        let gadget = planarity_gadget();
        let g = &gadget.graph;
        assert_eq!((g.n(), g.m()), (13, 24));
        assert_eq!(g.degree(0), 4);
        for t in [gadget.north, gadget.south, gadget.east, gadget.west] {
            assert_eq!(g.degree(t), 3);
        }
        assert!(g.check_invariants());
    }

    #[test]
    fn back_translate_rejects_bad_witnesses() {
        let art = reduce_col_to_col_plus_one(&families::complete(2), 2);
        assert!(art.back_translate(&Colouring::from_total(vec![1, 1, 2])).is_err());
        assert!(art.back_translate(&Colouring::from_total(vec![1, 2, 3])).is_ok());
        let art = reduce_sat_to_colouring(&CnfFormula::new(1, vec![vec![1]]).unwrap());
        assert!(art
            .back_translate(&Colouring::from_total(vec![1, 2, 3, 4, 5]))
            .is_err());
    }

    proptest! {
        #[test]
        fn backtracking_matches_exhaustive(n in 0usize..=8, p in 0.0f64..1.0, seed in any::<u64>(), q in 1u32..=4) {
            let g = families::random_gnp(n, p, seed);
            let found = backtrack_colour(&g, q, &[]);
            if let Some(f) = &found {
                prop_assert!(verify_colouring(&g, f, q));
            }
            prop_assert_eq!(found.is_some(), exhaustive_decide(&g, q).unwrap().is_some());
        }

        #[test]
        fn construction_matches_oracle(n in 0usize..=7, p in 0.0f64..1.0, seed in any::<u64>(), q in 1u32..=4) {
            let g = families::random_gnp(n, p, seed);
            let mut calls = 0;
            let f = construct_from_decision(&g, q, |h, q| {
                calls += 1;
                assert!(h.n() <= n);
                ie_oracle(h, q)
            }).unwrap();
            prop_assert!(calls <= n * n.saturating_sub(1) / 2);
            prop_assert_eq!(f.is_some(), exhaustive_decide(&g, q).unwrap().is_some());
            if let Some(f) = f {
                prop_assert!(verify_colouring(&g, &f, q));
            }
        }

        #[test]
        fn apex_shifts_chromatic_number(n in 1usize..=6, p in 0.0f64..1.0, seed in any::<u64>()) {
            let g = families::random_gnp(n, p, seed);
            let chi = least_colourable_q(&g).unwrap();
            let art = reduce_col_to_col_plus_one(&g, chi);
            prop_assert_eq!(least_colourable_q(&art.graph).unwrap(), chi + 1);
            let f = exhaustive_decide(&art.graph, chi + 1).unwrap().unwrap();
            let Witness::Colouring(back) = art.back_translate(&f).unwrap() else {
                panic!("expected a colouring")
            };
            prop_assert!(verify_colouring(&g, &back, chi));
        }
    }
}
