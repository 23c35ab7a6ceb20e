//! Vertex colourings, odd-cycle certificates and their verifiers.

use crate::graph::Graph;

/// Colours are small positive integers starting at 1.
pub type Colour = u32;

/// A total or partial assignment of colours to vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Colouring {
    colours: Vec<Option<Colour>>,
}

impl Colouring {
    /// All vertices uncoloured.
    pub fn uncoloured(n: usize) -> Self {
        Self {
            colours: vec![None; n],
        }
    }

    pub fn from_total(colours: Vec<Colour>) -> Self {
        Self {
            colours: colours.into_iter().map(Some).collect(),
        }
    }

    pub fn from_partial(colours: Vec<Option<Colour>>) -> Self {
        Self { colours }
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn get(&self, v: usize) -> Option<Colour> {
        self.colours[v]
    }

    pub fn set(&mut self, v: usize, c: Colour) {
        self.colours[v] = Some(c);
    }

    pub fn clear(&mut self, v: usize) {
        self.colours[v] = None;
    }

    pub fn as_slice(&self) -> &[Option<Colour>] {
        &self.colours
    }

    pub fn is_total(&self) -> bool {
        self.colours.iter().all(Option::is_some)
    }

    /// The colours of a total colouring.
    pub fn to_total(&self) -> Option<Vec<Colour>> {
        self.colours.iter().copied().collect()
    }

    /// Largest colour used, 0 if none.
    pub fn palette_size(&self) -> Colour {
        self.colours.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Number of distinct colours used.
    pub fn distinct_colours(&self) -> usize {
        let mut cs: Vec<Colour> = self.colours.iter().flatten().copied().collect();
        cs.sort_unstable();
        cs.dedup();
        cs.len()
    }

    /// Renumbers the colours in use to `1..=k` in order of first appearance.
    pub fn compacted(&self) -> Self {
        let mut seen: Vec<(Colour, Colour)> = Vec::new();
        let colours = self
            .colours
            .iter()
            .map(|c| {
                c.map(|c| match seen.iter().find(|(old, _)| *old == c) {
                    Some(&(_, new)) => new,
                    None => {
                        let new = seen.len() as Colour + 1;
                        seen.push((c, new));
                        new
                    }
                })
            })
            .collect();
        Self { colours }
    }
}

/// True iff `f` is total, uses only colours in `1..=q`, and is proper.
pub fn verify_colouring(g: &Graph, f: &Colouring, q: Colour) -> bool {
    if f.len() != g.n() {
        return false;
    }
    let in_range = f
        .as_slice()
        .iter()
        .all(|c| matches!(c, Some(c) if (1..=q).contains(c)));
    in_range && g.edges().all(|(u, v)| f.get(u) != f.get(v))
}

/// True iff no edge has both endpoints coloured alike; uncoloured vertices
/// are ignored.
pub fn is_proper_partial(g: &Graph, f: &Colouring) -> bool {
    f.len() == g.n()
        && g
            .edges()
            .all(|(u, v)| f.get(u).is_none() || f.get(u) != f.get(v))
}

/// An odd cycle `c_0, c_1, ..., c_{2k}`; the closing edge back to `c_0` is
/// implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCycleCertificate {
    pub cycle: Vec<usize>,
}

impl OddCycleCertificate {
    /// Checks odd length, distinct vertices and consecutive adjacency
    /// (including the closing edge).
    pub fn verify(&self, g: &Graph) -> bool {
        let len = self.cycle.len();
        if len < 3 || len.is_multiple_of(2) {
            return false;
        }
        let mut sorted = self.cycle.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != len {
            return false;
        }
        (0..len).all(|i| g.has_edge(self.cycle[i], self.cycle[(i + 1) % len]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{self, PAW_U, PAW_V, PAW_W, PAW_X};

    #[test]
    fn triangle() {
        let k3 = families::complete(3);
        assert!(verify_colouring(&k3, &Colouring::from_total(vec![1, 2, 3]), 3));
        assert!(!verify_colouring(&k3, &Colouring::from_total(vec![1, 1, 2]), 3));
        assert!(!verify_colouring(&k3, &Colouring::from_total(vec![1, 2, 3]), 2));
        assert!(!verify_colouring(&k3, &Colouring::from_partial(vec![Some(1), Some(2), None]), 3));
    }

    #[test]
    fn paw() {
        let mut f = vec![0; 4];
        f[PAW_X] = 2;
        f[PAW_U] = 1;
        f[PAW_V] = 2;
        f[PAW_W] = 3;
        assert!(verify_colouring(&families::paw(), &Colouring::from_total(f), 3));
    }

    #[test]
    fn palette_and_compaction() {
        let f = Colouring::from_total(vec![5, 2, 5, 9]);
        assert_eq!(f.palette_size(), 9);
        assert_eq!(f.distinct_colours(), 3);
        assert_eq!(f.compacted(), Colouring::from_total(vec![1, 2, 1, 3]));
    }

    #[test]
    fn odd_cycle_verification() {
        let c5 = families::cycle(5);
        assert!(OddCycleCertificate { cycle: vec![0, 1, 2, 3, 4] }.verify(&c5));
        assert!(!OddCycleCertificate { cycle: vec![0, 1, 2, 3] }.verify(&families::cycle(4)));
        assert!(!OddCycleCertificate { cycle: vec![0, 1, 3] }.verify(&c5));
        assert!(!OddCycleCertificate { cycle: vec![0, 1, 0] }.verify(&c5));
    }
}
