use chroma_core::reductions::CnfFormula;

fn clauses_over(r: usize) -> Vec<Vec<i32>> {
    let literals: Vec<i32> = (1..=r as i32).flat_map(|i| [i, -i]).collect();
    let mut out = Vec::new();
    for mask in 1u32..1 << literals.len() {
        if mask.count_ones() <= 3 {
            out.push(
                (0..literals.len())
                    .filter(|&k| mask >> k & 1 == 1)
                    .map(|k| literals[k])
                    .collect(),
            );
        }
    }
    out
}

/// Every multiset of `s` clauses of width at most 3 over `r` variables.
pub fn formulas(r: usize, s: usize) -> Vec<CnfFormula> {
    let clauses = clauses_over(r);
    let mut out = Vec::new();
    let mut idx = vec![0usize; s];
    if s > 0 && clauses.is_empty() {
        return out;
    }
    loop {
        let chosen = idx.iter().map(|&i| clauses[i].clone()).collect();
        out.push(CnfFormula::new(r, chosen).unwrap());
        // Non-decreasing index tuples: each multiset of clauses once.
        let Some(k) = (0..s).rev().find(|&k| idx[k] + 1 < clauses.len()) else {
            return out;
        };
        idx[k] += 1;
        for t in k + 1..s {
            idx[t] = idx[k];
        }
    }
}
