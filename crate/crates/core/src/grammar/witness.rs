use super::cnf::{Cnfg, Rhs};
use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

/// Grammar with `h` variables for `{(ab)^H}`, `H = 2^(h-3)`: `A → a`,
/// `B → b`, `A_0 → AB`, `A_j → A_{j-1} A_{j-1}`, start `A_{h-3}`.
pub fn witness_grammar(h: usize) -> Result<Cnfg> {
    if h < 3 {
        return Err(Error::InvalidInput(format!("witness grammar needs h ≥ 3, got {h}")));
    }
    let mut names = vec!["A".to_string(), "B".to_string()];
    names.extend((0..h - 2).map(|j| format!("A{j}")));
    let mut prods = vec![(0, Rhs::Letter(0)), (1, Rhs::Letter(1)), (2, Rhs::Pair(0, 1))];
    for j in 1..h - 2 {
        prods.push((2 + j, Rhs::Pair(1 + j, 1 + j)));
    }
    Cnfg::new(names, Alphabet::new(["a", "b"])?, h - 1, prods)
}
